#include "hyperoct/statistics.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace hyperoct {

namespace {

// Digit governed by window position p (1-based):
//   r_p * (1 + 2 * #{j < p : |w_j| < |w_p|}) + #{j < p : |w_j| > |w_p|}
inline int position_digit(std::span<const int> window, int p) {
  int b = std::abs(window[p - 1]);
  int less = 0;
  for (int j = 0; j < p - 1; ++j) less += std::abs(window[j]) < b;
  int greater = (p - 1) - less;
  return window[p - 1] < 0 ? 1 + 2 * less + greater : greater;
}

// Position of x on the 2m-cycle m -> m-1 -> ... -> 1 -> -m -> ... -> -1 -> m.
inline int cycle_position(int x, int m) { return x > 0 ? m - x : 2 * m + x; }
inline int cycle_element(int c, int m) { return c < m ? m - c : -(2 * m - c); }

}  // namespace

InversionTable inversion_table(std::span<const int> window) {
  int n = static_cast<int>(window.size());
  InversionTable t;
  t.digits.resize(n);
  for (int i = 1; i <= n; ++i) t.digits[i - 1] = position_digit(window, n + 1 - i);
  return t;
}

InversionTable inversion_table(const SignedPermutation& w) { return inversion_table(w.window()); }

int inv_b(std::span<const int> window) {
  int n = static_cast<int>(window.size());
  int total = 0;
  for (int p = 1; p <= n; ++p) total += position_digit(window, p);
  return total;
}

int inv_b(const SignedPermutation& w) { return inv_b(w.window()); }

std::string format_table(const InversionTable& t) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < t.digits.size(); ++i) {
    if (i) out << ':';
    out << t.digits[i];
  }
  out << ')';
  return out.str();
}

InversionTable parse_table(std::string_view text) {
  if (text.size() < 3 || text.front() != '(' || text.back() != ')') {
    throw Error(Errc::ParseError, "inversion table must look like (d1:...:dn), got '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  InversionTable t;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(':', pos);
    std::string_view token = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
      throw Error(Errc::ParseError, "bad table digit '" + std::string(token) + "'");
    }
    t.digits.push_back(value);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return t;
}

TypeAStats type_a_stats(std::span<const int> beta) {
  int n = static_cast<int>(beta.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : beta) {
    if (v < 1 || v > n || seen[v]) throw Error(Errc::NotAPermutation, "not a permutation of [" + std::to_string(n) + "]");
    seen[v] = true;
  }
  TypeAStats s;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s.inv += beta[i] > beta[j];
  for (int i = 0; i + 1 < n; ++i) {
    if (beta[i] > beta[i + 1]) {
      s.descents.push_back(i + 1);
      s.maj += i + 1;
    }
  }
  return s;
}

SignedPermutation backward(const SignedPermutation& w) {
  std::vector<int> window(w.window().rbegin(), w.window().rend());
  return from_trusted_window(std::move(window));
}

int neg_sum(std::span<const int> window) {
  int total = 0;
  for (int v : window)
    if (v < 0) total -= v;
  return total;
}

int neg_sum(const SignedPermutation& w) { return neg_sum(w.window()); }

SignedPermutation gamma_generator(int n, int i) {
  if (i < 0 || i >= n) throw Error(Errc::IndexOutOfRange, "gamma_" + std::to_string(i) + " not in B_" + std::to_string(n));
  auto g = generator_t(n, 1);
  for (int k = 1; k <= i; ++k) g = compose(generator_s(n, k), g);
  return g;
}

GammaExponents gamma_decompose(std::span<const int> window) {
  int n = static_cast<int>(window.size());
  std::vector<int> u(window.begin(), window.end());
  GammaExponents g;
  g.exponents.resize(n);
  // gamma_{m-1} only moves +-1..+-m, so after peeling gamma_{m-1}^{k} the
  // remainder fixes m and lives in B_{m-1}.
  for (int m = n; m >= 1; --m) {
    int k = cycle_position(u[m - 1], m);
    g.exponents[m - 1] = k;
    if (k == 0) continue;
    for (int p = 0; p < m; ++p) {
      int c = cycle_position(u[p], m) - k;
      if (c < 0) c += 2 * m;
      u[p] = cycle_element(c, m);
    }
  }
  return g;
}

GammaExponents gamma_decompose(const SignedPermutation& w) { return gamma_decompose(w.window()); }

SignedPermutation gamma_recompose(const GammaExponents& g) {
  int n = g.n();
  auto w = SignedPermutation::identity(n);
  for (int i = n - 1; i >= 0; --i) {
    int k = g.exponents[i];
    if (k < 0 || k > 2 * i + 1) {
      throw Error(Errc::DigitOutOfRange, "gamma exponent k_" + std::to_string(i) + " = " + std::to_string(k));
    }
    auto gamma = gamma_generator(n, i);
    for (int e = 0; e < k; ++e) w = compose(w, gamma);
  }
  return w;
}

int fmaj(std::span<const int> window) {
  auto g = gamma_decompose(window);
  return std::accumulate(g.exponents.begin(), g.exponents.end(), 0);
}

int fmaj(const SignedPermutation& w) { return fmaj(w.window()); }

int class_index(const SignedPermutation& w) { return w(w.n()); }

ClassReduction class_reduce(const SignedPermutation& sigma) {
  int n = sigma.n();
  if (n < 2) throw Error(Errc::RankTooSmall, "class_reduce needs n >= 2");
  int j = sigma(n);
  int gap = std::abs(j);
  std::vector<int> tau(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    int v = sigma.window()[i];
    int a = std::abs(v);
    int relabelled = a > gap ? a - 1 : a;
    tau[i] = v < 0 ? -relabelled : relabelled;
  }
  return {from_trusted_window(std::move(tau)), j};
}

SignedPermutation class_lift(const SignedPermutation& tau, int j, int n) {
  if (j == 0 || std::abs(j) > n) {
    throw Error(Errc::IndexOutOfRange, "class index " + std::to_string(j) + " outside B_" + std::to_string(n));
  }
  if (tau.n() != n - 1) {
    throw Error(Errc::RankMismatch, "tau has rank " + std::to_string(tau.n()) + ", expected " + std::to_string(n - 1));
  }
  int gap = std::abs(j);
  std::vector<int> sigma(n);
  for (int i = 0; i < n - 1; ++i) {
    int v = tau.window()[i];
    int a = std::abs(v);
    int unlabelled = a >= gap ? a + 1 : a;
    sigma[i] = v < 0 ? -unlabelled : unlabelled;
  }
  sigma[n - 1] = j;
  return from_trusted_window(std::move(sigma));
}

}  // namespace hyperoct
