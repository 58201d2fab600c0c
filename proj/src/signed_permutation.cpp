#include "hyperoct/signed_permutation.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

namespace hyperoct {

namespace {

void require_rank(int n) {
  if (n < 1) throw Error(Errc::RangeViolation, "rank must be positive, got " + std::to_string(n));
}

}  // namespace

SignedPermutation SignedPermutation::identity(int n) {
  require_rank(n);
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::longest_element(int n) {
  require_rank(n);
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = -(i + 1);
  return SignedPermutation(std::move(w));
}

SignedPermutation from_window(int n, std::span<const int> entries) {
  if (n < 1) throw Error(Errc::LengthMismatch, "rank must be positive");
  if (entries.size() != static_cast<std::size_t>(n)) {
    throw Error(Errc::LengthMismatch,
                "expected " + std::to_string(n) + " entries, got " + std::to_string(entries.size()));
  }
  std::vector<bool> seen(n + 1, false);
  for (int v : entries) {
    if (v == 0) throw Error(Errc::ZeroEntry, "window contains 0");
    int a = std::abs(v);
    if (a > n || seen[a]) {
      throw Error(Errc::NotAPermutation, "absolute values are not a permutation of [" + std::to_string(n) + "]");
    }
    seen[a] = true;
  }
  return SignedPermutation(std::vector<int>(entries.begin(), entries.end()));
}

SignedPermutation from_trusted_window(std::vector<int> entries) { return SignedPermutation(std::move(entries)); }

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.n() != v.n()) {
    throw Error(Errc::RankMismatch, "cannot compose B_" + std::to_string(u.n()) + " with B_" + std::to_string(v.n()));
  }
  std::vector<int> w(u.n());
  for (int i = 1; i <= u.n(); ++i) w[i - 1] = u(v(i));
  return from_trusted_window(std::move(w));
}

SignedPermutation inverse(const SignedPermutation& w) {
  std::vector<int> inv(w.n());
  for (int i = 1; i <= w.n(); ++i) {
    int v = w(i);
    // w(i) = v  =>  w^{-1}(|v|) = sign(v) * i
    inv[std::abs(v) - 1] = v > 0 ? i : -i;
  }
  return from_trusted_window(std::move(inv));
}

SignedPermutation generator_t(int n, int i) {
  if (i < 1 || i > n) throw Error(Errc::IndexOutOfRange, "t_" + std::to_string(i) + " not in B_" + std::to_string(n));
  auto w = SignedPermutation::identity(n);
  std::vector<int> window(w.window().begin(), w.window().end());
  window[i - 1] = -i;
  return from_trusted_window(std::move(window));
}

SignedPermutation generator_s(int n, int i) {
  if (i < 1 || i >= n) throw Error(Errc::IndexOutOfRange, "s_" + std::to_string(i) + " not in B_" + std::to_string(n));
  auto w = SignedPermutation::identity(n);
  std::vector<int> window(w.window().begin(), w.window().end());
  std::swap(window[i - 1], window[i]);
  return from_trusted_window(std::move(window));
}

Decomposition decompose(const SignedPermutation& w) {
  Decomposition d;
  d.beta.reserve(w.n());
  d.signs.reserve(w.n());
  for (int v : w.window()) {
    d.beta.push_back(std::abs(v));
    d.signs.push_back(v < 0 ? 1 : 0);
  }
  return d;
}

SignedPermutation recompose(const Decomposition& d) {
  if (d.beta.size() != d.signs.size()) throw Error(Errc::LengthMismatch, "beta and signs differ in length");
  std::vector<int> window(d.beta.size());
  for (std::size_t k = 0; k < d.beta.size(); ++k) window[k] = d.signs[k] ? -d.beta[k] : d.beta[k];
  return from_window(static_cast<int>(window.size()), window);
}

SignedPermutation parse_window(std::string_view text) {
  std::vector<int> entries;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(' ', pos);
    std::string_view token = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    bool ok = !token.empty() && token != "-0" && token[0] != '+';
    int value = 0;
    if (ok) {
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      ok = ec == std::errc() && ptr == token.data() + token.size();
    }
    if (!ok) throw Error(Errc::ParseError, "bad window token '" + std::string(token) + "'");
    if (value == 0) throw Error(Errc::ZeroEntry, "bad window token '" + std::string(token) + "'");
    entries.push_back(value);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return from_window(static_cast<int>(entries.size()), entries);
}

std::string format_window(std::span<const int> window) {
  std::ostringstream out;
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (i) out << ' ';
    out << window[i];
  }
  return out.str();
}

}  // namespace hyperoct
