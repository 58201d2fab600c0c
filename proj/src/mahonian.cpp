#include "hyperoct/mahonian.hpp"

#include <algorithm>
#include <sstream>

#include "hyperoct/error.hpp"

namespace hyperoct {

namespace {

void require_positive(int n) {
  if (n < 1) throw Error(Errc::RangeViolation, "triangle rows start at n = 1, got " + std::to_string(n));
}

// Number of terms in the m-th factor: 1 + q + ... + q^{len-1}.
int factor_length(Kind kind, int m) { return kind == Kind::TypeA ? m : 2 * m; }

std::vector<BigInt> multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

std::string join(const std::vector<BigInt>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  return out.str();
}

}  // namespace

const char* to_string(Kind kind) { return kind == Kind::TypeA ? "a" : "b"; }

long long row_degree(Kind kind, int n) {
  long long m = n;
  return kind == Kind::TypeA ? m * (m - 1) / 2 : m * m;
}

BigInt TriangleRow::sum() const {
  BigInt s = 0;
  for (const auto& c : coeffs) s += c;
  return s;
}

bool TriangleRow::palindromic() const { return std::equal(coeffs.begin(), coeffs.end(), coeffs.rbegin()); }

TriangleRow row_product(Kind kind, int n) {
  require_positive(n);
  std::vector<BigInt> poly{1};
  for (int m = 1; m <= n; ++m) poly = multiply(poly, std::vector<BigInt>(factor_length(kind, m), 1));
  return {kind, n, std::move(poly)};
}

RecurrenceCache::RecurrenceCache(Kind kind) : kind_(kind) {}

RecurrenceCache RecurrenceCache::extended(int n) const {
  RecurrenceCache next = *this;
  for (int m = size() + 1; m <= n; ++m) {
    TriangleRow row{kind_, m, {}};
    if (m == 1) {
      row.coeffs = kind_ == Kind::TypeA ? std::vector<BigInt>{1} : std::vector<BigInt>{1, 1};
    } else {
      const auto& prev = next.rows_.back()->coeffs;
      long long degree = row_degree(kind_, m);
      long long prev_degree = row_degree(kind_, m - 1);
      // The new top digit ranges over [0, n-1] (type A) or [0, 2n-1] (type B).
      long long span = factor_length(kind_, m) - 1;
      row.coeffs.resize(degree + 1);
      for (long long k = 0; k <= degree; ++k) {
        long long lo = std::max(0LL, k - span);
        long long hi = std::min(k, prev_degree);
        for (long long i = lo; i <= hi; ++i) row.coeffs[k] += prev[i];
      }
    }
    next.rows_.push_back(std::make_shared<const TriangleRow>(std::move(row)));
  }
  return next;
}

const TriangleRow& RecurrenceCache::row(int n) const {
  if (n < 1 || n > size()) throw Error(Errc::RangeViolation, "row " + std::to_string(n) + " not cached");
  return *rows_[n - 1];
}

TriangleRow row_recurrence(Kind kind, int n) {
  require_positive(n);
  return RecurrenceCache(kind).extended(n).row(n);
}

TriangleRow row_sliding(int n) {
  require_positive(n);
  std::vector<BigInt> row{1, 1};
  for (int m = 2; m <= n; ++m) {
    long long degree = row_degree(Kind::TypeB, m);
    std::vector<BigInt> next(degree + 1);
    for (long long k = 0; k <= degree; ++k) {
      for (long long i = 0; i <= 2 * m - 1; ++i) {
        long long src = k - i;
        if (src >= 0 && src < static_cast<long long>(row.size())) next[k] += row[src];
      }
    }
    row = std::move(next);
  }
  return {Kind::TypeB, n, std::move(row)};
}

BigInt entry(Kind kind, int n, long long k) {
  require_positive(n);
  if (k < 0 || k > row_degree(kind, n)) return 0;
  return row_product(kind, n).coeffs[k];
}

BigInt total_inversions(Kind kind, int n, TotalMethod method) {
  require_positive(n);
  switch (method) {
    case TotalMethod::ClosedForm:
      if (kind == Kind::TypeA) return factorial(n) * binomial(n, 2) / 2;
      return (BigInt(1) << (n - 1)) * n * n * factorial(n);
    case TotalMethod::Recurrence: {
      if (kind == Kind::TypeA) {
        BigInt total = 0;
        for (int m = 2; m <= n; ++m) total = factorial(m) * (m - 1) / 2 + m * total;
        return total;
      }
      BigInt total = 1;
      for (int m = 2; m <= n; ++m) total = (BigInt(1) << (m - 1)) * factorial(m) * (2 * m - 1) + 2 * m * total;
      return total;
    }
    case TotalMethod::Moment: {
      auto row = row_product(kind, n);
      BigInt total = 0;
      for (std::size_t k = 0; k < row.coeffs.size(); ++k) total += row.coeffs[k] * k;
      return total;
    }
  }
  return 0;
}

BigInt knuth_netto(int n, int k) {
  require_positive(n);
  if (k < 0 || k > n) {
    throw Error(Errc::RangeViolation, "Knuth-Netto needs 0 <= k <= n, got n=" + std::to_string(n) +
                                          " k=" + std::to_string(k));
  }
  BigInt result = binomial(n + k - 1, k);
  for (long long j = 1;; ++j) {
    long long u = j * (3 * j - 1) / 2;
    long long first = k - u - j;
    long long second = k - u;
    if (first < 0 && second < 0) break;
    BigInt terms = binomial(n + first - 1, first) + binomial(n + second - 1, second);
    if (j % 2) result -= terms;
    else result += terms;
  }
  return result;
}

BigInt balls_in_boxes(int n, long long k) {
  require_positive(n);
  if (k < 0 || k > row_degree(Kind::TypeB, n)) return 0;
  std::vector<BigInt> ways(k + 1);
  ways[0] = 1;
  for (int box = 1; box <= n; ++box) {
    long long capacity = 2LL * (n - box) + 1;
    std::vector<BigInt> next(k + 1);
    for (long long s = 0; s <= k; ++s) {
      for (long long c = 0; c <= std::min(capacity, s); ++c) next[s] += ways[s - c];
    }
    ways = std::move(next);
  }
  return ways[k];
}

Series::Series(int order, std::vector<BigInt> values) : coeffs(std::move(values)) {
  coeffs.resize(static_cast<std::size_t>(order) + 1);
}

Series Series::truncated(int order) const {
  Series s(order);
  for (int i = 0; i <= std::min(order, this->order()); ++i) s[i] = coeffs[i];
  return s;
}

Series operator+(const Series& a, const Series& b) {
  int order = std::min(a.order(), b.order());
  Series s(order);
  for (int i = 0; i <= order; ++i) s[i] = a[i] + b[i];
  return s;
}

Series operator*(const Series& a, const Series& b) {
  int order = std::min(a.order(), b.order());
  Series s(order);
  for (int i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) s[i + j] += a[i] * b[j];
  }
  return s;
}

Series pow(const Series& base, unsigned exponent) {
  Series result(base.order());
  result[0] = 1;
  for (unsigned e = 0; e < exponent; ++e) result = result * base;
  return result;
}

Series shift(const Series& s) {
  Series out(s.order());
  for (int i = 1; i <= s.order(); ++i) out[i] = s[i - 1];
  return out;
}

Series catalan_series(int order) {
  if (order < 0) throw Error(Errc::RangeViolation, "negative series order");
  Series s(order);
  for (int m = 0; m <= order; ++m) s[m] = binomial(2LL * m, m) / (m + 1);
  return s;
}

Series diagonal_series(int j, int order) {
  if (j < 0 || order < 0) throw Error(Errc::RangeViolation, "diagonal series needs j >= 0 and order >= 0");
  Series s(order);
  s[0] = j == 0 ? 1 : 0;
  for (int n = 1; n <= order; ++n) s[n] = entry(Kind::TypeA, n, static_cast<long long>(n) - j);
  return s;
}

VerificationReport verify_gf_identity(int j, int order) {
  return timed_check("gf", {{"j", std::to_string(j)}, {"order", std::to_string(order)}}, [&](VerificationReport& r) {
    auto lhs = diagonal_series(j, order);
    auto rhs = pow(shift(catalan_series(order)), static_cast<unsigned>(j)) * diagonal_series(0, order);
    for (int i = 0; i <= order; ++i) {
      if (lhs[i] != rhs[i]) {
        r.fail("coefficient of x^" + std::to_string(i) + ": S_" + std::to_string(j) + " has " + lhs[i].str() +
               ", (xC)^j S_0 has " + rhs[i].str());
        break;
      }
    }
    r.details["S_j"] = join(lhs.coeffs);
    r.details["checked_order"] = std::to_string(order);
  });
}

}  // namespace hyperoct
