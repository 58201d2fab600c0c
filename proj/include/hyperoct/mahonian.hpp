#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hyperoct/bigint.hpp"
#include "hyperoct/error.hpp"
#include "hyperoct/report.hpp"

namespace hyperoct {

enum class Kind { TypeA, TypeB };

const char* to_string(Kind kind);

/// Degree of the row polynomial: n(n-1)/2 for type A, n^2 for type B.
long long row_degree(Kind kind, int n);

/// Row n of a Mahonian triangle; coeffs[k] counts elements with k inversions.
struct TriangleRow {
  Kind kind = Kind::TypeA;
  int n = 0;
  std::vector<BigInt> coeffs;

  bool operator==(const TriangleRow&) const = default;
  BigInt sum() const;
  bool palindromic() const;
};

/// Coefficients of [q^k] prod (1 + q + ... + q^{m-1}) (type A) or
/// prod (1 + ... + q^{2m-1}) (type B), m = 1..n, by schoolbook products.
TriangleRow row_product(Kind kind, int n);

/// Memo of rows built by the longitudinal recurrence. Copies share the
/// computed rows; extending returns a new cache and leaves this one intact.
class RecurrenceCache {
 public:
  explicit RecurrenceCache(Kind kind);

  Kind kind() const noexcept { return kind_; }
  int size() const noexcept { return static_cast<int>(rows_.size()); }
  RecurrenceCache extended(int n) const;
  const TriangleRow& row(int n) const;

 private:
  Kind kind_;
  std::vector<std::shared_ptr<const TriangleRow>> rows_;
};

TriangleRow row_recurrence(Kind kind, int n);

/// Type-B row from i_B(n,k) = sum_{i=0}^{2n-1} i_B(n-1, k-i).
TriangleRow row_sliding(int n);

/// Triangle value, 0 outside [0, row_degree].
BigInt entry(Kind kind, int n, long long k);

enum class TotalMethod { ClosedForm, Recurrence, Moment };

/// Sum of inversion counts over S_n (type A) or B_n (type B).
BigInt total_inversions(Kind kind, int n, TotalMethod method);

/// Inclusion-exclusion over pentagonal numbers for i(n,k), valid for k <= n.
/// Throws RangeViolation when k > n.
BigInt knuth_netto(int n, int k);

/// Bounded placements of k balls in n boxes, box j holding at most 2(n-j)+1.
BigInt balls_in_boxes(int n, long long k);

/// Formal power series truncated after x^order.
struct Series {
  std::vector<BigInt> coeffs;

  explicit Series(int order = 0) : coeffs(static_cast<std::size_t>(order) + 1) {}
  Series(int order, std::vector<BigInt> values);

  int order() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  const BigInt& operator[](int i) const { return coeffs[i]; }
  BigInt& operator[](int i) { return coeffs[i]; }
  bool operator==(const Series&) const = default;

  /// Restriction to a lower truncation order.
  Series truncated(int order) const;
};

Series operator+(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series pow(const Series& base, unsigned exponent);
/// x * s
Series shift(const Series& s);

/// Catalan numbers C(2m,m)/(m+1), m = 0..order.
Series catalan_series(int order);

/// S_j(x) = sum_n i(n, n-j) x^n with i(0,0) = 1.
Series diagonal_series(int j, int order);

/// Compares S_j against (x C(x))^j S_0(x) coefficientwise up to `order`.
VerificationReport verify_gf_identity(int j, int order);

}  // namespace hyperoct
