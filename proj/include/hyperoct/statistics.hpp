#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

/// Type-B inversion table (inv_1 : ... : inv_n). Digit i (1-based) lies in
/// [0, 2(n-i)+1] and is governed by window position n+1-i.
struct InversionTable {
  std::vector<int> digits;

  int n() const noexcept { return static_cast<int>(digits.size()); }
  bool operator==(const InversionTable&) const = default;
  auto operator<=>(const InversionTable&) const = default;
};

/// Upper bound of digit i (1-based) for rank n.
constexpr int max_digit(int n, int i) { return 2 * (n - i) + 1; }

InversionTable inversion_table(const SignedPermutation& w);
InversionTable inversion_table(std::span<const int> window);

int inv_b(const SignedPermutation& w);
int inv_b(std::span<const int> window);

/// "(3:7:8:7:0:3:1:0)"
std::string format_table(const InversionTable& t);
InversionTable parse_table(std::string_view text);

struct TypeAStats {
  int inv = 0;
  std::vector<int> descents;  // 1-based positions i with beta_i > beta_{i+1}
  int maj = 0;

  bool operator==(const TypeAStats&) const = default;
};

/// Statistics of an unsigned permutation of [n] given in one-line notation.
TypeAStats type_a_stats(std::span<const int> beta);

SignedPermutation backward(const SignedPermutation& w);

/// Sum of |w_i| over negative window entries.
int neg_sum(const SignedPermutation& w);
int neg_sum(std::span<const int> window);

/// Exponents (k_0, ..., k_{n-1}) of w = gamma_{n-1}^{k_{n-1}} ... gamma_0^{k_0}
/// where gamma_0 = t_1 and gamma_i = s_i s_{i-1} ... s_1 t_1.
struct GammaExponents {
  std::vector<int> exponents;

  int n() const noexcept { return static_cast<int>(exponents.size()); }
  bool operator==(const GammaExponents&) const = default;
};

SignedPermutation gamma_generator(int n, int i);
GammaExponents gamma_decompose(const SignedPermutation& w);
GammaExponents gamma_decompose(std::span<const int> window);
SignedPermutation gamma_recompose(const GammaExponents& g);

int fmaj(const SignedPermutation& w);
int fmaj(std::span<const int> window);

/// The class C_j containing w, j = w(n).
int class_index(const SignedPermutation& w);

struct ClassReduction {
  SignedPermutation tau;  // relabelled order-preservingly onto [n-1]
  int j;
};

/// Splits sigma in C_j into (tau, j). Requires n >= 2 (RankTooSmall).
ClassReduction class_reduce(const SignedPermutation& sigma);

/// Inverse of class_reduce: rebuild sigma_{tau,j} of rank n.
SignedPermutation class_lift(const SignedPermutation& tau, int j, int n);

}  // namespace hyperoct
