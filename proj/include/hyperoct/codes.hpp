#pragma once

#include <cstdint>
#include <vector>

#include "hyperoct/bigint.hpp"
#include "hyperoct/signed_permutation.hpp"
#include "hyperoct/statistics.hpp"

namespace hyperoct {

/// Digit bounds (2n-1, 2n-3, ..., 3, 1) of the table space T_{2,n}.
struct RadixBounds {
  int n;
  std::vector<int> bounds;

  explicit RadixBounds(int n);
  BigInt cardinality() const;
};

/// 2^n n!
BigInt group_order(int n);

/// Largest rank for which the 64-bit rank path is exact.
inline constexpr int kMaxRank64 = 16;
std::uint64_t group_order64(int n);

InversionTable encode(const SignedPermutation& w);

/// Throws DigitOutOfRange for digits outside RadixBounds.
SignedPermutation decode(const InversionTable& t);

/// Mixed-radix value of encode(w), inv_1 most significant.
BigInt rank(const SignedPermutation& w);
std::uint64_t rank64(const SignedPermutation& w);

/// Throws RankOutOfRange unless r < 2^n n!.
SignedPermutation unrank(const BigInt& r, int n);
SignedPermutation unrank64(std::uint64_t r, int n);

InversionTable table_from_rank(const BigInt& r, int n);
BigInt rank_from_table(const InversionTable& t);

}  // namespace hyperoct
