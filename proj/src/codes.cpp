#include "hyperoct/codes.hpp"

#include <cstdlib>

namespace hyperoct {

namespace {

void validate_table(const InversionTable& t) {
  int n = t.n();
  if (n < 1) throw Error(Errc::LengthMismatch, "empty inversion table");
  for (int i = 1; i <= n; ++i) {
    int d = t.digits[i - 1];
    if (d < 0 || d > max_digit(n, i)) {
      throw Error(Errc::DigitOutOfRange, "digit inv_" + std::to_string(i) + " = " + std::to_string(d) +
                                             " outside [0, " + std::to_string(max_digit(n, i)) + "]");
    }
  }
}

void require_rank64(int n) {
  if (n < 1 || n > kMaxRank64) {
    throw Error(Errc::RangeViolation, "64-bit ranks need 1 <= n <= " + std::to_string(kMaxRank64));
  }
}

}  // namespace

RadixBounds::RadixBounds(int n) : n(n) {
  if (n < 1) throw Error(Errc::RangeViolation, "rank must be positive");
  bounds.reserve(n);
  for (int i = 1; i <= n; ++i) bounds.push_back(max_digit(n, i));
}

BigInt RadixBounds::cardinality() const {
  BigInt c = 1;
  for (int b : bounds) c *= b + 1;
  return c;
}

BigInt group_order(int n) {
  if (n < 0) throw Error(Errc::RangeViolation, "negative rank");
  return (BigInt(1) << n) * factorial(static_cast<unsigned>(n));
}

std::uint64_t group_order64(int n) {
  require_rank64(n);
  std::uint64_t order = 1;
  for (int m = 1; m <= n; ++m) order *= 2 * static_cast<std::uint64_t>(m);
  return order;
}

InversionTable encode(const SignedPermutation& w) { return inversion_table(w); }

SignedPermutation decode(const InversionTable& t) {
  validate_table(t);
  int n = t.n();
  std::vector<int> remaining(n);
  for (int v = 1; v <= n; ++v) remaining[v - 1] = v;
  std::vector<int> window(n);
  // Position p sees exactly the p values not used to its right; its digit
  // fixes both the sign and the relative rank of |w_p| among them.
  for (int p = n; p >= 1; --p) {
    int d = t.digits[n - p];
    int index = d < p ? p - 1 - d : d - p;
    int value = remaining[index];
    remaining.erase(remaining.begin() + index);
    window[p - 1] = d < p ? value : -value;
  }
  return from_trusted_window(std::move(window));
}

BigInt rank_from_table(const InversionTable& t) {
  validate_table(t);
  int n = t.n();
  BigInt r = 0;
  for (int i = 1; i <= n; ++i) {
    r *= max_digit(n, i) + 1;
    r += t.digits[i - 1];
  }
  return r;
}

InversionTable table_from_rank(const BigInt& r, int n) {
  if (n < 1) throw Error(Errc::RangeViolation, "rank must be positive");
  if (r < 0 || r >= group_order(n)) {
    throw Error(Errc::RankOutOfRange, "rank " + r.str() + " outside [0, " + group_order(n).str() + ")");
  }
  InversionTable t;
  t.digits.resize(n);
  BigInt rest = r;
  for (int i = n; i >= 1; --i) {
    int radix = max_digit(n, i) + 1;
    t.digits[i - 1] = static_cast<int>(rest % radix);
    rest /= radix;
  }
  return t;
}

BigInt rank(const SignedPermutation& w) { return rank_from_table(encode(w)); }

SignedPermutation unrank(const BigInt& r, int n) { return decode(table_from_rank(r, n)); }

std::uint64_t rank64(const SignedPermutation& w) {
  int n = w.n();
  require_rank64(n);
  auto t = encode(w);
  std::uint64_t r = 0;
  for (int i = 1; i <= n; ++i) r = r * (max_digit(n, i) + 1) + t.digits[i - 1];
  return r;
}

SignedPermutation unrank64(std::uint64_t r, int n) {
  std::uint64_t order = group_order64(n);
  if (r >= order) {
    throw Error(Errc::RankOutOfRange, "rank " + std::to_string(r) + " outside [0, " + std::to_string(order) + ")");
  }
  InversionTable t;
  t.digits.resize(n);
  for (int i = n; i >= 1; --i) {
    auto radix = static_cast<std::uint64_t>(max_digit(n, i) + 1);
    t.digits[i - 1] = static_cast<int>(r % radix);
    r /= radix;
  }
  return decode(t);
}

}  // namespace hyperoct
