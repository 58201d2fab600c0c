#include "hyperoct/bigint.hpp"

#include <algorithm>

namespace hyperoct {

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  // Each partial product result * (n-k+i) / i is itself a binomial.
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace hyperoct
