#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperoct {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(unsigned n);

// Binomial coefficient with C(n, k) = 0 for k < 0 or k > n (n >= 0).
BigInt binomial(long long n, long long k);

}  // namespace hyperoct
