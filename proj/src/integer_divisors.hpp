#pragma once

#include <vector>

#include "structkit/rational.hpp"

namespace structkit::detail {

/// Prime factorization of |n| (n != 0) as (prime, exponent) pairs, ascending.
std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n);

/// All positive divisors of |n| (n != 0), ascending.
std::vector<BigInt> positive_divisors(const BigInt& n);

/// Number of positive divisors of |n| without enumerating them.
BigInt divisor_count(const BigInt& n);

}  // namespace structkit::detail
