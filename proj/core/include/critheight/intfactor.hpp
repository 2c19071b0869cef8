#pragma once

/**
 * @file intfactor.hpp
 * @brief Integer factorization: trial division plus Brent's rho for the stragglers.
 */

#include <map>
#include <vector>

#include "critheight/rational.hpp"

namespace critheight {

/// prime -> exponent, primes ascending. factor_integer(1) is empty; input must be nonzero
/// (sign is discarded).
std::map<Integer, unsigned> factor_integer(const Integer& n);

/// Primes of the combined support of numerator and denominator, ascending.
std::vector<Integer> prime_support(const Rational& x);

bool is_prime(const Integer& n);

}  // namespace critheight
