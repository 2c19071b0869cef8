#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars and the few floating helpers built on them.
 *
 * Rational is GMP's canonical fraction type: always in lowest terms,
 * denominator positive, zero stored as 0/1. Everything exact in this
 * library is built from it.
 */

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace critheight {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an iteration or digit budget is exhausted.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// mpq_class(num, den) does not reduce; every fraction built from parts goes
/// through here.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::domain_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Rational rational_abs(const Rational& x) { return sgn(x) < 0 ? Rational(-x) : x; }

/// log|z| for a nonzero integer, accurate to double precision at any size.
inline double log_abs_integer(const Integer& z) {
    if (sgn(z) == 0) throw std::domain_error("log of zero");
    long exp2 = 0;
    double m = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(exp2) * std::log(2.0);
}

/// log|x| for a nonzero rational.
inline double log_abs_rational(const Rational& x) {
    return log_abs_integer(x.get_num()) - log_abs_integer(x.get_den());
}

/// Naive Weil height of a rational point of P^1: h(p/q) = log max(|p|, q).
inline double rational_height(const Rational& x) {
    if (sgn(x) == 0) return 0.0;
    Integer n = abs(x.get_num());
    const Integer& d = x.get_den();
    return log_abs_integer(n >= d ? n : d);
}

/// Total bit size of numerator and denominator; the iteration digit budgets
/// are expressed against this.
inline std::size_t rational_bits(const Rational& x) {
    return mpz_sizeinbase(x.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(x.get_den().get_mpz_t(), 2);
}

/// p-adic valuation of a nonzero rational (negative when p divides the denominator).
long padic_valuation(const Rational& x, const Integer& p);

/// Parses "n" or "n/d" with optional sign; throws std::invalid_argument on junk.
Rational parse_rational(const std::string& text);

/// Serializes as "n" or "n/d".
std::string rational_to_string(const Rational& x);

inline Rational pow_rational(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    r.canonicalize();
    return r;
}

inline Integer pow_integer(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace critheight
