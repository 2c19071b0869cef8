#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials with exact rational coefficients.
 *
 * Coefficients are stored lowest degree first and trailing zeros are always
 * stripped, so the zero polynomial has empty storage and degree() == -1.
 */

#include <initializer_list>
#include <string>
#include <vector>

#include "critheight/rational.hpp"

namespace critheight {

class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs_low_first) : c_(coeffs_low_first) { trim(); }
    explicit Poly(std::vector<Rational> coeffs_low_first) : c_(std::move(coeffs_low_first)) { trim(); }
    explicit Poly(const Rational& constant) : c_{constant} { trim(); }

    static Poly variable() { return Poly{Rational(0), Rational(1)}; }
    static Poly monomial(const Rational& a, std::size_t degree);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const Rational& operator[](std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;
    /// Lowest index with a nonzero coefficient, i.e. ord_t at t = 0.
    long trailing_order() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly derivative() const;
    Rational eval(const Rational& x) const;
    /// f(g) by Horner over Poly.
    Poly compose(const Poly& g) const;
    Poly pow(unsigned e) const;

    /// Quotient/remainder by a nonzero divisor, exact over Q.
    static void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r);
    /// Exact multiplicity of the factor b in a (b nonconstant, a nonzero).
    static long order_of(const Poly& a, const Poly& b);

    Poly monic() const;
    /// Monic gcd.
    static Poly gcd(const Poly& a, const Poly& b);

    /// Common denominator of all coefficients (1 for the zero polynomial).
    Integer coefficient_denominator() const;
    /// gcd of the numerators of den*this, i.e. the integer content after clearing.
    Integer integer_content() const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

inline Poly operator*(const Rational& s, const Poly& p) { return p * s; }

}  // namespace critheight
