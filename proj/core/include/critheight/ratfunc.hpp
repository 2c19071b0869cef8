#pragma once

/**
 * @file ratfunc.hpp
 * @brief Elements of Q(t): coprime numerator/denominator, monic denominator.
 */

#include <string>

#include "critheight/poly.hpp"

namespace critheight {

class RationalFunction {
public:
    RationalFunction() : num_(), den_{Rational(1)} {}
    RationalFunction(Poly num, Poly den);
    explicit RationalFunction(const Rational& c) : num_(Poly(c)), den_{Rational(1)} { normalize(); }
    explicit RationalFunction(Poly num) : num_(std::move(num)), den_{Rational(1)} { normalize(); }

    static RationalFunction variable() { return RationalFunction(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// The value as a rational when is_constant(), else throws.
    Rational constant_value() const;

    /// deg num - deg den; the order of pole at infinity.
    long degree_delta() const;
    /// max(deg num, deg den); the map degree of the fraction.
    long total_degree() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

    RationalFunction inverse() const;
    RationalFunction pow(unsigned e) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void normalize();
    Poly num_, den_;
};

}  // namespace critheight
