#include "critheight/ratfunc.hpp"

#include <stdexcept>

namespace critheight {

RationalFunction::RationalFunction(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly{Rational(1)};
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        Poly q, r;
        Poly::divrem(num_, g, q, r);
        num_ = q;
        Poly::divrem(den_, g, q, r);
        den_ = q;
    }
    Rational lc = den_.leading();
    if (lc != 1) {
        Rational inv = make_rational(lc.get_den(), lc.get_num());
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Rational RationalFunction::constant_value() const {
    if (!is_constant()) throw std::domain_error("constant_value of nonconstant function");
    return num_.is_zero() ? Rational(0) : num_[0];
}

long RationalFunction::degree_delta() const {
    if (num_.is_zero()) throw std::domain_error("degree_delta of zero");
    return num_.degree() - den_.degree();
}

long RationalFunction::total_degree() const {
    return std::max(num_.degree(), den_.degree());
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(unsigned e) const {
    return RationalFunction(num_.pow(e), den_.pow(e));
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (den_ == Poly{Rational(1)}) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace critheight
