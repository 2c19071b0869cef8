#include "critheight/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace critheight {

namespace {
const Rational kZero(0);
}

void Poly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Poly Poly::monomial(const Rational& a, std::size_t degree) {
    std::vector<Rational> c(degree + 1, Rational(0));
    c[degree] = a;
    return Poly(std::move(c));
}

const Rational& Poly::operator[](std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

long Poly::trailing_order() const {
    if (c_.empty()) throw std::domain_error("trailing order of zero polynomial");
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) != 0) return static_cast<long>(i);
    }
    return 0;  // unreachable, storage is trimmed
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (*this)[i] + o[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (*this)[i] - o[i];
    return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rational& s) const {
    Poly r(*this);
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(c));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::compose(const Poly& g) const {
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + Poly(c_[i]);
    return acc;
}

Poly Poly::pow(unsigned e) const {
    Poly acc{Rational(1)};
    Poly base(*this);
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

void Poly::divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo;
    const long db = b.degree();
    long dr = static_cast<long>(rem.size()) - 1;
    if (dr >= db) quo.assign(dr - db + 1, Rational(0));
    while (dr >= db) {
        if (sgn(rem[dr]) != 0) {
            Rational f = rem[dr] / b.leading();
            quo[dr - db] = f;
            for (long i = 0; i <= db; ++i) rem[dr - db + i] -= f * b.c_[i];
        }
        --dr;
    }
    q = Poly(std::move(quo));
    r = Poly(std::move(rem));
}

long Poly::order_of(const Poly& a, const Poly& b) {
    if (a.is_zero()) throw std::domain_error("order_of: zero polynomial");
    if (b.is_constant()) throw std::domain_error("order_of: constant divisor");
    long ord = 0;
    Poly cur = a, q, r;
    for (;;) {
        divrem(cur, b, q, r);
        if (!r.is_zero()) return ord;
        ++ord;
        cur = q;
    }
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * make_rational(leading().get_den(), leading().get_num());
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b, q, r;
    while (!y.is_zero()) {
        divrem(x, y, q, r);
        x = y;
        y = r;
    }
    return x.monic();
}

Integer Poly::coefficient_denominator() const {
    Integer d(1);
    for (const auto& x : c_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
    return d;
}

Integer Poly::integer_content() const {
    Integer den = coefficient_denominator();
    Integer g(0);
    for (const auto& x : c_) {
        Integer n = x.get_num() * (den / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    return g;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (sgn(c_[i]) == 0) continue;
        Rational a = c_[i];
        if (first) {
            if (sgn(a) < 0) os << "-";
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
        }
        first = false;
        Rational mag = rational_abs(a);
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace critheight
