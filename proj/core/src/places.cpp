#include "critheight/places.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "critheight/intfactor.hpp"

namespace critheight {

PlaceQ PlaceQ::prime(Integer prime) {
    if (!is_prime(prime)) throw std::domain_error("PlaceQ: " + prime.get_str() + " is not prime");
    return PlaceQ{Kind::Prime, std::move(prime)};
}

LogAbs log_abs(const Rational& x, const PlaceQ& v) {
    if (sgn(x) == 0) throw std::domain_error("log_abs: zero");
    if (v.is_arch()) return LogAbs{log_abs_rational(x), std::nullopt};
    long nv = -padic_valuation(x, v.p);
    return LogAbs{static_cast<double>(nv) * log_abs_integer(v.p), nv};
}

std::vector<PlaceQ> support(const Rational& x) {
    if (sgn(x) == 0) throw std::domain_error("support: zero");
    std::vector<PlaceQ> out;
    if (rational_abs(x) != 1) out.push_back(PlaceQ::arch());
    for (const Integer& p : prime_support(x)) out.push_back(PlaceQ{PlaceQ::Kind::Prime, p});
    return out;
}

namespace {

std::vector<PlaceQ> support_union(std::span<const Rational> coords) {
    std::set<Integer> primes;
    for (const auto& x : coords) {
        if (sgn(x) == 0) continue;
        for (const Integer& p : prime_support(x)) primes.insert(p);
    }
    std::vector<PlaceQ> out{PlaceQ::arch()};
    for (const Integer& p : primes) out.push_back(PlaceQ{PlaceQ::Kind::Prime, p});
    return out;
}

}  // namespace

LogCombination local_sup_log_plus(std::span<const Rational> coords, const PlaceQ& v) {
    if (v.is_arch()) {
        Rational best(0);
        for (const auto& x : coords) best = std::max(best, rational_abs(x));
        return LogCombination::log_plus_of(best);
    }
    bool any = false;
    long min_val = 0;
    for (const auto& x : coords) {
        if (sgn(x) == 0) continue;
        long val = padic_valuation(x, v.p);
        min_val = any ? std::min(min_val, val) : val;
        any = true;
    }
    if (!any || min_val >= 0) return LogCombination();
    return LogCombination::prime_log(v.p, Rational(-min_val));
}

LogCombination height_affine_comb(std::span<const Rational> coords) {
    if (coords.empty()) throw std::domain_error("height_affine: empty coordinate list");
    LogCombination h;
    for (const PlaceQ& v : support_union(coords)) h += local_sup_log_plus(coords, v);
    return h;
}

double height_affine(std::span<const Rational> coords) {
    return height_affine_comb(coords).value();
}

PlaceFF PlaceFF::finite(Poly prime) {
    if (prime.degree() < 1 || !(prime.leading() == 1)) {
        throw std::domain_error("PlaceFF: finite prime must be monic of degree >= 1");
    }
    if (!poly_is_irreducible(prime)) {
        throw std::domain_error("PlaceFF: " + prime.to_string() + " is reducible over Q");
    }
    return PlaceFF{Kind::FinitePrime, std::move(prime)};
}

long ff_log_abs(const RationalFunction& x, const PlaceFF& v) {
    if (x.is_zero()) throw std::domain_error("ff_log_abs: zero");
    if (v.is_infinity()) return x.degree_delta();
    long ord = 0;
    if (!x.num().is_constant() || !x.den().is_constant()) {
        ord = Poly::order_of(x.num(), v.pi) - Poly::order_of(x.den(), v.pi);
    }
    return -ord * v.pi.degree();
}

std::vector<PlaceFF> ff_support(const RationalFunction& x) {
    if (x.is_zero()) throw std::domain_error("ff_support: zero");
    std::vector<PlaceFF> out;
    auto add_factors = [&out](const Poly& f) {
        if (f.is_constant()) return;
        for (const auto& pf : factor_poly(f).factors) {
            out.push_back(PlaceFF{PlaceFF::Kind::FinitePrime, pf.factor});
        }
    };
    add_factors(x.num());
    add_factors(x.den());
    if (x.degree_delta() != 0) out.push_back(PlaceFF::infinity());
    return out;
}

long ff_height_affine(std::span<const RationalFunction> coords) {
    if (coords.empty()) throw std::domain_error("ff_height_affine: empty coordinate list");

    // finite places: monic irreducible factors of any denominator can carry
    // a pole; factor each coordinate once and merge
    std::vector<Poly> primes;
    auto add_factors = [&primes](const Poly& f) {
        if (f.is_constant()) return;
        for (const auto& pf : factor_poly(f).factors) {
            if (std::find(primes.begin(), primes.end(), pf.factor) == primes.end()) {
                primes.push_back(pf.factor);
            }
        }
    };
    for (const auto& x : coords) {
        if (!x.is_zero()) add_factors(x.den());
    }

    long h = 0;
    for (const Poly& pi : primes) {
        long min_ord = 0;
        for (const auto& x : coords) {
            if (x.is_zero()) continue;
            long ord = Poly::order_of(x.num(), pi) - Poly::order_of(x.den(), pi);
            min_ord = std::min(min_ord, ord);
        }
        if (min_ord < 0) h += -min_ord * pi.degree();
    }
    long max_delta = 0;
    for (const auto& x : coords) {
        if (!x.is_zero()) max_delta = std::max(max_delta, x.degree_delta());
    }
    return h + max_delta;
}

}  // namespace critheight
