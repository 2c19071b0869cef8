#pragma once

/**
 * @file places.hpp
 * @brief Places and Weil heights of Q and of Q(t), satisfying the product formula.
 *
 * Places of Q are the archimedean absolute value and one p-adic value per
 * prime, all with weight 1. Places of Q(t) are monic irreducible
 * polynomials pi (weight deg pi) together with the place at infinity
 * (weight 1); the normalization log|x|_pi = -ord_pi(x) * deg(pi),
 * log|x|_inf = deg num - deg den keeps every Q(t) log an exact integer and
 * makes Sum_v log|x|_v = 0 an exact integer identity.
 */

#include <optional>
#include <span>
#include <vector>

#include "critheight/logcomb.hpp"
#include "critheight/polyfactor.hpp"
#include "critheight/ratfunc.hpp"

namespace critheight {

struct PlaceQ {
    enum class Kind { Arch, Prime };
    Kind kind = Kind::Arch;
    Integer p;  // set when kind == Prime

    static PlaceQ arch() { return PlaceQ{Kind::Arch, Integer(0)}; }
    static PlaceQ prime(Integer prime);
    bool is_arch() const { return kind == Kind::Arch; }

    bool operator==(const PlaceQ& o) const { return kind == o.kind && p == o.p; }
    bool operator<(const PlaceQ& o) const {
        if (kind != o.kind) return kind < o.kind;  // Arch sorts first
        return p < o.p;
    }
};

struct LogAbs {
    double value = 0.0;
    /// -v_p(x) at a finite place; not set at the archimedean place.
    std::optional<long> neg_valuation;
};

/// log|x|_v: Arch -> log|x|; Prime p -> -v_p(x) log p. x must be nonzero.
LogAbs log_abs(const Rational& x, const PlaceQ& v);

/// The finite set of places where |x|_v != 1 (Arch included iff |x| != 1).
std::vector<PlaceQ> support(const Rational& x);

/// Affine Weil height Sum_v log^+ max_i |x_i|_v over all places of Q.
double height_affine(std::span<const Rational> coords);
/// Same height as an exact combination of logs of primes.
LogCombination height_affine_comb(std::span<const Rational> coords);

/// log^+ max_i |x_i|_v at one place, as an exact log combination.
LogCombination local_sup_log_plus(std::span<const Rational> coords, const PlaceQ& v);

struct PlaceFF {
    enum class Kind { FinitePrime, Infinity };
    Kind kind = Kind::Infinity;
    Poly pi;  // monic irreducible, set when kind == FinitePrime

    static PlaceFF infinity() { return PlaceFF{Kind::Infinity, Poly()}; }
    static PlaceFF finite(Poly prime);  // checks irreducibility
    bool is_infinity() const { return kind == Kind::Infinity; }
    /// deg pi for finite places, 1 at infinity.
    long weight() const { return is_infinity() ? 1 : pi.degree(); }

    bool operator==(const PlaceFF& o) const { return kind == o.kind && pi == o.pi; }
};

/// log|x|_v over Q(t), an exact integer. x must be nonzero.
long ff_log_abs(const RationalFunction& x, const PlaceFF& v);

/// Finite places with |x|_v != 1, plus Infinity when deg num != deg den.
std::vector<PlaceFF> ff_support(const RationalFunction& x);

/// Affine height over Q(t), an exact integer; zero iff every coordinate is constant.
long ff_height_affine(std::span<const RationalFunction> coords);

}  // namespace critheight
