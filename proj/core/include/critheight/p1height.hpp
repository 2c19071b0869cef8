#pragma once

/**
 * @file p1height.hpp
 * @brief Canonical heights on P^1(Q) for a morphism given by an integer lift,
 *        by per-place telescoping with rigorous geometric tails.
 *
 * hhat(P) = sum_v lim d^(-n) log ||Phi^n(x,y)||_v. The archimedean series is
 * accumulated on a max-normalized float pair; each prime p dividing the
 * Bezout scales gets an exact loop on representatives reduced mod p^K, whose
 * per-step content is bounded by content_bound(p). All other places
 * contribute exactly zero for coprime representatives. Truncation at `depth`
 * leaves a tail of at most C_v d^(-depth)/(d-1) per place, carried in the
 * error field.
 */

#include "critheight/liftbound.hpp"
#include "critheight/polydyn.hpp"

namespace critheight {

struct P1Point {
    Integer x, y;  // coprime, y > 0, or (1, 0) for infinity

    static P1Point from_rational(const Rational& z);
    static P1Point infinity() { return P1Point{Integer(1), Integer(0)}; }
    static P1Point normalized(Integer x, Integer y);

    bool is_infinity() const { return sgn(y) == 0; }
    Rational affine() const;
    double naive_height() const;  // log max(|x|, |y|)

    bool operator==(const P1Point& o) const { return x == o.x && y == o.y; }
    bool operator<(const P1Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

class P1Lift {
public:
    /// F[i], G[i] = coefficients of X^i Y^(d-i); degree d >= 2, resultant != 0.
    P1Lift(std::vector<Integer> F, std::vector<Integer> G);

    long degree() const { return bounds_.degree; }
    const LiftBounds& bounds() const { return bounds_; }
    const std::vector<Integer>& F() const { return F_; }
    const std::vector<Integer>& G() const { return G_; }

    void apply_raw(const Integer& x, const Integer& y, Integer& X, Integer& Y) const;
    P1Point apply(const P1Point& P) const;

    /// Primes with possibly nonzero local contribution (divisors of the scales).
    const std::vector<Integer>& bad_primes() const { return bad_primes_; }

private:
    std::vector<Integer> F_, G_;
    LiftBounds bounds_;
    std::vector<Integer> bad_primes_;
};

CanonicalHeight p1_canonical_height(const P1Lift& lift, const P1Point& P, int depth = 48);

struct OrbitClass {
    enum class Kind { Finite, Infinite, Truncated };
    Kind kind = Kind::Truncated;
    long tail = 0, cycle = 0;
    long steps = 0;
};

/// Exact forward-orbit classification with the derived preperiodicity cutoff.
OrbitClass classify_p1_orbit(const P1Lift& lift, const P1Point& P, long max_steps = 64,
                             std::size_t digit_budget_bits = std::size_t(1) << 18);

}  // namespace critheight
