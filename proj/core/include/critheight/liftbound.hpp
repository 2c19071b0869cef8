#pragma once

/**
 * @file liftbound.hpp
 * @brief Explicit height-difference bounds for a morphism of P^1 given by an
 *        integer homogeneous lift.
 *
 * For coprime integer forms F, G of degree d, Bezout cofactor identities
 *   A_x F + B_x G = delta_x * X^(2d-1),   A_y F + B_y G = delta_y * Y^(2d-1)
 * (integer forms of degree d-1, obtained by solving the Sylvester system
 * exactly and clearing denominators) give, for every P in P^1(Q),
 *
 *   -c_minus <= h(f(P)) - d h(P) <= c_plus
 *
 * with c_plus = log max(sum|F_i|, sum|G_i|) and
 * c_minus = log max(L_x |delta_y|, L_y |delta_x|), L the cofactor 1-norms.
 * The same identities bound the p-adic content of (F, G) at unit vectors by
 * min(v_p(delta_x), ...) <= v_p(delta_x delta_y), which drives the finite
 * part of the canonical-height telescoping.
 */

#include <vector>

#include "critheight/rational.hpp"

namespace critheight {

struct LiftBounds {
    long degree = 0;
    Integer resultant;  // determinant of the Sylvester system; nonzero iff F, G coprime
    double c_plus = 0.0;
    double c_minus = 0.0;
    Integer delta_x, delta_y;  // positive scales of the two Bezout identities
    Integer l1_x, l1_y;        // 1-norms of the cleared cofactor pairs

    /// sup over P^1(Q) of |h(f(P)) - d h(P)|.
    double one_step_bound() const { return c_plus > c_minus ? c_plus : c_minus; }
    /// |h(P) - hhat(P)| <= height_gap() for every P (telescoping).
    double height_gap() const { return one_step_bound() / static_cast<double>(degree - 1); }
    /// At a prime p, min(v_p F(u), v_p G(u)) <= content_bound(p) for p-unit u.
    long content_bound(const Integer& p) const;
};

/// F, G given by coefficient vectors F[i] = coeff of X^i Y^(d-i), size d+1.
/// Throws std::domain_error when the resultant vanishes (degenerate map).
LiftBounds lift_bounds(const std::vector<Integer>& F, const std::vector<Integer>& G);

}  // namespace critheight
