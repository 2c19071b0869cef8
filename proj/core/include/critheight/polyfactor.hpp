#pragma once

/**
 * @file polyfactor.hpp
 * @brief Factorization of rational polynomials into monic irreducibles.
 *
 * Small-prime Zassenhaus: squarefree split (Yun), factor mod p
 * (distinct-degree + Cantor-Zassenhaus), Hensel lift past the
 * Landau-Mignotte bound, subset recombination. Sized for the small
 * degrees this library ever asks places of.
 */

#include <vector>

#include "critheight/poly.hpp"

namespace critheight {

struct PolyFactor {
    Poly factor;  // monic, irreducible over Q
    unsigned multiplicity = 0;
};

struct PolyFactorization {
    Rational unit;  // input = unit * prod factor^multiplicity
    std::vector<PolyFactor> factors;
};

/// Complete factorization of a nonzero rational polynomial; factors sorted by
/// (degree, coefficient order) so the result is deterministic.
PolyFactorization factor_poly(const Poly& f);

/// True iff f is irreducible over Q (degree >= 1 required).
bool poly_is_irreducible(const Poly& f);

}  // namespace critheight
