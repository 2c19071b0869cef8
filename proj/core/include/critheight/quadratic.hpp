#pragma once

/**
 * @file quadratic.hpp
 * @brief Quadratic rational maps in the rational (lambda_0, w) parametrization:
 *        critical/branch data, canonical heights on P^1, the S-set and
 *        half-height verifiers, the explicit 1/32 bound, the z + a + 1/z
 *        family, and the finite-critical-orbit census.
 *
 * With lambda_0 lambda_inf w^2 + 2w + 1 = 0 the map
 * f(z) = (lambda_0 z + z^2)/(lambda_inf z + 1) has rational critical points
 * zeta_1 = lambda_0 w and zeta_2 = -lambda_0 w/(2w+1) (the sign on zeta_2 is
 * forced by lambda_inf zeta^2 + 2 zeta + lambda_0 = 0) and branch points
 * xi_i = -zeta_i^2.
 */

#include <cstdint>
#include <vector>

#include "critheight/logcomb.hpp"
#include "critheight/p1height.hpp"

namespace critheight {

struct QuadMap {
    Rational lambda0, w;
    Rational lambda_inf;  // -(2w+1)/(lambda0 w^2)
    Rational zeta1, zeta2;
    Rational xi1, xi2;

    /// Integer homogeneous lift of f; throws domain_error when
    /// 1 - lambda0 lambda_inf = 0 (degree drops).
    P1Lift lift() const;
};

/// Domain errors on lambda0 = 0 and w in {0, -1/2}.
QuadMap from_lambda_w(const Rational& lambda0, const Rational& w);

/// The parameter involution w -> -w/(2w+1), swapping critical and branch points.
Rational involution_w(const Rational& w);

CanonicalHeight canonical_height_p1(const QuadMap& q, const P1Point& z, int depth = 48);

/// S = { v : log|w|_v > log^+|lambda0^{-1}|_v + C_v }, C_v = log 2 at the
/// archimedean and 2-adic places and 0 elsewhere; evaluated exactly.
std::vector<PlaceQ> s_places_quad(const QuadMap& q);

struct HalfheightReport {
    LogCombination lhs;     // sum over S of log^+|lambda_inf^{-1}|_v
    LogCombination rhs;     // h(lambda_inf)/2 - (5/2) h(lambda0) - (7/2) log 2
    LogCombination margin;  // lhs - rhs, exact
};
HalfheightReport halfheight_check(const QuadMap& q);

struct Quad2Report {
    double min_height = 0.0;  // min over the two critical points
    double error = 0.0;
    LogCombination bound;  // h(lambda_inf)/32 - (25/32) h(lambda0) - (47/32)log2 - (3/16)log3
    double margin = 0.0;   // min_height + error - bound
};
Quad2Report quad2_check(const QuadMap& q, int depth = 48);

/// deg_a of f_a^n(+-1) for f_a(z) = z + a + 1/z over Q(a) equals 2^(n-1); 1 <= n <= 8.
bool cheb_degree_check(int n);

struct ChebLikeMap {
    Rational a;
    P1Lift lift() const;
};

struct ChebFixedPoint {
    bool at_infinity = false;
    Rational point;       // -1/a when affine
    Rational multiplier;  // 1 - a^2 affine; 1 at infinity
};
/// Fixed points of z + a + 1/z with multipliers; a = 0 reports infinity only.
std::vector<ChebFixedPoint> cheb_fixed_multiplier(const Rational& a);

struct CensusEntry {
    Rational lambda0, w, lambda_inf;
    double h_lambda_inf = 0.0;
    Rational critical_point;  // the critical point with the detected finite orbit
    long tail = 0, cycle = 0;
    bool truncated = false;
};

/// h(lambda_inf) <= 47 log 2 + 6 log 3 for root-of-unity lambda0 with a finite
/// critical orbit; asserted on every emitted entry.
double census_height_cap();

/// Enumerates w = p/q with max(|p|, q) <= den_cap over the given lambda0 list,
/// keeps h(lambda_inf) <= height_cap, and emits maps with a finite critical
/// orbit. Deterministic output order (lambda0 order, |p|, q, sign); optional
/// data-parallel enumeration over numerator blocks. Throws std::logic_error
/// if an emitted entry violates census_height_cap().
std::vector<CensusEntry> census_search(const std::vector<Rational>& lambda0s,
                                       double height_cap = 8.0, long den_cap = 50,
                                       long max_steps = 64, int threads = 1);

}  // namespace critheight
