#pragma once

/**
 * @file polydyn.hpp
 * @brief Normal-form polynomials f_c, per-place escape rates, canonical
 *        heights, preperiodicity and dependence heuristics.
 *
 * The normal form fixes z = 0 with multiplier (-1)^(d-1) prod c_i and has
 * derivative exactly prod (z - c_i):
 *
 *   f_c(z) = (1/d) z^d - (e_1/(d-1)) z^(d-1) + ... + (-1)^(d-1) e_{d-1} z.
 *
 * Escape rates: at the archimedean place, floating iteration switches to a
 * (sign, log) representation once past the derived escape radius, so no
 * overflow and a geometric tail bound kappa/(d^n (d-1)); at finite places
 * iteration is exact and escape is certified by strict valuation domination
 * of the top term, which pins the value d^(-n)(-v(z_n) - v_p(1/d)/(d-1)) log p
 * exactly. Bounded orbits are N-truncated with the residual bound carried in
 * the error field rather than silently zeroed.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "critheight/liftbound.hpp"
#include "critheight/places.hpp"

namespace critheight {

struct CritVector {
    int d = 2;
    std::vector<Rational> c;  // the d-1 affine critical points

    CritVector(int degree, std::vector<Rational> crit);
    /// f'(0) = (-1)^(d-1) prod c_i.
    Rational multiplier() const;
};

class NormalFormPoly {
public:
    explicit NormalFormPoly(const CritVector& cv);

    int d() const { return d_; }
    /// Coefficient a_j of z^j, 1 <= j <= d (a_d = 1/d).
    const Rational& coeff(int j) const { return a_[static_cast<std::size_t>(j - 1)]; }
    const std::vector<Rational>& coeffs() const { return a_; }
    const std::vector<Rational>& crit() const { return c_; }

    Rational eval(const Rational& z) const;
    Rational derivative_at(const Rational& z) const;
    double eval(double z) const;

    /// Integer homogeneous lift (F, den*Y^d) with F = sum C_j X^j Y^(d-j).
    const std::vector<Integer>& lift_numerator() const { return liftF_; }
    const Integer& lift_denominator() const { return liftD_; }
    const LiftBounds& bounds() const { return bounds_; }
    /// sup_z |h(f(z)) - d h(z)|.
    double one_step_height_bound() const { return bounds_.one_step_bound(); }
    /// |h - hhat| <= height_gap() everywhere; also the sound preperiodicity cutoff.
    double height_gap() const { return bounds_.height_gap(); }

    std::string to_string() const;

private:
    int d_;
    std::vector<Rational> c_;
    std::vector<Rational> a_;  // a_1..a_d
    std::vector<Integer> liftF_;
    Integer liftD_;
    LiftBounds bounds_;
};

/// coeffs_from_crit of the spec; named constructor form.
inline NormalFormPoly coeffs_from_crit(const CritVector& cv) { return NormalFormPoly(cv); }

struct GreenValue {
    enum class Status { EscapedAtStep, BoundedUpTo, ExactZero };
    Status status = Status::ExactZero;
    long step = 0;  // escape step, or the exhausted budget
    double value = 0.0;
    double error = 0.0;
    /// At finite places: value = exact_log_coeff * log p with zero error.
    std::optional<Rational> exact_log_coeff;

    bool escaped() const { return status == Status::EscapedAtStep; }
    bool exact() const { return status != Status::BoundedUpTo; }
};

struct CanonicalHeight {
    double value = 0.0;
    double error = 0.0;
    std::vector<std::pair<PlaceQ, GreenValue>> breakdown;  // Arch first, then primes ascending
    bool truncated() const;
};

struct GreenOptions {
    long max_arch_iters = 200;
    long arch_settle_iters = 60;
    long max_nonarch_iters = 10000;
    long exact_probe_steps = 64;
    // exact iteration stops here; past ~15 doublings the residual bound is
    // already geometric dust and escapes certify in far fewer steps
    std::size_t digit_budget_bits = std::size_t(1) << 16;
};

GreenValue green_arch(const NormalFormPoly& f, const Rational& z, const GreenOptions& opts = {});
GreenValue green_nonarch(const NormalFormPoly& f, const Rational& z, const Integer& p,
                         const GreenOptions& opts = {});
CanonicalHeight canonical_height_green(const NormalFormPoly& f, const Rational& z,
                                       const GreenOptions& opts = {});

/// Independent oracle hhat ~ h(f^n(z)) / d^n in exact rational arithmetic.
/// Throws ResourceError when the iterate exceeds the digit budget.
double canonical_height_iter(const NormalFormPoly& f, const Rational& z, int n,
                             std::size_t digit_budget_bits = std::size_t(1) << 24);

struct PreperiodicityBounds {
    double height_cutoff = 0.0;  // <= 0: use the derived cutoff height_gap()
    long max_steps = 256;
    std::size_t digit_budget_bits = std::size_t(1) << 18;
};

struct PreperiodicityVerdict {
    enum class Kind { Preperiodic, NotPreperiodic, Undecided };
    Kind kind = Kind::Undecided;
    long tail = 0;
    long cycle = 0;
    long steps_checked = 0;
    std::string certificate;

    bool preperiodic() const { return kind == Kind::Preperiodic; }
};

PreperiodicityVerdict is_preperiodic(const NormalFormPoly& f, const Rational& z,
                                     const PreperiodicityBounds& bounds = {});

/// Rational roots of unity zeta with f(zeta z) = zeta f(z); always contains 1.
std::vector<Rational> detect_linear_symmetry(const NormalFormPoly& f);

struct DependenceVerdict {
    enum class Kind { MergedOrbit, BothPreperiodic, LinearSymmetryMerge, NoRelationFound };
    Kind kind = Kind::NoRelationFound;
    long n = 0, m = 0;  // merge indices f^n(a) = [zeta*] f^m(b)
    Rational zeta;      // the symmetry for LinearSymmetryMerge
    std::optional<Rational> ratio;  // d^(m-n) on merge; 1 for BothPreperiodic
    long budget = 0;

    bool found() const { return kind != Kind::NoRelationFound; }
};

DependenceVerdict detect_dependence(const NormalFormPoly& f, const Rational& a, const Rational& b,
                                    long N);

std::vector<CanonicalHeight> critical_heights(const NormalFormPoly& f,
                                              const GreenOptions& opts = {});
/// Min over discarding k of the 2d-2 critical points (with multiplicity; the
/// d-1 at infinity have height zero) of the sum of the rest.
double depleted_crit_height(const NormalFormPoly& f, int k, const GreenOptions& opts = {});

/// prod f'(f^j(P)) over the cycle; domain error if f^n(P) != P.
Rational multiplier_of_cycle(const NormalFormPoly& f, const Rational& P, int n);

}  // namespace critheight
