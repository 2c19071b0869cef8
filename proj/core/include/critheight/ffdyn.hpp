#pragma once

/**
 * @file ffdyn.hpp
 * @brief Exact escape rates and heights for normal-form families over Q(t).
 *
 * Every place of Q(t) is v-integral (nonzero constants are units), so the
 * escape estimates hold with all constants zero and every escaped value is
 * an exact rational d^(-n) * integer. Symbolic iteration is bounded by a
 * degree budget; exhausting it raises ResourceError, which callers surface
 * as Inconclusive rather than a wrong zero.
 */

#include <vector>

#include "critheight/places.hpp"

namespace critheight {

struct FFCritVector {
    int d = 2;
    std::vector<RationalFunction> c;
    Rational lambda;  // derived: prod c_i = (-1)^(d-1) lambda, constant nonzero

    FFCritVector(int degree, std::vector<RationalFunction> crit);
};

/// Normal-form coefficients a_1..a_d over Q(t); a_j of z^j.
std::vector<RationalFunction> ff_normal_form_coeffs(const FFCritVector& cv);
RationalFunction ff_eval(const std::vector<RationalFunction>& coeffs, const RationalFunction& z);

struct FFGreenValue {
    enum class Status { EscapedAtStep, BoundedUpTo, ExactZero };
    Status status = Status::ExactZero;
    long step = 0;
    Rational value;  // exact nonnegative rational; d^(-n) * integer when escaped

    bool escaped() const { return status == Status::EscapedAtStep; }
    bool exact() const { return status != Status::BoundedUpTo; }
};

struct FFOptions {
    long max_iters = 64;
    long degree_budget = 4096;
};

FFGreenValue ff_green(const FFCritVector& cv, const RationalFunction& z, const PlaceFF& v,
                      const FFOptions& opts = {});

struct FFHeight {
    Rational value;  // exact; a lower bound when truncated
    bool truncated = false;
    std::vector<std::pair<PlaceFF, FFGreenValue>> breakdown;
};

FFHeight ff_canonical_height(const FFCritVector& cv, const RationalFunction& z,
                             const FFOptions& opts = {});

struct CinkVerdict {
    enum class Kind { ConstantC, TwoEscapers, Inconclusive };
    Kind kind = Kind::Inconclusive;
    int i = -1, j = -1;               // indices of the two independent escapers
    std::vector<PlaceFF> places;      // a witnessing escape place for each
    long budget = 0;
};

/// Either c is constant, or two heuristically independent critical points
/// escape somewhere (the function-field dichotomy); Inconclusive only on
/// budget truncation.
CinkVerdict cink_check(const FFCritVector& cv, const FFOptions& opts = {});

/// True iff every critical point is constant; equivalent to critical height 0.
bool isotriviality_check(const FFCritVector& cv);

struct FFDependenceVerdict {
    enum class Kind { MergedOrbit, BothPreperiodic, LinearSymmetryMerge, NoRelationFound };
    Kind kind = Kind::NoRelationFound;
    long n = 0, m = 0;
    bool found() const { return kind != Kind::NoRelationFound; }
};

FFDependenceVerdict ff_detect_dependence(const FFCritVector& cv, const RationalFunction& a,
                                         const RationalFunction& b, long N,
                                         const FFOptions& opts = {});

}  // namespace critheight
