#pragma once

/**
 * @file perlambda.hpp
 * @brief Sampling Per_1(lambda) in the normal form and the S-place,
 *        weight-transfer, local-dichotomy, and theorem-margin verifiers.
 *
 * The S-set is evaluated exactly:
 *   S = { v : 5 * min_i log^+|c_i|_v < log^+ ||c||_v },
 * which contains every place the fixed-label variant admits up to places of
 * zero log^+ ||c||_v contribution, so the weight-transfer lower bound
 *
 *   Sum_{v in S} log^+||c||_v >= h(c)/(5d-9) - ((5d-4)/(5d-9)) h(lambda)
 *
 * holds with margin >= 0 on every sample. All heights here are exact
 * combinations of logs of primes; the 1e-9 guard applies only when a sign is
 * read off numerically.
 */

#include <string>
#include <vector>

#include "critheight/polydyn.hpp"

namespace critheight {

struct PerSample {
    CritVector cv;
    Rational lambda;
    LogCombination h_c;       // exact h(c)
    LogCombination h_lambda;  // exact h(lambda)
};

/// c_2.. = free, c_1 = (-1)^(d-1) lambda / prod(free); multiplier is exactly lambda.
PerSample sample_per1(int d, const Rational& lambda, const std::vector<Rational>& free);

std::vector<PlaceQ> s_places(const PerSample& sample);
std::vector<PlaceQ> s_places(int d, const std::vector<Rational>& c);

struct SweightReport {
    LogCombination lhs, rhs, margin;  // margin = lhs - rhs, exact
};

/// Lemma-3.2 shape: lhs = Sum_{v in S} log^+||c||_v against the h(c), h(lambda) bound.
SweightReport sweight_check(const PerSample& sample);

struct DichotomyReport {
    enum class Branch { CBounded, IndependentEscaper, Violation };
    PlaceQ place;
    Branch branch = Branch::CBounded;
    int escaper_index = -1;  // 0-based index into cv.c
    int base_index = -1;     // the locally-small maximal-height point used as c_1
    GreenValue green;
    std::string note;
};

/// Good-place dichotomy with all constants zero. Preconditions: v in S,
/// v = Prime p with p > d; domain error otherwise.
DichotomyReport local_dichotomy_check(const PerSample& sample, const PlaceQ& v,
                                      const GreenOptions& opts = {});

struct TheoremMarginReport {
    double h_c = 0.0;
    double h_lambda = 0.0;
    Rational epsilon;  // 1/(2(d-2)(5d-9)) exactly
    double min_pair = 0.0;
    double eps_hc = 0.0;
    int pair_i = -1, pair_j = -1;
    enum class Class { MarginHolds, BoundedHeightRegime } classification = Class::MarginHolds;
};

/// d >= 3; pairs are "independent" when the dependence heuristic finds nothing.
TheoremMarginReport theorem_margin(const PerSample& sample, const GreenOptions& opts = {},
                                   long dependence_budget = 12);

/// The theorem's exponent 1/(2(d-2)(5d-9)) as an exact rational; d >= 3.
Rational theorem_epsilon(int d);

}  // namespace critheight
