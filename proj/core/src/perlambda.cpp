#include "critheight/perlambda.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "critheight/intfactor.hpp"

namespace critheight {

PerSample sample_per1(int d, const Rational& lambda, const std::vector<Rational>& free) {
    if (sgn(lambda) == 0) throw std::domain_error("sample_per1: lambda must be nonzero");
    if (free.size() != static_cast<std::size_t>(d - 2)) {
        throw std::domain_error("sample_per1: expected d-2 free critical points");
    }
    Rational prod(1);
    for (const auto& x : free) {
        if (sgn(x) == 0) throw std::domain_error("sample_per1: free entries must be nonzero");
        prod *= x;
    }
    Rational c1 = lambda / prod;
    if (d % 2 == 0) c1 = -c1;  // (-1)^(d-1)
    std::vector<Rational> c{c1};
    c.insert(c.end(), free.begin(), free.end());
    PerSample s{CritVector(d, std::move(c)), lambda, LogCombination(), LogCombination()};
    std::vector<Rational> lam{lambda};
    s.h_c = height_affine_comb(s.cv.c);
    s.h_lambda = height_affine_comb(lam);
    return s;
}

std::vector<PlaceQ> s_places(int d, const std::vector<Rational>& c) {
    (void)d;
    std::set<Integer> primes;
    for (const auto& ci : c) {
        if (sgn(ci) == 0) continue;
        for (const Integer& p : prime_support(ci)) primes.insert(p);
    }
    std::vector<PlaceQ> out;
    // archimedean: 5 log max(1, min|c_i|) < log max(1, max|c_i|), exactly
    {
        Rational mn(-1), mx(0);
        for (const auto& ci : c) {
            Rational a = rational_abs(ci);
            if (sgn(mn) < 0 || a < mn) mn = a;
            if (a > mx) mx = a;
        }
        Rational lo = mn > 1 ? mn : Rational(1);
        Rational hi = mx > 1 ? mx : Rational(1);
        if (pow_rational(lo, 5) < hi) out.push_back(PlaceQ::arch());
    }
    for (const Integer& p : primes) {
        long min_plus = 0, max_plus = 0;
        bool first = true;
        for (const auto& ci : c) {
            long plus = sgn(ci) == 0 ? 0 : std::max(0l, -padic_valuation(ci, p));
            min_plus = first ? plus : std::min(min_plus, plus);
            max_plus = std::max(max_plus, plus);
            first = false;
        }
        if (5 * min_plus < max_plus) out.push_back(PlaceQ{PlaceQ::Kind::Prime, p});
    }
    return out;
}

std::vector<PlaceQ> s_places(const PerSample& sample) { return s_places(sample.cv.d, sample.cv.c); }

SweightReport sweight_check(const PerSample& sample) {
    const int d = sample.cv.d;
    SweightReport rep;
    for (const PlaceQ& v : s_places(sample)) rep.lhs += local_sup_log_plus(sample.cv.c, v);
    const Rational w1 = make_rational(1, 5 * d - 9);
    const Rational w2 = make_rational(5 * d - 4, 5 * d - 9);
    rep.rhs = sample.h_c * w1 - sample.h_lambda * w2;
    rep.margin = rep.lhs - rep.rhs;
    return rep;
}

namespace {

// exact test of 5 log|x|_v < log||c||_v at a finite place
bool locally_small(const Rational& x, const std::vector<Rational>& c, const Integer& p) {
    long vx = padic_valuation(x, p);
    long min_v = vx;
    for (const auto& ci : c) min_v = std::min(min_v, padic_valuation(ci, p));
    return 5 * (-vx) < -min_v;
}

}  // namespace

DichotomyReport local_dichotomy_check(const PerSample& sample, const PlaceQ& v,
                                      const GreenOptions& opts) {
    if (v.is_arch()) {
        throw std::domain_error("local_dichotomy_check: place must be a good prime");
    }
    const int d = sample.cv.d;
    if (v.p <= d) {
        throw std::domain_error("local_dichotomy_check: requires p > d (v-integral place)");
    }
    std::vector<PlaceQ> S = s_places(sample);
    if (std::find(S.begin(), S.end(), v) == S.end()) {
        throw std::domain_error("local_dichotomy_check: place is not in S");
    }

    DichotomyReport rep;
    rep.place = v;

    LogCombination sup = local_sup_log_plus(sample.cv.c, v);
    if (sup.is_zero()) {
        rep.branch = DichotomyReport::Branch::CBounded;
        rep.note = "log^+||c||_v = 0";
        return rep;
    }
    const Rational sup_mult = sup.terms().begin()->second;  // ||c||_v = p^sup_mult

    NormalFormPoly f = coeffs_from_crit(sample.cv);

    // the locally small critical points; the lemma's c_1 is a maximal-height
    // representative among them
    std::vector<int> small;
    for (std::size_t i = 0; i < sample.cv.c.size(); ++i) {
        if (locally_small(sample.cv.c[i], sample.cv.c, v.p)) small.push_back(static_cast<int>(i));
    }
    if (small.empty()) {
        rep.branch = DichotomyReport::Branch::Violation;
        rep.note = "no locally small critical point despite v in S";
        return rep;
    }
    std::vector<CanonicalHeight> hh = critical_heights(f, opts);
    int base = small[0];
    for (int i : small) {
        if (hh[static_cast<std::size_t>(i)].value > hh[static_cast<std::size_t>(base)].value) {
            base = i;
        }
    }
    rep.base_index = base;

    for (std::size_t i = 0; i < sample.cv.c.size(); ++i) {
        if (static_cast<int>(i) == base) continue;
        GreenValue g = green_nonarch(f, sample.cv.c[i], v.p, opts);
        if (!g.escaped() || !g.exact_log_coeff || *g.exact_log_coeff < sup_mult) continue;
        DependenceVerdict dep =
            detect_dependence(f, sample.cv.c[base], sample.cv.c[i], 12);
        if (dep.found()) continue;
        rep.branch = DichotomyReport::Branch::IndependentEscaper;
        rep.escaper_index = static_cast<int>(i);
        rep.green = g;
        return rep;
    }
    rep.branch = DichotomyReport::Branch::Violation;
    rep.note = "no independent critical point with G_v >= log^+||c||_v";
    return rep;
}

Rational theorem_epsilon(int d) {
    if (d < 3) throw std::domain_error("theorem_epsilon: requires d >= 3");
    return make_rational(1, 2 * (d - 2) * (5 * d - 9));
}

TheoremMarginReport theorem_margin(const PerSample& sample, const GreenOptions& opts,
                                   long dependence_budget) {
    const int d = sample.cv.d;
    if (d < 3) throw std::domain_error("theorem_margin: requires d >= 3 (d = 2 is immediate)");

    TheoremMarginReport rep;
    rep.h_c = sample.h_c.value();
    rep.h_lambda = sample.h_lambda.value();
    rep.epsilon = theorem_epsilon(d);
    rep.eps_hc = rep.epsilon.get_d() * rep.h_c;

    NormalFormPoly f = coeffs_from_crit(sample.cv);
    std::vector<CanonicalHeight> hh = critical_heights(f, opts);

    bool any_pair = false;
    double min_pair = 0.0;
    for (std::size_t i = 0; i < sample.cv.c.size(); ++i) {
        for (std::size_t j = i + 1; j < sample.cv.c.size(); ++j) {
            DependenceVerdict dep =
                detect_dependence(f, sample.cv.c[i], sample.cv.c[j], dependence_budget);
            if (dep.found()) continue;
            double pair_min = std::min(hh[i].value, hh[j].value);
            if (!any_pair || pair_min < min_pair) {
                min_pair = pair_min;
                rep.pair_i = static_cast<int>(i);
                rep.pair_j = static_cast<int>(j);
            }
            any_pair = true;
        }
    }
    rep.min_pair = any_pair ? min_pair : 0.0;
    rep.classification = rep.min_pair < rep.eps_hc
                             ? TheoremMarginReport::Class::BoundedHeightRegime
                             : TheoremMarginReport::Class::MarginHolds;
    return rep;
}

}  // namespace critheight
