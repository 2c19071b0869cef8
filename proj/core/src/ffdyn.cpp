#include "critheight/ffdyn.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace critheight {

FFCritVector::FFCritVector(int degree, std::vector<RationalFunction> crit)
    : d(degree), c(std::move(crit)) {
    if (d < 2) throw std::domain_error("FFCritVector: degree must be >= 2");
    if (c.size() != static_cast<std::size_t>(d - 1)) {
        throw std::domain_error("FFCritVector: expected d-1 critical points");
    }
    RationalFunction prod{Rational(1)};
    for (const auto& ci : c) prod = prod * ci;
    if (!prod.is_constant()) {
        throw std::domain_error("FFCritVector: prod c_i must be a nonzero constant");
    }
    lambda = prod.constant_value();
    if (d % 2 == 0) lambda = -lambda;
    if (sgn(lambda) == 0) {
        throw std::domain_error("FFCritVector: lambda must be nonzero");
    }
}

std::vector<RationalFunction> ff_normal_form_coeffs(const FFCritVector& cv) {
    const int d = cv.d;
    std::vector<RationalFunction> e(static_cast<std::size_t>(d), RationalFunction(Rational(0)));
    e[0] = RationalFunction(Rational(1));
    for (const auto& ci : cv.c) {
        for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] = e[j] + ci * e[j - 1];
    }
    std::vector<RationalFunction> a(static_cast<std::size_t>(d), RationalFunction(Rational(0)));
    for (int j = 0; j <= d - 1; ++j) {
        RationalFunction term = e[static_cast<std::size_t>(j)] * RationalFunction(make_rational(1, d - j));
        a[static_cast<std::size_t>(d - j - 1)] = (j % 2 == 0) ? term : -term;
    }
    return a;
}

RationalFunction ff_eval(const std::vector<RationalFunction>& coeffs, const RationalFunction& z) {
    RationalFunction acc{Rational(0)};
    for (std::size_t j = coeffs.size(); j-- > 0;) acc = (acc + coeffs[j]) * z;
    return acc;
}

namespace {

// additive valuation at a place: |x|_v = e^{-w(x) * weight(v)}
long place_valuation(const RationalFunction& x, const PlaceFF& v) {
    if (x.is_zero()) throw std::domain_error("place_valuation: zero");
    if (v.is_infinity()) return -x.degree_delta();
    return Poly::order_of(x.num(), v.pi) - Poly::order_of(x.den(), v.pi);
}

struct RfLess {
    bool operator()(const RationalFunction& a, const RationalFunction& b) const {
        if (a.num().degree() != b.num().degree()) return a.num().degree() < b.num().degree();
        if (a.den().degree() != b.den().degree()) return a.den().degree() < b.den().degree();
        for (long i = a.num().degree(); i >= 0; --i) {
            const Rational& x = a.num()[static_cast<std::size_t>(i)];
            const Rational& y = b.num()[static_cast<std::size_t>(i)];
            if (x != y) return x < y;
        }
        for (long i = a.den().degree(); i >= 0; --i) {
            const Rational& x = a.den()[static_cast<std::size_t>(i)];
            const Rational& y = b.den()[static_cast<std::size_t>(i)];
            if (x != y) return x < y;
        }
        return false;
    }
};

FFGreenValue ff_exact_zero() {
    FFGreenValue g;
    g.status = FFGreenValue::Status::ExactZero;
    g.value = Rational(0);
    return g;
}

}  // namespace

FFGreenValue ff_green(const FFCritVector& cv, const RationalFunction& z, const PlaceFF& v,
                      const FFOptions& opts) {
    const int d = cv.d;
    std::vector<RationalFunction> a = ff_normal_form_coeffs(cv);
    std::vector<long> wa(static_cast<std::size_t>(d) + 1, 0);
    bool coeffs_integral = true;
    for (int j = 1; j <= d; ++j) {
        const auto& aj = a[static_cast<std::size_t>(j - 1)];
        if (!aj.is_zero()) {
            wa[static_cast<std::size_t>(j)] = place_valuation(aj, v);
            coeffs_integral = coeffs_integral && wa[static_cast<std::size_t>(j)] >= 0;
        }
    }
    const long weight = v.weight();

    std::set<RationalFunction, RfLess> seen;
    RationalFunction cur = z;
    long n = 0;
    for (;; ++n) {
        if (cur.is_zero()) return ff_exact_zero();
        const long w = place_valuation(cur, v);
        if (coeffs_integral && w >= 0) return ff_exact_zero();

        const long md = wa[static_cast<std::size_t>(d)] + static_cast<long>(d) * w;
        bool dominated = true;
        for (int j = 1; j < d && dominated; ++j) {
            if (a[static_cast<std::size_t>(j - 1)].is_zero()) continue;
            dominated = md < wa[static_cast<std::size_t>(j)] + static_cast<long>(j) * w;
        }
        if (dominated && (d - 1) * w + wa[static_cast<std::size_t>(d)] <= 0) {
            Rational coeff =
                Rational(-w) - make_rational(wa[static_cast<std::size_t>(d)], d - 1);
            coeff *= Rational(weight);
            coeff /= Rational(pow_integer(Integer(d), static_cast<unsigned long>(n)));
            if (sgn(coeff) == 0) return ff_exact_zero();
            FFGreenValue g;
            g.status = FFGreenValue::Status::EscapedAtStep;
            g.step = n;
            g.value = coeff;
            return g;
        }
        if (!seen.insert(cur).second) return ff_exact_zero();  // exact cycle
        if (n >= opts.max_iters) break;
        if (cur.total_degree() > opts.degree_budget) {
            throw ResourceError("ff_green: degree budget exceeded at step " + std::to_string(n));
        }
        cur = ff_eval(a, cur);
    }
    FFGreenValue g;
    g.status = FFGreenValue::Status::BoundedUpTo;
    g.step = n;
    g.value = Rational(0);
    return g;
}

namespace {

// places where |z|_v > 1 or ||c||_v > 1: poles of the inputs plus infinity
std::vector<PlaceFF> contributing_places(const FFCritVector& cv, const RationalFunction& z) {
    std::vector<PlaceFF> out;
    std::vector<Poly> primes;
    auto add_factors = [&primes](const Poly& f) {
        if (f.is_constant()) return;
        for (const auto& pf : factor_poly(f).factors) {
            if (std::find(primes.begin(), primes.end(), pf.factor) == primes.end()) {
                primes.push_back(pf.factor);
            }
        }
    };
    bool inf = false;
    auto consider = [&](const RationalFunction& x) {
        if (x.is_zero()) return;
        add_factors(x.den());
        if (x.degree_delta() > 0) inf = true;
    };
    consider(z);
    for (const auto& ci : cv.c) consider(ci);
    for (const Poly& pi : primes) out.push_back(PlaceFF{PlaceFF::Kind::FinitePrime, pi});
    if (inf) out.push_back(PlaceFF::infinity());
    return out;
}

}  // namespace

FFHeight ff_canonical_height(const FFCritVector& cv, const RationalFunction& z,
                             const FFOptions& opts) {
    FFHeight h;
    h.value = Rational(0);
    for (const PlaceFF& v : contributing_places(cv, z)) {
        FFGreenValue g = ff_green(cv, z, v, opts);
        h.value += g.value;
        h.truncated = h.truncated || !g.exact();
        h.breakdown.emplace_back(v, g);
    }
    return h;
}

FFDependenceVerdict ff_detect_dependence(const FFCritVector& cv, const RationalFunction& a,
                                         const RationalFunction& b, long N,
                                         const FFOptions& opts) {
    FFDependenceVerdict out;
    if (a == b) {
        out.kind = FFDependenceVerdict::Kind::MergedOrbit;
        return out;
    }
    std::vector<RationalFunction> coeffs = ff_normal_form_coeffs(cv);

    auto orbit = [&](const RationalFunction& start, bool& cycled) {
        std::vector<RationalFunction> seq{start};
        std::set<RationalFunction, RfLess> seen{start};
        cycled = false;
        for (long k = 0; k < N; ++k) {
            if (seq.back().total_degree() > opts.degree_budget) break;
            RationalFunction next = ff_eval(coeffs, seq.back());
            if (!seen.insert(next).second) {
                cycled = true;
                break;
            }
            seq.push_back(next);
        }
        return seq;
    };
    bool cyc_a = false, cyc_b = false;
    std::vector<RationalFunction> A = orbit(a, cyc_a), B = orbit(b, cyc_b);
    if (cyc_a && cyc_b) {
        out.kind = FFDependenceVerdict::Kind::BothPreperiodic;
        return out;
    }
    for (long s = 0; s <= 2 * N; ++s) {
        for (long n = std::max(0l, s - N); n <= std::min(N, s); ++n) {
            const long m = s - n;
            if (static_cast<std::size_t>(n) >= A.size() || static_cast<std::size_t>(m) >= B.size())
                continue;
            if (A[static_cast<std::size_t>(n)] == B[static_cast<std::size_t>(m)]) {
                out.kind = FFDependenceVerdict::Kind::MergedOrbit;
                out.n = n;
                out.m = m;
                return out;
            }
        }
    }
    // odd maps commute with z -> -z
    bool odd_map = true;
    for (int j = 1; j <= cv.d; ++j) {
        if (!coeffs[static_cast<std::size_t>(j - 1)].is_zero() && j % 2 == 0) odd_map = false;
    }
    if (odd_map) {
        for (long s = 0; s <= 2 * N; ++s) {
            for (long n = std::max(0l, s - N); n <= std::min(N, s); ++n) {
                const long m = s - n;
                if (static_cast<std::size_t>(n) >= A.size() ||
                    static_cast<std::size_t>(m) >= B.size())
                    continue;
                if (A[static_cast<std::size_t>(n)] == -B[static_cast<std::size_t>(m)]) {
                    out.kind = FFDependenceVerdict::Kind::LinearSymmetryMerge;
                    out.n = n;
                    out.m = m;
                    return out;
                }
            }
        }
    }
    out.kind = FFDependenceVerdict::Kind::NoRelationFound;
    return out;
}

bool isotriviality_check(const FFCritVector& cv) {
    for (const auto& ci : cv.c) {
        if (!ci.is_constant()) return false;
    }
    return true;
}

CinkVerdict cink_check(const FFCritVector& cv, const FFOptions& opts) {
    CinkVerdict verdict;
    verdict.budget = opts.max_iters;
    if (isotriviality_check(cv)) {
        verdict.kind = CinkVerdict::Kind::ConstantC;
        return verdict;
    }

    bool truncated = false;
    std::vector<int> escapers;
    std::vector<PlaceFF> witness(cv.c.size(), PlaceFF::infinity());
    for (std::size_t i = 0; i < cv.c.size(); ++i) {
        for (const PlaceFF& v : contributing_places(cv, cv.c[i])) {
            try {
                FFGreenValue g = ff_green(cv, cv.c[i], v, opts);
                if (g.escaped() && sgn(g.value) > 0) {
                    escapers.push_back(static_cast<int>(i));
                    witness[i] = v;
                    break;
                }
                truncated = truncated || !g.exact();
            } catch (const ResourceError&) {
                truncated = true;
            }
        }
    }
    for (std::size_t x = 0; x < escapers.size(); ++x) {
        for (std::size_t y = x + 1; y < escapers.size(); ++y) {
            const int i = escapers[x], j = escapers[y];
            FFDependenceVerdict dep;
            try {
                dep = ff_detect_dependence(cv, cv.c[static_cast<std::size_t>(i)],
                                           cv.c[static_cast<std::size_t>(j)], 8, opts);
            } catch (const ResourceError&) {
                truncated = true;
                continue;
            }
            if (!dep.found()) {
                verdict.kind = CinkVerdict::Kind::TwoEscapers;
                verdict.i = i;
                verdict.j = j;
                verdict.places = {witness[static_cast<std::size_t>(i)],
                                  witness[static_cast<std::size_t>(j)]};
                return verdict;
            }
        }
    }
    verdict.kind = CinkVerdict::Kind::Inconclusive;
    (void)truncated;
    return verdict;
}

}  // namespace critheight
