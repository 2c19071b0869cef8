#include "critheight/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

#include "critheight/intfactor.hpp"
#include "critheight/ratfunc.hpp"

namespace critheight {

QuadMap from_lambda_w(const Rational& lambda0, const Rational& w) {
    if (sgn(lambda0) == 0) throw std::domain_error("from_lambda_w: lambda0 must be nonzero");
    if (sgn(w) == 0) throw std::domain_error("from_lambda_w: w = 0 is excluded");
    Rational two_w_plus_1 = 2 * w + 1;
    if (sgn(two_w_plus_1) == 0) {
        throw std::domain_error("from_lambda_w: w = -1/2 degenerates the second critical point");
    }
    QuadMap q;
    q.lambda0 = lambda0;
    q.w = w;
    q.lambda_inf = -two_w_plus_1 / (lambda0 * w * w);
    q.zeta1 = lambda0 * w;
    q.zeta2 = -lambda0 * w / two_w_plus_1;
    q.xi1 = -q.zeta1 * q.zeta1;
    q.xi2 = -q.zeta2 * q.zeta2;
    return q;
}

Rational involution_w(const Rational& w) {
    Rational den = 2 * w + 1;
    if (sgn(den) == 0) throw std::domain_error("involution_w: w = -1/2");
    return -w / den;
}

P1Lift QuadMap::lift() const {
    Integer D;
    mpz_lcm(D.get_mpz_t(), lambda0.get_den().get_mpz_t(), lambda_inf.get_den().get_mpz_t());
    // F = D(X^2 + lambda0 X Y), G = D(lambda_inf X Y + Y^2)
    std::vector<Integer> F{Integer(0), lambda0.get_num() * (D / lambda0.get_den()), D};
    std::vector<Integer> G{D, lambda_inf.get_num() * (D / lambda_inf.get_den()), Integer(0)};
    return P1Lift(std::move(F), std::move(G));  // throws when 1 - lambda0 lambda_inf = 0
}

CanonicalHeight canonical_height_p1(const QuadMap& q, const P1Point& z, int depth) {
    if (q.lambda0 * q.lambda_inf == 1) {
        throw std::domain_error("canonical_height_p1: 1 - lambda0 lambda_inf = 0 (degree drop)");
    }
    return p1_canonical_height(q.lift(), z, depth);
}

std::vector<PlaceQ> s_places_quad(const QuadMap& q) {
    std::vector<PlaceQ> out;
    // archimedean: |w| > 2 max(1, 1/|lambda0|)
    {
        Rational inv_l0 = rational_abs(Rational(1) / q.lambda0);
        Rational rhs = 2 * (inv_l0 > 1 ? inv_l0 : Rational(1));
        if (rational_abs(q.w) > rhs) out.push_back(PlaceQ::arch());
    }
    std::set<Integer> primes{Integer(2)};
    for (const Integer& p : prime_support(q.w)) primes.insert(p);
    for (const Integer& p : prime_support(q.lambda0)) primes.insert(p);
    for (const Integer& p : primes) {
        const long lw = -padic_valuation(q.w, p);                      // log|w|_v / log p
        const long lp = std::max(0l, padic_valuation(q.lambda0, p));   // log^+|1/l0|_v / log p
        const long cv = (p == 2) ? 1 : 0;
        if (lw > lp + cv) out.push_back(PlaceQ{PlaceQ::Kind::Prime, p});
    }
    std::sort(out.begin(), out.end());
    return out;
}

HalfheightReport halfheight_check(const QuadMap& q) {
    if (sgn(q.lambda_inf) == 0) throw std::domain_error("halfheight_check: lambda_inf = 0");
    HalfheightReport rep;
    Rational inv = Rational(1) / q.lambda_inf;
    for (const PlaceQ& v : s_places_quad(q)) {
        if (v.is_arch()) {
            rep.lhs += LogCombination::log_plus_of(inv);
        } else {
            long mult = std::max(0l, -padic_valuation(inv, v.p));
            rep.lhs += LogCombination::prime_log(v.p, Rational(mult));
        }
    }
    std::vector<Rational> li{q.lambda_inf}, l0{q.lambda0};
    rep.rhs = height_affine_comb(li) * make_rational(1, 2) -
              height_affine_comb(l0) * make_rational(5, 2) -
              LogCombination::prime_log(Integer(2), make_rational(7, 2));
    rep.margin = rep.lhs - rep.rhs;
    return rep;
}

Quad2Report quad2_check(const QuadMap& q, int depth) {
    if (sgn(q.lambda0) == 0 || sgn(q.lambda_inf) == 0) {
        throw std::domain_error("quad2_check: requires lambda0, lambda_inf nonzero");
    }
    Quad2Report rep;
    CanonicalHeight h1 = canonical_height_p1(q, P1Point::from_rational(q.zeta1), depth);
    CanonicalHeight h2 = canonical_height_p1(q, P1Point::from_rational(q.zeta2), depth);
    if (h1.value <= h2.value) {
        rep.min_height = h1.value;
        rep.error = h1.error;
    } else {
        rep.min_height = h2.value;
        rep.error = h2.error;
    }
    std::vector<Rational> li{q.lambda_inf}, l0{q.lambda0};
    rep.bound = height_affine_comb(li) * make_rational(1, 32) -
                height_affine_comb(l0) * make_rational(25, 32) -
                LogCombination::prime_log(Integer(2), make_rational(47, 32)) -
                LogCombination::prime_log(Integer(3), make_rational(3, 16));
    rep.margin = rep.min_height + rep.error - rep.bound.value();
    return rep;
}

bool cheb_degree_check(int n) {
    if (n < 1 || n > 8) throw std::domain_error("cheb_degree_check: n must be in [1, 8]");
    const RationalFunction a = RationalFunction::variable();
    for (const long start : {1l, -1l}) {
        RationalFunction z{Rational(start)};
        for (int k = 0; k < n; ++k) z = z + a + z.inverse();
        long expected = 1l << (n - 1);
        if (z.total_degree() != expected) return false;
    }
    return true;
}

P1Lift ChebLikeMap::lift() const {
    const Integer& D = a.get_den();
    // F = D X^2 + num(a) X Y + D Y^2, G = D X Y
    std::vector<Integer> F{D, a.get_num(), D};
    std::vector<Integer> G{Integer(0), D, Integer(0)};
    return P1Lift(std::move(F), std::move(G));
}

std::vector<ChebFixedPoint> cheb_fixed_multiplier(const Rational& a) {
    std::vector<ChebFixedPoint> out;
    if (sgn(a) != 0) {
        ChebFixedPoint affine;
        affine.point = Rational(-1) / a;
        affine.multiplier = Rational(1) - a * a;
        out.push_back(affine);
    }
    ChebFixedPoint inf;
    inf.at_infinity = true;
    inf.multiplier = Rational(1);
    out.push_back(inf);
    return out;
}

double census_height_cap() { return 47.0 * std::log(2.0) + 6.0 * std::log(3.0); }

namespace {

void census_block(const std::vector<Rational>& lambda0s, double height_cap, long den_cap,
                  long max_steps, long p_lo, long p_hi, std::vector<CensusEntry>& out) {
    for (std::size_t li = 0; li < lambda0s.size(); ++li) {
        const Rational& l0 = lambda0s[li];
        for (long p = p_lo; p <= p_hi; ++p) {
            if (p == 0) continue;
            for (long qd = 1; qd <= den_cap; ++qd) {
                Integer g;
                mpz_gcd_ui(g.get_mpz_t(), Integer(std::labs(p)).get_mpz_t(),
                           static_cast<unsigned long>(qd));
                if (g != 1) continue;
                Rational w = make_rational(p, qd);
                if (w == 0 || 2 * w + 1 == 0 || w == -1) continue;
                QuadMap q = from_lambda_w(l0, w);
                if (rational_height(q.lambda_inf) > height_cap) continue;

                P1Lift lift = q.lift();
                OrbitClass o1 = classify_p1_orbit(lift, P1Point::from_rational(q.zeta1), max_steps);
                OrbitClass o2 = classify_p1_orbit(lift, P1Point::from_rational(q.zeta2), max_steps);
                bool truncated = o1.kind == OrbitClass::Kind::Truncated ||
                                 o2.kind == OrbitClass::Kind::Truncated;
                const OrbitClass* fin = nullptr;
                const Rational* crit = nullptr;
                if (o1.kind == OrbitClass::Kind::Finite) {
                    fin = &o1;
                    crit = &q.zeta1;
                } else if (o2.kind == OrbitClass::Kind::Finite) {
                    fin = &o2;
                    crit = &q.zeta2;
                }
                if (!fin) continue;
                CensusEntry entry;
                entry.lambda0 = l0;
                entry.w = w;
                entry.lambda_inf = q.lambda_inf;
                entry.h_lambda_inf = rational_height(q.lambda_inf);
                entry.critical_point = *crit;
                entry.tail = fin->tail;
                entry.cycle = fin->cycle;
                entry.truncated = truncated;
                out.push_back(std::move(entry));
            }
        }
    }
}

}  // namespace

std::vector<CensusEntry> census_search(const std::vector<Rational>& lambda0s, double height_cap,
                                       long den_cap, long max_steps, int threads) {
    std::vector<CensusEntry> all;
    if (threads <= 1) {
        census_block(lambda0s, height_cap, den_cap, max_steps, -den_cap, den_cap, all);
    } else {
        const long span = 2 * den_cap + 1;
        const long chunk = (span + threads - 1) / threads;
        std::vector<std::vector<CensusEntry>> parts(static_cast<std::size_t>(threads));
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            const long lo = -den_cap + t * chunk;
            const long hi = std::min(den_cap, lo + chunk - 1);
            if (lo > den_cap) break;
            pool.emplace_back([&, lo, hi, t] {
                census_block(lambda0s, height_cap, den_cap, max_steps, lo, hi,
                             parts[static_cast<std::size_t>(t)]);
            });
        }
        for (auto& th : pool) th.join();
        for (auto& part : parts) {
            all.insert(all.end(), part.begin(), part.end());
        }
    }

    auto order_key = [&lambda0s](const CensusEntry& e) {
        std::size_t li = 0;
        while (li < lambda0s.size() && !(lambda0s[li] == e.lambda0)) ++li;
        return std::tuple<std::size_t, Integer, Integer, int>(
            li, abs(e.w.get_num()), e.w.get_den(), sgn(e.w) < 0 ? 1 : 0);
    };
    std::sort(all.begin(), all.end(), [&](const CensusEntry& a, const CensusEntry& b) {
        return order_key(a) < order_key(b);
    });

    for (const CensusEntry& e : all) {
        if (e.h_lambda_inf > census_height_cap() + 1e-9) {
            throw std::logic_error("census_search: entry exceeds the 47 log 2 + 6 log 3 cap");
        }
    }
    return all;
}

}  // namespace critheight
