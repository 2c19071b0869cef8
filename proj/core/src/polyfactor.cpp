#include "critheight/polyfactor.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "critheight/intfactor.hpp"

namespace critheight {

namespace {

// ---------------------------------------------------------------------------
// Word-size arithmetic mod a small odd prime p (p < 2^31).

using WPoly = std::vector<std::uint64_t>;  // low degree first, trimmed

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powmod_u(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1u) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1u;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod_u(a % p, p - 2, p); }

void wp_trim(WPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long wp_deg(const WPoly& a) { return static_cast<long>(a.size()) - 1; }

WPoly wp_mul(const WPoly& a, const WPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    WPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    wp_trim(c);
    return c;
}

WPoly wp_sub(const WPoly& a, const WPoly& b, std::uint64_t p) {
    WPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        c[i] = (x + p - y) % p;
    }
    wp_trim(c);
    return c;
}

// a mod b, b nonzero
WPoly wp_rem(WPoly a, const WPoly& b, std::uint64_t p) {
    const long db = wp_deg(b);
    const std::uint64_t inv = invmod(b.back(), p);
    while (wp_deg(a) >= db) {
        std::uint64_t f = mulmod(a.back(), inv, p);
        const long shift = wp_deg(a) - db;
        for (long i = 0; i <= db; ++i) {
            a[shift + i] = (a[shift + i] + p - mulmod(f, b[i], p)) % p;
        }
        wp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

WPoly wp_monic(WPoly a, std::uint64_t p) {
    if (a.empty()) return a;
    std::uint64_t inv = invmod(a.back(), p);
    for (auto& x : a) x = mulmod(x, inv, p);
    return a;
}

WPoly wp_gcd(WPoly a, WPoly b, std::uint64_t p) {
    while (!b.empty()) {
        WPoly r = wp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return wp_monic(std::move(a), p);
}

WPoly wp_deriv(const WPoly& a, std::uint64_t p) {
    if (a.size() <= 1) return {};
    WPoly c(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) c[i - 1] = a[i] * (i % p) % p;
    wp_trim(c);
    return c;
}

WPoly wp_mulrem(const WPoly& a, const WPoly& b, const WPoly& m, std::uint64_t p) {
    return wp_rem(wp_mul(a, b, p), m, p);
}

// base^e mod m with an arbitrary-precision exponent
WPoly wp_powmod(WPoly base, const Integer& e, const WPoly& m, std::uint64_t p) {
    WPoly r{1};
    base = wp_rem(std::move(base), m, p);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = wp_mulrem(r, r, m, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = wp_mulrem(r, base, m, p);
    }
    return r;
}

// Deterministic xorshift for Cantor-Zassenhaus splitting polynomials.
struct SplitRng {
    std::uint64_t s;
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

// Equal-degree splitting of a monic squarefree product of degree-k irreducibles.
void wp_edf(const WPoly& f, long k, std::uint64_t p, SplitRng& rng, std::vector<WPoly>& out) {
    if (wp_deg(f) == k) {
        out.push_back(f);
        return;
    }
    Integer half = (pow_integer(Integer(static_cast<unsigned long>(p)),
                                static_cast<unsigned long>(k)) -
                    1) /
                   2;
    for (;;) {
        WPoly r(static_cast<std::size_t>(wp_deg(f)), 0);
        for (auto& x : r) x = rng.next() % p;
        wp_trim(r);
        if (wp_deg(r) < 1) continue;
        WPoly s = wp_powmod(r, half, f, p);
        s = wp_sub(s, WPoly{1}, p);
        WPoly g = wp_gcd(s, f, p);
        if (wp_deg(g) > 0 && wp_deg(g) < wp_deg(f)) {
            // exact division f / g
            WPoly quot;
            {
                WPoly a = f;
                const long dg = wp_deg(g);
                quot.assign(static_cast<std::size_t>(wp_deg(f) - dg + 1), 0);
                const std::uint64_t inv = invmod(g.back(), p);
                while (wp_deg(a) >= dg) {
                    std::uint64_t fac = mulmod(a.back(), inv, p);
                    quot[wp_deg(a) - dg] = fac;
                    const long shift = wp_deg(a) - dg;
                    for (long i = 0; i <= dg; ++i)
                        a[shift + i] = (a[shift + i] + p - mulmod(fac, g[i], p)) % p;
                    wp_trim(a);
                    if (a.empty()) break;
                }
            }
            wp_edf(g, k, p, rng, out);
            wp_edf(quot, k, p, rng, out);
            return;
        }
    }
}

// Full factorization of a monic squarefree polynomial mod p.
std::vector<WPoly> wp_factor_squarefree(WPoly f, std::uint64_t p) {
    std::vector<WPoly> out;
    SplitRng rng{p * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(wp_deg(f)) + 1};
    WPoly h{0, 1};  // x
    long k = 0;
    while (wp_deg(f) > 0) {
        ++k;
        if (2 * k > wp_deg(f)) {
            out.push_back(f);  // remainder irreducible
            break;
        }
        h = wp_powmod(h, Integer(static_cast<unsigned long>(p)), f, p);
        WPoly hx = wp_sub(h, WPoly{0, 1}, p);
        WPoly g = wp_gcd(hx, f, p);
        if (wp_deg(g) > 0) {
            wp_edf(g, k, p, rng, out);
            // f /= g
            WPoly q;
            {
                WPoly a = f;
                const long dg = wp_deg(g);
                q.assign(static_cast<std::size_t>(wp_deg(f) - dg + 1), 0);
                const std::uint64_t inv = invmod(g.back(), p);
                while (wp_deg(a) >= dg) {
                    std::uint64_t fac = mulmod(a.back(), inv, p);
                    q[wp_deg(a) - dg] = fac;
                    const long shift = wp_deg(a) - dg;
                    for (long i = 0; i <= dg; ++i)
                        a[shift + i] = (a[shift + i] + p - mulmod(fac, g[i], p)) % p;
                    wp_trim(a);
                    if (a.empty()) break;
                }
            }
            f = q;
            h = wp_rem(h, f, p);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Arithmetic on integer polynomials mod M (M = p^K), mpz coefficients in [0, M).

using ZPoly = std::vector<Integer>;  // low degree first, trimmed

void zp_trim(ZPoly& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

long zp_deg(const ZPoly& a) { return static_cast<long>(a.size()) - 1; }

Integer zmod(const Integer& a, const Integer& M) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), M.get_mpz_t());
    return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Integer& M) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    for (auto& x : c) x = zmod(x, M);
    zp_trim(c);
    return c;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b, const Integer& M) {
    ZPoly c(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        Integer x = i < a.size() ? a[i] : Integer(0);
        if (i < b.size()) x += b[i];
        c[i] = zmod(x, M);
    }
    zp_trim(c);
    return c;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const Integer& M) {
    ZPoly c(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        Integer x = i < a.size() ? a[i] : Integer(0);
        if (i < b.size()) x -= b[i];
        c[i] = zmod(x, M);
    }
    zp_trim(c);
    return c;
}

// divrem by a monic divisor
void zp_divrem_monic(ZPoly a, const ZPoly& b, const Integer& M, ZPoly& q, ZPoly& r) {
    const long db = zp_deg(b);
    q.clear();
    if (zp_deg(a) >= db) q.assign(static_cast<std::size_t>(zp_deg(a) - db + 1), Integer(0));
    while (zp_deg(a) >= db) {
        Integer f = a.back();
        const long shift = zp_deg(a) - db;
        q[shift] = f;
        for (long i = 0; i <= db; ++i) a[shift + i] = zmod(a[shift + i] - f * b[i], M);
        zp_trim(a);
    }
    r = std::move(a);
}

ZPoly zp_scale(const ZPoly& a, const Integer& s, const Integer& M) {
    ZPoly c(a);
    for (auto& x : c) x = zmod(x * s, M);
    zp_trim(c);
    return c;
}

// Hensel data for one node of the lifting tree.
struct HenselPair {
    ZPoly g, h;  // f ~ g*h, h monic
    ZPoly s, t;  // s*g + t*h = 1
};

// One quadratic Hensel step: everything valid mod M, returns data valid mod M2.
void hensel_step(const ZPoly& f, HenselPair& hp, const Integer& M2) {
    ZPoly e = zp_sub(f, zp_mul(hp.g, hp.h, M2), M2);
    ZPoly q, r;
    zp_divrem_monic(zp_mul(hp.s, e, M2), hp.h, M2, q, r);
    ZPoly g1 = zp_add(zp_add(hp.g, zp_mul(hp.t, e, M2), M2), zp_mul(q, hp.g, M2), M2);
    ZPoly h1 = zp_add(hp.h, r, M2);
    ZPoly b = zp_sub(zp_add(zp_mul(hp.s, g1, M2), zp_mul(hp.t, h1, M2), M2), ZPoly{Integer(1)}, M2);
    ZPoly c, d;
    zp_divrem_monic(zp_mul(hp.s, b, M2), h1, M2, c, d);
    ZPoly s1 = zp_sub(hp.s, d, M2);
    ZPoly t1 = zp_sub(zp_sub(hp.t, zp_mul(hp.t, b, M2), M2), zp_mul(c, g1, M2), M2);
    hp.g = std::move(g1);
    hp.h = std::move(h1);
    hp.s = std::move(s1);
    hp.t = std::move(t1);
}

// Extended Euclid for word polys: s*a + t*b = 1 (a, b coprime mod p).
void wp_ext_gcd(const WPoly& a, const WPoly& b, std::uint64_t p, WPoly& s, WPoly& t) {
    WPoly r0 = a, r1 = b;
    WPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // quotient of r0 by r1
        WPoly q;
        {
            WPoly x = r0;
            const long d1 = wp_deg(r1);
            if (wp_deg(x) >= d1) q.assign(static_cast<std::size_t>(wp_deg(x) - d1 + 1), 0);
            const std::uint64_t inv = invmod(r1.back(), p);
            while (wp_deg(x) >= d1) {
                std::uint64_t f = mulmod(x.back(), inv, p);
                q[wp_deg(x) - d1] = f;
                const long shift = wp_deg(x) - d1;
                for (long i = 0; i <= d1; ++i)
                    x[shift + i] = (x[shift + i] + p - mulmod(f, r1[i], p)) % p;
                wp_trim(x);
                if (x.empty()) break;
            }
            r0 = r1;
            r1 = x;
        }
        WPoly ns = wp_sub(s0, wp_mul(q, s1, p), p);
        WPoly nt = wp_sub(t0, wp_mul(q, t1, p), p);
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    // r0 is the gcd (a unit); normalize to 1
    std::uint64_t inv = invmod(r0[0], p);
    for (auto& x : s0) x = mulmod(x, inv, p);
    for (auto& x : t0) x = mulmod(x, inv, p);
    s = s0;
    t = t0;
}

ZPoly wp_to_zp(const WPoly& a) {
    ZPoly c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = Integer(static_cast<unsigned long>(a[i]));
    return c;
}

WPoly zp_to_wp(const ZPoly& a, std::uint64_t p) {
    WPoly c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = mpz_fdiv_ui(a[i].get_mpz_t(), static_cast<unsigned long>(p));
    wp_trim(c);
    return c;
}

// Lift the factorization f = lc * prod(u_i) from mod p to mod p^(2^steps),
// by divide and conquer over the factor list. Returns monic factors mod M.
void hensel_tree(const ZPoly& f, const std::vector<WPoly>& us, std::size_t lo, std::size_t hi,
                 std::uint64_t p, const Integer& M, int steps, std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        // f is (unit) * u_lo mod M; normalize monic
        Integer lc_inv;
        Integer lc = f.back();
        if (mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t()) == 0)
            throw std::runtime_error("hensel_tree: leading coefficient not invertible");
        out.push_back(zp_scale(f, lc_inv, M));
        return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    // g carries the leading unit, h is monic
    WPoly gw{static_cast<std::uint64_t>(
        mpz_fdiv_ui(f.back().get_mpz_t(), static_cast<unsigned long>(p)))};
    for (std::size_t i = lo; i < mid; ++i) gw = wp_mul(gw, us[i], p);
    WPoly hw{1};
    for (std::size_t i = mid; i < hi; ++i) hw = wp_mul(hw, us[i], p);
    WPoly sw, tw;
    wp_ext_gcd(gw, hw, p, sw, tw);

    HenselPair hp{wp_to_zp(gw), wp_to_zp(hw), wp_to_zp(sw), wp_to_zp(tw)};
    Integer Mk(static_cast<unsigned long>(p));
    for (int i = 0; i < steps; ++i) {
        Mk *= Mk;
        if (Mk > M) Mk = M;  // cap; arithmetic stays correct mod M
        hensel_step(f, hp, Mk);
    }
    hensel_tree(hp.g, us, lo, mid, p, M, steps, out);
    hensel_tree(hp.h, us, mid, hi, p, M, steps, out);
}

// ---------------------------------------------------------------------------
// Zassenhaus driver for a primitive squarefree integer polynomial, lc > 0.

Poly zpoly_to_poly(const ZPoly& a) {
    std::vector<Rational> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = Rational(a[i]);
    return Poly(std::move(c));
}

ZPoly poly_to_zpoly(const Poly& f) {
    ZPoly c(static_cast<std::size_t>(f.degree() + 1));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (f[i].get_den() != 1) throw std::logic_error("poly_to_zpoly: non-integer coefficient");
        c[i] = f[i].get_num();
    }
    return c;
}

// Primitive part over Z of an integer polynomial given as Poly, sign-normalized.
Poly primitive_part(const Poly& f) {
    Integer content = f.integer_content();
    if (sgn(f.leading()) < 0) content = -content;
    return f * make_rational(Integer(1), content);
}

std::vector<Poly> zassenhaus(const Poly& fQ) {
    const long n = fQ.degree();
    if (n == 1) return {fQ};
    ZPoly F = poly_to_zpoly(fQ);

    // choose an odd prime with squarefree reduction and unit leading coefficient
    std::uint64_t p = 0;
    std::vector<WPoly> modular;
    for (Integer cand(3);; mpz_nextprime(cand.get_mpz_t(), cand.get_mpz_t())) {
        std::uint64_t q = cand.get_ui();
        WPoly fw = zp_to_wp(F, q);
        if (wp_deg(fw) != n) continue;  // lc vanished
        WPoly g = wp_gcd(fw, wp_deriv(fw, q), q);
        if (wp_deg(g) != 0) continue;
        p = q;
        modular = wp_factor_squarefree(wp_monic(fw, q), q);
        break;
    }
    if (modular.size() == 1) return {fQ};

    std::sort(modular.begin(), modular.end());

    // Landau-Mignotte style bound: factor coefficients < 2^n * ||F||_2; we need
    // M > 2 * bound * |lc| to recover lc-scaled factors from symmetric residues.
    Integer norm2_sq(0);
    for (const auto& c : F) norm2_sq += c * c;
    Integer bound = pow_integer(Integer(2), static_cast<unsigned long>(n + 1));
    Integer root;
    mpz_sqrt(root.get_mpz_t(), norm2_sq.get_mpz_t());
    bound *= (root + 1) * abs(F.back());
    int steps = 0;
    Integer M(static_cast<unsigned long>(p));
    while (M <= 2 * bound) {
        M *= M;
        ++steps;
    }

    std::vector<ZPoly> lifted;
    hensel_tree(F, modular, 0, modular.size(), p, M, steps, lifted);

    // subset recombination
    std::vector<Poly> out;
    std::vector<std::size_t> alive(lifted.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
    Poly rem = fQ;

    auto symmetric = [&M](const Integer& x) {
        Integer r = x;
        if (2 * r > M) r -= M;
        return r;
    };

    bool progress = true;
    while (progress) {
        progress = false;
        const std::size_t r = alive.size();
        for (std::size_t size = 1; size <= r / 2 && !progress; ++size) {
            // enumerate subsets of the alive set with the given cardinality
            std::vector<std::size_t> idx(size);
            for (std::size_t i = 0; i < size; ++i) idx[i] = i;
            for (;;) {
                ZPoly candM{zmod(poly_to_zpoly(rem).back(), M)};
                for (std::size_t i : idx) candM = zp_mul(candM, lifted[alive[i]], M);
                std::vector<Rational> cc(candM.size());
                for (std::size_t i = 0; i < candM.size(); ++i) cc[i] = Rational(symmetric(candM[i]));
                Poly cand = primitive_part(Poly(std::move(cc)));
                Poly q, rr;
                Poly::divrem(rem, cand, q, rr);
                if (rr.is_zero()) {
                    out.push_back(cand);
                    rem = primitive_part(q);
                    std::vector<std::size_t> next;
                    for (std::size_t i = 0, k = 0; i < alive.size(); ++i) {
                        if (k < size && idx[k] == i) {
                            ++k;
                            continue;
                        }
                        next.push_back(alive[i]);
                    }
                    alive = std::move(next);
                    progress = true;
                    break;
                }
                // next subset
                long pos = static_cast<long>(size) - 1;
                while (pos >= 0 && idx[pos] == r - size + pos) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (std::size_t i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
            }
        }
    }
    if (rem.degree() > 0) out.push_back(rem);
    return out;
}

}  // namespace

PolyFactorization factor_poly(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("factor_poly: zero polynomial");
    PolyFactorization result;
    result.unit = Rational(1);

    Poly work = f;
    // split off t^k
    long ord0 = work.trailing_order();
    if (ord0 > 0) {
        std::vector<Rational> shifted(work.coeffs().begin() + ord0, work.coeffs().end());
        work = Poly(std::move(shifted));
        result.factors.push_back({Poly::variable(), static_cast<unsigned>(ord0)});
    }
    if (work.is_constant()) {
        result.unit = work.is_zero() ? Rational(0) : work[0];
        std::sort(result.factors.begin(), result.factors.end(),
                  [](const PolyFactor& a, const PolyFactor& b) {
                      return a.factor.degree() < b.factor.degree();
                  });
        return result;
    }

    result.unit = work.leading();
    work = work.monic();

    // Yun squarefree decomposition (characteristic zero)
    struct SqPart {
        Poly part;
        unsigned mult;
    };
    std::vector<SqPart> parts;
    {
        Poly fp = work.derivative();
        Poly a = Poly::gcd(work, fp);
        Poly b, c, q, r;
        Poly::divrem(work, a, b, r);
        Poly::divrem(fp, a, c, r);
        Poly d = c - b.derivative();
        unsigned i = 1;
        while (b.degree() > 0) {
            Poly g = Poly::gcd(b, d);
            if (g.degree() > 0) parts.push_back({g, i});
            Poly::divrem(b, g, q, r);
            b = q;
            Poly::divrem(d, g, c, r);
            d = c - b.derivative();
            ++i;
        }
    }

    for (const auto& part : parts) {
        // clear to a primitive integer polynomial for Zassenhaus
        Integer den = part.part.coefficient_denominator();
        Poly zpoly = primitive_part(part.part * Rational(den));
        for (const Poly& irr : zassenhaus(zpoly)) {
            Poly m = irr.monic();
            result.factors.push_back({m, part.mult});
        }
    }

    std::sort(result.factors.begin(), result.factors.end(),
              [](const PolyFactor& a, const PolyFactor& b) {
                  if (a.factor.degree() != b.factor.degree())
                      return a.factor.degree() < b.factor.degree();
                  const auto& ca = a.factor.coeffs();
                  const auto& cb = b.factor.coeffs();
                  for (std::size_t i = ca.size(); i-- > 0;) {
                      if (ca[i] != cb[i]) return ca[i] < cb[i];
                  }
                  return false;
              });
    return result;
}

bool poly_is_irreducible(const Poly& f) {
    if (f.degree() < 1) throw std::domain_error("poly_is_irreducible: constant polynomial");
    PolyFactorization fac = factor_poly(f);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1 &&
           fac.factors[0].factor.degree() == f.degree();
}

}  // namespace critheight
