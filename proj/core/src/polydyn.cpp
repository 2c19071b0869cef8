#include "critheight/polydyn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "critheight/intfactor.hpp"

namespace critheight {

CritVector::CritVector(int degree, std::vector<Rational> crit) : d(degree), c(std::move(crit)) {
    if (d < 2) throw std::domain_error("CritVector: degree must be >= 2");
    if (c.size() != static_cast<std::size_t>(d - 1)) {
        throw std::domain_error("CritVector: expected d-1 critical points");
    }
}

Rational CritVector::multiplier() const {
    Rational prod(1);
    for (const auto& ci : c) prod *= ci;
    return (d % 2 == 0) ? Rational(-prod) : prod;
}

NormalFormPoly::NormalFormPoly(const CritVector& cv) : d_(cv.d), c_(cv.c) {
    // elementary symmetric functions e_0..e_{d-1} of the critical points
    std::vector<Rational> e(static_cast<std::size_t>(d_), Rational(0));
    e[0] = Rational(1);
    for (const auto& ci : c_) {
        for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] += ci * e[j - 1];
    }
    // coefficient of z^{d-j} is (-1)^j e_j / (d-j)
    a_.assign(static_cast<std::size_t>(d_), Rational(0));
    for (int j = 0; j <= d_ - 1; ++j) {
        Rational term = e[static_cast<std::size_t>(j)] / Rational(d_ - j);
        a_[static_cast<std::size_t>(d_ - j - 1)] = (j % 2 == 0) ? term : Rational(-term);
    }

    liftD_ = 1;
    for (const auto& aj : a_) {
        mpz_lcm(liftD_.get_mpz_t(), liftD_.get_mpz_t(), aj.get_den().get_mpz_t());
    }
    liftF_.assign(static_cast<std::size_t>(d_) + 1, Integer(0));
    for (int j = 1; j <= d_; ++j) {
        const Rational& aj = a_[static_cast<std::size_t>(j - 1)];
        liftF_[static_cast<std::size_t>(j)] = aj.get_num() * (liftD_ / aj.get_den());
    }
    std::vector<Integer> G(static_cast<std::size_t>(d_) + 1, Integer(0));
    G[0] = liftD_;
    bounds_ = lift_bounds(liftF_, G);
}

Rational NormalFormPoly::eval(const Rational& z) const {
    Rational acc(0);
    for (std::size_t j = a_.size(); j-- > 0;) acc = (acc + a_[j]) * z;
    return acc;
}

Rational NormalFormPoly::derivative_at(const Rational& z) const {
    Rational acc(1);
    for (const auto& ci : c_) acc *= (z - ci);
    return acc;
}

double NormalFormPoly::eval(double z) const {
    double acc = 0.0;
    for (std::size_t j = a_.size(); j-- > 0;) acc = (acc + a_[j].get_d()) * z;
    return acc;
}

std::string NormalFormPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int j = d_; j >= 1; --j) {
        const Rational& aj = coeff(j);
        if (sgn(aj) == 0) continue;
        if (!first) os << (sgn(aj) < 0 ? " - " : " + ");
        if (first && sgn(aj) < 0) os << "-";
        first = false;
        Rational mag = rational_abs(aj);
        if (mag != 1) os << "(" << mag.get_str() << ")";
        os << "z";
        if (j > 1) os << "^" << j;
    }
    return first ? "0" : os.str();
}

bool CanonicalHeight::truncated() const {
    for (const auto& [v, g] : breakdown) {
        if (g.status == GreenValue::Status::BoundedUpTo) return true;
    }
    return false;
}

namespace {

struct ProbeResult {
    bool repeated = false;
    long tail = 0, cycle = 0;
    bool budget_hit = false;
    long steps = 0;
};

// Exact-orbit preperiodicity probe shared by green_arch and is_preperiodic.
ProbeResult probe_orbit(const NormalFormPoly& f, const Rational& z, long max_steps,
                        std::size_t bit_budget, double height_stop) {
    ProbeResult out;
    std::map<Rational, long> seen;
    Rational cur = z;
    for (long n = 0; n <= max_steps; ++n) {
        auto [it, fresh] = seen.emplace(cur, n);
        if (!fresh) {
            out.repeated = true;
            out.tail = it->second;
            out.cycle = n - it->second;
            out.steps = n;
            return out;
        }
        if (rational_height(cur) > height_stop) {
            out.steps = n;
            return out;  // left the preperiodic window for good
        }
        if (rational_bits(cur) > bit_budget) {
            out.budget_hit = true;
            out.steps = n;
            return out;
        }
        cur = f.eval(cur);
    }
    out.steps = max_steps;
    return out;
}

double float_slop(long steps, double scale) {
    return 64.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(steps + 1) *
           std::max(1.0, std::fabs(scale));
}

double pow_neg(long base, long n) {
    double p = std::pow(static_cast<double>(base), -static_cast<double>(n));
    if (std::isfinite(p) && p > 0) return p;
    return std::exp(-static_cast<double>(n) * std::log(static_cast<double>(base)));
}

GreenValue exact_zero() {
    GreenValue g;
    g.status = GreenValue::Status::ExactZero;
    g.exact_log_coeff = Rational(0);
    return g;
}

}  // namespace

GreenValue green_arch(const NormalFormPoly& f, const Rational& z, const GreenOptions& opts) {
    const int d = f.d();
    double A = 0.0;
    for (int j = 1; j < d; ++j) A += std::fabs(f.coeff(j).get_d());
    // for |z| >= R: |z|^d/(2d) <= |f(z)| <= |z|^d and |f(z)| >= 2|z|
    const double R = std::max({1.0, 2.0 * d * A, std::pow(4.0 * d, 1.0 / (d - 1)), 2.0});
    const double kappa = std::log(2.0 * d);
    const double kappa_plus = std::log(1.0 + 1.0 / d + A);

    ProbeResult probe =
        probe_orbit(f, z, opts.exact_probe_steps, opts.digit_budget_bits, f.height_gap());
    if (probe.repeated) return exact_zero();

    double x = z.get_d();
    long n = 0;
    for (; n < opts.max_arch_iters; ++n) {
        if (!std::isfinite(x)) {
            throw std::runtime_error("green_arch: nonfinite iterate at step " + std::to_string(n));
        }
        if (std::fabs(x) >= R) break;
        x = f.eval(x);
    }
    if (n == opts.max_arch_iters) {
        GreenValue g;
        g.status = GreenValue::Status::BoundedUpTo;
        g.step = n;
        g.error = pow_neg(d, n) * (std::log(std::max(1.0, std::fabs(x))) + kappa_plus / (d - 1)) +
                  float_slop(n, 1.0);
        return g;
    }

    // (sign, log) refinement: y = log|x|, overflow-free past the escape radius
    double sign = x < 0 ? -1.0 : 1.0;
    double y = std::log(std::fabs(x));
    for (long k = 0; k < opts.arch_settle_iters; ++k) {
        double corr = f.coeff(d).get_d() * (d % 2 == 0 ? 1.0 : sign);
        for (int j = 1; j < d; ++j) {
            corr += f.coeff(j).get_d() * (j % 2 == 0 ? 1.0 : sign) *
                    std::exp(static_cast<double>(j - d) * y);
        }
        y = d * y + std::log(std::fabs(corr));
        sign = corr < 0 ? -1.0 : 1.0;
        ++n;
    }

    GreenValue g;
    g.status = GreenValue::Status::EscapedAtStep;
    g.step = n;
    const double scale = pow_neg(d, n);
    const double tail = kappa * scale / (d - 1);
    g.value = y * scale - tail / 2.0;
    g.error = tail / 2.0 + float_slop(n, g.value);
    return g;
}

GreenValue green_nonarch(const NormalFormPoly& f, const Rational& z, const Integer& p,
                         const GreenOptions& opts) {
    const int d = f.d();
    std::vector<long> va(static_cast<std::size_t>(d) + 1, 0);
    bool coeffs_integral = true;
    for (int j = 1; j <= d; ++j) {
        if (sgn(f.coeff(j)) != 0) {
            va[static_cast<std::size_t>(j)] = padic_valuation(f.coeff(j), p);
            coeffs_integral = coeffs_integral && va[static_cast<std::size_t>(j)] >= 0;
        }
    }
    const double logp = log_abs_integer(p);
    long kappa_plus_mult = 0;  // log^+ max_j |a_j|_p = kappa_plus_mult * log p
    for (int j = 1; j <= d; ++j) {
        if (sgn(f.coeff(j)) != 0) {
            kappa_plus_mult = std::max(kappa_plus_mult, -va[static_cast<std::size_t>(j)]);
        }
    }

    std::set<Rational> seen;
    Rational cur = z;
    long n = 0;
    for (;; ++n) {
        if (sgn(cur) == 0) return exact_zero();
        const long v = padic_valuation(cur, p);
        if (coeffs_integral && v >= 0) return exact_zero();  // unit ball forward invariant

        // strict domination of the top term certifies the valuation recursion
        const long md = va[static_cast<std::size_t>(d)] + static_cast<long>(d) * v;
        bool dominated = true;
        for (int j = 1; j < d && dominated; ++j) {
            if (sgn(f.coeff(j)) == 0) continue;
            dominated = md < va[static_cast<std::size_t>(j)] + static_cast<long>(j) * v;
        }
        if (dominated && (d - 1) * v + va[static_cast<std::size_t>(d)] <= 0) {
            // from here v(z_{k+1}) = d v(z_k) + v(a_d), so the limit telescopes
            Rational coeff =
                Rational(-v) -
                make_rational(Integer(va[static_cast<std::size_t>(d)]), Integer(d - 1));
            coeff /= Rational(pow_integer(Integer(d), static_cast<unsigned long>(n)));
            if (sgn(coeff) == 0) return exact_zero();  // stationary valuation, bounded orbit
            GreenValue g;
            g.status = GreenValue::Status::EscapedAtStep;
            g.step = n;
            g.exact_log_coeff = coeff;
            g.value = coeff.get_d() * logp;
            g.error = 0.0;
            return g;
        }
        if (!seen.insert(cur).second) return exact_zero();  // exact cycle
        if (n >= opts.max_nonarch_iters || rational_bits(cur) > opts.digit_budget_bits) break;
        cur = f.eval(cur);
    }

    GreenValue g;
    g.status = GreenValue::Status::BoundedUpTo;
    g.step = n;
    const long vz = padic_valuation(cur, p);
    const double log_plus_z = std::max(0.0, -static_cast<double>(vz) * logp);
    g.error =
        pow_neg(d, n) * (log_plus_z + static_cast<double>(kappa_plus_mult) * logp / (d - 1));
    return g;
}

CanonicalHeight canonical_height_green(const NormalFormPoly& f, const Rational& z,
                                       const GreenOptions& opts) {
    std::set<Integer> primes;
    if (sgn(z) != 0) {
        for (const Integer& p : prime_support(z)) primes.insert(p);
    }
    for (const auto& aj : f.coeffs()) {
        if (sgn(aj) != 0) {
            for (const Integer& p : prime_support(aj)) primes.insert(p);
        }
    }
    // every other place: |z|_v <= 1 with v-integral coefficients, exact zero

    CanonicalHeight h;
    h.breakdown.emplace_back(PlaceQ::arch(), green_arch(f, z, opts));
    for (const Integer& p : primes) {
        h.breakdown.emplace_back(PlaceQ{PlaceQ::Kind::Prime, p}, green_nonarch(f, z, p, opts));
    }
    for (const auto& [v, g] : h.breakdown) {
        h.value += g.value;
        h.error += g.error;
    }
    return h;
}

double canonical_height_iter(const NormalFormPoly& f, const Rational& z, int n,
                             std::size_t digit_budget_bits) {
    Rational cur = z;
    for (int k = 0; k < n; ++k) {
        if (rational_bits(cur) > digit_budget_bits) {
            throw ResourceError("canonical_height_iter: digit budget exceeded at step " +
                                std::to_string(k));
        }
        cur = f.eval(cur);
    }
    return rational_height(cur) / std::pow(static_cast<double>(f.d()), n);
}

PreperiodicityVerdict is_preperiodic(const NormalFormPoly& f, const Rational& z,
                                     const PreperiodicityBounds& bounds) {
    PreperiodicityVerdict out;
    // preperiodic implies hhat = 0, so h(f^n z) <= |h - hhat| <= height_gap()
    const double cutoff = bounds.height_cutoff > 0 ? bounds.height_cutoff : f.height_gap();

    std::map<Rational, long> seen;
    Rational cur = z;
    bool budget_hit = false;
    for (long n = 0; n <= bounds.max_steps; ++n) {
        auto [it, fresh] = seen.emplace(cur, n);
        if (!fresh) {
            out.kind = PreperiodicityVerdict::Kind::Preperiodic;
            out.tail = it->second;
            out.cycle = n - it->second;
            out.steps_checked = n;
            out.certificate = "exact repeat: f^" + std::to_string(n) + "(z) = f^" +
                              std::to_string(it->second) + "(z)";
            return out;
        }
        if (rational_height(cur) > cutoff) {
            out.kind = PreperiodicityVerdict::Kind::NotPreperiodic;
            out.steps_checked = n;
            out.certificate = "height of f^" + std::to_string(n) +
                              "(z) exceeds the preperiodicity cutoff";
            return out;
        }
        if (rational_bits(cur) > bounds.digit_budget_bits) {
            budget_hit = true;
            out.steps_checked = n;
            break;
        }
        cur = f.eval(cur);
        out.steps_checked = n + 1;
    }

    // no exact repeat in the window; look for a provably escaping place
    std::set<Integer> primes;
    if (sgn(z) != 0) {
        for (const Integer& p : prime_support(z)) primes.insert(p);
    }
    for (const auto& aj : f.coeffs()) {
        if (sgn(aj) != 0) {
            for (const Integer& p : prime_support(aj)) primes.insert(p);
        }
    }
    for (const Integer& p : primes) {
        GreenValue g = green_nonarch(f, z, p);
        if (g.escaped() && g.value > 0) {
            out.kind = PreperiodicityVerdict::Kind::NotPreperiodic;
            out.certificate = "positive escape rate at p = " + p.get_str();
            return out;
        }
    }
    GreenValue arch = green_arch(f, z);
    if (arch.escaped() && arch.value - arch.error > 0) {
        out.kind = PreperiodicityVerdict::Kind::NotPreperiodic;
        out.certificate = "positive archimedean escape rate";
        return out;
    }

    out.kind = PreperiodicityVerdict::Kind::Undecided;
    out.certificate = budget_hit ? "digit budget exhausted" : "step budget exhausted";
    return out;
}

std::vector<Rational> detect_linear_symmetry(const NormalFormPoly& f) {
    // over Q the only roots of unity are +-1; zeta = -1 works iff every nonzero
    // coefficient sits in odd degree (zeta^(j-1) = 1), and then automatically
    // zeta^(d-1) = 1 through a_d != 0
    std::vector<Rational> out{Rational(1)};
    bool odd_map = true;
    for (int j = 1; j <= f.d(); ++j) {
        if (sgn(f.coeff(j)) != 0 && j % 2 == 0) odd_map = false;
    }
    if (odd_map) out.emplace_back(-1);
    return out;
}

DependenceVerdict detect_dependence(const NormalFormPoly& f, const Rational& a, const Rational& b,
                                    long N) {
    if (N < 1) throw std::domain_error("detect_dependence: N must be >= 1");
    DependenceVerdict out;
    out.budget = N;

    if (a == b) {
        out.kind = DependenceVerdict::Kind::MergedOrbit;
        out.n = out.m = 0;
        out.ratio = Rational(1);
        return out;
    }

    PreperiodicityVerdict pa = is_preperiodic(f, a);
    PreperiodicityVerdict pb = is_preperiodic(f, b);
    if (pa.preperiodic() && pb.preperiodic()) {
        out.kind = DependenceVerdict::Kind::BothPreperiodic;
        out.ratio = Rational(1);
        return out;
    }

    // orbit merges require matching heights, so they surface at small sizes;
    // a tight digit cap only costs relations the verifiers may soundly miss
    const std::size_t orbit_bits = std::size_t(1) << 14;
    auto orbit = [&](const Rational& start) {
        std::vector<Rational> seq{start};
        for (long k = 0; k < N; ++k) {
            if (rational_bits(seq.back()) > orbit_bits) break;
            seq.push_back(f.eval(seq.back()));
        }
        return seq;
    };
    std::vector<Rational> A = orbit(a), B = orbit(b);

    const Rational dq(f.d());
    auto ratio_of = [&](long n, long m) {
        Rational r = pow_rational(dq, static_cast<unsigned long>(std::labs(m - n)));
        return m >= n ? r : Rational(1) / r;
    };
    auto scan = [&](const Rational& zeta, bool use_zeta) -> bool {
        for (long s = 0; s <= 2 * N; ++s) {
            for (long n = std::max(0l, s - N); n <= std::min(N, s); ++n) {
                const long m = s - n;
                if (static_cast<std::size_t>(n) >= A.size() ||
                    static_cast<std::size_t>(m) >= B.size()) {
                    continue;
                }
                const Rational& an = A[static_cast<std::size_t>(n)];
                const Rational& bm = B[static_cast<std::size_t>(m)];
                if (use_zeta ? (an == zeta * bm) : (an == bm)) {
                    out.kind = use_zeta ? DependenceVerdict::Kind::LinearSymmetryMerge
                                        : DependenceVerdict::Kind::MergedOrbit;
                    out.n = n;
                    out.m = m;
                    if (use_zeta) out.zeta = zeta;
                    out.ratio = ratio_of(n, m);
                    return true;
                }
            }
        }
        return false;
    };
    // with BothPreperiodic excluded, every merge shares one offset m-n, so the
    // scan order cannot change the reported ratio
    if (scan(Rational(1), false)) return out;
    for (const Rational& zeta : detect_linear_symmetry(f)) {
        if (zeta == 1) continue;
        if (scan(zeta, true)) return out;
    }
    out.kind = DependenceVerdict::Kind::NoRelationFound;
    return out;
}

std::vector<CanonicalHeight> critical_heights(const NormalFormPoly& f, const GreenOptions& opts) {
    std::vector<CanonicalHeight> out;
    out.reserve(f.crit().size());
    for (const auto& ci : f.crit()) out.push_back(canonical_height_green(f, ci, opts));
    return out;
}

double depleted_crit_height(const NormalFormPoly& f, int k, const GreenOptions& opts) {
    const int total = 2 * f.d() - 2;
    if (k < 0 || k > total) {
        throw std::domain_error("depleted_crit_height: k out of range [0, 2d-2]");
    }
    std::vector<double> values;
    for (const auto& h : critical_heights(f, opts)) values.push_back(h.value);
    values.resize(static_cast<std::size_t>(total), 0.0);  // infinity is fixed totally ramified
    std::sort(values.begin(), values.end(), std::greater<>());
    double sum = 0.0;
    for (std::size_t i = static_cast<std::size_t>(k); i < values.size(); ++i) sum += values[i];
    return sum;
}

Rational multiplier_of_cycle(const NormalFormPoly& f, const Rational& P, int n) {
    if (n < 1) throw std::domain_error("multiplier_of_cycle: n must be >= 1");
    Rational cur = P;
    Rational mult(1);
    for (int j = 0; j < n; ++j) {
        mult *= f.derivative_at(cur);
        cur = f.eval(cur);
    }
    if (!(cur == P)) {
        throw std::domain_error("multiplier_of_cycle: point is not periodic of period dividing n");
    }
    return mult;
}

}  // namespace critheight
