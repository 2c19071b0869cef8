#include "critheight/p1height.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "critheight/intfactor.hpp"

namespace critheight {

P1Point P1Point::normalized(Integer x, Integer y) {
    if (sgn(x) == 0 && sgn(y) == 0) throw std::domain_error("P1Point: (0, 0)");
    Integer g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    x /= g;
    y /= g;
    if (sgn(y) < 0 || (sgn(y) == 0 && sgn(x) < 0)) {
        x = -x;
        y = -y;
    }
    return P1Point{std::move(x), std::move(y)};
}

P1Point P1Point::from_rational(const Rational& z) {
    return P1Point{z.get_num(), z.get_den()};
}

Rational P1Point::affine() const {
    if (is_infinity()) throw std::domain_error("P1Point: affine value of infinity");
    return make_rational(x, y);
}

double P1Point::naive_height() const {
    Integer ax = abs(x);
    const Integer& m = ax > y ? ax : y;
    return log_abs_integer(m);
}

P1Lift::P1Lift(std::vector<Integer> F, std::vector<Integer> G)
    : F_(std::move(F)), G_(std::move(G)) {
    bounds_ = lift_bounds(F_, G_);
    Integer deltas = bounds_.delta_x * bounds_.delta_y;
    for (auto& [p, e] : factor_integer(deltas)) bad_primes_.push_back(p);
}

void P1Lift::apply_raw(const Integer& x, const Integer& y, Integer& X, Integer& Y) const {
    const std::size_t d = F_.size() - 1;
    // powers x^i y^(d-i)
    std::vector<Integer> xp(d + 1), yp(d + 1);
    xp[0] = 1;
    yp[0] = 1;
    for (std::size_t i = 1; i <= d; ++i) {
        xp[i] = xp[i - 1] * x;
        yp[i] = yp[i - 1] * y;
    }
    X = 0;
    Y = 0;
    for (std::size_t i = 0; i <= d; ++i) {
        Integer mono = xp[i] * yp[d - i];
        if (sgn(F_[i]) != 0) X += F_[i] * mono;
        if (sgn(G_[i]) != 0) Y += G_[i] * mono;
    }
}

P1Point P1Lift::apply(const P1Point& P) const {
    Integer X, Y;
    apply_raw(P.x, P.y, X, Y);
    return P1Point::normalized(std::move(X), std::move(Y));
}

namespace {

long vp_or(const Integer& n, const Integer& p, long if_zero) {
    if (sgn(n) == 0) return if_zero;
    if (!mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) return 0;
    Integer tmp;
    return static_cast<long>(mpz_remove(tmp.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace

CanonicalHeight p1_canonical_height(const P1Lift& lift, const P1Point& P, int depth) {
    const long d = lift.degree();
    CanonicalHeight out;

    // archimedean series on a max-normalized float pair
    {
        long ex = 0, ey = 0;
        double mx = sgn(P.x) == 0 ? 0.0 : mpz_get_d_2exp(&ex, P.x.get_mpz_t());
        double my = sgn(P.y) == 0 ? 0.0 : mpz_get_d_2exp(&ey, P.y.get_mpz_t());
        long e = std::max(sgn(P.x) == 0 ? ey : ex, sgn(P.y) == 0 ? ex : ey);
        double ux = mx == 0.0 ? 0.0 : std::ldexp(mx, static_cast<int>(ex - e));
        double uy = my == 0.0 ? 0.0 : std::ldexp(my, static_cast<int>(ey - e));
        double norm = std::max(std::fabs(ux), std::fabs(uy));
        ux /= norm;
        uy /= norm;

        double acc = P.naive_height();
        double scale = 1.0;
        std::vector<double> Fd(lift.F().size()), Gd(lift.G().size());
        for (std::size_t i = 0; i < Fd.size(); ++i) {
            Fd[i] = lift.F()[i].get_d();
            Gd[i] = lift.G()[i].get_d();
        }
        for (int k = 0; k < depth; ++k) {
            scale /= static_cast<double>(d);
            double X = 0.0, Y = 0.0;
            double xp = 1.0;
            std::vector<double> ypow(Fd.size());
            ypow[Fd.size() - 1] = 1.0;
            for (std::size_t i = Fd.size() - 1; i-- > 0;) ypow[i] = ypow[i + 1] * uy;
            for (std::size_t i = 0; i < Fd.size(); ++i) {
                double mono = xp * ypow[i];
                X += Fd[i] * mono;
                Y += Gd[i] * mono;
                xp *= ux;
            }
            double m = std::max(std::fabs(X), std::fabs(Y));
            if (!(m > 0.0) || !std::isfinite(m)) {
                throw std::runtime_error("p1_canonical_height: degenerate archimedean step");
            }
            acc += std::log(m) * scale;
            ux = X / m;
            uy = Y / m;
        }
        const double m_plus = lift.bounds().c_plus;
        double dm = std::min(make_rational(lift.bounds().delta_x, lift.bounds().l1_x).get_d(),
                             make_rational(lift.bounds().delta_y, lift.bounds().l1_y).get_d());
        const double m_minus = std::log(dm);  // <= 0
        const double c_arch = std::max(m_plus, -m_minus);
        GreenValue g;
        g.status = GreenValue::Status::EscapedAtStep;
        g.step = depth;
        g.value = acc;
        g.error = c_arch * std::pow(static_cast<double>(d), -depth) / (d - 1) +
                  64.0 * std::numeric_limits<double>::epsilon() * depth *
                      std::max(1.0, std::fabs(acc));
        out.breakdown.emplace_back(PlaceQ::arch(), g);
    }

    // finite places dividing the Bezout scales; exact mod-p^K loops
    for (const Integer& p : lift.bad_primes()) {
        const long cap = lift.bounds().content_bound(p);
        const long K = cap * (depth + 2) + 64;
        Integer pk = pow_integer(p, static_cast<unsigned long>(K));
        Integer x = P.x % pk, y = P.y % pk;
        Rational acc_mult(0);  // sum e_k d^(-k-1), exact
        Rational step_scale = make_rational(1, d);
        bool exact_zero_tail = true;
        for (int k = 0; k < depth; ++k) {
            Integer X, Y;
            lift.apply_raw(x, y, X, Y);
            X %= pk;
            Y %= pk;
            long e = std::min(vp_or(X, p, K), vp_or(Y, p, K));
            if (e > 0) {
                acc_mult += Rational(e) * step_scale;
                Integer pe = pow_integer(p, static_cast<unsigned long>(e));
                X /= pe;
                Y /= pe;
                exact_zero_tail = false;
            }
            step_scale /= Rational(d);
            x = X;
            y = Y;
        }
        const double logp = log_abs_integer(p);
        GreenValue g;
        g.step = depth;
        if (sgn(acc_mult) == 0 && exact_zero_tail && cap == 0) {
            g.status = GreenValue::Status::ExactZero;
        } else {
            g.status = GreenValue::Status::EscapedAtStep;
            const double tail =
                static_cast<double>(cap) * logp * std::pow(static_cast<double>(d), -depth) /
                (d - 1);
            g.value = -acc_mult.get_d() * logp - tail / 2.0;
            g.error = tail / 2.0;
        }
        out.breakdown.emplace_back(PlaceQ{PlaceQ::Kind::Prime, p}, g);
    }

    for (const auto& [v, g] : out.breakdown) {
        out.value += g.value;
        out.error += g.error;
    }
    return out;
}

OrbitClass classify_p1_orbit(const P1Lift& lift, const P1Point& P, long max_steps,
                             std::size_t digit_budget_bits) {
    OrbitClass out;
    const double cutoff = lift.bounds().height_gap();
    std::map<P1Point, long> seen;
    P1Point cur = P;
    for (long n = 0; n <= max_steps; ++n) {
        auto [it, fresh] = seen.emplace(cur, n);
        if (!fresh) {
            out.kind = OrbitClass::Kind::Finite;
            out.tail = it->second;
            out.cycle = n - it->second;
            out.steps = n;
            return out;
        }
        if (cur.naive_height() > cutoff) {
            out.kind = OrbitClass::Kind::Infinite;
            out.steps = n;
            return out;
        }
        if (mpz_sizeinbase(cur.x.get_mpz_t(), 2) + mpz_sizeinbase(cur.y.get_mpz_t(), 2) >
            digit_budget_bits) {
            out.kind = OrbitClass::Kind::Truncated;
            out.steps = n;
            return out;
        }
        cur = lift.apply(cur);
    }
    out.kind = OrbitClass::Kind::Truncated;
    out.steps = max_steps;
    return out;
}

}  // namespace critheight
