#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <critheight/polydyn.hpp>
#include <critheight/rng.hpp>

#include <cmath>

using namespace critheight;

namespace {

NormalFormPoly make_poly(int d, std::vector<Rational> c) {
    return coeffs_from_crit(CritVector(d, std::move(c)));
}

// f = (1/2)z^2 - 2z: PCF, orbit of 2 is 2 -> -2 -> 6 -> 6
NormalFormPoly pcf2() { return make_poly(2, {Rational(2)}); }
// f = (1/2)z^2 - 3z
NormalFormPoly g2() { return make_poly(2, {Rational(3)}); }

}  // namespace

TEST_CASE("coeffs_from_crit examples") {
    NormalFormPoly f = make_poly(3, {Rational(1), Rational(2)});
    CHECK(f.coeff(3) == make_rational(1, 3));
    CHECK(f.coeff(2) == make_rational(-3, 2));
    CHECK(f.coeff(1) == Rational(2));

    NormalFormPoly g = g2();
    CHECK(g.coeff(2) == make_rational(1, 2));
    CHECK(g.coeff(1) == Rational(-3));

    NormalFormPoly h = make_poly(4, {Rational(1), Rational(1), Rational(1)});
    CHECK(h.coeff(4) == make_rational(1, 4));
    CHECK(h.coeff(3) == Rational(-1));
    CHECK(h.coeff(2) == make_rational(3, 2));
    CHECK(h.coeff(1) == Rational(-1));
}

TEST_CASE("derivative factors through the critical points") {
    Pcg64 rng(3);
    for (int it = 0; it < 30; ++it) {
        int d = 2 + static_cast<int>(rng.below(3));
        std::vector<Rational> c;
        for (int i = 0; i < d - 1; ++i) c.push_back(rng.nonzero_rational(20));
        NormalFormPoly f = make_poly(d, c);
        Rational z = rng.nonzero_rational(50);
        // f'(z) from the coefficients must equal prod(z - c_i)
        Rational from_coeffs(0);
        for (int j = d; j >= 1; --j) {
            from_coeffs = from_coeffs * z + Rational(j) * f.coeff(j);
        }
        CHECK(from_coeffs == f.derivative_at(z));
        CHECK(f.eval(Rational(0)) == Rational(0));
    }
}

TEST_CASE("multiplier at zero") {
    CHECK(CritVector(3, {Rational(1), Rational(2)}).multiplier() == Rational(2));
    CHECK(CritVector(2, {Rational(3)}).multiplier() == Rational(-3));
    CHECK(CritVector(4, {Rational(1), Rational(1), Rational(1)}).multiplier() == Rational(-1));
    // and it really is f'(0)
    NormalFormPoly f = make_poly(3, {Rational(1), Rational(2)});
    CHECK(f.derivative_at(Rational(0)) == Rational(2));
}

TEST_CASE("green_arch examples") {
    SUBCASE("fixed point is an exact zero") {
        GreenValue g = green_arch(g2(), Rational(0));
        CHECK(g.status == GreenValue::Status::ExactZero);
        CHECK(g.value == 0.0);
    }
    SUBCASE("preperiodic orbit 2 -> -2 -> 6 -> 6 is an exact zero") {
        GreenValue g = green_arch(pcf2(), Rational(2));
        CHECK(g.status == GreenValue::Status::ExactZero);
    }
    SUBCASE("escaping point approximates log 50") {
        GreenValue g = green_arch(g2(), Rational(100));
        REQUIRE(g.escaped());
        CHECK(g.value == doctest::Approx(std::log(50.0)).epsilon(0.01));
        // compare against the direct telescoped estimate at 60 steps
        double x = 100.0;
        int n = 0;
        for (; n < 7; ++n) x = x * x / 2 - 3 * x;  // stays finite for 7 steps
        double direct = std::log(x) / std::pow(2.0, n);
        CHECK(std::fabs(g.value - direct) <= g.error + std::log(4.0) / std::pow(2.0, n));
    }
}

TEST_CASE("green_nonarch examples are exact") {
    SUBCASE("escape region: z = 1/3 at p = 3") {
        GreenValue g = green_nonarch(g2(), make_rational(1, 3), Integer(3));
        REQUIRE(g.escaped());
        REQUIRE(g.exact_log_coeff.has_value());
        CHECK(*g.exact_log_coeff == Rational(1));
        CHECK(g.error == 0.0);
    }
    SUBCASE("integral orbit: z = 3 at p = 3 is exactly zero") {
        GreenValue g = green_nonarch(g2(), Rational(3), Integer(3));
        CHECK(g.status == GreenValue::Status::ExactZero);
    }
    SUBCASE("bad prime p = 2 valuation recursion gives log 2") {
        GreenValue g = green_nonarch(g2(), Rational(3), Integer(2));
        REQUIRE(g.escaped());
        REQUIRE(g.exact_log_coeff.has_value());
        CHECK(*g.exact_log_coeff == Rational(1));
        CHECK(g.value == doctest::Approx(std::log(2.0)));
    }
    SUBCASE("escaped values are stable under budget increase") {
        GreenOptions big;
        big.max_nonarch_iters += 10;
        Pcg64 rng(17);
        for (int it = 0; it < 25; ++it) {
            int d = 2 + static_cast<int>(rng.below(3));
            std::vector<Rational> c;
            for (int i = 0; i < d - 1; ++i) c.push_back(rng.nonzero_rational(10));
            NormalFormPoly f = make_poly(d, c);
            Rational z = rng.nonzero_rational(10);
            for (const Integer& p : {Integer(2), Integer(3), Integer(5), Integer(7)}) {
                GreenValue a = green_nonarch(f, z, p);
                if (!a.escaped()) continue;
                GreenValue b = green_nonarch(f, z, p, big);
                REQUIRE(b.escaped());
                CHECK(*a.exact_log_coeff == *b.exact_log_coeff);
            }
        }
    }
}

TEST_CASE("canonical height: PCF point has exact zeros") {
    CanonicalHeight h = canonical_height_green(pcf2(), Rational(2));
    CHECK(h.value <= 1e-9);
    CHECK(h.error <= 1e-9);
    for (const auto& [v, g] : h.breakdown) {
        CHECK(g.status == GreenValue::Status::ExactZero);
    }
    CHECK(canonical_height_green(g2(), Rational(0)).value == 0.0);
}

TEST_CASE("canonical height oracle examples") {
    // f(3) = -9/2, so the one-step oracle gives (log 9)/2
    CHECK(canonical_height_iter(g2(), Rational(3), 1) == doctest::Approx(std::log(9.0) / 2));
    // f^3(2) = 6 under the PCF map
    CHECK(canonical_height_iter(pcf2(), Rational(2), 3) == doctest::Approx(std::log(6.0) / 8));
    CHECK(canonical_height_iter(g2(), Rational(0), 5) == 0.0);
}

TEST_CASE("green sum against the iterate oracle") {
    // hhat(3) = arch green + log 2 at p = 2; oracle agrees within the bound
    NormalFormPoly f = g2();
    CanonicalHeight h = canonical_height_green(f, Rational(3));
    const int n = 10;
    double oracle = canonical_height_iter(f, Rational(3), n);
    double tol = h.error + f.height_gap() / std::pow(2.0, n);
    CHECK(std::fabs(h.value - oracle) <= tol);
    // the 2-adic part contributes exactly log 2
    bool found2 = false;
    for (const auto& [v, g] : h.breakdown) {
        if (!v.is_arch() && v.p == 2) {
            found2 = true;
            CHECK(*g.exact_log_coeff == Rational(1));
        }
    }
    CHECK(found2);
}

TEST_CASE("functional equation and oracle equivalence on random samples") {
    Pcg64 rng(2024);
    int checked = 0;
    for (int it = 0; it < 60; ++it) {
        int d = 2 + static_cast<int>(rng.below(3));
        std::vector<Rational> c;
        for (int i = 0; i < d - 1; ++i) c.push_back(rng.nonzero_rational(12));
        NormalFormPoly f = make_poly(d, c);
        Rational z = rng.nonzero_rational(12);

        CanonicalHeight hz = canonical_height_green(f, z);
        CanonicalHeight hfz = canonical_height_green(f, f.eval(z));
        CHECK(std::fabs(hfz.value - d * hz.value) <= hfz.error + d * hz.error + 1e-9);

        const int n = 5;
        double oracle = canonical_height_iter(f, z, n);
        double tol = hz.error + f.height_gap() / std::pow(static_cast<double>(d), n);
        CHECK(std::fabs(hz.value - oracle) <= tol + 1e-12);
        ++checked;
    }
    CHECK(checked == 60);
}

TEST_CASE("one-step height bound is valid") {
    Pcg64 rng(5);
    for (int it = 0; it < 40; ++it) {
        int d = 2 + static_cast<int>(rng.below(3));
        std::vector<Rational> c;
        for (int i = 0; i < d - 1; ++i) c.push_back(rng.nonzero_rational(9));
        NormalFormPoly f = make_poly(d, c);
        Rational z = rng.nonzero_rational(40);
        double lhs = rational_height(f.eval(z));
        double rhs = d * rational_height(z);
        CHECK(std::fabs(lhs - rhs) <= f.one_step_height_bound() + 1e-9);
    }
}

TEST_CASE("escape-rate upper bound (all constants zero at v-integral places)") {
    Pcg64 rng(6);
    for (int it = 0; it < 40; ++it) {
        int d = 2 + static_cast<int>(rng.below(3));
        std::vector<Rational> c;
        for (int i = 0; i < d - 1; ++i) c.push_back(rng.nonzero_rational(9));
        NormalFormPoly f = make_poly(d, c);
        Rational z = rng.nonzero_rational(9);

        for (const Integer& p : {Integer(5), Integer(7), Integer(11), Integer(13)}) {
            if (p <= d) continue;
            GreenValue g = green_nonarch(f, z, p);
            if (!g.escaped()) continue;
            // G <= log^+|z| + (d/(d-1)) log^+||c||, as multiples of log p
            Rational logplus_z(std::max(0l, -padic_valuation(z, p)));
            long cmax = 0;
            for (const auto& ci : f.crit()) cmax = std::max(cmax, -padic_valuation(ci, p));
            Rational bound = logplus_z + make_rational(d, d - 1) * Rational(std::max(0l, cmax));
            CHECK(*g.exact_log_coeff <= bound);
        }
        GreenValue arch = green_arch(f, z);
        if (arch.escaped()) {
            double A = 0.0;
            for (int j = 1; j < d; ++j) A += std::fabs(f.coeff(j).get_d());
            double c1 = std::log(1.0 + 1.0 / d + A) / (d - 1);
            double norm_c = 0.0;
            for (const auto& ci : f.crit()) norm_c = std::max(norm_c, std::fabs(ci.get_d()));
            double bound = std::log(std::max(1.0, std::fabs(z.get_d()))) +
                           (static_cast<double>(d) / (d - 1)) * std::log(std::max(1.0, norm_c)) +
                           c1;
            CHECK(arch.value - arch.error <= bound + 1e-9);
        }
    }
}

TEST_CASE("is_preperiodic certificates") {
    PreperiodicityVerdict v = is_preperiodic(pcf2(), Rational(2));
    REQUIRE(v.preperiodic());
    CHECK(v.tail == 2);
    CHECK(v.cycle == 1);

    PreperiodicityVerdict z0 = is_preperiodic(g2(), Rational(0));
    REQUIRE(z0.preperiodic());
    CHECK(z0.tail == 0);
    CHECK(z0.cycle == 1);

    PreperiodicityVerdict esc = is_preperiodic(g2(), make_rational(1, 3));
    CHECK(esc.kind == PreperiodicityVerdict::Kind::NotPreperiodic);

    // preperiodic implies canonical height zero with exact nonarchimedean parts
    CanonicalHeight h = canonical_height_green(pcf2(), Rational(-2));
    for (const auto& [place, g] : h.breakdown) {
        if (!place.is_arch()) CHECK(g.status == GreenValue::Status::ExactZero);
    }
    CHECK(h.value <= h.error + 1e-9);
}

TEST_CASE("linear symmetry detection") {
    NormalFormPoly odd = make_poly(3, {Rational(1), Rational(-1)});  // z^3/3 - z
    auto sym = detect_linear_symmetry(odd);
    REQUIRE(sym.size() == 2);
    CHECK(sym[1] == Rational(-1));

    NormalFormPoly generic = make_poly(3, {Rational(1), Rational(2)});
    CHECK(detect_linear_symmetry(generic).size() == 1);
    CHECK(detect_linear_symmetry(g2()).size() == 1);
}

TEST_CASE("dependence detection") {
    NormalFormPoly odd = make_poly(3, {Rational(1), Rational(-1)});
    NormalFormPoly generic = make_poly(3, {Rational(1), Rational(2)});

    SUBCASE("equal points merge at (0,0)") {
        DependenceVerdict v = detect_dependence(generic, Rational(5), Rational(5), 4);
        CHECK(v.kind == DependenceVerdict::Kind::MergedOrbit);
        CHECK(v.n == 0);
        CHECK(v.m == 0);
        CHECK(*v.ratio == Rational(1));
    }
    SUBCASE("odd map relates 1 and -1 through the symmetry") {
        DependenceVerdict v = detect_dependence(odd, Rational(1), Rational(-1), 6);
        CHECK(v.kind == DependenceVerdict::Kind::LinearSymmetryMerge);
        CHECK(v.zeta == Rational(-1));
        CHECK(v.n == 0);
        CHECK(v.m == 0);
    }
    SUBCASE("generic pair has no relation") {
        DependenceVerdict v = detect_dependence(generic, Rational(1), Rational(2), 8);
        CHECK(v.kind == DependenceVerdict::Kind::NoRelationFound);
        CHECK(v.budget == 8);
    }
    SUBCASE("merged orbits carry the degree ratio") {
        // b = f(a) merges at (1, 0) with ratio d^(0-1)
        Rational a = Rational(7);
        DependenceVerdict v = detect_dependence(generic, a, generic.eval(a), 6);
        CHECK(v.kind == DependenceVerdict::Kind::MergedOrbit);
        CHECK(v.n == 1);
        CHECK(v.m == 0);
        CHECK(*v.ratio == make_rational(1, 3));
    }
    SUBCASE("symmetry of the verdict with ratio inversion") {
        Pcg64 rng(8);
        for (int it = 0; it < 20; ++it) {
            std::vector<Rational> c{rng.nonzero_rational(6), rng.nonzero_rational(6)};
            NormalFormPoly f = make_poly(3, c);
            Rational a = rng.nonzero_rational(6);
            Rational b = rng.below(2) ? f.eval(a) : rng.nonzero_rational(6);
            DependenceVerdict ab = detect_dependence(f, a, b, 5);
            DependenceVerdict ba = detect_dependence(f, b, a, 5);
            CHECK(ab.found() == ba.found());
            if (ab.found() && ab.ratio && ba.ratio) {
                CHECK(*ab.ratio * *ba.ratio == Rational(1));
            }
        }
    }
}

TEST_CASE("critical and depleted critical heights") {
    // single critical point, preperiodic: hhat_crit = 0
    CHECK(depleted_crit_height(pcf2(), 0) <= 1e-9);
    // dropping all 2d-2 points gives zero for any map
    NormalFormPoly f = make_poly(3, {Rational(1), Rational(2)});
    CHECK(depleted_crit_height(f, 4) == 0.0);
    CHECK(depleted_crit_height(f, 2) == 0.0);  // both affine points dropped, infinity is zero
    auto hh = critical_heights(f);
    REQUIRE(hh.size() == 2);
    CHECK(depleted_crit_height(f, 1) ==
          doctest::Approx(std::min(hh[0].value, hh[1].value)).epsilon(1e-12));
    CHECK(depleted_crit_height(f, 0) == doctest::Approx(hh[0].value + hh[1].value));
    CHECK_THROWS_AS(depleted_crit_height(f, 5), std::domain_error);
    CHECK_THROWS_AS(depleted_crit_height(f, -1), std::domain_error);
}

TEST_CASE("cycle multipliers") {
    CHECK(multiplier_of_cycle(pcf2(), Rational(6), 1) == Rational(4));
    CHECK(multiplier_of_cycle(g2(), Rational(0), 1) == Rational(-3));
    CHECK(multiplier_of_cycle(pcf2(), Rational(0), 2) == Rational(4));
    CHECK_THROWS_AS(multiplier_of_cycle(g2(), Rational(1), 1), std::domain_error);
}
