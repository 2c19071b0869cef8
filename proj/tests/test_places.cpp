#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <critheight/intfactor.hpp>
#include <critheight/places.hpp>
#include <critheight/polyfactor.hpp>
#include <critheight/rng.hpp>

#include <array>

using namespace critheight;

TEST_CASE("rational parsing and helpers") {
    CHECK(parse_rational("-9/2") == make_rational(-9, 2));
    CHECK(parse_rational("12") == Rational(12));
    CHECK(rational_to_string(make_rational(22, -7)) == "-22/7");
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK(padic_valuation(make_rational(1, 7), Integer(7)) == -1);
    CHECK(padic_valuation(make_rational(-9, 2), Integer(2)) == -1);
    CHECK(padic_valuation(make_rational(-9, 2), Integer(3)) == 2);
    CHECK(rational_height(Rational(3)) == doctest::Approx(std::log(3.0)));
    CHECK(rational_height(make_rational(-9, 2)) == doctest::Approx(std::log(9.0)));
}

TEST_CASE("integer factorization") {
    auto f = factor_integer(Integer(12));
    REQUIRE(f.size() == 2);
    CHECK(f[Integer(2)] == 2);
    CHECK(f[Integer(3)] == 1);
    CHECK(factor_integer(Integer(1)).empty());
    auto big = factor_integer(Integer("600851475143"));
    Integer back(1);
    for (auto& [p, e] : big) {
        CHECK(is_prime(p));
        back *= pow_integer(p, e);
    }
    CHECK(back == Integer("600851475143"));
}

TEST_CASE("log_abs operation") {
    CHECK(log_abs(make_rational(1, 7), PlaceQ::prime(Integer(7))).value ==
          doctest::Approx(std::log(7.0)));
    CHECK(log_abs(make_rational(-9, 2), PlaceQ::prime(Integer(2))).value ==
          doctest::Approx(std::log(2.0)));
    CHECK(log_abs(Rational(3), PlaceQ::arch()).value == doctest::Approx(std::log(3.0)));
    CHECK(log_abs(make_rational(1, 7), PlaceQ::prime(Integer(7))).neg_valuation == 1);
    CHECK_THROWS_AS(log_abs(Rational(0), PlaceQ::arch()), std::domain_error);
    CHECK_THROWS_AS(PlaceQ::prime(Integer(6)), std::domain_error);
}

TEST_CASE("support operation") {
    auto s = support(Rational(12));
    REQUIRE(s.size() == 3);
    CHECK(s[0].is_arch());
    CHECK(s[1].p == 2);
    CHECK(s[2].p == 3);
    CHECK(support(Rational(1)).empty());
    CHECK(support(Rational(-1)).empty());
    CHECK(support(make_rational(-9, 2)).size() == 3);
    CHECK_THROWS_AS(support(Rational(0)), std::domain_error);
}

TEST_CASE("height_affine examples") {
    std::array<Rational, 1> single{Rational(3)};
    CHECK(height_affine(single) == doctest::Approx(std::log(3.0)));
    std::array<Rational, 2> pair{make_rational(1, 7), Rational(7)};
    CHECK(height_affine(pair) == doctest::Approx(2 * std::log(7.0)));
    std::array<Rational, 2> ones{Rational(1), Rational(1)};
    CHECK(height_affine(ones) == doctest::Approx(0.0));
    std::array<Rational, 2> zeros{Rational(0), Rational(0)};
    CHECK(height_affine(zeros) == doctest::Approx(0.0));
    // single-coordinate height agrees with the direct max(num, den) formula
    Rational x(-22, 7);
    std::array<Rational, 1> xs{x};
    CHECK(height_affine(xs) == doctest::Approx(rational_height(x)));
}

TEST_CASE("product formula over Q is exact as a log combination") {
    Pcg64 rng(42);
    for (int i = 0; i < 300; ++i) {
        Rational x = rng.nonzero_rational(100000);
        LogCombination total;
        for (const PlaceQ& v : support(x)) {
            if (v.is_arch()) {
                total += LogCombination::log_abs_of(x);
            } else {
                total += LogCombination::prime_log(v.p, Rational(-padic_valuation(x, v.p)));
            }
        }
        CHECK(total.is_zero());
    }
}

TEST_CASE("height invariances") {
    Pcg64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Rational x = rng.nonzero_rational(1000);
        std::array<Rational, 1> a{x};
        std::array<Rational, 1> b{Rational(1) / x};
        CHECK(height_affine(a) == doctest::Approx(height_affine(b)));
        Rational y = rng.nonzero_rational(1000);
        std::array<Rational, 2> xy{x, y};
        std::array<Rational, 2> yx{y, x};
        CHECK(height_affine_comb(xy) == height_affine_comb(yx));
    }
}

TEST_CASE("polynomial arithmetic basics") {
    Poly t = Poly::variable();
    Poly f = t * t - Poly{Rational(1)};
    Poly q, r;
    Poly::divrem(f, t - Poly{Rational(1)}, q, r);
    CHECK(r.is_zero());
    CHECK(q == t + Poly{Rational(1)});
    CHECK(Poly::gcd(f, t - Poly{Rational(1)}) == t - Poly{Rational(1)});
    CHECK(f.derivative() == Poly{Rational(0), Rational(2)});
    CHECK(f.eval(Rational(3)) == Rational(8));
    CHECK(Poly::order_of(f * f * (t + Poly{Rational(2)}), f) == 2);
}

TEST_CASE("polynomial factorization") {
    Poly t = Poly::variable();

    SUBCASE("splits a product of linear factors") {
        Poly f = (t - Poly{Rational(1)}) * (t - Poly{Rational(2)}) * (t - Poly{Rational(2)});
        auto fac = factor_poly(f * Rational(6));
        REQUIRE(fac.factors.size() == 2);
        CHECK(fac.unit == Rational(6));
        CHECK(fac.factors[0].multiplicity + fac.factors[1].multiplicity == 3);
    }
    SUBCASE("x^4 + 4 = (x^2-2x+2)(x^2+2x+2)") {
        Poly f = t.pow(4) + Poly{Rational(4)};
        auto fac = factor_poly(f);
        REQUIRE(fac.factors.size() == 2);
        CHECK(fac.factors[0].factor.degree() == 2);
        CHECK(fac.factors[1].factor.degree() == 2);
        Poly back{Rational(1)};
        for (auto& pf : fac.factors) back = back * pf.factor.pow(pf.multiplicity);
        CHECK(back * fac.unit == f);
    }
    SUBCASE("cyclotomic quintic is irreducible") {
        Poly f = t.pow(4) + t.pow(3) + t.pow(2) + t + Poly{Rational(1)};
        CHECK(poly_is_irreducible(f));
    }
    SUBCASE("rational coefficients and t^k factors") {
        Poly f = Poly{Rational(0), Rational(0), make_rational(1, 6)} * (t.pow(2) + Poly{Rational(1)});
        auto fac = factor_poly(f);
        Poly back{Rational(1)};
        for (auto& pf : fac.factors) back = back * pf.factor.pow(pf.multiplicity);
        CHECK(back * fac.unit == f);
        REQUIRE(fac.factors.size() == 2);
        CHECK(fac.factors[0].factor == t);
        CHECK(fac.factors[0].multiplicity == 2);
    }
    SUBCASE("reconstruction property on random products") {
        Pcg64 rng(11);
        for (int it = 0; it < 20; ++it) {
            Poly f{Rational(1)};
            int nf = 1 + static_cast<int>(rng.below(3));
            for (int k = 0; k < nf; ++k) {
                int deg = 1 + static_cast<int>(rng.below(3));
                std::vector<Rational> c(deg + 1);
                for (auto& x : c) x = Rational(rng.range(-8, 8));
                c[deg] = Rational(1 + rng.range(0, 4));
                f = f * Poly(std::move(c));
            }
            if (f.is_constant()) continue;
            auto fac = factor_poly(f);
            Poly back{fac.unit};
            for (auto& pf : fac.factors) {
                CHECK(pf.factor.leading() == Rational(1));
                back = back * pf.factor.pow(pf.multiplicity);
            }
            CHECK(back == f);
        }
    }
}

TEST_CASE("rational function normalization") {
    Poly t = Poly::variable();
    RationalFunction x((t + Poly{Rational(1)}) * (t - Poly{Rational(3)}) * Rational(2),
                       (t + Poly{Rational(1)}) * Rational(4));
    CHECK(x.den() == Poly{Rational(1)});
    CHECK(x.num() == (t - Poly{Rational(3)}) * make_rational(1, 2));
    RationalFunction collapsed(t + Poly{Rational(1)}, t + Poly{Rational(1)});
    CHECK(collapsed.is_constant());
    CHECK(collapsed.constant_value() == Rational(1));
}

TEST_CASE("ff_log_abs examples") {
    RationalFunction t = RationalFunction::variable();
    PlaceFF vt = PlaceFF::finite(Poly::variable());
    CHECK(ff_log_abs(t, vt) == -1);
    CHECK(ff_log_abs(t, PlaceFF::infinity()) == 1);
    Poly tt = Poly::variable();
    RationalFunction x(tt * tt + Poly{Rational(1)}, tt);
    PlaceFF v2 = PlaceFF::finite(tt * tt + Poly{Rational(1)});
    CHECK(ff_log_abs(x, v2) == -2);
    CHECK_THROWS_AS(ff_log_abs(RationalFunction(Rational(0)), vt), std::domain_error);
    CHECK_THROWS_AS(PlaceFF::finite(tt * tt - Poly{Rational(1)}), std::domain_error);
}

TEST_CASE("ff_height_affine examples") {
    RationalFunction t = RationalFunction::variable();
    std::array<RationalFunction, 2> pair{t, t.inverse()};
    CHECK(ff_height_affine(pair) == 2);
    std::array<RationalFunction, 1> constant{RationalFunction(make_rational(5, 3))};
    CHECK(ff_height_affine(constant) == 0);
    Poly tt = Poly::variable();
    std::array<RationalFunction, 1> quad{RationalFunction(tt * tt + Poly{Rational(1)})};
    CHECK(ff_height_affine(quad) == 2);
}

TEST_CASE("product formula over Q(t) is exactly zero") {
    Pcg64 rng(5);
    Poly t = Poly::variable();
    for (int it = 0; it < 40; ++it) {
        auto rand_poly = [&](int maxdeg) {
            std::vector<Rational> c(1 + rng.below(maxdeg + 1));
            for (auto& x : c) x = Rational(rng.range(-6, 6));
            Poly p(std::move(c));
            return p.is_zero() ? t + Poly{Rational(static_cast<long>(rng.range(1, 5)))} : p;
        };
        RationalFunction x(rand_poly(4), rand_poly(4));
        if (x.is_zero()) continue;
        long total = 0;
        for (const PlaceFF& v : ff_support(x)) total += ff_log_abs(x, v);
        CHECK(total == 0);
    }
}

TEST_CASE("ff height zero iff all coordinates constant") {
    Pcg64 rng(9);
    Poly t = Poly::variable();
    for (int it = 0; it < 30; ++it) {
        std::vector<RationalFunction> coords;
        bool any_nonconstant = false;
        for (int j = 0; j < 3; ++j) {
            if (rng.below(2)) {
                coords.emplace_back(rng.nonzero_rational(9));
            } else {
                coords.emplace_back(t * Rational(rng.range(1, 5)) +
                                    Poly{Rational(rng.range(-4, 4))});
                any_nonconstant = true;
            }
        }
        CHECK((ff_height_affine(coords) == 0) == !any_nonconstant);
    }
}

TEST_CASE("pcg64 stream is stable") {
    Pcg64 a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Pcg64 c(43);
    bool differs = false;
    Pcg64 d(42);
    for (int i = 0; i < 10; ++i) differs |= (c.next() != d.next());
    CHECK(differs);
}
