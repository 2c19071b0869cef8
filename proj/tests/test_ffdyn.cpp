#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <critheight/ffdyn.hpp>
#include <critheight/rng.hpp>

using namespace critheight;

namespace {

RationalFunction tpow(long e) {
    RationalFunction t = RationalFunction::variable();
    if (e >= 0) return t.pow(static_cast<unsigned>(e));
    return t.inverse().pow(static_cast<unsigned>(-e));
}

// c = (t, 1/t), d = 3, lambda = 1
FFCritVector sample_t() {
    return FFCritVector(3, {tpow(1), tpow(-1)});
}

// random nonconstant vector with constant lambda: entries t^e * q, e in [-3,3]
FFCritVector random_ff(Pcg64& rng, int d) {
    for (;;) {
        std::vector<RationalFunction> c;
        long esum = 0;
        Rational qprod(1);
        bool nonconstant = false;
        for (int i = 0; i + 2 < d; ++i) {
            long e = rng.range(-3, 3);
            Rational q = rng.nonzero_rational(9);
            esum += e;
            qprod *= q;
            if (e != 0) nonconstant = true;
            c.push_back(tpow(e) * RationalFunction(q));
        }
        // last entry cancels the t-power so the product is constant
        Rational q = rng.nonzero_rational(9);
        if (esum != 0) nonconstant = true;
        c.push_back(tpow(-esum) * RationalFunction(q));
        if (!nonconstant) continue;
        return FFCritVector(d, std::move(c));
    }
}

}  // namespace

TEST_CASE("FFCritVector invariants") {
    FFCritVector cv = sample_t();
    CHECK(cv.lambda == Rational(1));
    CHECK_THROWS_AS(FFCritVector(3, {tpow(1), tpow(1)}), std::domain_error);  // nonconstant product
    FFCritVector cv4(4, {tpow(1), tpow(-1), RationalFunction(Rational(1))});
    CHECK(cv4.lambda == Rational(-1));
}

TEST_CASE("normal form coefficients over Q(t)") {
    FFCritVector cv = sample_t();
    auto a = ff_normal_form_coeffs(cv);
    // f(z) = z^3/3 - ((t + 1/t)/2) z^2 + z
    CHECK(a[2] == RationalFunction(make_rational(1, 3)));
    CHECK(a[0] == RationalFunction(Rational(1)));
    RationalFunction expected_a2 =
        -(tpow(1) + tpow(-1)) * RationalFunction(make_rational(1, 2));
    CHECK(a[1] == expected_a2);
    // evaluation matches the spec trace: f(t) = -t^3/6 + t/2
    RationalFunction ft = ff_eval(a, tpow(1));
    RationalFunction expected =
        tpow(3) * RationalFunction(make_rational(-1, 6)) + tpow(1) * RationalFunction(make_rational(1, 2));
    CHECK(ft == expected);
}

TEST_CASE("ff_green examples") {
    FFCritVector cv = sample_t();
    SUBCASE("escape region at infinity is exact") {
        FFGreenValue g = ff_green(cv, tpow(2), PlaceFF::infinity());
        REQUIRE(g.escaped());
        CHECK(g.value == Rational(2));
        CHECK(g.step == 0);
    }
    SUBCASE("constant data is exactly zero") {
        FFCritVector constant(3, {RationalFunction(Rational(2)), RationalFunction(make_rational(1, 2))});
        FFGreenValue g = ff_green(constant, RationalFunction(Rational(5)), PlaceFF::infinity());
        CHECK(g.status == FFGreenValue::Status::ExactZero);
    }
    SUBCASE("critical point escapes at infinity after one step") {
        // f(t) = -t^3/6 + t/2 has degree 3 > 1 = log||c||_inf
        FFGreenValue g = ff_green(cv, tpow(1), PlaceFF::infinity());
        REQUIRE(g.escaped());
        CHECK(g.value == Rational(1));  // 3^{-1} * 3
        CHECK(g.step == 1);
    }
    SUBCASE("escaped values idempotent under budget increase") {
        FFOptions big;
        big.max_iters += 10;
        FFGreenValue a = ff_green(cv, tpow(1), PlaceFF::infinity());
        FFGreenValue b = ff_green(cv, tpow(1), PlaceFF::infinity(), big);
        CHECK(a.value == b.value);
        CHECK(a.step == b.step);
    }
}

TEST_CASE("ff_canonical_height examples") {
    FFCritVector cv = sample_t();
    SUBCASE("constant point over constant family is zero") {
        FFCritVector constant(3, {RationalFunction(Rational(2)), RationalFunction(make_rational(1, 2))});
        FFHeight h = ff_canonical_height(constant, RationalFunction(make_rational(5, 3)));
        CHECK(h.value == Rational(0));
        CHECK_FALSE(h.truncated);
    }
    SUBCASE("zero is a fixed point") {
        FFHeight h = ff_canonical_height(cv, RationalFunction(Rational(0)));
        CHECK(h.value == Rational(0));
    }
    SUBCASE("t^2 has height at least 2") {
        FFHeight h = ff_canonical_height(cv, tpow(2));
        CHECK(h.value >= Rational(2));
    }
}

TEST_CASE("ff functional equation, exact when all statuses certain") {
    Pcg64 rng(31);
    auto coeffs_of = [](const FFCritVector& cv) { return ff_normal_form_coeffs(cv); };
    for (int it = 0; it < 25; ++it) {
        int d = 3 + static_cast<int>(rng.below(2));
        FFCritVector cv = random_ff(rng, d);
        RationalFunction z = tpow(rng.range(-2, 2)) * RationalFunction(rng.nonzero_rational(5));
        FFHeight hz = ff_canonical_height(cv, z);
        FFHeight hfz = ff_canonical_height(cv, ff_eval(coeffs_of(cv), z));
        if (!hz.truncated && !hfz.truncated) {
            CHECK(hfz.value == Rational(d) * hz.value);
        }
    }
}

TEST_CASE("cink_check verdicts") {
    SUBCASE("constant vector") {
        FFCritVector constant(3, {RationalFunction(Rational(2)), RationalFunction(make_rational(1, 2))});
        CHECK(cink_check(constant).kind == CinkVerdict::Kind::ConstantC);
    }
    SUBCASE("(t, 1/t) has two independent escapers") {
        CinkVerdict v = cink_check(sample_t());
        REQUIRE(v.kind == CinkVerdict::Kind::TwoEscapers);
        CHECK(v.i != v.j);
        CHECK(v.places.size() == 2);
    }
    SUBCASE("(t, 1/t, 1) in degree 4") {
        FFCritVector cv(4, {tpow(1), tpow(-1), RationalFunction(Rational(1))});
        CinkVerdict v = cink_check(cv);
        REQUIRE(v.kind == CinkVerdict::Kind::TwoEscapers);
    }
    SUBCASE("random nonconstant vectors always produce two escapers") {
        Pcg64 rng(77);
        for (int it = 0; it < 30; ++it) {
            int d = 3 + static_cast<int>(rng.below(2));
            FFCritVector cv = random_ff(rng, d);
            CinkVerdict v = cink_check(cv);
            CHECK(v.kind == CinkVerdict::Kind::TwoEscapers);
        }
    }
}

TEST_CASE("isotriviality") {
    CHECK(isotriviality_check(
        FFCritVector(3, {RationalFunction(make_rational(1, 7)), RationalFunction(Rational(7))})));
    CHECK_FALSE(isotriviality_check(sample_t()));
    // (t+1)/(t+1) collapses to a constant
    Poly t = Poly::variable();
    RationalFunction collapsed(t + Poly{Rational(1)}, t + Poly{Rational(1)});
    FFCritVector cv(3, {collapsed, RationalFunction(Rational(3))});
    CHECK(isotriviality_check(cv));
    // isotrivial implies zero critical heights
    for (const auto& ci : cv.c) {
        CHECK(ff_canonical_height(cv, ci).value == Rational(0));
    }
}

TEST_CASE("h_ff(c) = 0 iff isotrivial") {
    Pcg64 rng(13);
    for (int it = 0; it < 20; ++it) {
        FFCritVector cv = random_ff(rng, 3);
        CHECK(ff_height_affine(cv.c) > 0);
        CHECK_FALSE(isotriviality_check(cv));
    }
    FFCritVector constant(3, {RationalFunction(Rational(2)), RationalFunction(make_rational(1, 2))});
    CHECK(ff_height_affine(constant.c) == 0);
}
