#include <gtest/gtest.h>

#include <random>

#include "cms/errors.hpp"
#include "cms/scalar.hpp"

using namespace cms;

namespace {

const Scalar one(1L);
Scalar al() { return gen(Gen::Alpha); }
Scalar p0() { return gen(Gen::P0); }
Scalar q() { return gen(Gen::Q); }

// Small random rational functions in alpha and p0 with a fixed seed.
Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, 2);
    auto poly = [&] {
        Scalar s;
        for (int t = 0; t < 3; ++t) s += Scalar(long(coef(rng))) * al().pow(deg(rng)) * p0().pow(deg(rng));
        return s;
    };
    Scalar den = poly();
    if (den.is_zero()) den = one;
    return poly() / den;
}

}  // namespace

TEST(Scalar, Arithmetic) {
    EXPECT_EQ(al() + one, Scalar::parse("alpha + 1"));
    EXPECT_EQ(one / (al() + one) * (al() + one), one);
    EXPECT_EQ(p0() / (p0() * p0()), one / p0());
    EXPECT_EQ(-(al() - p0()), p0() - al());
}

TEST(Scalar, SemanticEquality) {
    EXPECT_EQ((p0() * p0() - p0()) / p0(), p0() - one);
    EXPECT_NE(al(), one / al());
    EXPECT_EQ(Scalar() / (al() + one), Scalar() / p0());
    EXPECT_TRUE((Scalar() / p0()).is_zero());
}

TEST(Scalar, DivisionByZero) {
    EXPECT_THROW(one / Scalar(), DivisionByZero);
    EXPECT_THROW(one / (p0() - p0()), DivisionByZero);
}

TEST(Scalar, Substitute) {
    Scalar f = one / (p0() - Scalar(2L));
    EXPECT_EQ(f.substitute({{Gen::P0, Scalar(3L)}}), one);
    EXPECT_THROW(f.substitute({{Gen::P0, Scalar(2L)}}), DenominatorVanishes);
    EXPECT_EQ(p0().substitute({{Gen::P0, one - al()}}), one - al());
    // Simultaneous, not sequential.
    Scalar g = al() + Scalar(2L) * p0();
    EXPECT_EQ(g.substitute({{Gen::Alpha, p0()}, {Gen::P0, al()}}), p0() + Scalar(2L) * al());
}

TEST(Scalar, LimitAtInfinity) {
    EXPECT_EQ(((q() * q() + q()) / (q() * q() + one)).limit_at_infinity(Gen::Q), one);
    EXPECT_EQ((q() / (q() * q() + al())).limit_at_infinity(Gen::Q), Scalar());
    EXPECT_EQ(((al() * q() + one) / q()).limit_at_infinity(Gen::Q), al());
    EXPECT_THROW((q() * q() / (q() + one)).limit_at_infinity(Gen::Q), DivergentLimit);
}

TEST(Scalar, ParseRoundTrip) {
    for (const char* text : {"-3/2*(alpha + 1)^2*p0/((alpha + 2)*(p0 - 1)^3)", "a*nu - 1/7", "0", "X^3*s + q*p"}) {
        Scalar x = Scalar::parse(text);
        Scalar y = Scalar::parse(x.to_string());
        EXPECT_TRUE(x.identical(y)) << text;
        EXPECT_EQ(x.to_string(), y.to_string());
    }
    EXPECT_THROW(Scalar::parse("alpha +* 2"), ParseError);
    EXPECT_THROW(Scalar::parse("beta"), ParseError);
}

TEST(Scalar, FieldAxiomsRandomised) {
    std::mt19937 rng(20240611);
    for (int t = 0; t < 40; ++t) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Scalar());
        if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    }
}

TEST(Scalar, SubstituteIsMultiplicative) {
    std::mt19937 rng(7);
    Bindings at{{Gen::P0, Scalar(5L) - al()}};
    for (int t = 0; t < 20; ++t) {
        Scalar f = random_scalar(rng), g = random_scalar(rng);
        try {
            EXPECT_EQ((f * g).substitute(at), f.substitute(at) * g.substitute(at));
        } catch (const DenominatorVanishes&) {
        }
    }
}

TEST(Scalar, LimitIsAdditive) {
    Scalar f = (al() * q() + one) / (q() + Scalar(3L)), g = (q() * q() - p0()) / (Scalar(2L) * q() * q() + q());
    EXPECT_EQ((f + g).limit_at_infinity(Gen::Q), f.limit_at_infinity(Gen::Q) + g.limit_at_infinity(Gen::Q));
}
