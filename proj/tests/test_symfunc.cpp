#include <gtest/gtest.h>

#include "cms/errors.hpp"
#include "cms/families.hpp"

using namespace cms;

namespace {

const Scalar one(1L);

SymFunc p(std::initializer_list<int> parts) { return SymFunc::element(Basis::PowerSum, Partition(parts)); }
SymFunc m(std::initializer_list<int> parts) { return SymFunc::element(Basis::Monomial, Partition(parts)); }

class SymFuncTest : public ::testing::Test {
protected:
    void SetUp() override { install_default_jack_provider(); }
};

}  // namespace

TEST_F(SymFuncTest, Multiply) {
    EXPECT_TRUE(multiply(p({2}), p({1})).equals(p({2, 1})));
    EXPECT_TRUE(multiply(SymFunc::constant(one), p({3, 1})).equals(p({3, 1})));
    EXPECT_TRUE(multiply(m({1}), m({1})).equals(m({2}) + Scalar(2L) * m({1, 1})));
}

TEST_F(SymFuncTest, Convert) {
    EXPECT_TRUE(convert(p({2}), Basis::Monomial).equals(m({2})));
    SymFunc sq = convert(p({1, 1}), Basis::Monomial);
    EXPECT_EQ(sq.basis(), Basis::Monomial);
    EXPECT_EQ(sq.coefficient(Partition{2}), one);
    EXPECT_EQ(sq.coefficient(Partition{1, 1}), Scalar(2L));
    SymFunc e2 = convert(SymFunc::element(Basis::Elementary, Partition{2}), Basis::PowerSum);
    EXPECT_EQ(e2.coefficient(Partition{1, 1}), Scalar::rational(1, 2));
    EXPECT_EQ(e2.coefficient(Partition{2}), Scalar::rational(-1, 2));
}

TEST_F(SymFuncTest, RoundTrips) {
    for (const auto& lam : partitions_up_to(8)) {
        SymFunc x = p({}) + SymFunc::element(Basis::PowerSum, lam);
        EXPECT_TRUE(convert(convert(x, Basis::Monomial), Basis::PowerSum).equals(x)) << lam.to_string();
        EXPECT_TRUE(convert(convert(x, Basis::Elementary), Basis::PowerSum).equals(x)) << lam.to_string();
    }
    for (const auto& lam : partitions_up_to(5)) {
        SymFunc x = SymFunc::element(Basis::PowerSum, lam);
        EXPECT_TRUE(convert(convert(x, Basis::Jack), Basis::PowerSum).equals(x)) << lam.to_string();
    }
}

TEST_F(SymFuncTest, BasisTagsDoNotMix) {
    EXPECT_THROW(p({1}) + m({1}), BasisMismatch);
}

TEST_F(SymFuncTest, Homomorphisms) {
    Scalar nu = gen(Gen::Nu), g = gen(Gen::X), p0 = gen(Gen::P0);
    EXPECT_TRUE(apply_sigma(nu, p({2, 1})).equals(nu.pow(3) * p({2, 1})));
    EXPECT_TRUE(apply_translate(g, p({1})).equals(p({1}) + SymFunc::constant(g * p0)));
    EXPECT_EQ(apply_eps(p0, SymFunc::element(Basis::Jack, Partition{1})), p0);
}

TEST_F(SymFuncTest, HomomorphismComposition) {
    Scalar g = gen(Gen::X), d = gen(Gen::S), al = alpha();
    for (const auto& mu : partitions_up_to(6)) {
        SymFunc f = SymFunc::element(Basis::PowerSum, mu);
        EXPECT_TRUE(apply_sigma(g, apply_sigma(d, f)).equals(apply_sigma(g * d, f)));
        EXPECT_TRUE(apply_translate(g, apply_translate(d, f)).equals(apply_translate(g + d, f)));
        // omega_{1/alpha} then omega_alpha, with p0 inside the coefficients.
        SymFunc h = SymFunc::constant(gen(Gen::P0)) + f;
        EXPECT_TRUE(apply_omega(one / al, apply_omega(al, h)).equals(h)) << mu.to_string();
    }
}

TEST_F(SymFuncTest, StanleyProduct) {
    Scalar X = gen(Gen::X), al = alpha();
    EXPECT_EQ(epsX_jack_product(Partition(), X), one);
    EXPECT_EQ(epsX_jack_product(Partition{1}, X), X);
    EXPECT_EQ(epsX_jack_product(Partition{2}, X), X * (X + al) / (al + one));
    for (const auto& lam : partitions_up_to(6))
        EXPECT_EQ(apply_eps(X, jack_in_power_sums(lam)), epsX_jack_product(lam, X)) << lam.to_string();
}

// t_1(P_lambda)/eps(P_lambda) expands with one-box coefficients on the boxes just below.
TEST_F(SymFuncTest, GeneralisedBinomial) {
    Scalar p0 = gen(Gen::P0);
    for (const auto& lam : partitions_up_to(5)) {
        SymFunc lhs = (one / epsX_jack_product(lam, p0)) * convert(apply_translate(one, jack_in_power_sums(lam)), Basis::Jack);
        EXPECT_EQ(lhs.coefficient(lam), one / epsX_jack_product(lam, p0));
        for (const auto& [mu, c] : lhs.terms()) EXPECT_TRUE(lam.contains(mu)) << lam.to_string() << " " << mu.to_string();
    }
}

TEST_F(SymFuncTest, TextRoundTrip) {
    SymFunc f = SymFunc::parse("2*m[1,1] + (1/alpha)*m[2]");
    EXPECT_EQ(SymFunc::parse(f.to_string()).to_string(), f.to_string());
    EXPECT_EQ(f.coefficient(Partition{2}), one / alpha());
    EXPECT_THROW(SymFunc::parse("m[2] + p[1]"), BasisMismatch);
}
