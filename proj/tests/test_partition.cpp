#include <gtest/gtest.h>

#include "cms/errors.hpp"
#include "cms/families.hpp"

using namespace cms;

namespace {
const Scalar one(1L);
Scalar al() { return alpha(); }
}  // namespace

TEST(Partition, ConstructionAndParse) {
    EXPECT_EQ(Partition({2, 1, 0, 0}), Partition({2, 1}));
    EXPECT_TRUE(Partition::parse("[0]").empty());
    EXPECT_EQ(Partition::parse("[3,1]"), Partition({3, 1}));
    EXPECT_THROW(Partition({1, 2}), NotAPartition);
    EXPECT_THROW(Partition::parse("[2,a]"), ParseError);
}

TEST(Partition, Conjugate) {
    EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
    EXPECT_EQ(Partition().conjugate(), Partition());
    EXPECT_EQ(Partition({2, 2}).conjugate(), Partition({2, 2}));
    for (const auto& l : partitions_up_to(7)) EXPECT_EQ(l.conjugate().conjugate(), l);
}

TEST(Partition, ArmLeg) {
    auto a = arm_leg(Partition{3, 1}, {1, 1});
    EXPECT_EQ(std::tie(a.arm, a.leg, a.coarm, a.coleg), std::make_tuple(2, 1, 0, 0));
    auto b = arm_leg(Partition{1}, {1, 1});
    EXPECT_EQ(std::tie(b.arm, b.leg, b.coarm, b.coleg), std::make_tuple(0, 0, 0, 0));
    auto c = arm_leg(Partition{2, 2}, {1, 2});
    EXPECT_EQ(std::tie(c.arm, c.leg, c.coarm, c.coleg), std::make_tuple(0, 1, 1, 0));
    EXPECT_THROW(arm_leg(Partition{2}, {2, 1}), CellOutsideDiagram);
}

TEST(Partition, OrderRefinesDominance) {
    for (int n = 1; n <= 6; ++n) {
        auto ps = partitions_of(n);
        for (std::size_t x = 0; x < ps.size(); ++x)
            for (std::size_t y = 0; y < ps.size(); ++y) {
                if (dominates(ps[y], ps[x]) && x != y) EXPECT_LT(ps[x], ps[y]);
                EXPECT_EQ(dominates(ps[x], ps[y]), dominates(ps[y].conjugate(), ps[x].conjugate()));
            }
    }
    EXPECT_EQ(partitions_of(5).size(), 7u);
    EXPECT_EQ(partitions_up_to(6).size(), 30u);
}

TEST(Partition, HookProduct) {
    EXPECT_EQ(hook_product(Partition()), one);
    EXPECT_EQ(hook_product(Partition{2}), Scalar(2L));
    EXPECT_EQ(hook_product(Partition{1, 1}), one + one / al());
}

TEST(Partition, Pochhammer) {
    Scalar x = gen(Gen::X);
    EXPECT_EQ(deformed_pochhammer(x, Partition{1}), x);
    EXPECT_EQ(deformed_pochhammer(x, Partition{2}), x * (x + one));
    EXPECT_EQ(deformed_pochhammer(x, Partition{1, 1}), x * (x - one / al()));
    for (const auto& l : partitions_up_to(6)) EXPECT_EQ(deformed_pochhammer(x, l), deformed_pochhammer_rows(x, l)) << l.to_string();
}

TEST(Partition, BCoefficient) {
    EXPECT_EQ(b_coefficient(Partition()), one);
    EXPECT_EQ(b_coefficient(Partition{1}), one / al());
    EXPECT_EQ(b_coefficient(Partition{2}), (one + al()) / (Scalar(2L) * al() * al()));
    for (const auto& l : partitions_up_to(6))
        EXPECT_EQ(b_coefficient(l) * b_coefficient(l.conjugate()).substitute({{Gen::Alpha, one / al()}}), one) << l.to_string();
}

TEST(Partition, CFactors) {
    Scalar z = gen(Gen::X);
    EXPECT_EQ(c_factor(CKind::Zero, Partition{1}, z), z);
    EXPECT_EQ(c_factor(CKind::Minus, Partition{1}, z), z);
    EXPECT_EQ(c_factor(CKind::Plus, Partition{1}, z), Scalar(2L) - Scalar(2L) / al() + z);
}

TEST(Partition, BinomialOneBox) {
    EXPECT_EQ(binomial_one_box(Partition(), 1), one);
    EXPECT_EQ(binomial_one_box(Partition{1}, 1), Scalar(2L));
    EXPECT_THROW(binomial_one_box(Partition{1}, 3), NotAPartition);
    EXPECT_THROW(binomial_one_box(Partition{1, 1}, 2), NotAPartition);
}

// The one-box binomial coefficients against the t_1 expansion of P_lambda.
TEST(Partition, BinomialOneBoxMatchesTranslation) {
    install_default_jack_provider();
    Scalar p0 = gen(Gen::P0);
    for (const auto& lam : partitions_up_to(5)) {
        if (lam.empty()) continue;
        SymFunc t = convert(apply_translate(one, jack_in_power_sums(lam)), Basis::Jack);
        Scalar norm = epsX_jack_product(lam, p0);
        for (int i = 1; i <= lam.length(); ++i) {
            auto mu = lam.remove_box(i);
            if (!mu) continue;
            Scalar read = t.coefficient(*mu) * epsX_jack_product(*mu, p0) / norm;
            EXPECT_EQ(read, binomial_one_box(*mu, i)) << lam.to_string() << " row " << i;
        }
    }
}

TEST(Partition, ShiftedPowerSums) {
    for (const auto& l : partitions_up_to(5)) EXPECT_EQ(shifted_power_sum_eval(1, l), Scalar(long(l.weight())));
    EXPECT_EQ(shifted_power_sum_eval(1, Partition()), Scalar());
    EXPECT_EQ(shifted_power_sum_eval(2, Partition{1}), one - Scalar(2L) / al());
}

TEST(Partition, Eigenvalues) {
    EXPECT_EQ(eigenvalue_hermite(Partition{3}, one), Scalar(-6L));
    EXPECT_EQ(d_lambda(Partition{1}, gen(Gen::P0)), Scalar(2L) / al() * (gen(Gen::P0) - one));
    EXPECT_EQ(eigenvalue_jacobi(Partition(), gen(Gen::P), gen(Gen::Q), gen(Gen::P0)), Scalar());
    EXPECT_EQ(eigenvalue_laguerre(Partition{2, 1}, gen(Gen::Nu)), Scalar(-3L) * gen(Gen::Nu));
}
