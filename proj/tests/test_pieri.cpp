#include <gtest/gtest.h>

#include <algorithm>

#include "cms/errors.hpp"
#include "cms/pieri.hpp"

using namespace cms;

namespace {

const Scalar one(1L);

class PieriTest : public ::testing::Test {
protected:
    void SetUp() override { install_default_jack_provider(); }
    Scalar al = alpha(), p0 = gen(Gen::P0);
};

bool all_match(const std::vector<ClosedFormCheck>& v) {
    return std::all_of(v.begin(), v.end(), [](const ClosedFormCheck& c) { return c.matches; });
}

}  // namespace

TEST_F(PieriTest, Normalization) {
    EXPECT_EQ(pieri_normalization(Partition()), one);
    EXPECT_EQ(pieri_normalization(Partition{1}), one);
    EXPECT_EQ(pieri_normalization(Partition{2}), al + one);
    EXPECT_EQ(pieri_normalization(Partition{1, 1}), Scalar(2L));
}

TEST_F(PieriTest, Shift) {
    auto s = pieri_shift(Partition{2, 1}, Partition{3});
    ASSERT_TRUE(s.has_value());
    EXPECT_FALSE(pieri_shift(Partition{1}, Partition{3}).has_value());
}

TEST_F(PieriTest, HermiteE1OnEmpty) {
    PieriExpansion e = hermite_pieri_e1(Partition());
    ASSERT_EQ(e.terms.size(), 1u);
    EXPECT_EQ(e.terms.at(Partition{1}), one);
    EXPECT_TRUE(pieri_general(PieriFamily::Hermite, Partition(), 1).oracle.equals(e));
}

TEST_F(PieriTest, HermiteClosedForms) {
    for (const auto& lam : partitions_up_to(4)) {
        auto rep = pieri_general(PieriFamily::Hermite, lam, 1);
        EXPECT_TRUE(rep.ok()) << lam.to_string();
        EXPECT_TRUE(rep.oracle.equals(hermite_pieri_e1(lam))) << lam.to_string();
    }
}

TEST_F(PieriTest, HermiteStructureAtR2) {
    auto rep = pieri_general(PieriFamily::Hermite, Partition{1}, 2);
    EXPECT_TRUE(rep.ok());
    ASSERT_FALSE(rep.structure.empty());
    for (const auto& s : rep.structure) EXPECT_TRUE(s.ok()) << s.target.to_string();
    // r - |J+| - |J-| even forces |mu| odd here.
    for (const auto& [mu, c] : rep.oracle.terms) EXPECT_NE(mu.weight() % 2, 0) << mu.to_string();
}

TEST_F(PieriTest, LaguerreCorrectedForm) {
    for (const auto& lam : partitions_up_to(3))
        for (int r = 1; r <= 2; ++r) {
            PieriExpansion oracle = pieri_oracle(PieriFamily::Laguerre, lam, r);
            EXPECT_TRUE(laguerre_pieri_closed(lam, r, KSumForm::Corrected).equals(oracle)) << lam.to_string() << " r=" << r;
            EXPECT_TRUE(laguerre_pieri_from_jacobi(lam, r).equals(oracle)) << lam.to_string() << " r=" << r;
            EXPECT_TRUE(pieri_general(PieriFamily::Laguerre, lam, r).ok()) << lam.to_string() << " r=" << r;
        }
}

// The literal K-sum is kept as a record; at r = 2 it disagrees with the oracle.
TEST_F(PieriTest, LaguerreLiteralFormIsRecorded) {
    auto rep = pieri_general(PieriFamily::Laguerre, Partition{1}, 2);
    EXPECT_TRUE(rep.ok());
    EXPECT_FALSE(rep.literal.empty());
    EXPECT_FALSE(all_match(rep.literal));
    EXPECT_FALSE(laguerre_pieri_closed(Partition{1}, 2, KSumForm::Literal).equals(rep.oracle));
}

TEST_F(PieriTest, JacobiClosedForm) {
    for (const auto& lam : partitions_up_to(1)) {
        auto rep = pieri_general(PieriFamily::Jacobi, lam, 1);
        EXPECT_TRUE(rep.ok()) << lam.to_string();
        EXPECT_TRUE(jacobi_pieri_closed(lam, 1).equals(rep.oracle)) << lam.to_string();
    }
}

TEST_F(PieriTest, IdealSpecialValues) {
    EXPECT_EQ(ideal_p0(IdealForm::First, 1, 1), one - al);
    EXPECT_EQ(ideal_p0(IdealForm::Second, 0, 0), one - al * (gen(Gen::A) + one));
}

TEST_F(PieriTest, FamiliesStayInIdeal) {
    struct Case { PieriFamily f; IdealForm form; };
    const Case cases[] = {{PieriFamily::Hermite, IdealForm::First}, {PieriFamily::Laguerre, IdealForm::First},
                          {PieriFamily::Laguerre, IdealForm::Second}};
    for (const auto& c : cases)
        for (int n = 0; n <= 1; ++n)
            for (int m = 0; m <= 1; ++m)
                for (const auto& lam : partitions_up_to(3)) {
                    if (!ideal_membership(n, m, lam)) continue;
                    EXPECT_TRUE(family_in_ideal(c.f, c.form, n, m, lam)) << lam.to_string();
                    EXPECT_TRUE(pieri_preserves_ideal(c.f, c.form, n, m, lam, 1)) << lam.to_string();
                }
}

// Outside the ideal, or at a generic p0, the support condition must fail.
TEST_F(PieriTest, IdealNegativeControls) {
    EXPECT_FALSE(family_in_ideal(PieriFamily::Hermite, IdealForm::First, 0, 0, Partition()));
    EXPECT_FALSE(supported_in_ideal(hermite(Partition{2}).value, 0, 0));
    EXPECT_THROW(family_in_ideal(PieriFamily::Jacobi, IdealForm::First, 0, 0, Partition{1}), Error);
}
