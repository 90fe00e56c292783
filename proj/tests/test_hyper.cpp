#include <gtest/gtest.h>

#include "cms/errors.hpp"
#include "cms/families.hpp"
#include "cms/hyper.hpp"

using namespace cms;

namespace {

const Scalar one(1L);
SymFunc p(std::initializer_list<int> parts) { return SymFunc::element(Basis::PowerSum, Partition(parts)); }

class HyperTest : public ::testing::Test {
protected:
    void SetUp() override { install_default_jack_provider(); }
    Scalar p0 = gen(Gen::P0);
};

}  // namespace

TEST_F(HyperTest, TwoSetLowDegree) {
    TensorSeries f0 = pFq_two_set({}, {}, 0);
    ASSERT_EQ(f0.terms().size(), 1u);
    EXPECT_EQ(f0.coefficient(Partition(), Partition()), one);

    TensorSeries f1 = pFq_two_set({}, {}, 1);
    EXPECT_EQ(f1.terms().size(), 2u);
    EXPECT_EQ(f1.coefficient(Partition{1}, Partition{1}), one / p0);
    EXPECT_EQ(f1.coefficient(Partition{1}, Partition()), Scalar());
}

TEST_F(HyperTest, OneSetZeroFZero) {
    EXPECT_TRUE(pFq_one_set({}, {}, 0).equals(SymFunc::constant(one)));
    SymFunc expect = SymFunc::constant(one) + jack_in_power_sums(Partition{1}) +
                     (one / hook_product(Partition{2})) * jack_in_power_sums(Partition{2}) +
                     (one / hook_product(Partition{1, 1})) * jack_in_power_sums(Partition{1, 1});
    EXPECT_TRUE(pFq_one_set({}, {}, 2).equals(expect));
}

TEST_F(HyperTest, PochhammerRatio) {
    Scalar a = gen(Gen::A);
    EXPECT_EQ(pochhammer_ratio({a}, {}, Partition{2}), a * (a + one));
    EXPECT_THROW(pochhammer_ratio({}, {Scalar()}, Partition{1}), PochhammerPole);
    EXPECT_THROW(pFq_two_set({}, {Scalar(-1L)}, 2), PochhammerPole);
}

TEST_F(HyperTest, TensorOperators) {
    TensorSeries F = pFq_two_set({}, {}, 3);
    TensorSeries G = tensor_op_apply(Slot::Left, OpExpr::E(1), F);
    for (const auto& [key, c] : F.terms()) EXPECT_EQ(G.coefficient(key.first, key.second), Scalar(long(key.first.weight())) * c);
    TensorSeries one_one = TensorSeries::product(SymFunc::constant(one), SymFunc::constant(one), 2, 2);
    EXPECT_TRUE(tensor_op_apply(Slot::Left, OpExpr::D(0), one_one).is_zero());
    // D^0 lowers degree by two, so the exact box on the left shrinks.
    EXPECT_EQ(tensor_op_apply(Slot::Left, OpExpr::D(0), F).max_left(), 1);
}

TEST_F(HyperTest, DifferentialEquations) {
    auto r0 = check_hyper_ode(HyperOde::ZeroF0, 4);
    EXPECT_TRUE(r0.zero);
    EXPECT_EQ(r0.valid_to, 3);
    auto r1 = check_hyper_ode(HyperOde::ZeroF1, 4);
    EXPECT_TRUE(r1.zero);
    EXPECT_GE(r1.valid_to, 2);
    auto r2 = check_hyper_ode(HyperOde::TwoF1TwoSet, 3);
    EXPECT_TRUE(r2.zero);
    EXPECT_GE(r2.valid_to, 1);
    EXPECT_TRUE(check_hyper_ode(HyperOde::OneF1, 3).zero);
    EXPECT_TRUE(check_hyper_ode(HyperOde::TwoF1OneSet, 3).zero);
}

TEST_F(HyperTest, NumericParameters) {
    EXPECT_TRUE(check_hyper_ode(HyperOde::OneF1, 3, {Scalar::rational(1, 2), Scalar(3L)}).zero);
    EXPECT_TRUE(check_hyper_ode(HyperOde::ZeroF1, 3, {Scalar::rational(5, 3)}).zero);
}

TEST_F(HyperTest, GeneratingFunctions) {
    for (int D = 0; D <= 3; ++D) {
        EXPECT_TRUE(generating_function_check(GenFunKind::Hermite, D).zero) << D;
        EXPECT_TRUE(generating_function_check(GenFunKind::Laguerre, D).zero) << D;
    }
}

TEST_F(HyperTest, SlotSymmetryAndLimits) {
    EXPECT_TRUE(hyper_slot_symmetry(OpExpr::jack_diag(ShiftedSymSpec::pi(1)), 4));
    EXPECT_TRUE(hyper_slot_symmetry(OpExpr::jack_diag(ShiftedSymSpec::pi(2)), 4));
    EXPECT_TRUE(hyper_d0_p2(4));
    EXPECT_TRUE(hyper_2f1_limit(3));
    EXPECT_TRUE(hyper_2f1_recurrence(3));
}

TEST_F(HyperTest, Names) {
    for (HyperOde w : {HyperOde::TwoF1TwoSet, HyperOde::OneF1, HyperOde::ZeroF1, HyperOde::ZeroF0, HyperOde::TwoF1OneSet})
        EXPECT_EQ(hyper_ode_from_name(hyper_ode_name(w)), w);
    EXPECT_FALSE(hyper_ode_from_name("3F2").has_value());
}
