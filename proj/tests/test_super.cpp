#include <gtest/gtest.h>

#include "cms/errors.hpp"
#include "cms/super.hpp"

using namespace cms;

namespace {

const Scalar one(1L);
SymFunc p(std::initializer_list<int> parts) { return SymFunc::element(Basis::PowerSum, Partition(parts)); }

MVPoly monomial(int vars, std::vector<int> e, const Scalar& c) {
    MVPoly f(vars);
    f.add_term(e, c);
    return f;
}

class SuperTest : public ::testing::Test {
protected:
    void SetUp() override { install_default_jack_provider(); }
    Scalar al = alpha();
    SuperAlgebra a11{1, 1}, a10{1, 0}, a00{0, 0}, a20{2, 0};
};

}  // namespace

TEST_F(SuperTest, PhiExamples) {
    EXPECT_TRUE(phi_nm(a11, p({1})).equals(monomial(2, {1, 0}, one) - monomial(2, {0, 1}, al)));
    EXPECT_TRUE(phi_nm(a00, p({1})).is_zero());
    EXPECT_TRUE(phi_nm(a20, p({2})).equals(monomial(2, {2, 0}, one) + monomial(2, {0, 2}, one)));
    // p0 is specialised to n - alpha m.
    EXPECT_TRUE(phi_nm(a11, SymFunc::constant(gen(Gen::P0))).equals(MVPoly::constant(2, one - al)));
}

TEST_F(SuperTest, PhiIsMultiplicative) {
    SuperAlgebra alg{2, 1};
    for (const auto& mu : partitions_up_to(3))
        for (const auto& nu : partitions_up_to(2)) {
            SymFunc f = SymFunc::element(Basis::PowerSum, mu), g = SymFunc::element(Basis::PowerSum, nu);
            EXPECT_TRUE(phi_nm(alg, multiply(f, g)).equals(phi_nm(alg, f) * phi_nm(alg, g)));
        }
}

TEST_F(SuperTest, Membership) {
    EXPECT_TRUE(membership_check(a11, phi_nm(a11, p({2}))));
    EXPECT_FALSE(membership_check(a11, MVPoly::variable(2, 0)));
    EXPECT_TRUE(membership_check(a11, MVPoly::constant(2, Scalar(5L))));
    // Symmetric in each group but without the cancellation condition.
    EXPECT_FALSE(membership_check(a11, MVPoly::variable(2, 0) + MVPoly::variable(2, 1)));
}

TEST_F(SuperTest, FamilyExamples) {
    EXPECT_TRUE(super_family(a10, SuperKind::Jack, Partition{2}).value.equals(monomial(1, {2}, one)));
    SuperElement k = super_family(a11, SuperKind::Jack, Partition{2, 2});
    EXPECT_TRUE(k.value.is_zero());
    EXPECT_TRUE(k.in_kernel);
    EXPECT_TRUE(super_family(a10, SuperKind::Hermite, Partition{1}).value.equals(monomial(1, {1}, one)));
    MVPoly sh2 = monomial(2, {2, 0}, one) - monomial(2, {1, 1}, Scalar(2L) * al / (al + one)) +
                 MVPoly::constant(2, (al - one) / (Scalar(2L) * (al + one)));
    EXPECT_TRUE(super_family(a11, SuperKind::Hermite, Partition{2}).value.equals(sh2));
}

TEST_F(SuperTest, KernelTheorem) {
    for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m) {
            SuperAlgebra alg{n, m};
            for (const auto& lam : partitions_up_to(4)) {
                bool zero = super_family(alg, SuperKind::Jack, lam).value.is_zero();
                EXPECT_EQ(zero, ideal_membership(n, m, lam)) << n << "," << m << " " << lam.to_string();
            }
        }
}

TEST_F(SuperTest, DeformedOperators) {
    SuperElement f = super_lift(a11, p({2, 1}));
    EXPECT_TRUE(deformed_op_apply(OpExpr::E(1), f).value.equals(Scalar(3L) * f.value));
    EXPECT_TRUE(deformed_op_apply(OpExpr::E(0), super_lift(a11, p({1}))).value.equals(MVPoly::constant(2, one - al)));
    Scalar p0 = a11.p0();
    SuperElement d0 = deformed_op_apply(OpExpr::D(0), super_lift(a11, p({2})));
    EXPECT_TRUE(d0.value.equals(MVPoly::constant(2, Scalar(2L) * p0 + Scalar(2L) / al * p0 * (p0 - one))));
}

TEST_F(SuperTest, PointChecks) {
    SuperElement f = super_lift(a11, p({2}));
    EXPECT_TRUE(deformed_op_point_check(DeformedKind::D, 0, f, {Scalar(2L), Scalar(3L)}));
    EXPECT_TRUE(deformed_op_point_check(DeformedKind::E, 1, f, {Scalar(2L), Scalar(3L)}));
    EXPECT_THROW(deformed_op_point_check(DeformedKind::D, 0, f, {Scalar(2L), Scalar(2L)}), SingularPoint);

    SuperAlgebra alg{2, 1};
    auto pts = generic_points(alg, 3);
    ASSERT_EQ(pts.size(), 3u);
    for (const auto& mu : partitions_up_to(3)) {
        SuperElement g = super_lift(alg, SymFunc::element(Basis::PowerSum, mu));
        for (const auto& pt : pts)
            for (int k = 0; k <= 2; ++k) {
                EXPECT_TRUE(deformed_op_point_check(DeformedKind::E, k, g, pt)) << mu.to_string() << " E" << k;
                EXPECT_TRUE(deformed_op_point_check(DeformedKind::D, k, g, pt)) << mu.to_string() << " D" << k;
                EXPECT_TRUE(operator_duality_point_check(k, alg, g.value, pt)) << mu.to_string() << " k=" << k;
            }
    }
}

TEST_F(SuperTest, Dualities) {
    for (SuperKind kind : {SuperKind::Jack, SuperKind::Hermite, SuperKind::Laguerre}) {
        EXPECT_TRUE(super_duality_check(kind, a11, Partition()));
        EXPECT_TRUE(super_duality_check(kind, a11, Partition{1}));
        EXPECT_TRUE(super_duality_check(kind, a11, Partition{2}));
        EXPECT_TRUE(super_duality_check(kind, SuperAlgebra{2, 1}, Partition{2, 1}));
    }
}

TEST_F(SuperTest, EigenAndExponential) {
    for (const auto& lam : partitions_up_to(3)) {
        EXPECT_TRUE(super_eigen_check(SuperKind::Hermite, a11, lam)) << lam.to_string();
        EXPECT_TRUE(super_eigen_check(SuperKind::Laguerre, a11, lam)) << lam.to_string();
        EXPECT_TRUE(super_hermite_exp_check(a11, lam)) << lam.to_string();
    }
}

TEST_F(SuperTest, HypergeometricDuality) {
    EXPECT_TRUE(super_pFq(a11, {}, {}, 3).duality);
    EXPECT_TRUE(super_pFq(SuperAlgebra{2, 1}, {gen(Gen::A)}, {gen(Gen::S)}, 2).duality);
}

TEST_F(SuperTest, Bounds) {
    EXPECT_THROW(SuperAlgebra({9, 9}).validate(), Error);
    EXPECT_EQ(a11.var_name(1), "y1");
}
