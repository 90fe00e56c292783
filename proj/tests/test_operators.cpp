#include <gtest/gtest.h>

#include "cms/errors.hpp"
#include "cms/families.hpp"

using namespace cms;

namespace {

const Scalar one(1L);

SymFunc p(std::initializer_list<int> parts) { return SymFunc::element(Basis::PowerSum, Partition(parts)); }
SymFunc c(const Scalar& x) { return SymFunc::constant(x); }

class OperatorTest : public ::testing::Test {
protected:
    void SetUp() override { install_default_jack_provider(); }
    Scalar al = alpha(), p0 = gen(Gen::P0);
};

long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_F(OperatorTest, PartialDerivative) {
    EXPECT_TRUE(pd_apply(2, p({2})).equals(c(one)));
    EXPECT_TRUE(pd_apply(2, p({1, 1})).is_zero());
    EXPECT_TRUE(pd_apply(1, p({1, 1})).equals(Scalar(2L) * p({1})));
}

TEST_F(OperatorTest, EulerFamily) {
    EXPECT_TRUE(E_apply(0, p({1})).equals(c(p0)));
    for (const auto& mu : partitions_up_to(5)) EXPECT_TRUE(E_apply(1, p({}) + SymFunc::element(Basis::PowerSum, mu)).equals(Scalar(long(mu.weight())) * SymFunc::element(Basis::PowerSum, mu)));
    EXPECT_TRUE(E_apply(2, p({1})).equals(p({2})));
}

TEST_F(OperatorTest, SecondOrderFamily) {
    EXPECT_TRUE(D_apply(0, p({1})).is_zero());
    EXPECT_TRUE(D_apply(0, p({2})).equals(c(Scalar(2L) * p0 + Scalar(2L) / al * (p0 * p0 - p0))));
    EXPECT_TRUE(D_apply(1, p({1})).equals(c(one / al * (p0 * p0 - p0))));
}

TEST_F(OperatorTest, OpApply) {
    EXPECT_TRUE(OpExpr::jack_diag(ShiftedSymSpec::pi(1)).apply(jack_in_power_sums(Partition{2, 1})).equals(Scalar(3L) * SymFunc::element(Basis::Jack, Partition{2, 1})));
    EXPECT_TRUE(OpExpr::compose({OpExpr::pd(1), OpExpr::mul(p({1}))}).apply(c(one)).equals(c(one)));
    EXPECT_TRUE((OpExpr::D(0) - Scalar(2L) * OpExpr::E(1)).apply(c(one)).is_zero());
}

TEST_F(OperatorTest, DegreeShifts) {
    EXPECT_EQ(OpExpr::pd(3).d_min(), -3);
    EXPECT_EQ(OpExpr::E(2).d_max(), 1);
    EXPECT_EQ(OpExpr::D(0).d_min(), -2);
    EXPECT_EQ(OpExpr::mul(p({2, 1})).d_max(), 3);
}

TEST_F(OperatorTest, ParseLiterals) {
    OpExpr a = OpExpr::parse("2*E[1] + D[0]");
    EXPECT_TRUE(matrices_equal(op_matrix(a, 4), op_matrix(Scalar(2L) * OpExpr::E(1) + OpExpr::D(0), 4)));
    OpExpr b = OpExpr::parse("PD[1]*mul(p[1])");
    EXPECT_TRUE(b.apply(c(one)).equals(c(one)));
    EXPECT_THROW(OpExpr::parse("F[2]"), ParseError);
}

TEST_F(OperatorTest, CommutatorExamples) {
    EXPECT_TRUE(matrices_equal(commutator_eval(OpExpr::E(0), OpExpr::D(1), 3), op_matrix(OpExpr::D(0), 3)));
    EXPECT_TRUE(matrices_equal(commutator_eval(OpExpr::E(1), OpExpr::D(0), 3), op_matrix(Scalar(-2L) * OpExpr::D(0), 3)));
    EXPECT_TRUE(matrices_equal(commutator_eval(OpExpr::E(0), OpExpr::mul(p({1})), 3), op_matrix(OpExpr::mul(c(p0)), 3)));
}

// The coefficient (l+1) alone is right only for k = 0.
TEST_F(OperatorTest, EulerBracketCoefficient) {
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l) {
            auto lhs = commutator_eval(OpExpr::E(k), OpExpr::E(l + 1), 4);
            EXPECT_TRUE(matrices_equal(lhs, op_matrix(Scalar(long(l + 1 - k)) * OpExpr::E(k + l), 4)));
            if (k == 0) EXPECT_TRUE(matrices_equal(lhs, op_matrix(Scalar(long(l + 1)) * OpExpr::E(l), 4)));
        }
    EXPECT_FALSE(matrices_equal(commutator_eval(OpExpr::E(1), OpExpr::E(1), 3), op_matrix(OpExpr::E(1), 3)));
}

TEST_F(OperatorTest, TranslationIntertwining) {
    Scalar g = gen(Gen::X);
    for (const auto& mu : partitions_up_to(4))
        for (int k = 0; k <= 3; ++k) {
            SymFunc f = SymFunc::element(Basis::PowerSum, mu), tf = apply_translate(g, f), rE, rD;
            for (int j = 0; j <= k; ++j) {
                rE += (Scalar(binom(k, j)) * g.pow(k - j)) * E_apply(j, tf);
                rD += (Scalar(binom(k, j)) * g.pow(k - j)) * D_apply(j, tf);
            }
            EXPECT_TRUE(apply_translate(g, E_apply(k, f)).equals(rE)) << mu.to_string() << " E" << k;
            EXPECT_TRUE(apply_translate(g, D_apply(k, f)).equals(rD)) << mu.to_string() << " D" << k;
        }
}

TEST_F(OperatorTest, TruncatedExponential) {
    SymFunc P2 = jack_in_power_sums(Partition{2});
    EXPECT_TRUE(exp_truncated(OpExpr::D(0), 0, P2).equals(P2));
    SymFunc expect = P2 - SymFunc::constant(p0 * (p0 + al) / (Scalar(2L) * (one + al)));
    EXPECT_TRUE(exp_truncated(Scalar::rational(-1, 4) * OpExpr::D(0), 1, P2).equals(expect));
    EXPECT_TRUE(exp_truncated(OpExpr::D(0), 2, P2).equals(exp_truncated(OpExpr::D(0), 5, P2)));
}

TEST_F(OperatorTest, TriangularSolverMatchesProduct) {
    Scalar nu = gen(Gen::Nu);
    const CmsData data[] = {CmsData::hermite(nu), CmsData::laguerre(gen(Gen::A), nu), CmsData::jacobi(gen(Gen::P), gen(Gen::Q))};
    for (const auto& L : data)
        for (const auto& lam : partitions_up_to(4)) {
            SymFunc F = triangular_eigenfunction(L, lam);
            EXPECT_TRUE(F.equals(frep_eigenfunction(L, lam))) << lam.to_string();
            EXPECT_EQ(F.coefficient(lam), one);
        }
    EXPECT_TRUE(triangular_eigenfunction(CmsData::hermite(one), Partition{1}).equals(SymFunc::element(Basis::Jack, Partition{1})));
}

TEST_F(OperatorTest, DegenerateEigenvalue) {
    // With every coefficient zero all eigenvalues coincide.
    CmsData flat{Scalar(), Scalar(), Scalar(), Scalar(), Scalar()};
    EXPECT_THROW(triangular_eigenfunction(flat, Partition{1}), DegenerateEigenvalue);
}

TEST_F(OperatorTest, BchEigenoperators) {
    const ShiftedSymSpec fs[] = {ShiftedSymSpec::pi(1), ShiftedSymSpec::pi(2), ShiftedSymSpec::pi(1) * ShiftedSymSpec::pi(1)};
    for (const auto& f : fs) {
        OpExpr H = bch_eigenop(BchKind::Hermite, f), L = bch_eigenop(BchKind::Laguerre, f);
        for (const auto& lam : partitions_up_to(4)) {
            SymFunc h = to_power_sum(hermite_nu2(lam, one)), l = to_power_sum(laguerre_value(lam, gen(Gen::A), one));
            EXPECT_TRUE(H.apply(h).equals(f.eval(lam) * h)) << f.to_string() << " " << lam.to_string();
            EXPECT_TRUE(L.apply(l).equals(f.eval(lam) * l)) << f.to_string() << " " << lam.to_string();
        }
    }
    auto zero = op_matrix(OpExpr::scale(Scalar()), 4);
    EXPECT_TRUE(matrices_equal(commutator_eval(bch_eigenop(BchKind::Hermite, fs[0]), bch_eigenop(BchKind::Hermite, fs[1]), 4), zero));
    EXPECT_TRUE(matrices_equal(op_matrix(bch_eigenop(BchKind::Hermite, Scalar(-2L) * fs[0]), 4), op_matrix(OpExpr::D(0) - Scalar(2L) * OpExpr::E(1), 4)));
    OpExpr h2 = bch_eigenop(BchKind::Hermite, fs[1]);
    EXPECT_EQ(h2.d_max(), 0);
    EXPECT_EQ(h2.d_min(), -4);
    EXPECT_TRUE(matrices_equal(op_matrix(bch_eigenop(BchKind::Laguerre, ShiftedSymSpec::constant(Scalar(3L))), 3), op_matrix(OpExpr::scale(Scalar(3L)), 3)));
}
