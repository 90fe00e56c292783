#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cms/symfunc.hpp"

namespace cms {

// Primitive actions on the power-sum basis. Produced p_0 factors become the
// scalar p0; alpha is the deformation parameter of the D^k family.
SymFunc pd_apply(int r, const SymFunc& f);
SymFunc E_apply(int l, const SymFunc& f, const Scalar& p0 = gen(Gen::P0));
SymFunc D_apply(int k, const SymFunc& f, const Scalar& p0 = gen(Gen::P0), const Scalar& alpha = gen(Gen::Alpha));

// Polynomial in the shifted power sums pi_1, pi_2, ...; the key kappa stands
// for the product pi_{kappa_1} pi_{kappa_2} ...
class ShiftedSymSpec {
public:
    ShiftedSymSpec() = default;
    static ShiftedSymSpec pi(int r);
    static ShiftedSymSpec constant(const Scalar& c);

    const std::map<Partition, Scalar>& terms() const { return terms_; }
    int degree() const;  // -1 for zero
    bool is_constant() const;
    Scalar eval(const Partition& lambda) const;

    ShiftedSymSpec operator+(const ShiftedSymSpec& o) const;
    ShiftedSymSpec operator*(const ShiftedSymSpec& o) const;
    friend ShiftedSymSpec operator*(const Scalar& c, const ShiftedSymSpec& f);

    std::string to_string() const;
    static ShiftedSymSpec parse(std::string_view text);

private:
    std::map<Partition, Scalar> terms_;
};

class OpExpr {
public:
    enum class Kind { PD, Mul, E, D, JackDiag, Scale, Sum, Compose };

    static OpExpr pd(int r);
    static OpExpr mul(const SymFunc& f);
    static OpExpr E(int l, const Scalar& p0 = gen(Gen::P0));
    static OpExpr D(int k, const Scalar& p0 = gen(Gen::P0), const Scalar& alpha = gen(Gen::Alpha));
    static OpExpr jack_diag(const ShiftedSymSpec& f);
    static OpExpr scale(const Scalar& c);
    static OpExpr identity() { return scale(Scalar(1L)); }
    static OpExpr sum(std::vector<OpExpr> parts);
    // compose({A, B}) is A after B.
    static OpExpr compose(std::vector<OpExpr> parts);

    Kind kind() const;
    int d_min() const;
    int d_max() const;

    OpExpr operator+(const OpExpr& o) const;
    OpExpr operator-(const OpExpr& o) const;
    OpExpr operator*(const OpExpr& o) const { return compose({*this, o}); }
    friend OpExpr operator*(const Scalar& c, const OpExpr& a);

    SymFunc apply(const SymFunc& f) const;
    std::string to_string() const;
    // Literals such as "E[2]", "D[0]", "PD[3]", "mul(p[2,1])", "2*E[1] + D[0]".
    static OpExpr parse(std::string_view text);

    struct Node;

private:
    explicit OpExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

SymFunc op_apply(const OpExpr& a, const SymFunc& f);
OpExpr commutator(const OpExpr& a, const OpExpr& b);

// Columns A p_mu for all |mu| <= max_degree, in the power-sum basis.
using OpMatrix = std::map<Partition, SymFunc>;
OpMatrix op_matrix(const OpExpr& a, int max_degree);
OpMatrix commutator_eval(const OpExpr& a, const OpExpr& b, int max_degree);
bool matrices_equal(const OpMatrix& x, const OpMatrix& y);

SymFunc exp_truncated(const OpExpr& a, int L, const SymFunc& f);

// Action of E^0, E^1, E^2 and D^0, D^1, D^2 on P_lambda through the closed
// forms in the Jack basis.
enum class Prim { E0, E1, E2, D0, D1, D2 };
const SymFunc& jack_action(Prim which, const Partition& lambda);

// L = a0 D^0 + a1 D^1 + a2 D^2 + b0 E^0 + b1 E^1.
struct CmsData {
    Scalar a0, a1, a2, b0, b1;

    OpExpr op() const;
    Scalar eigenvalue(const Partition& lambda) const;
    // L applied to a Jack-basis element, through jack_action.
    SymFunc apply_jack(const SymFunc& f) const;

    static CmsData hermite(const Scalar& nu2);
    static CmsData laguerre(const Scalar& a, const Scalar& nu);
    static CmsData jacobi(const Scalar& p, const Scalar& q);
};

// Unique F = P_lambda + lower terms with L F = eps_lambda F; Jack basis.
SymFunc triangular_eigenfunction(const CmsData& L, const Partition& lambda);
// prod over proper mu in lambda of (L - eps_mu)/(eps_lambda - eps_mu) on P_lambda.
SymFunc frep_eigenfunction(const CmsData& L, const Partition& lambda);

enum class BchKind { Hermite, Laguerre };
// Conjugated eigenoperators of the Jack-diagonal L_f; `param` is nu^2 for
// Hermite and nu for Laguerre, `a` is only used by Laguerre.
OpExpr bch_eigenop(BchKind kind, const ShiftedSymSpec& f, const Scalar& param = Scalar(1L),
                   const Scalar& a = gen(Gen::A));

}  // namespace cms
