#pragma once

#include <map>
#include <string>
#include <vector>

#include "cms/families.hpp"

namespace cms {

// Polynomial algebra in x_1..x_n, y_1..y_m with p0 specialised to n - alpha m.
struct SuperAlgebra {
    int n = 0;
    int m = 0;

    int vars() const { return n + m; }
    Scalar p0() const { return Scalar(long(n)) - alpha() * Scalar(long(m)); }
    // Throws when n or m exceeds the desk-scale bound.
    void validate() const;
    std::string var_name(int v) const;  // "x1", "y2", ...
};

// Polynomial over Scalar; exponent vectors have one entry per variable.
class MVPoly {
public:
    using Exps = std::vector<int>;

    explicit MVPoly(int vars = 0) : vars_(vars) {}
    static MVPoly constant(int vars, const Scalar& c);
    static MVPoly variable(int vars, int v);

    int vars() const { return vars_; }
    const std::map<Exps, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    void add_term(const Exps& e, const Scalar& c);

    MVPoly operator+(const MVPoly& o) const;
    MVPoly operator-(const MVPoly& o) const;
    MVPoly operator*(const MVPoly& o) const;
    friend MVPoly operator*(const Scalar& c, const MVPoly& f);

    MVPoly derivative(int v) const;
    // Replace variable `from` by variable `to`.
    MVPoly identify(int from, int to) const;
    MVPoly permuted(const std::vector<int>& image) const;  // variable v becomes image[v]
    MVPoly map_coefficients(const std::function<Scalar(const Scalar&)>& fn) const;
    // Each term of total degree d scaled by c^d.
    MVPoly scaled_arguments(const Scalar& c) const;
    Scalar evaluate(const std::vector<Scalar>& point) const;

    bool equals(const MVPoly& o) const { return (*this - o).is_zero(); }
    std::string to_string(const SuperAlgebra& alg) const;

private:
    int vars_;
    std::map<Exps, Scalar> terms_;
};

// Reorders [x..., y...] of alg into [y..., x...], the variable order of (m, n).
MVPoly swap_groups(const SuperAlgebra& alg, const MVPoly& f);

// p_r -> sum x^r - alpha sum y^r, p0 -> n - alpha m.
MVPoly phi_nm(const SuperAlgebra& alg, const SymFunc& f);
bool membership_check(const SuperAlgebra& alg, const MVPoly& f);

// An element of the image of phi, with its preimage carried along.
struct SuperElement {
    SuperAlgebra alg;
    SymFunc preimage;  // power-sum basis, p0 already specialised
    MVPoly value;
    bool in_kernel = false;  // labelled by lambda with (n+1, m+1) in lambda
};

enum class SuperKind { Jack, Hermite, Laguerre };
std::string_view super_kind_name(SuperKind k);
std::optional<SuperKind> super_kind_from_name(std::string_view name);
SuperElement super_lift(const SuperAlgebra& alg, const SymFunc& f);
// Hermite uses param as nu^2 (default 1); Laguerre uses a (default symbolic) and nu (default 1).
SuperElement super_family(const SuperAlgebra& alg, SuperKind kind, const Partition& lambda, const Bindings& params = {});

// Coordinate route: apply the symmetric-function operator to the preimage, push down.
SuperElement deformed_op_apply(const OpExpr& A, const SuperElement& f);

// Explicit partial differential operators evaluated at a point.
// alpha_param is the deformation parameter of the operator.
Scalar pde_E(int l, const MVPoly& f, int n, int m, const std::vector<Scalar>& point);
Scalar pde_D(int k, const MVPoly& f, int n, int m, const Scalar& alpha_param, const std::vector<Scalar>& point);
// a0 D^0 + a1 D^1 + a2 D^2 + b0 E^0 + b1 E^1 in PDE form, p0 = n - alpha m.
Scalar pde_cms(const CmsData& L, const MVPoly& f, const SuperAlgebra& alg, const std::vector<Scalar>& point);

enum class DeformedKind { E, D };
// PDE form at the point versus the coordinate route evaluated at the point.
bool deformed_op_point_check(DeformedKind which, int index, const SuperElement& f, const std::vector<Scalar>& point);
// Deterministic points with pairwise distinct rational coordinates.
std::vector<std::vector<Scalar>> generic_points(const SuperAlgebra& alg, int count);

// D^k_{n,m}(alpha) = -(1/alpha)(D^k_{m,n}(1/alpha) + k(1+alpha) E^{k-1}_{m,n}) on f at a point.
bool operator_duality_point_check(int k, const SuperAlgebra& alg, const MVPoly& f, const std::vector<Scalar>& point);

bool super_duality_check(SuperKind kind, const SuperAlgebra& alg, const Partition& lambda);

// Eigenvalue equation of the deformed Hermite (-2|lambda|) or Laguerre (-|lambda|) operator,
// both through the coordinate route and at PDE points.
bool super_eigen_check(SuperKind kind, const SuperAlgebra& alg, const Partition& lambda);
// SH = exp_L(-D^0_{n,m}/4) SP through the coordinate route.
bool super_hermite_exp_check(const SuperAlgebra& alg, const Partition& lambda);

struct SuperSeriesReport {
    MVPoly series;
    bool duality = false;
};
SuperSeriesReport super_pFq(const SuperAlgebra& alg, const std::vector<Scalar>& a, const std::vector<Scalar>& b, int D);

}  // namespace cms
