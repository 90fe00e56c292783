#pragma once

#include <string>

#include "cms/operators.hpp"

namespace cms {

// P_lambda in the monomial basis, from the triangular eigenproblem of
// D^2 - (2/alpha)(p0 - 1) E^1.
SymFunc jack(const Partition& lambda);
// Registers jack() as the symfunc Jack provider (idempotent).
void install_default_jack_provider();

enum class FamilyKind { Jack, Hermite, Laguerre, JacobiScript, JacobiMonic };
std::string_view family_name(FamilyKind k);

struct FamilyElement {
    FamilyKind kind;
    Partition label;
    SymFunc value;  // Jack basis unless stated otherwise
    Bindings params;
};

// How an eigenfunction is constructed. All three must agree.
enum class Route { Solver, Exponential, Product };

// Hermite functions take nu^2 directly so that nu^2 -> -alpha nu^2 stays rational.
SymFunc hermite_nu2(const Partition& lambda, const Scalar& nu2, Route route = Route::Solver);
FamilyElement hermite(const Partition& lambda, const Scalar& nu = Scalar(1L));
SymFunc laguerre_value(const Partition& lambda, const Scalar& a, const Scalar& nu, Route route = Route::Solver);
FamilyElement laguerre(const Partition& lambda, const Scalar& a = gen(Gen::A), const Scalar& nu = Scalar(1L));
SymFunc jacobi_value(const Partition& lambda, const Scalar& p, const Scalar& q, Route route = Route::Solver);
FamilyElement jacobi(const Partition& lambda, const Scalar& p = gen(Gen::P), const Scalar& q = gen(Gen::Q));
// (-2)^{-|lambda|} sigma_{-2}(J_lambda), power-sum basis.
FamilyElement jacobi_monic(const Partition& lambda, const Scalar& p = gen(Gen::P), const Scalar& q = gen(Gen::Q));

// Closed form of the constant term (all p_r -> 0) of the Jacobi function.
Scalar jacobi_eps0(const Partition& lambda, const Scalar& p = gen(Gen::P), const Scalar& q = gen(Gen::Q));
// Constant term read off the expansion itself.
Scalar constant_term(const SymFunc& f);

// C^-_lambda(1/alpha; alpha), the renormalisation factor.
Scalar renormalization_factor(const Partition& lambda);
FamilyElement renormalize(const FamilyElement& e);

bool jack_duality_check(const Partition& lambda);
bool hermite_duality_check(const Partition& lambda);
bool laguerre_duality_check(const Partition& lambda);
bool laguerre_symmetry_check(const Partition& lambda);

// (n+1, m+1) in lambda.
bool ideal_membership(int n, int m, const Partition& lambda);
// The coefficients of F on P_mu with (n+1,m+1) not in mu vanish (F given in the Jack basis).
bool supported_in_ideal(const SymFunc& f, int n, int m);

enum class LimitKind { JacobiToHermite, JacobiToLaguerre, LaguerreToHermiteConjecture };
enum class Verdict { Equal, NotEqual, Divergent };
std::string_view verdict_name(Verdict v);
struct LimitResult {
    SymFunc limit;   // power-sum basis; zero when divergent
    SymFunc target;  // power-sum basis
    Verdict verdict;
};
LimitResult limit_transition(LimitKind kind, const Partition& lambda);

// Re-expansion of f in a unitriangular family F_kappa = P_kappa + lower terms
// (given in the Jack basis), scaled by factor(kappa): f = sum c_kappa factor(kappa) F_kappa.
using FamilyLookup = std::function<SymFunc(const Partition&)>;
std::map<Partition, Scalar> expand_in_family(const SymFunc& f, const FamilyLookup& family,
                                             const std::function<Scalar(const Partition&)>& factor = {});

}  // namespace cms
