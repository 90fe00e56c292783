#pragma once

#include <map>
#include <string>
#include <vector>

#include "cms/families.hpp"

namespace cms {

enum class PieriFamily { Hermite, Laguerre, Jacobi };
std::string_view pieri_family_name(PieriFamily f);
std::optional<PieriFamily> pieri_family_from_name(std::string_view name);

// e_r F_source = sum terms[mu] F_mu in a normalised family.
struct PieriExpansion {
    int r = 1;
    Partition source;
    std::map<Partition, Scalar> terms;

    bool equals(const PieriExpansion& o) const;
};

// Normalisation used by the Pieri formulas for Hermite and Laguerre:
// alpha^{|lambda|} C^-_lambda(1/alpha), i.e. prod over cells of (alpha a' + l' + 1).
Scalar pieri_normalization(const Partition& lambda);

// Shift of source to target: J+ = rows gaining a box, J- = rows losing one.
// Empty when the two differ by more than one box in some row.
std::optional<SignedIndexSet> pieri_shift(const Partition& source, const Partition& target);

// The multiplication oracle: e_r (E_r = 2^r m_{1^r} for Jacobi) times the source,
// re-expanded by back-substitution. Hermite at nu = 1; Laguerre at nu = 1 with
// symbolic a; Jacobi with symbolic p, q and F_kappa = J_kappa / eps_0(J_kappa).
PieriExpansion pieri_oracle(PieriFamily family, const Partition& lambda, int r);

// Printed r = 1 Hermite coefficients (up and down moves, j <= l(lambda)+1).
PieriExpansion hermite_pieri_e1(const Partition& lambda);
// Top-degree Hermite coefficients (|J+|+|J-| = r) from the product formula for U.
PieriExpansion hermite_pieri_top(const Partition& lambda, int r);

// Printed r = 1 Laguerre coefficients, products over 1 <= i <= range (no diagonal term).
PieriExpansion laguerre_pieri_e1(const Partition& lambda, int range);
enum class KSumForm { Literal, Corrected };
// Laguerre closed form with the K-sum; sign (-1)^{r-|J|}.
PieriExpansion laguerre_pieri_closed(const Partition& lambda, int r, KSumForm form);
// q -> infinity limit of the Jacobi closed form at p = -a - q - 1/2.
PieriExpansion laguerre_pieri_from_jacobi(const Partition& lambda, int r);

// Jacobi closed form with V^(+-), R and the K-sum over I(l(lambda)+r).
PieriExpansion jacobi_pieri_closed(const Partition& lambda, int r, const Scalar& p = gen(Gen::P),
                                   const Scalar& q = gen(Gen::Q));

bool is_polynomial_in(const Scalar& x, Gen g);

struct StructureCheck {
    Partition target;
    bool parity = false;       // r - |J+| - |J-| even
    bool polynomial = false;   // coefficient polynomial in p0
    bool divisible = false;    // by prod_{j in J-} ((p0-j+1)/alpha + lambda_j - 1)
    bool ok() const { return parity && polynomial && divisible; }
};
std::vector<StructureCheck> hermite_structure(const PieriExpansion& oracle);

struct ClosedFormCheck {
    std::string form;  // which closed form
    Partition target;
    bool matches = false;
};

struct ClosedFormReport {
    PieriExpansion oracle;
    std::vector<ClosedFormCheck> checks;      // gating comparisons
    std::vector<ClosedFormCheck> literal;     // literal forms known not to hold, for the record
    std::vector<StructureCheck> structure;    // Hermite only
    bool ok() const;
};

ClosedFormReport pieri_general(PieriFamily family, const Partition& lambda, int r);

// The two special values of p0: n - alpha m, and (Laguerre only) n + 1 - alpha(m + a + 1).
enum class IdealForm { First, Second };
Scalar ideal_p0(IdealForm form, int n, int m);
// Family element at the special p0, restricted to Jack components outside the
// ideal; true when it vanishes there (meaningful when (n+1, m+1) is in lambda).
bool family_in_ideal(PieriFamily family, IdealForm form, int n, int m, const Partition& lambda);
// e_r F_lambda at the special p0 has no component on F_mu with (n+1, m+1) outside mu.
bool pieri_preserves_ideal(PieriFamily family, IdealForm form, int n, int m, const Partition& lambda, int r);

}  // namespace cms
