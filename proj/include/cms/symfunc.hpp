#pragma once

#include <functional>
#include <map>
#include <string>

#include "cms/partition.hpp"
#include "cms/scalar.hpp"

namespace cms {

enum class Basis { PowerSum, Monomial, Elementary, Jack };

std::string_view basis_name(Basis b);
std::optional<Basis> basis_from_name(std::string_view name);

// Finite Scalar combination of basis elements indexed by partitions.
class SymFunc {
public:
    using Terms = std::map<Partition, Scalar>;

    explicit SymFunc(Basis b = Basis::PowerSum) : basis_(b) {}
    static SymFunc element(Basis b, const Partition& lambda, const Scalar& c = Scalar(1L));
    static SymFunc constant(const Scalar& c, Basis b = Basis::PowerSum);

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;      // -1 for zero
    int min_degree() const;  // -1 for zero
    Scalar coefficient(const Partition& lambda) const;

    void add_term(const Partition& lambda, const Scalar& c);

    SymFunc operator-() const;
    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o) { return *this += -o; }
    friend SymFunc operator*(const Scalar& c, const SymFunc& f);

    SymFunc truncated(int max_degree) const;
    SymFunc homogeneous_part(int degree) const;
    SymFunc map_coefficients(const std::function<Scalar(const Scalar&)>& fn) const;
    SymFunc substitute(const Bindings& b) const;

    // Semantic comparison; converts to the power-sum basis if bases differ.
    bool equals(const SymFunc& o) const;

    std::string to_string() const;
    std::string to_latex() const;
    // Inverse of to_string: "2*m[1,1] + m[2]", "(1/alpha)*p[2] - p0", "P[2,1]".
    static SymFunc parse(std::string_view text);

private:
    Basis basis_;
    Terms terms_;
};

// Union of parts: the product of two multiplicative-basis elements.
Partition partition_union(const Partition& a, const Partition& b);

SymFunc multiply(const SymFunc& f, const SymFunc& g);
SymFunc convert(const SymFunc& f, Basis target);
SymFunc to_power_sum(const SymFunc& f);

// Ring homomorphisms on the power-sum generators.
SymFunc apply_sigma(const Scalar& gamma, const SymFunc& f);
SymFunc apply_omega(const Scalar& gamma, const SymFunc& f);
SymFunc apply_translate(const Scalar& gamma, const SymFunc& f, const Scalar& p0 = Scalar::gen(Gen::P0));
Scalar apply_eps(const Scalar& x, const SymFunc& f);

Scalar epsX_jack_product(const Partition& lambda, const Scalar& x);

// The provider returns P_lambda in the monomial basis.
using JackProvider = std::function<SymFunc(const Partition&)>;
void set_jack_provider(JackProvider provider);
bool has_jack_provider();

// Cached expansions, exposed for the families module.
const SymFunc& jack_in_power_sums(const Partition& lambda);
const SymFunc& power_sum_in_jacks(const Partition& lambda);
const SymFunc& monomial_in_power_sums(const Partition& lambda);
const SymFunc& power_sum_in_monomials(const Partition& lambda);

}  // namespace cms
