#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cms/scalar.hpp"

namespace cms {

struct Cell {
    int i;  // row, 1-based
    int j;  // column, 1-based
};

// Weakly decreasing positive parts; trailing zeros are stripped on construction.
// Ordered by weight, then lexicographically on parts, which refines dominance.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }
    // 1-based part access; zero beyond the length.
    int operator[](int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

    Partition conjugate() const;
    bool contains(Cell c) const { return c.i >= 1 && c.j >= 1 && c.j <= (*this)[c.i]; }
    bool contains(const Partition& mu) const;
    int multiplicity(int part) const;

    // lambda + e_i and lambda - e_i when they are partitions.
    std::optional<Partition> add_box(int i) const;
    std::optional<Partition> remove_box(int i) const;
    Partition with_box(int i) const;  // throws NotAPartition

    std::vector<Cell> cells() const;
    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

struct ArmLeg {
    int arm;
    int leg;
    int coarm;
    int coleg;
};

// Sign-labelled index sets J_+ and J_-, disjoint.
struct SignedIndexSet {
    std::set<int> plus;
    std::set<int> minus;
    std::size_t size() const { return plus.size() + minus.size(); }
};

ArmLeg arm_leg(const Partition& lambda, Cell c);

bool dominates(const Partition& lambda, const Partition& mu);  // lambda >= mu
std::vector<Partition> partitions_of(int n);  // ascending total order
std::vector<Partition> partitions_up_to(int n);
std::vector<Partition> subpartitions(const Partition& lambda);  // mu subset of lambda, ascending

Scalar alpha();
Scalar hook_product(const Partition& lambda);
Scalar deformed_pochhammer(const Scalar& x, const Partition& lambda);
Scalar deformed_pochhammer_rows(const Scalar& x, const Partition& lambda);
Scalar b_coefficient(const Partition& lambda);

enum class CKind { Plus, Minus, Zero };
Scalar c_factor(CKind kind, const Partition& lambda, const Scalar& z);

Scalar binomial_one_box(const Partition& lambda, int i);
Scalar shifted_power_sum_eval(int r, const Partition& lambda);

// d_lambda and the closed-form eigenvalues of the CMS operators.
Scalar d_lambda(const Partition& lambda, const Scalar& p0);
Scalar eigenvalue_generic(const Scalar& a2, const Scalar& b1, const Partition& lambda, const Scalar& p0);
Scalar eigenvalue_hermite(const Partition& lambda, const Scalar& nu);
Scalar eigenvalue_laguerre(const Partition& lambda, const Scalar& nu);
Scalar eigenvalue_jacobi(const Partition& lambda, const Scalar& p, const Scalar& q, const Scalar& p0);
Scalar eigenvalue_jack(const Partition& lambda);

}  // namespace cms
