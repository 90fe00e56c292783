#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cms/operators.hpp"

namespace cms {

// Truncated element of the completed tensor square, in the basis p_lambda (x) p_mu.
// Every coefficient whose left degree is <= max_left and right degree is
// <= max_right is exact; nothing outside that box is stored.
class TensorSeries {
public:
    using Key = std::pair<Partition, Partition>;

    TensorSeries(int max_left, int max_right) : max_left_(max_left), max_right_(max_right) {}
    // a (x) b for power-sum elements, truncated to the box.
    static TensorSeries product(const SymFunc& a, const SymFunc& b, int max_left, int max_right);

    int max_left() const { return max_left_; }
    int max_right() const { return max_right_; }
    int valid_to() const { return std::min(max_left_, max_right_); }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const Partition& l, const Partition& r) const;

    void add_term(const Partition& l, const Partition& r, const Scalar& c);
    // Drop everything outside the smaller box.
    TensorSeries restricted(int max_left, int max_right) const;

    TensorSeries operator+(const TensorSeries& o) const;
    TensorSeries operator-(const TensorSeries& o) const;
    friend TensorSeries operator*(const Scalar& c, const TensorSeries& t);
    TensorSeries map_coefficients(const std::function<Scalar(const Scalar&)>& fn) const;

    std::string to_string() const;

private:
    int max_left_;
    int max_right_;
    std::map<Key, Scalar> terms_;
};

enum class Slot { Left, Right };

// A applied in one slot. Operators that can lower the degree by k shrink the
// exact box of that slot by k.
TensorSeries tensor_op_apply(Slot side, const OpExpr& A, const TensorSeries& F);

// prod_j [a_j]_lambda / prod_j [b_j]_lambda; PochhammerPole if a b-factor vanishes.
Scalar pochhammer_ratio(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const Partition& lambda);

// sum_{|lambda| <= D} (1/h) (prod [a]/prod [b]) P (x) P / eps_{p0}(P).
TensorSeries pFq_two_set(const std::vector<Scalar>& a, const std::vector<Scalar>& b, int D);
// sum_{|lambda| <= D} (1/h) (prod [a]/prod [b]) P_lambda, power-sum basis.
SymFunc pFq_one_set(const std::vector<Scalar>& a, const std::vector<Scalar>& b, int D);

enum class HyperOde { TwoF1TwoSet, OneF1, ZeroF1, ZeroF0, TwoF1OneSet };
std::string_view hyper_ode_name(HyperOde which);
std::optional<HyperOde> hyper_ode_from_name(std::string_view name);

struct HyperResidual {
    std::string which;
    int degree = 0;
    int valid_to = 0;
    bool zero = false;
    std::vector<std::string> nonzero_terms;
};

// Left minus right of the differential equation for the truncated series.
// params: a, b, c as needed (2F1: a, b, c; 1F1: a, c; 0F1: c; 0F0: none).
// Defaults are symbolic.
HyperResidual check_hyper_ode(HyperOde which, int D, const std::vector<Scalar>& params = {});
std::vector<Scalar> default_hyper_params(HyperOde which);

enum class GenFunKind { Hermite, Laguerre };
HyperResidual generating_function_check(GenFunKind kind, int D);

// (A (x) 1) 0F0 = (1 (x) A) 0F0 up to the exact box.
bool hyper_slot_symmetry(const OpExpr& A, int D);
// (D^0 (x) 1) 0F0 = (1 (x) p_2) 0F0.
bool hyper_d0_p2(int D);
// Coefficient-wise limit b -> infinity of (1 (x) sigma_{1/b}) 2F1(a, b; c) equals 1F1(a; c).
bool hyper_2f1_limit(int D);
// The 2F1 recurrence solved from A_0 = 1 reproduces [a][b]/[c].
bool hyper_2f1_recurrence(int max_weight);

}  // namespace cms
