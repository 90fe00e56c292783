#include "cms/hyper.hpp"

#include <sstream>

#include "cms/errors.hpp"
#include "cms/families.hpp"

namespace cms {

namespace {

const Scalar kOne(1L);

Scalar shift_c(const Scalar& c) { return c - (gen(Gen::P0) - kOne) / alpha(); }

bool fits(const Partition& l, const Partition& r, int ml, int mr) { return l.weight() <= ml && r.weight() <= mr; }

SymFunc exp_series(const SymFunc& x, int max_degree) {
    SymFunc out = SymFunc::constant(kOne);
    SymFunc term = SymFunc::constant(kOne);
    for (int n = 1; n * std::max(1, x.min_degree()) <= max_degree; ++n) {
        term = Scalar(Rat(1, n)) * multiply(term, x).truncated(max_degree);
        out += term;
    }
    return out.truncated(max_degree);
}

HyperResidual residual_report(std::string which, int D, const TensorSeries& r) {
    HyperResidual out{std::move(which), D, r.valid_to(), r.is_zero(), {}};
    for (const auto& [k, c] : r.terms())
        out.nonzero_terms.push_back(k.first.to_string() + "x" + k.second.to_string() + ": " + c.to_string());
    return out;
}

}  // namespace

TensorSeries TensorSeries::product(const SymFunc& a, const SymFunc& b, int max_left, int max_right) {
    TensorSeries out(max_left, max_right);
    for (const SymFunc pa = to_power_sum(a), pb = to_power_sum(b); const auto& [l, x] : pa.terms())
        for (const auto& [r, y] : pb.terms())
            if (fits(l, r, max_left, max_right)) out.add_term(l, r, x * y);
    return out;
}

Scalar TensorSeries::coefficient(const Partition& l, const Partition& r) const {
    auto it = terms_.find({l, r});
    return it == terms_.end() ? Scalar() : it->second;
}

void TensorSeries::add_term(const Partition& l, const Partition& r, const Scalar& c) {
    if (c.is_zero() || !fits(l, r, max_left_, max_right_)) return;
    auto [it, inserted] = terms_.try_emplace({l, r}, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TensorSeries TensorSeries::restricted(int max_left, int max_right) const {
    TensorSeries out(std::min(max_left, max_left_), std::min(max_right, max_right_));
    for (const auto& [k, c] : terms_) out.add_term(k.first, k.second, c);
    return out;
}

TensorSeries TensorSeries::operator+(const TensorSeries& o) const {
    TensorSeries out = restricted(o.max_left_, o.max_right_);
    for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, c);
    return out;
}

TensorSeries TensorSeries::operator-(const TensorSeries& o) const { return *this + Scalar(-1L) * o; }

TensorSeries operator*(const Scalar& c, const TensorSeries& t) {
    return t.map_coefficients([&](const Scalar& x) { return c * x; });
}

TensorSeries TensorSeries::map_coefficients(const std::function<Scalar(const Scalar&)>& fn) const {
    TensorSeries out(max_left_, max_right_);
    for (const auto& [k, c] : terms_) out.add_term(k.first, k.second, fn(c));
    return out;
}

std::string TensorSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.to_string() << ")*p" << it->first.first.to_string() << "(x)p"
           << it->first.second.to_string();
    }
    return os.str();
}

TensorSeries tensor_op_apply(Slot side, const OpExpr& A, const TensorSeries& F) {
    int lower = std::min(0, A.d_min());
    int ml = F.max_left() + (side == Slot::Left ? lower : 0);
    int mr = F.max_right() + (side == Slot::Right ? lower : 0);
    // Group by the untouched slot, act on the other.
    std::map<Partition, SymFunc> groups;
    for (const auto& [k, c] : F.terms()) {
        const Partition& fixed = side == Slot::Left ? k.second : k.first;
        const Partition& acted = side == Slot::Left ? k.first : k.second;
        auto [it, ins] = groups.try_emplace(fixed, Basis::PowerSum);
        it->second.add_term(acted, c);
    }
    TensorSeries out(ml, mr);
    for (const auto& [fixed, f] : groups)
        for (const SymFunc g = A.apply(f); const auto& [acted, c] : g.terms()) {
            if (side == Slot::Left) out.add_term(acted, fixed, c);
            else out.add_term(fixed, acted, c);
        }
    return out;
}

Scalar pochhammer_ratio(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const Partition& lambda) {
    Scalar r = kOne, inv = alpha().inverse();
    for (const Scalar& x : a) r *= deformed_pochhammer(x, lambda);
    for (std::size_t j = 0; j < b.size(); ++j)
        for (Cell c : lambda.cells()) {
            Scalar f = b[j] + Scalar(long(c.j - 1)) - Scalar(long(c.i - 1)) * inv;
            if (f.is_zero())
                throw PochhammerPole("b" + std::to_string(j + 1) + " = " + b[j].to_string() + " at cell (" +
                                     std::to_string(c.i) + "," + std::to_string(c.j) + ")");
            r /= f;
        }
    return r;
}

TensorSeries pFq_two_set(const std::vector<Scalar>& a, const std::vector<Scalar>& b, int D) {
    install_default_jack_provider();
    TensorSeries out(D, D);
    Scalar p0 = gen(Gen::P0);
    for (const Partition& lambda : partitions_up_to(D)) {
        Scalar c = pochhammer_ratio(a, b, lambda) / (hook_product(lambda) * epsX_jack_product(lambda, p0));
        const SymFunc& P = jack_in_power_sums(lambda);
        out = out + c * TensorSeries::product(P, P, D, D);
    }
    return out;
}

SymFunc pFq_one_set(const std::vector<Scalar>& a, const std::vector<Scalar>& b, int D) {
    install_default_jack_provider();
    SymFunc out(Basis::PowerSum);
    for (const Partition& lambda : partitions_up_to(D))
        out += (pochhammer_ratio(a, b, lambda) / hook_product(lambda)) * jack_in_power_sums(lambda);
    return out;
}

std::string_view hyper_ode_name(HyperOde which) {
    switch (which) {
        case HyperOde::TwoF1TwoSet: return "2F1";
        case HyperOde::OneF1: return "1F1";
        case HyperOde::ZeroF1: return "0F1";
        case HyperOde::ZeroF0: return "0F0";
        case HyperOde::TwoF1OneSet: return "2F1-one-set";
    }
    return "?";
}

std::optional<HyperOde> hyper_ode_from_name(std::string_view name) {
    for (HyperOde h : {HyperOde::TwoF1TwoSet, HyperOde::OneF1, HyperOde::ZeroF1, HyperOde::ZeroF0, HyperOde::TwoF1OneSet})
        if (hyper_ode_name(h) == name) return h;
    return std::nullopt;
}

std::vector<Scalar> default_hyper_params(HyperOde which) {
    Scalar a = gen(Gen::A), b = gen(Gen::S), c = gen(Gen::Q);
    switch (which) {
        case HyperOde::TwoF1TwoSet:
        case HyperOde::TwoF1OneSet: return {a, b, c};
        case HyperOde::OneF1: return {a, c};
        case HyperOde::ZeroF1: return {c};
        case HyperOde::ZeroF0: return {};
    }
    return {};
}

HyperResidual check_hyper_ode(HyperOde which, int D, const std::vector<Scalar>& given) {
    std::vector<Scalar> prm = given.empty() ? default_hyper_params(which) : given;
    if (prm.size() != default_hyper_params(which).size())
        throw Error("wrong number of parameters for " + std::string(hyper_ode_name(which)));
    Scalar p0 = gen(Gen::P0), two(2L);
    OpExpr D1 = OpExpr::D(1), D3 = OpExpr::D(3), E0 = OpExpr::E(0), E2 = OpExpr::E(2);
    OpExpr p1 = OpExpr::mul(SymFunc::element(Basis::PowerSum, Partition{1}));
    std::string name(hyper_ode_name(which));
    auto L = [](const OpExpr& A, const TensorSeries& F) { return tensor_op_apply(Slot::Left, A, F); };
    auto R = [](const OpExpr& A, const TensorSeries& F) { return tensor_op_apply(Slot::Right, A, F); };
    switch (which) {
        case HyperOde::TwoF1TwoSet: {
            const Scalar &a = prm[0], &b = prm[1], &c = prm[2];
            TensorSeries F = pFq_two_set({a, b}, {c}, D);
            TensorSeries res = L(D1, F) + shift_c(c) * L(E0, F) - R(D3, F) -
                               (a + b + kOne - two * (p0 - kOne) / alpha()) * R(E2, F) - (a * b) * R(p1, F);
            return residual_report(name, D, res);
        }
        case HyperOde::OneF1: {
            const Scalar &a = prm[0], &c = prm[1];
            TensorSeries F = pFq_two_set({a}, {c}, D);
            TensorSeries res = L(D1, F) + shift_c(c) * L(E0, F) - R(E2, F) - a * R(p1, F);
            return residual_report(name, D, res);
        }
        case HyperOde::ZeroF1: {
            const Scalar& c = prm[0];
            TensorSeries F = pFq_two_set({}, {c}, D);
            return residual_report(name, D, L(D1, F) + shift_c(c) * L(E0, F) - R(p1, F));
        }
        case HyperOde::ZeroF0: {
            TensorSeries F = pFq_two_set({}, {}, D);
            return residual_report(name, D, L(E0, F) - R(p1, F));
        }
        case HyperOde::TwoF1OneSet: {
            const Scalar &a = prm[0], &b = prm[1], &c = prm[2];
            SymFunc F = pFq_one_set({a, b}, {c}, D);
            SymFunc res = D1.apply(F) - OpExpr::D(2).apply(F) + shift_c(c) * E0.apply(F) -
                          (a + b + kOne - (p0 - kOne) / alpha()) * OpExpr::E(1).apply(F) - (a * b * p0) * F;
            res = res.truncated(D - 1);
            HyperResidual out{name, D, D - 1, res.is_zero(), {}};
            for (const auto& [mu, c2] : res.terms()) out.nonzero_terms.push_back(mu.to_string() + ": " + c2.to_string());
            return out;
        }
    }
    throw Error("unknown equation");
}

HyperResidual generating_function_check(GenFunKind kind, int D) {
    install_default_jack_provider();
    Scalar p0 = gen(Gen::P0), one = kOne;
    TensorSeries lhs(D, D), rhs(D, D);
    if (kind == GenFunKind::Hermite) {
        for (const Partition& lambda : partitions_up_to(D)) {
            Scalar c = (hook_product(lambda) * epsX_jack_product(lambda, p0)).inverse();
            lhs = lhs + c * TensorSeries::product(hermite_nu2(lambda, one), jack_in_power_sums(lambda), D, D);
        }
        SymFunc e = exp_series(Scalar::rational(-1, 4) * SymFunc::element(Basis::PowerSum, Partition{2}), D);
        rhs = tensor_op_apply(Slot::Right, OpExpr::mul(e), pFq_two_set({}, {}, D));
        return residual_report("hermite", D, lhs - rhs);
    }
    Scalar a = gen(Gen::A), q = one + (p0 - one) / alpha();
    for (const Partition& lambda : partitions_up_to(D)) {
        Scalar c = (hook_product(lambda) * deformed_pochhammer(a + q, lambda) * epsX_jack_product(lambda, p0)).inverse();
        lhs = lhs + c * TensorSeries::product(laguerre_value(lambda, a, one), jack_in_power_sums(lambda), D, D);
    }
    SymFunc e = exp_series(Scalar(-1L) * SymFunc::element(Basis::PowerSum, Partition{1}), D);
    rhs = tensor_op_apply(Slot::Right, OpExpr::mul(e), pFq_two_set({}, {a + q}, D));
    return residual_report("laguerre", D, lhs - rhs);
}

bool hyper_slot_symmetry(const OpExpr& A, int D) {
    TensorSeries F = pFq_two_set({}, {}, D);
    return (tensor_op_apply(Slot::Left, A, F) - tensor_op_apply(Slot::Right, A, F)).is_zero();
}

bool hyper_d0_p2(int D) {
    TensorSeries F = pFq_two_set({}, {}, D);
    OpExpr p2 = OpExpr::mul(SymFunc::element(Basis::PowerSum, Partition{2}));
    return (tensor_op_apply(Slot::Left, OpExpr::D(0), F) - tensor_op_apply(Slot::Right, p2, F)).is_zero();
}

bool hyper_2f1_limit(int D) {
    Scalar a = gen(Gen::A), b = gen(Gen::S), c = gen(Gen::Q);
    TensorSeries F = pFq_two_set({a, b}, {c}, D);
    // 1 (x) sigma_{1/b} scales p_mu in the right slot by b^{-|mu|}.
    TensorSeries lim(D, D);
    for (const auto& [k, x] : F.terms())
        lim.add_term(k.first, k.second, (x * b.pow(-k.second.weight())).limit_at_infinity(Gen::S));
    return (lim - pFq_two_set({a}, {c}, D)).is_zero();
}

bool hyper_2f1_recurrence(int max_weight) {
    Scalar a = gen(Gen::A), b = gen(Gen::S), c = gen(Gen::Q), inv = alpha().inverse();
    std::map<Partition, Scalar> A{{Partition(), kOne}};
    for (const Partition& lambda : partitions_up_to(max_weight - 1))
        for (int i = 1; i <= lambda.length() + 1; ++i) {
            auto mu = lambda.add_box(i);
            if (!mu) continue;
            Scalar s = Scalar(long(lambda[i])) - Scalar(long(i - 1)) * inv;
            Scalar v = (a + s) * (b + s) / (c + s) * A.at(lambda);
            auto [it, inserted] = A.try_emplace(*mu, v);
            if (!inserted && it->second != v) return false;  // path dependence
        }
    for (const auto& [mu, v] : A)
        if (v != pochhammer_ratio({a, b}, {c}, mu)) return false;
    return true;
}

}  // namespace cms
