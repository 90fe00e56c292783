#include "cms/super.hpp"

#include <sstream>
#include <tuple>

#include "cms/errors.hpp"
#include "cms/hyper.hpp"
#include "cms/memo.hpp"

namespace cms {

namespace {

const Scalar kOne(1L);
constexpr int kMaxGroup = 4;

Scalar sign_pow(int e) { return e % 2 ? Scalar(-1L) : kOne; }

}  // namespace

void SuperAlgebra::validate() const {
    if (n < 0 || m < 0 || n > kMaxGroup || m > kMaxGroup)
        throw Error("super algebra needs 0 <= n, m <= " + std::to_string(kMaxGroup));
}

std::string SuperAlgebra::var_name(int v) const {
    return v < n ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - n + 1);
}

MVPoly MVPoly::constant(int vars, const Scalar& c) {
    MVPoly out(vars);
    out.add_term(Exps(vars, 0), c);
    return out;
}

MVPoly MVPoly::variable(int vars, int v) {
    MVPoly out(vars);
    Exps e(vars, 0);
    e[v] = 1;
    out.add_term(e, kOne);
    return out;
}

int MVPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

void MVPoly::add_term(const Exps& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MVPoly MVPoly::operator+(const MVPoly& o) const {
    MVPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MVPoly MVPoly::operator-(const MVPoly& o) const { return *this + Scalar(-1L) * o; }

MVPoly MVPoly::operator*(const MVPoly& o) const {
    MVPoly out(vars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exps e = e1;
            for (int v = 0; v < vars_; ++v) e[v] += e2[v];
            out.add_term(e, c1 * c2);
        }
    return out;
}

MVPoly operator*(const Scalar& c, const MVPoly& f) {
    return f.map_coefficients([&](const Scalar& x) { return c * x; });
}

MVPoly MVPoly::derivative(int v) const {
    MVPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exps d = e;
        --d[v];
        out.add_term(d, Scalar(long(e[v])) * c);
    }
    return out;
}

MVPoly MVPoly::identify(int from, int to) const {
    MVPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        Exps d = e;
        d[to] += d[from];
        d[from] = 0;
        out.add_term(d, c);
    }
    return out;
}

MVPoly MVPoly::permuted(const std::vector<int>& image) const {
    MVPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        Exps d(vars_, 0);
        for (int v = 0; v < vars_; ++v) d[image[v]] = e[v];
        out.add_term(d, c);
    }
    return out;
}

MVPoly MVPoly::map_coefficients(const std::function<Scalar(const Scalar&)>& fn) const {
    MVPoly out(vars_);
    for (const auto& [e, c] : terms_) out.add_term(e, fn(c));
    return out;
}

MVPoly MVPoly::scaled_arguments(const Scalar& c) const {
    MVPoly out(vars_);
    for (const auto& [e, x] : terms_) {
        int d = 0;
        for (int v : e) d += v;
        out.add_term(e, c.pow(d) * x);
    }
    return out;
}

Scalar MVPoly::evaluate(const std::vector<Scalar>& point) const {
    if (static_cast<int>(point.size()) != vars_) throw Error("point has the wrong number of coordinates");
    Scalar s;
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (int v = 0; v < vars_; ++v)
            if (e[v]) t *= point[v].pow(e[v]);
        s += t;
    }
    return s;
}

std::string MVPoly::to_string(const SuperAlgebra& alg) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.to_string() << ")";
        for (int v = 0; v < vars_; ++v) {
            if (it->first[v] == 0) continue;
            os << "*" << alg.var_name(v);
            if (it->first[v] > 1) os << "^" << it->first[v];
        }
    }
    return os.str();
}

MVPoly swap_groups(const SuperAlgebra& alg, const MVPoly& f) {
    std::vector<int> image(alg.vars());
    for (int v = 0; v < alg.vars(); ++v) image[v] = v < alg.n ? alg.m + v : v - alg.n;
    return f.permuted(image);
}

namespace {

const MVPoly& deformed_power_sum_product(const SuperAlgebra& alg, const Partition& nu) {
    static Memo<std::tuple<int, int, Partition>, MVPoly> memo;
    return memo.get({alg.n, alg.m, nu}, [&] {
        MVPoly out = MVPoly::constant(alg.vars(), kOne);
        for (int r : nu.parts()) {
            MVPoly pr(alg.vars());
            for (int v = 0; v < alg.vars(); ++v) {
                MVPoly::Exps e(alg.vars(), 0);
                e[v] = r;
                pr.add_term(e, v < alg.n ? kOne : -alpha());
            }
            out = out * pr;
        }
        return out;
    });
}

}  // namespace

MVPoly phi_nm(const SuperAlgebra& alg, const SymFunc& f) {
    alg.validate();
    install_default_jack_provider();
    Bindings b{{Gen::P0, alg.p0()}};
    MVPoly out(alg.vars());
    for (const SymFunc g = to_power_sum(f); const auto& [nu, c] : g.terms()) {
        Scalar cs = c.substitute(b);
        if (cs.is_zero()) continue;
        out = out + cs * deformed_power_sum_product(alg, nu);
    }
    return out;
}

bool membership_check(const SuperAlgebra& alg, const MVPoly& f) {
    auto symmetric_in = [&](int lo, int hi) {
        for (int v = lo; v + 1 < hi; ++v) {
            std::vector<int> image(alg.vars());
            for (int w = 0; w < alg.vars(); ++w) image[w] = w;
            std::swap(image[v], image[v + 1]);
            if (!f.permuted(image).equals(f)) return false;
        }
        return true;
    };
    if (!symmetric_in(0, alg.n) || !symmetric_in(alg.n, alg.vars())) return false;
    for (int i = 0; i < alg.n; ++i)
        for (int I = alg.n; I < alg.vars(); ++I) {
            MVPoly cond = f.derivative(i) + alpha().inverse() * f.derivative(I);
            if (!cond.identify(I, i).is_zero()) return false;
        }
    return true;
}

std::string_view super_kind_name(SuperKind k) {
    switch (k) {
        case SuperKind::Jack: return "jack";
        case SuperKind::Hermite: return "hermite";
        case SuperKind::Laguerre: return "laguerre";
    }
    return "?";
}

std::optional<SuperKind> super_kind_from_name(std::string_view name) {
    for (SuperKind k : {SuperKind::Jack, SuperKind::Hermite, SuperKind::Laguerre})
        if (super_kind_name(k) == name) return k;
    return std::nullopt;
}

SuperElement super_lift(const SuperAlgebra& alg, const SymFunc& f) {
    SymFunc pre = to_power_sum(f).substitute({{Gen::P0, alg.p0()}});
    return {alg, pre, phi_nm(alg, pre), false};
}

namespace {

Scalar param_or(const Bindings& b, Gen g, const Scalar& fallback) {
    auto it = b.find(g);
    return it == b.end() ? fallback : it->second;
}

SymFunc family_value(SuperKind kind, const Partition& lambda, const Bindings& params) {
    install_default_jack_provider();
    switch (kind) {
        case SuperKind::Jack: return SymFunc::element(Basis::Jack, lambda);
        case SuperKind::Hermite: return hermite_nu2(lambda, param_or(params, Gen::Nu, kOne));
        case SuperKind::Laguerre:
            return laguerre_value(lambda, param_or(params, Gen::A, gen(Gen::A)), param_or(params, Gen::Nu, kOne));
    }
    throw Error("unknown super family");
}

}  // namespace

SuperElement super_family(const SuperAlgebra& alg, SuperKind kind, const Partition& lambda, const Bindings& params) {
    SuperElement e = super_lift(alg, family_value(kind, lambda, params));
    e.in_kernel = ideal_membership(alg.n, alg.m, lambda);
    return e;
}

SuperElement deformed_op_apply(const OpExpr& A, const SuperElement& f) {
    return super_lift(f.alg, A.apply(f.preimage));
}

namespace {

void check_distinct(const std::vector<Scalar>& point) {
    for (std::size_t i = 0; i < point.size(); ++i)
        for (std::size_t j = i + 1; j < point.size(); ++j)
            if (point[i] == point[j])
                throw SingularPoint("coordinates " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
}

}  // namespace

Scalar pde_E(int l, const MVPoly& f, int n, int m, const std::vector<Scalar>& point) {
    Scalar s;
    for (int v = 0; v < n + m; ++v) s += point[v].pow(l) * f.derivative(v).evaluate(point);
    return s;
}

Scalar pde_D(int k, const MVPoly& f, int n, int m, const Scalar& al, const std::vector<Scalar>& z) {
    check_distinct(z);
    Scalar ia = al.inverse(), two(2L), s;
    std::vector<Scalar> d1(n + m);
    for (int v = 0; v < n + m; ++v) d1[v] = f.derivative(v).evaluate(z);
    for (int i = 0; i < n; ++i) {
        s += z[i].pow(k) * f.derivative(i).derivative(i).evaluate(z);
        for (int j = 0; j < n; ++j)
            if (j != i) s += two * ia * z[i].pow(k) / (z[i] - z[j]) * d1[i];
    }
    for (int I = n; I < n + m; ++I) {
        s -= ia * z[I].pow(k) * f.derivative(I).derivative(I).evaluate(z);
        for (int J = n; J < n + m; ++J)
            if (J != I) s -= two * z[I].pow(k) / (z[I] - z[J]) * d1[I];
        if (k > 0) s -= Scalar(long(k)) * (kOne + ia) * z[I].pow(k - 1) * d1[I];
    }
    for (int i = 0; i < n; ++i)
        for (int I = n; I < n + m; ++I) s -= two / (z[i] - z[I]) * (z[i].pow(k) * d1[i] + ia * z[I].pow(k) * d1[I]);
    return s;
}

Scalar pde_cms(const CmsData& L, const MVPoly& f, const SuperAlgebra& alg, const std::vector<Scalar>& z) {
    Bindings b{{Gen::P0, alg.p0()}};
    Scalar al = alpha();
    Scalar s = L.a0.substitute(b) * pde_D(0, f, alg.n, alg.m, al, z) + L.a1.substitute(b) * pde_D(1, f, alg.n, alg.m, al, z) +
               L.a2.substitute(b) * pde_D(2, f, alg.n, alg.m, al, z);
    return s + L.b0.substitute(b) * pde_E(0, f, alg.n, alg.m, z) + L.b1.substitute(b) * pde_E(1, f, alg.n, alg.m, z);
}

bool deformed_op_point_check(DeformedKind which, int index, const SuperElement& f, const std::vector<Scalar>& point) {
    const SuperAlgebra& alg = f.alg;
    Scalar p0 = alg.p0();
    OpExpr A = which == DeformedKind::E ? OpExpr::E(index, p0) : OpExpr::D(index, p0);
    check_distinct(point);
    Scalar pde = which == DeformedKind::E ? pde_E(index, f.value, alg.n, alg.m, point)
                                          : pde_D(index, f.value, alg.n, alg.m, alpha(), point);
    return pde == deformed_op_apply(A, f).value.evaluate(point);
}

std::vector<std::vector<Scalar>> generic_points(const SuperAlgebra& alg, int count) {
    static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    std::vector<std::vector<Scalar>> out;
    for (int k = 0; k < count; ++k) {
        std::vector<Scalar> p;
        for (int v = 0; v < alg.vars(); ++v) p.push_back(Scalar::rational(primes[(v + 2 * k) % 12] + 3 * v, k + 2 + v));
        out.push_back(p);
    }
    return out;
}

bool operator_duality_point_check(int k, const SuperAlgebra& alg, const MVPoly& f, const std::vector<Scalar>& point) {
    Scalar al = alpha();
    Scalar lhs = pde_D(k, f, alg.n, alg.m, al, point);
    // The (m, n) operators see the y group first.
    SuperAlgebra dual{alg.m, alg.n};
    MVPoly g = swap_groups(alg, f);
    std::vector<Scalar> q(point.begin() + alg.n, point.end());
    q.insert(q.end(), point.begin(), point.begin() + alg.n);
    Scalar rhs = pde_D(k, g, dual.n, dual.m, al.inverse(), q);
    if (k > 0) rhs += Scalar(long(k)) * (kOne + al) * pde_E(k - 1, g, dual.n, dual.m, q);
    return lhs == -al.inverse() * rhs;
}

namespace {

// The right-hand side of a super duality: the (m, n) image with alpha -> 1/alpha
// and the extra substitutions, then reordered to the (n, m) variable order.
MVPoly dual_image(const SuperAlgebra& alg, const SymFunc& dual_family, Bindings extra) {
    SuperAlgebra dual{alg.m, alg.n};
    extra[Gen::Alpha] = alpha().inverse();
    MVPoly v = phi_nm(dual, dual_family).map_coefficients([&](const Scalar& c) { return c.substitute(extra); });
    return swap_groups(dual, v);
}

}  // namespace

bool super_duality_check(SuperKind kind, const SuperAlgebra& alg, const Partition& lambda) {
    install_default_jack_provider();
    Partition conj = lambda.conjugate();
    Scalar pre = sign_pow(lambda.weight()) * b_coefficient(conj).substitute({{Gen::Alpha, alpha().inverse()}});
    MVPoly lhs(alg.vars()), rhs(alg.vars());
    switch (kind) {
        case SuperKind::Jack:
            lhs = phi_nm(alg, SymFunc::element(Basis::Jack, lambda));
            rhs = dual_image(alg, SymFunc::element(Basis::Jack, conj), {});
            break;
        case SuperKind::Hermite: {
            Scalar nu2 = gen(Gen::Nu);
            lhs = phi_nm(alg, hermite_nu2(lambda, nu2));
            rhs = dual_image(alg, hermite_nu2(conj, nu2), {{Gen::Nu, -alpha() * nu2}});
            break;
        }
        case SuperKind::Laguerre: {
            Scalar a = gen(Gen::A), nu = gen(Gen::Nu);
            lhs = phi_nm(alg, laguerre_value(lambda, a, nu));
            rhs = dual_image(alg, laguerre_value(conj, a, nu), {{Gen::A, -alpha() * a}, {Gen::Nu, -alpha() * nu}});
            break;
        }
    }
    return lhs.equals(pre * rhs);
}

bool super_eigen_check(SuperKind kind, const SuperAlgebra& alg, const Partition& lambda) {
    if (kind == SuperKind::Jack) throw Error("eigen check is for the Hermite and Laguerre kinds");
    SuperElement f = super_family(alg, kind, lambda);
    CmsData L = kind == SuperKind::Hermite ? CmsData::hermite(kOne) : CmsData::laguerre(gen(Gen::A), kOne);
    Scalar ev = Scalar(long(kind == SuperKind::Hermite ? -2 : -1) * lambda.weight());
    if (!deformed_op_apply(L.op(), f).value.equals(ev * f.value)) return false;
    if (alg.vars() == 0) return true;
    for (const auto& z : generic_points(alg, 2))
        if (pde_cms(L, f.value, alg, z) != ev * f.value.evaluate(z)) return false;
    return true;
}

bool super_hermite_exp_check(const SuperAlgebra& alg, const Partition& lambda) {
    SuperElement sp = super_family(alg, SuperKind::Jack, lambda);
    OpExpr A = Scalar::rational(-1, 4) * OpExpr::D(0, alg.p0());
    MVPoly via_exp = phi_nm(alg, exp_truncated(A, lambda.weight() / 2, sp.preimage));
    return via_exp.equals(super_family(alg, SuperKind::Hermite, lambda).value);
}

namespace {

MVPoly super_series(const SuperAlgebra& alg, const std::vector<Scalar>& a, const std::vector<Scalar>& b, int D) {
    install_default_jack_provider();
    MVPoly out(alg.vars());
    for (const Partition& lambda : partitions_up_to(D)) {
        if (ideal_membership(alg.n, alg.m, lambda)) continue;
        Scalar c = pochhammer_ratio(a, b, lambda) / hook_product(lambda);
        out = out + c * phi_nm(alg, SymFunc::element(Basis::Jack, lambda));
    }
    return out;
}

}  // namespace

SuperSeriesReport super_pFq(const SuperAlgebra& alg, const std::vector<Scalar>& a, const std::vector<Scalar>& b, int D) {
    SuperSeriesReport rep{super_series(alg, a, b, D), false};
    // Placeholder generators carry the primed parameters through alpha -> 1/alpha.
    std::vector<Gen> pool;
    for (Gen g : {Gen::A, Gen::Nu, Gen::P, Gen::Q, Gen::S, Gen::X}) {
        bool used = false;
        for (const auto& list : {a, b})
            for (const Scalar& x : list) used = used || x.depends_on(g);
        if (!used) pool.push_back(g);
    }
    if (pool.size() < a.size() + b.size()) throw Error("too many hypergeometric parameters for the duality report");
    Bindings flip{{Gen::Alpha, alpha().inverse()}};
    std::vector<Scalar> pa, pb;
    std::size_t next = 0;
    for (const Scalar& x : a) {
        flip[pool[next]] = -alpha() * x;
        pa.push_back(gen(pool[next++]));
    }
    for (const Scalar& x : b) {
        flip[pool[next]] = -alpha() * x;
        pb.push_back(gen(pool[next++]));
    }
    SuperAlgebra dual{alg.m, alg.n};
    MVPoly rhs = super_series(dual, pa, pb, D).map_coefficients([&](const Scalar& c) { return c.substitute(flip); });
    int e = 1 + static_cast<int>(b.size()) - static_cast<int>(a.size());
    rhs = swap_groups(dual, rhs).scaled_arguments((-alpha()).pow(e));
    rep.duality = rhs.equals(rep.series);
    return rep;
}

}  // namespace cms
