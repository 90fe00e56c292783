#include "cms/operators.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "cms/errors.hpp"
#include "cms/memo.hpp"
#include "text.hpp"

namespace cms {

using namespace text;

namespace {

Partition remove_part(const Partition& lambda, int r) {
    std::vector<int> parts = lambda.parts();
    parts.erase(std::find(parts.begin(), parts.end(), r));
    return Partition(std::move(parts));
}

// Adds c * p_base * prod_k p_{idx_k} to out; index 0 contributes the scalar p0.
void emit(SymFunc& out, const Partition& base, std::initializer_list<int> idx, Scalar c, const Scalar& p0) {
    std::vector<int> parts = base.parts();
    for (int i : idx) {
        if (i == 0) c *= p0;
        else parts.push_back(i);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    out.add_term(Partition(std::move(parts)), c);
}

std::vector<std::pair<int, int>> distinct_parts(const Partition& lambda) {
    std::vector<std::pair<int, int>> out;
    for (int r : lambda.parts()) {
        if (!out.empty() && out.back().first == r) ++out.back().second;
        else out.emplace_back(r, 1);
    }
    return out;
}

}  // namespace

SymFunc pd_apply(int r, const SymFunc& f) {
    SymFunc out(Basis::PowerSum);
    for (const SymFunc g = to_power_sum(f); const auto& [lambda, c] : g.terms()) {
        int m = lambda.multiplicity(r);
        if (m > 0) out.add_term(remove_part(lambda, r), c * Scalar(m));
    }
    return out;
}

SymFunc E_apply(int l, const SymFunc& f, const Scalar& p0) {
    SymFunc out(Basis::PowerSum);
    for (const SymFunc g = to_power_sum(f); const auto& [lambda, c] : g.terms()) {
        for (auto [r, m] : distinct_parts(lambda))
            emit(out, remove_part(lambda, r), {r + l - 1}, c * Scalar(r * m), p0);
    }
    return out;
}

SymFunc D_apply(int k, const SymFunc& f, const Scalar& p0, const Scalar& alpha) {
    SymFunc out(Basis::PowerSum);
    Scalar inv_alpha = alpha.inverse();
    for (const SymFunc g = to_power_sum(f); const auto& [lambda, c] : g.terms()) {
        auto parts = distinct_parts(lambda);
        for (auto [r, mr] : parts) {
            Partition without_r = remove_part(lambda, r);
            for (auto [q, mq] : parts) {
                int count = mr * (q == r ? mq - 1 : mq);
                if (count == 0) continue;
                emit(out, remove_part(without_r, q), {r + q + k - 2}, c * Scalar(r * q * count), p0);
            }
            if (r >= 2) emit(out, without_r, {r + k - 2}, c * Scalar(r * (r - 1) * mr), p0);
            int top = r + k - 2;
            if (top < 0) continue;
            Scalar w = c * Scalar(r * mr) * inv_alpha;
            for (int m = 0; m <= top; ++m) emit(out, without_r, {top - m, m}, w, p0);
            emit(out, without_r, {top}, -w * Scalar(top + 1), p0);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

ShiftedSymSpec ShiftedSymSpec::pi(int r) {
    ShiftedSymSpec s;
    s.terms_.emplace(Partition{r}, Scalar(1L));
    return s;
}

ShiftedSymSpec ShiftedSymSpec::constant(const Scalar& c) {
    ShiftedSymSpec s;
    if (!c.is_zero()) s.terms_.emplace(Partition(), c);
    return s;
}

int ShiftedSymSpec::degree() const {
    int d = -1;
    for (const auto& [kappa, c] : terms_) d = std::max(d, kappa.weight());
    return d;
}

bool ShiftedSymSpec::is_constant() const { return degree() <= 0; }

Scalar ShiftedSymSpec::eval(const Partition& lambda) const {
    Scalar s;
    for (const auto& [kappa, c] : terms_) {
        Scalar t = c;
        for (int r : kappa.parts()) t *= shifted_power_sum_eval(r, lambda);
        s += t;
    }
    return s;
}

ShiftedSymSpec ShiftedSymSpec::operator+(const ShiftedSymSpec& o) const {
    ShiftedSymSpec s = *this;
    for (const auto& [kappa, c] : o.terms_) {
        Scalar v = s.terms_[kappa] + c;
        if (v.is_zero()) s.terms_.erase(kappa);
        else s.terms_[kappa] = v;
    }
    return s;
}

ShiftedSymSpec ShiftedSymSpec::operator*(const ShiftedSymSpec& o) const {
    ShiftedSymSpec s;
    for (const auto& [a, x] : terms_)
        for (const auto& [b, y] : o.terms_) {
            ShiftedSymSpec t;
            t.terms_.emplace(partition_union(a, b), x * y);
            s = s + t;
        }
    return s;
}

ShiftedSymSpec operator*(const Scalar& c, const ShiftedSymSpec& f) { return ShiftedSymSpec::constant(c) * f; }

std::string ShiftedSymSpec::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [kappa, c] = *it;
        std::string mono;
        for (int r : kappa.parts()) mono += (mono.empty() ? "" : "*") + std::string("pi[") + std::to_string(r) + "]";
        std::string term;
        if (mono.empty()) term = c.to_string();
        else if (c.is_one()) term = mono;
        else term = "(" + c.to_string() + ")*" + mono;
        out += (out.empty() ? "" : " + ") + term;
    }
    return out;
}

ShiftedSymSpec ShiftedSymSpec::parse(std::string_view text) {
    ShiftedSymSpec total;
    for (const std::string& chunk : split_sum(text)) {
        std::string t = chunk;
        Scalar sign(strip_sign(t) ? -1L : 1L);
        ShiftedSymSpec term = constant(sign);
        for (const std::string& f : split_product(t)) {
            std::string g = trim(f);
            if (g.rfind("pi[", 0) == 0) term = term * pi(bracket_int(g, 2));
            else term = Scalar::parse(g) * term;
        }
        total = total + term;
    }
    return total;
}

// ---------------------------------------------------------------------------

struct OpExpr::Node {
    Kind kind;
    int index = 0;
    SymFunc f;
    Scalar c;
    Scalar p0;
    Scalar alpha;
    ShiftedSymSpec spec;
    std::vector<OpExpr> kids;
    int dmin = 0;
    int dmax = 0;
};

OpExpr OpExpr::pd(int r) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::PD;
    n->index = r;
    n->dmin = n->dmax = -r;
    return OpExpr(n);
}

OpExpr OpExpr::mul(const SymFunc& f) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Mul;
    n->f = to_power_sum(f);
    n->dmin = std::max(0, n->f.min_degree());
    n->dmax = std::max(0, n->f.degree());
    return OpExpr(n);
}

OpExpr OpExpr::E(int l, const Scalar& p0) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::E;
    n->index = l;
    n->p0 = p0;
    n->dmin = n->dmax = l - 1;
    return OpExpr(n);
}

OpExpr OpExpr::D(int k, const Scalar& p0, const Scalar& alpha) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::D;
    n->index = k;
    n->p0 = p0;
    n->alpha = alpha;
    n->dmin = n->dmax = k - 2;
    return OpExpr(n);
}

OpExpr OpExpr::jack_diag(const ShiftedSymSpec& f) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::JackDiag;
    n->spec = f;
    return OpExpr(n);
}

OpExpr OpExpr::scale(const Scalar& c) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Scale;
    n->c = c;
    return OpExpr(n);
}

OpExpr OpExpr::sum(std::vector<OpExpr> parts) {
    if (parts.size() == 1) return parts[0];
    auto n = std::make_shared<Node>();
    n->kind = Kind::Sum;
    n->dmin = parts.empty() ? 0 : parts[0].d_min();
    n->dmax = parts.empty() ? 0 : parts[0].d_max();
    for (const auto& p : parts) {
        n->dmin = std::min(n->dmin, p.d_min());
        n->dmax = std::max(n->dmax, p.d_max());
    }
    n->kids = std::move(parts);
    return OpExpr(n);
}

OpExpr OpExpr::compose(std::vector<OpExpr> parts) {
    if (parts.size() == 1) return parts[0];
    auto n = std::make_shared<Node>();
    n->kind = Kind::Compose;
    for (const auto& p : parts) {
        n->dmin += p.d_min();
        n->dmax += p.d_max();
    }
    n->kids = std::move(parts);
    return OpExpr(n);
}

OpExpr::Kind OpExpr::kind() const { return node_->kind; }
int OpExpr::d_min() const { return node_->dmin; }
int OpExpr::d_max() const { return node_->dmax; }

OpExpr OpExpr::operator+(const OpExpr& o) const { return sum({*this, o}); }
OpExpr OpExpr::operator-(const OpExpr& o) const { return sum({*this, Scalar(-1L) * o}); }

OpExpr operator*(const Scalar& c, const OpExpr& a) {
    if (a.kind() == OpExpr::Kind::Scale) return OpExpr::scale(c * a.node_->c);
    return OpExpr::compose({OpExpr::scale(c), a});
}

SymFunc OpExpr::apply(const SymFunc& f) const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::PD: return pd_apply(n.index, f);
        case Kind::Mul: return multiply(n.f, f);
        case Kind::E: return E_apply(n.index, f, n.p0);
        case Kind::D: return D_apply(n.index, f, n.p0, n.alpha);
        case Kind::JackDiag: {
            SymFunc j = convert(f, Basis::Jack);
            SymFunc scaled(Basis::Jack);
            for (const auto& [lambda, c] : j.terms()) scaled.add_term(lambda, c * n.spec.eval(lambda));
            return to_power_sum(scaled);
        }
        case Kind::Scale: return n.c * to_power_sum(f);
        case Kind::Sum: {
            SymFunc acc(Basis::PowerSum);
            for (const auto& k : n.kids) acc += k.apply(f);
            return acc;
        }
        case Kind::Compose: {
            SymFunc g = to_power_sum(f);
            for (auto it = n.kids.rbegin(); it != n.kids.rend(); ++it) g = it->apply(g);
            return g;
        }
    }
    return f;
}

std::string OpExpr::to_string() const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::PD: return "PD[" + std::to_string(n.index) + "]";
        case Kind::Mul: return "mul(" + n.f.to_string() + ")";
        case Kind::E: return "E[" + std::to_string(n.index) + "]";
        case Kind::D: return "D[" + std::to_string(n.index) + "]";
        case Kind::JackDiag: return "jack(" + n.spec.to_string() + ")";
        case Kind::Scale: return "{" + n.c.to_string() + "}";
        case Kind::Sum: {
            std::string s;
            for (const auto& k : n.kids) s += (s.empty() ? "" : " + ") + k.to_string();
            return s;
        }
        case Kind::Compose: {
            std::string s;
            for (const auto& k : n.kids) {
                std::string t = k.to_string();
                if (k.kind() == Kind::Sum) t = "(" + t + ")";
                s += (s.empty() ? "" : "*") + t;
            }
            return s;
        }
    }
    return "?";
}

OpExpr OpExpr::parse(std::string_view text) {
    std::vector<OpExpr> terms;
    auto chunks = split_sum(text);
    if (chunks.empty()) throw ParseError("empty operator");
    for (const std::string& chunk : chunks) {
        std::string t = chunk;
        Scalar sign(strip_sign(t) ? -1L : 1L);
        std::vector<OpExpr> factors;
        Scalar coeff = sign;
        for (const std::string& f : split_product(t)) {
            std::string g = trim(f);
            if (g.rfind("E[", 0) == 0) factors.push_back(E(bracket_int(g, 1)));
            else if (g.rfind("D[", 0) == 0) factors.push_back(D(bracket_int(g, 1)));
            else if (g.rfind("PD[", 0) == 0) factors.push_back(pd(bracket_int(g, 2)));
            else if (g.rfind("mul(", 0) == 0 && g.back() == ')') factors.push_back(mul(SymFunc::parse(g.substr(4, g.size() - 5))));
            else if (g.rfind("jack(", 0) == 0 && g.back() == ')') factors.push_back(jack_diag(ShiftedSymSpec::parse(g.substr(5, g.size() - 6))));
            else if (g.size() >= 2 && g.front() == '(' && g.back() == ')' && g.find_first_of("[") != std::string::npos) factors.push_back(parse(g.substr(1, g.size() - 2)));
            else if (g.size() >= 2 && g.front() == '{' && g.back() == '}') coeff *= Scalar::parse(g.substr(1, g.size() - 2));
            else coeff *= Scalar::parse(g);
        }
        if (factors.empty()) terms.push_back(scale(coeff));
        else if (coeff.is_one()) terms.push_back(compose(factors));
        else terms.push_back(coeff * compose(factors));
    }
    return sum(terms);
}

SymFunc op_apply(const OpExpr& a, const SymFunc& f) { return a.apply(f); }

OpExpr commutator(const OpExpr& a, const OpExpr& b) { return a * b - b * a; }

OpMatrix op_matrix(const OpExpr& a, int max_degree) {
    OpMatrix m;
    for (const Partition& mu : partitions_up_to(max_degree)) m.emplace(mu, a.apply(SymFunc::element(Basis::PowerSum, mu)));
    return m;
}

OpMatrix commutator_eval(const OpExpr& a, const OpExpr& b, int max_degree) {
    OpMatrix m;
    for (const Partition& mu : partitions_up_to(max_degree)) {
        SymFunc p = SymFunc::element(Basis::PowerSum, mu);
        m.emplace(mu, a.apply(b.apply(p)) - b.apply(a.apply(p)));
    }
    return m;
}

bool matrices_equal(const OpMatrix& x, const OpMatrix& y) {
    if (x.size() != y.size()) return false;
    for (const auto& [mu, col] : x) {
        auto it = y.find(mu);
        if (it == y.end() || !col.equals(it->second)) return false;
    }
    return true;
}

SymFunc exp_truncated(const OpExpr& a, int L, const SymFunc& f) {
    SymFunc acc = to_power_sum(f), term = acc;
    for (int k = 1; k <= L; ++k) {
        term = Scalar::rational(1, k) * a.apply(term);
        if (term.is_zero()) break;
        acc += term;
    }
    return acc;
}

// ---------------------------------------------------------------------------

namespace {

Scalar eps_p0(const Partition& lambda) { return epsX_jack_product(lambda, gen(Gen::P0)); }

SymFunc compute_jack_action(Prim which, const Partition& lambda) {
    SymFunc out(Basis::Jack);
    Scalar inv = alpha().inverse(), p0 = gen(Gen::P0);
    int len = lambda.length();
    switch (which) {
        case Prim::E1: out.add_term(lambda, Scalar(lambda.weight())); break;
        case Prim::D2: out.add_term(lambda, d_lambda(lambda, p0)); break;
        case Prim::E2: {
            Scalar h = hook_product(lambda);
            for (int i = 1; i <= len + 1; ++i) {
                auto up = lambda.add_box(i);
                if (!up) continue;
                Scalar c = binomial_one_box(lambda, i) * (Scalar(lambda[i]) - Scalar(i - 1) * inv);
                out.add_term(*up, h * c / hook_product(*up));
            }
            break;
        }
        case Prim::E0:
        case Prim::D1: {
            Scalar e = eps_p0(lambda);
            for (int i = 1; i <= len; ++i) {
                auto down = lambda.remove_box(i);
                if (!down) continue;
                Scalar c = binomial_one_box(*down, i);
                if (which == Prim::D1) c *= Scalar(lambda[i] - 1) + (p0 - Scalar(i)) * inv;
                out.add_term(*down, e * c / eps_p0(*down));
            }
            break;
        }
        case Prim::D0: {
            Scalar e = eps_p0(lambda);
            for (int i = 1; i <= len; ++i) {
                auto down = lambda.remove_box(i);
                if (!down) continue;
                Scalar ci = binomial_one_box(*down, i);
                for (int j = 1; j <= len; ++j) {
                    auto down2 = down->remove_box(j);
                    if (!down2) continue;
                    Scalar c = ci * binomial_one_box(*down2, j) *
                               (Scalar(lambda[i] - lambda[j] + (i == j ? 1 : 0)) + Scalar(j - i) * inv);
                    out.add_term(*down2, e * c / eps_p0(*down2));
                }
            }
            break;
        }
    }
    return out;
}

Memo<std::pair<int, Partition>, SymFunc>& action_cache() {
    static Memo<std::pair<int, Partition>, SymFunc> m;
    return m;
}

}  // namespace

const SymFunc& jack_action(Prim which, const Partition& lambda) {
    return action_cache().get({static_cast<int>(which), lambda}, [&] { return compute_jack_action(which, lambda); });
}

OpExpr CmsData::op() const {
    std::vector<OpExpr> parts;
    auto add = [&](const Scalar& c, OpExpr o) {
        if (c.is_zero()) return;
        parts.push_back(c.is_one() ? o : c * o);
    };
    add(a0, OpExpr::D(0));
    add(a1, OpExpr::D(1));
    add(a2, OpExpr::D(2));
    add(b0, OpExpr::E(0));
    add(b1, OpExpr::E(1));
    if (parts.empty()) return OpExpr::scale(Scalar());
    return OpExpr::sum(parts);
}

Scalar CmsData::eigenvalue(const Partition& lambda) const {
    return eigenvalue_generic(a2, b1, lambda, gen(Gen::P0));
}

SymFunc CmsData::apply_jack(const SymFunc& f) const {
    SymFunc j = convert(f, Basis::Jack);
    SymFunc out(Basis::Jack);
    const std::pair<const Scalar*, Prim> parts[] = {
        {&a0, Prim::D0}, {&a1, Prim::D1}, {&a2, Prim::D2}, {&b0, Prim::E0}, {&b1, Prim::E1}};
    for (const auto& [lambda, c] : j.terms()) {
        for (const auto& [coef, prim] : parts) {
            if (coef->is_zero()) continue;
            out += (c * *coef) * jack_action(prim, lambda);
        }
    }
    return out;
}

CmsData CmsData::hermite(const Scalar& nu2) { return {Scalar(1L), Scalar(), Scalar(), Scalar(), Scalar(-2L) * nu2}; }

CmsData CmsData::laguerre(const Scalar& a, const Scalar& nu) {
    return {Scalar(), Scalar(1L), Scalar(), a + Scalar(1L), -nu};
}

CmsData CmsData::jacobi(const Scalar& p, const Scalar& q) {
    return {Scalar(), Scalar(2L), Scalar(1L), -(Scalar(2L) * p + Scalar(2L) * q - Scalar(1L)),
            -(p + Scalar(2L) * q - Scalar(1L))};
}

SymFunc triangular_eigenfunction(const CmsData& L, const Partition& lambda) {
    std::vector<Partition> subs = subpartitions(lambda);
    std::map<Partition, SymFunc> images;
    for (const Partition& nu : subs) images.emplace(nu, L.apply_jack(SymFunc::element(Basis::Jack, nu)));
    Scalar top = L.eigenvalue(lambda);
    std::map<Partition, Scalar> u;
    u[lambda] = Scalar(1L);
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
        const Partition& mu = *it;
        if (mu == lambda) continue;
        Scalar rhs;
        for (const auto& [nu, coeff] : u) rhs += coeff * images.at(nu).coefficient(mu);
        Scalar gap = top - L.eigenvalue(mu);
        if (gap.is_zero()) throw DegenerateEigenvalue(lambda.to_string() + " vs " + mu.to_string());
        Scalar v = rhs / gap;
        if (!v.is_zero()) u[mu] = v;
    }
    SymFunc out(Basis::Jack);
    for (const auto& [mu, c] : u) out.add_term(mu, c);
    return out;
}

SymFunc frep_eigenfunction(const CmsData& L, const Partition& lambda) {
    OpExpr op = L.op();
    Scalar top = L.eigenvalue(lambda);
    SymFunc f = jack_in_power_sums(lambda);
    for (const Partition& mu : subpartitions(lambda)) {
        if (mu == lambda) continue;
        Scalar e = L.eigenvalue(mu), gap = top - e;
        if (gap.is_zero()) throw DegenerateEigenvalue(lambda.to_string() + " vs " + mu.to_string());
        f = gap.inverse() * (op.apply(f) - e * f);
    }
    return f;
}

OpExpr bch_eigenop(BchKind kind, const ShiftedSymSpec& f, const Scalar& param, const Scalar& a) {
    if (f.is_constant()) return OpExpr::scale(f.eval(Partition()));
    OpExpr A = kind == BchKind::Hermite ? OpExpr::D(0) : OpExpr::D(1) + (a + Scalar(1L)) * OpExpr::E(0);
    Scalar step = kind == BchKind::Hermite ? Scalar(-1L) / (Scalar(4L) * param) : Scalar(-1L) / param;
    std::vector<OpExpr> parts;
    OpExpr term = OpExpr::jack_diag(f);
    parts.push_back(term);
    Scalar c(1L);
    for (int j = 1; j <= f.degree(); ++j) {
        term = commutator(A, term);
        c = c * step / Scalar(j);
        parts.push_back(c * term);
    }
    return OpExpr::sum(parts);
}

}  // namespace cms
