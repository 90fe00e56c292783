#include "cms/pieri.hpp"

#include <functional>

#include "cms/errors.hpp"

namespace cms {

namespace {

const Scalar kOne(1L);
const Scalar kTwo(2L);

// Signed subsets of pool with exactly k elements.
std::vector<SignedIndexSet> signed_subsets(const std::vector<int>& pool, int k) {
    std::vector<SignedIndexSet> out;
    SignedIndexSet cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t t = start; t < pool.size(); ++t) {
            cur.plus.insert(pool[t]);
            rec(t + 1);
            cur.plus.erase(pool[t]);
            cur.minus.insert(pool[t]);
            rec(t + 1);
            cur.minus.erase(pool[t]);
        }
    };
    rec(0);
    return out;
}

std::vector<int> window(int n) {
    std::vector<int> I;
    for (int i = 1; i <= n; ++i) I.push_back(i);
    return I;
}

bool in(const SignedIndexSet& s, int i) { return s.plus.count(i) || s.minus.count(i); }

std::vector<int> complement(const std::vector<int>& pool, const SignedIndexSet& s) {
    std::vector<int> out;
    for (int i : pool)
        if (!in(s, i)) out.push_back(i);
    return out;
}

std::optional<Partition> shifted(const Partition& lambda, const SignedIndexSet& J) {
    std::vector<int> parts = lambda.parts();
    int top = 0;
    for (int j : J.plus) top = std::max(top, j);
    for (int j : J.minus) top = std::max(top, j);
    if (static_cast<int>(parts.size()) < top) parts.resize(top, 0);
    for (int j : J.plus) ++parts[j - 1];
    for (int j : J.minus) --parts[j - 1];
    for (std::size_t t = 0; t < parts.size(); ++t) {
        if (parts[t] < 0) return std::nullopt;
        if (t > 0 && parts[t] > parts[t - 1]) return std::nullopt;
    }
    return Partition(parts);
}

// j - i + alpha(lambda_i - lambda_j)
Scalar gap(const Partition& lambda, int i, int j) { return Scalar(long(j - i)) + alpha() * Scalar(long(lambda[i] - lambda[j])); }

Scalar sign(int n) { return n % 2 ? Scalar(-1L) : kOne; }

// Products over i in rest of (1 -/+ 1/gap(i, j)).
Scalar row_product(const Partition& lambda, int j, const std::vector<int>& rest, const SignedIndexSet& skip, int s) {
    Scalar v = kOne;
    for (int i : rest)
        if (i != j && !in(skip, i)) v *= kOne + Scalar(long(s)) / gap(lambda, i, j);
    return v;
}

Scalar down_factor(const Partition& lambda, int j) {
    return (gen(Gen::P0) - Scalar(long(j - 1))) / alpha() + Scalar(long(lambda[j] - 1));
}

// The literal V-hat of the Laguerre closed form over the window I(L) with J
// excluded from the row products (excl also lists outer sets already used).
Scalar laguerre_vhat(const Partition& lambda, int L, const SignedIndexSet& J, const SignedIndexSet& excl) {
    Scalar p0 = gen(Gen::P0), a = gen(Gen::A), A = alpha(), v = kOne;
    std::vector<int> I = window(L);
    for (int j : J.minus) v *= down_factor(lambda, j) * ((p0 - Scalar(long(j))) / A + Scalar(long(lambda[j])) + a);
    for (int u : J.plus)
        for (int w : J.minus) {
            Scalar d = gap(lambda, u, w);
            v *= (kOne + kOne / d) * (kOne + kOne / (d + A));
        }
    for (int j : J.minus)
        v *= (Scalar(long(L - j)) + A * Scalar(long(lambda[j]))) * row_product(lambda, j, complement(I, excl), J, 1);
    for (int j : J.plus)
        v *= row_product(lambda, j, complement(I, excl), J, -1) / (Scalar(long(L + 1 - j)) + A * Scalar(long(lambda[j])));
    return v;
}

// The K-factor that the oracle singles out (see the Pieri notes in the README).
Scalar laguerre_kfactor(const Partition& lambda, int L, const SignedIndexSet& K, const SignedIndexSet& J) {
    Scalar p0 = gen(Gen::P0), a = gen(Gen::A), A = alpha(), v = kOne;
    std::vector<int> rest = complement(window(L), J);
    for (int j : K.plus) {
        Scalar lj(long(lambda[j]));
        v *= A * ((p0 - Scalar(long(j - 1))) / A + lj) * ((p0 - Scalar(long(j))) / A + lj + a + kOne) /
             (Scalar(long(L + 1 - j)) + A * lj);
        v *= row_product(lambda, j, rest, K, -1);
    }
    for (int j : K.minus) {
        v *= (Scalar(long(L - j)) + A * Scalar(long(lambda[j]))) / A;
        v *= row_product(lambda, j, rest, K, 1);
    }
    for (int u : K.plus)
        for (int w : K.minus) {
            Scalar d = gap(lambda, u, w);
            v *= (kOne + kOne / d) * (kOne - kOne / (d + A));
        }
    return v;
}

SignedIndexSet merged(const SignedIndexSet& x, const SignedIndexSet& y) {
    SignedIndexSet out = x;
    out.plus.insert(y.plus.begin(), y.plus.end());
    out.minus.insert(y.minus.begin(), y.minus.end());
    return out;
}

// Jacobi building blocks, z_i = (p0 - i)/alpha - p/2 - q + lambda_i.
struct JacobiData {
    Scalar p, q;
    std::map<int, Scalar> z;
    Scalar zs(int j, int e) const { return Scalar(long(e)) * z.at(j); }
};

Scalar v_hat(const Scalar& z) { return (z + alpha().inverse()) / z; }

Scalar w_hat(const JacobiData& d, const Scalar& z) {
    Scalar h = Scalar::rational(1, 2);
    return (z - d.p * h - d.q) * (z + (kOne - d.p) * h) / (z * (z + h));
}

std::vector<std::pair<int, int>> signed_list(const SignedIndexSet& J) {
    std::vector<std::pair<int, int>> out;
    for (int j : J.plus) out.emplace_back(j, 1);
    for (int j : J.minus) out.emplace_back(j, -1);
    return out;
}

Scalar jacobi_V(const JacobiData& d, bool plus, const std::vector<int>& I, const SignedIndexSet& J) {
    Scalar v = kOne;
    auto js = signed_list(J);
    for (auto [j, e] : js) v *= w_hat(d, d.zs(j, e));
    for (std::size_t x = 0; x < js.size(); ++x)
        for (std::size_t y = x + 1; y < js.size(); ++y) {
            Scalar s = d.zs(js[x].first, js[x].second) + d.zs(js[y].first, js[y].second);
            v *= v_hat(s) * (plus ? v_hat(s + kOne) : v_hat(-s - kOne));
        }
    for (auto [j, e] : js)
        for (int i : I)
            if (!in(J, i)) {
                Scalar s = d.zs(j, e);
                v *= v_hat(s + d.z.at(i)) * v_hat(s - d.z.at(i));
            }
    return v;
}

Scalar jacobi_R(const JacobiData& d, const SignedIndexSet& J, int m) {
    Scalar v = kOne, h = Scalar::rational(1, 2), ia = alpha().inverse();
    for (auto [j, e] : signed_list(J)) {
        Scalar s = d.zs(j, e);
        v *= (s + d.z.at(m) + ia) * (s + d.p * h + d.q + ia) / ((s - d.p * h - d.q) * (s - d.z.at(m)));
    }
    return v;
}

void add_to(std::map<Partition, Scalar>& terms, const Partition& mu, const Scalar& c) {
    Scalar& slot = terms[mu];
    slot += c;
}

PieriExpansion pruned(PieriExpansion e) {
    std::erase_if(e.terms, [](const auto& kv) { return kv.second.is_zero(); });
    return e;
}

}  // namespace

std::string_view pieri_family_name(PieriFamily f) {
    switch (f) {
        case PieriFamily::Hermite: return "hermite";
        case PieriFamily::Laguerre: return "laguerre";
        case PieriFamily::Jacobi: return "jacobi";
    }
    return "?";
}

std::optional<PieriFamily> pieri_family_from_name(std::string_view name) {
    for (PieriFamily f : {PieriFamily::Hermite, PieriFamily::Laguerre, PieriFamily::Jacobi})
        if (pieri_family_name(f) == name) return f;
    return std::nullopt;
}

bool PieriExpansion::equals(const PieriExpansion& o) const {
    for (const auto& [mu, c] : terms) {
        auto it = o.terms.find(mu);
        if (!(it == o.terms.end() ? c.is_zero() : it->second == c)) return false;
    }
    for (const auto& [mu, c] : o.terms)
        if (!terms.count(mu) && !c.is_zero()) return false;
    return true;
}

Scalar pieri_normalization(const Partition& lambda) {
    return alpha().pow(lambda.weight()) * renormalization_factor(lambda);
}

std::optional<SignedIndexSet> pieri_shift(const Partition& source, const Partition& target) {
    SignedIndexSet s;
    int n = std::max(source.length(), target.length());
    for (int i = 1; i <= n; ++i) {
        int d = target[i] - source[i];
        if (d == 1) s.plus.insert(i);
        else if (d == -1) s.minus.insert(i);
        else if (d != 0) return std::nullopt;
    }
    return s;
}

PieriExpansion pieri_oracle(PieriFamily family, const Partition& lambda, int r) {
    if (r < 1) throw Error("Pieri degree r must be positive");
    install_default_jack_provider();
    SymFunc er = to_power_sum(SymFunc::element(Basis::Monomial, Partition(std::vector<int>(r, 1))));
    PieriExpansion out{r, lambda, {}};
    switch (family) {
        case PieriFamily::Hermite: {
            auto F = [](const Partition& k) { return hermite_nu2(k, kOne); };
            SymFunc f = pieri_normalization(lambda) * multiply(er, to_power_sum(F(lambda)));
            out.terms = expand_in_family(f, F, pieri_normalization);
            break;
        }
        case PieriFamily::Laguerre: {
            auto F = [](const Partition& k) { return laguerre_value(k, gen(Gen::A), kOne); };
            SymFunc f = pieri_normalization(lambda) * multiply(er, to_power_sum(F(lambda)));
            out.terms = expand_in_family(f, F, pieri_normalization);
            break;
        }
        case PieriFamily::Jacobi: {
            Scalar p = gen(Gen::P), q = gen(Gen::Q);
            auto F = [&](const Partition& k) { return jacobi_value(k, p, q); };
            auto inv_eps = [&](const Partition& k) { return jacobi_eps0(k, p, q).inverse(); };
            SymFunc f = Scalar(long(1) << r) * inv_eps(lambda) * multiply(er, to_power_sum(F(lambda)));
            out.terms = expand_in_family(f, F, inv_eps);
            break;
        }
    }
    return pruned(std::move(out));
}

PieriExpansion hermite_pieri_e1(const Partition& lambda) {
    PieriExpansion out{1, lambda, {}};
    int l = lambda.length();
    std::vector<int> I = window(l + 1);
    Scalar A = alpha();
    for (int j : I) {
        Scalar lj(long(lambda[j]));
        if (auto mu = lambda.add_box(j))
            add_to(out.terms, *mu, row_product(lambda, j, I, {}, -1) / (Scalar(long(l + 2 - j)) + A * lj));
        if (auto mu = lambda.remove_box(j))
            add_to(out.terms, *mu,
                   Scalar::rational(1, 2) * down_factor(lambda, j) * (Scalar(long(l + 1 - j)) + A * lj) *
                       row_product(lambda, j, I, {}, 1));
    }
    return pruned(std::move(out));
}

PieriExpansion hermite_pieri_top(const Partition& lambda, int r) {
    PieriExpansion out{r, lambda, {}};
    int L = lambda.length() + r;
    std::vector<int> I = window(L);
    Scalar A = alpha();
    for (const SignedIndexSet& J : signed_subsets(I, r)) {
        auto mu = shifted(lambda, J);
        if (!mu) continue;
        Scalar u = kOne;
        for (int a : J.plus)
            for (int b : J.minus) {
                Scalar d = gap(lambda, a, b);
                u *= (kOne + kOne / d) * (kOne + kOne / (d + A));
            }
        for (int j : J.minus) u *= (Scalar(long(L - j)) + A * Scalar(long(lambda[j]))) * row_product(lambda, j, I, J, 1);
        for (int j : J.plus)
            u *= row_product(lambda, j, I, J, -1) / (Scalar(long(L + 1 - j)) + A * Scalar(long(lambda[j])));
        Scalar w = kTwo.pow(-static_cast<int>(J.minus.size()));
        for (int j : J.minus) w *= down_factor(lambda, j);
        add_to(out.terms, *mu, w * u);
    }
    return pruned(std::move(out));
}

PieriExpansion laguerre_pieri_e1(const Partition& lambda, int range) {
    PieriExpansion out{1, lambda, {}};
    int l = lambda.length();
    std::vector<int> I = window(range);
    Scalar A = alpha(), p0 = gen(Gen::P0), a = gen(Gen::A);
    for (int j : I) {
        Scalar lj(long(lambda[j]));
        if (auto mu = lambda.add_box(j))
            add_to(out.terms, *mu, row_product(lambda, j, I, {}, -1) / (Scalar(long(l + 2 - j)) + A * lj));
        if (auto mu = lambda.remove_box(j))
            add_to(out.terms, *mu,
                   down_factor(lambda, j) * ((p0 - Scalar(long(j))) / A + lj + a) *
                       (Scalar(long(l + 1 - j)) + A * lj) * row_product(lambda, j, I, {}, 1));
    }
    return pruned(std::move(out));
}

PieriExpansion laguerre_pieri_closed(const Partition& lambda, int r, KSumForm form) {
    PieriExpansion out{r, lambda, {}};
    int L = lambda.length() + r;
    std::vector<int> I = window(L);
    for (int size = 0; size <= r; ++size)
        for (const SignedIndexSet& J : signed_subsets(I, size)) {
            auto mu = shifted(lambda, J);
            if (!mu) continue;
            Scalar sum;
            for (const SignedIndexSet& K : signed_subsets(complement(I, J), r - size)) {
                if (form == KSumForm::Literal)
                    sum += laguerre_vhat(lambda, L, K, merged(J, K));
                else
                    sum += sign(static_cast<int>(K.size())) * laguerre_kfactor(lambda, L, K, J);
            }
            add_to(out.terms, *mu, sign(r - size) * laguerre_vhat(lambda, L, J, J) * sum);
        }
    return pruned(std::move(out));
}

PieriExpansion jacobi_pieri_closed(const Partition& lambda, int r, const Scalar& p, const Scalar& q) {
    PieriExpansion out{r, lambda, {}};
    int L = lambda.length() + r, m = L + 1;
    std::vector<int> I = window(L);
    JacobiData d{p, q, {}};
    Scalar h = Scalar::rational(1, 2);
    for (int i = 1; i <= m; ++i) d.z[i] = (gen(Gen::P0) - Scalar(long(i))) / alpha() - p * h - q + Scalar(long(lambda[i]));
    for (int size = 0; size <= r; ++size)
        for (const SignedIndexSet& J : signed_subsets(I, size)) {
            auto mu = shifted(lambda, J);
            if (!mu) continue;
            std::vector<int> rest = complement(I, J);
            Scalar sum;
            for (const SignedIndexSet& K : signed_subsets(rest, r - size))
                sum += sign(static_cast<int>(K.size())) * jacobi_V(d, false, rest, K) * jacobi_R(d, K, m);
            add_to(out.terms, *mu, jacobi_V(d, true, I, J) * jacobi_R(d, J, m) * sum);
        }
    return pruned(std::move(out));
}

PieriExpansion laguerre_pieri_from_jacobi(const Partition& lambda, int r) {
    Scalar a = gen(Gen::A), q = gen(Gen::Q), p = -a - q - Scalar::rational(1, 2);
    PieriExpansion jac = jacobi_pieri_closed(lambda, r, p, q);
    PieriExpansion out{r, lambda, {}};
    Scalar e0 = jacobi_eps0(lambda, p, q);
    for (const auto& [mu, c] : jac.terms) {
        Scalar x = c * (q / Scalar(4L)).pow(r) * (kTwo / q).pow(mu.weight() - lambda.weight()) * e0 / jacobi_eps0(mu, p, q);
        out.terms[mu] = pieri_normalization(lambda) / pieri_normalization(mu) * x.limit_at_infinity(Gen::Q);
    }
    return pruned(std::move(out));
}

bool is_polynomial_in(const Scalar& x, Gen g) {
    Poly num = x.numerator();
    for (const auto& f : x.factors()) {
        if (f.exp > 0 || !f.poly->involves(g)) continue;
        auto quo = num.divide_exact(f.poly->pow(static_cast<unsigned>(-f.exp)));
        if (!quo) return false;
        num = *quo;
    }
    return true;
}

std::vector<StructureCheck> hermite_structure(const PieriExpansion& oracle) {
    std::vector<StructureCheck> out;
    for (const auto& [mu, c] : oracle.terms) {
        StructureCheck s{mu};
        auto J = pieri_shift(oracle.source, mu);
        if (J && static_cast<int>(J->size()) <= oracle.r) {
            s.parity = (oracle.r - static_cast<int>(J->size())) % 2 == 0;
            s.polynomial = is_polynomial_in(c, Gen::P0);
            Scalar rest = c;
            for (int j : J->minus) rest /= down_factor(oracle.source, j);
            s.divisible = is_polynomial_in(rest, Gen::P0);
        }
        out.push_back(s);
    }
    return out;
}

namespace {

void compare(std::vector<ClosedFormCheck>& sink, const std::string& form, const PieriExpansion& closed,
             const PieriExpansion& oracle, const std::function<bool(const Partition&)>& keep) {
    std::set<Partition> targets;
    for (const auto& [mu, c] : oracle.terms) targets.insert(mu);
    for (const auto& [mu, c] : closed.terms) targets.insert(mu);
    for (const Partition& mu : targets) {
        if (!keep(mu)) continue;
        auto o = oracle.terms.find(mu);
        auto c = closed.terms.find(mu);
        Scalar ov = o == oracle.terms.end() ? Scalar() : o->second;
        Scalar cv = c == closed.terms.end() ? Scalar() : c->second;
        sink.push_back({form, mu, ov == cv});
    }
}

}  // namespace

bool ClosedFormReport::ok() const {
    for (const auto& c : checks)
        if (!c.matches) return false;
    for (const auto& s : structure)
        if (!s.ok()) return false;
    return true;
}

ClosedFormReport pieri_general(PieriFamily family, const Partition& lambda, int r) {
    ClosedFormReport rep{pieri_oracle(family, lambda, r), {}, {}, {}};
    const PieriExpansion& o = rep.oracle;
    auto all = [](const Partition&) { return true; };
    switch (family) {
        case PieriFamily::Hermite: {
            if (r == 1) compare(rep.checks, "e1", hermite_pieri_e1(lambda), o, all);
            auto top = [&](const Partition& mu) {
                auto J = pieri_shift(lambda, mu);
                return J && static_cast<int>(J->size()) == r;
            };
            compare(rep.checks, "top", hermite_pieri_top(lambda, r), o, top);
            rep.structure = hermite_structure(o);
            break;
        }
        case PieriFamily::Laguerre: {
            compare(rep.checks, "k-sum", laguerre_pieri_closed(lambda, r, KSumForm::Corrected), o, all);
            compare(rep.checks, "jacobi-limit", laguerre_pieri_from_jacobi(lambda, r), o, all);
            compare(rep.literal, "k-sum-literal", laguerre_pieri_closed(lambda, r, KSumForm::Literal), o, all);
            if (r == 1) {
                auto moved = [&](const Partition& mu) { return !(mu == lambda); };
                compare(rep.checks, "e1", laguerre_pieri_e1(lambda, lambda.length() + 1), o, moved);
                compare(rep.literal, "e1-literal-range", laguerre_pieri_e1(lambda, lambda.weight() + 1), o, moved);
                compare(rep.literal, "e1-diagonal-omitted", PieriExpansion{1, lambda, {}}, o,
                        [&](const Partition& mu) { return mu == lambda; });
            }
            break;
        }
        case PieriFamily::Jacobi:
            compare(rep.checks, "closed", jacobi_pieri_closed(lambda, r), o, all);
            break;
    }
    return rep;
}

}  // namespace cms

namespace cms {

Scalar ideal_p0(IdealForm form, int n, int m) {
    Scalar nn{long(n)}, mm{long(m)};
    if (form == IdealForm::First) return nn - alpha() * mm;
    return nn + kOne - alpha() * (mm + gen(Gen::A) + kOne);
}

namespace {

SymFunc family_at(PieriFamily family, const Partition& lambda) {
    switch (family) {
        case PieriFamily::Hermite: return hermite_nu2(lambda, kOne);
        case PieriFamily::Laguerre: return laguerre_value(lambda, gen(Gen::A), kOne);
        case PieriFamily::Jacobi: break;
    }
    throw Error("ideal checks are for the Hermite and Laguerre families");
}

}  // namespace

bool family_in_ideal(PieriFamily family, IdealForm form, int n, int m, const Partition& lambda) {
    SymFunc f = family_at(family, lambda).substitute({{Gen::P0, ideal_p0(form, n, m)}});
    return supported_in_ideal(f, n, m);
}

bool pieri_preserves_ideal(PieriFamily family, IdealForm form, int n, int m, const Partition& lambda, int r) {
    family_at(family, lambda);  // rejects Jacobi
    Bindings at{{Gen::P0, ideal_p0(form, n, m)}};
    for (const auto& [mu, c] : pieri_oracle(family, lambda, r).terms)
        if (!ideal_membership(n, m, mu) && !c.substitute(at).is_zero()) return false;
    return true;
}

}  // namespace cms
