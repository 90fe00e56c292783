#include "cms/families.hpp"

#include <tuple>

#include "cms/errors.hpp"
#include "cms/memo.hpp"

namespace cms {

namespace {

// D^2 - (2/alpha)(p0 - 1) E^1 applied to m_nu, in the monomial basis.
const SymFunc& laplace_on_monomial(const Partition& nu) {
    static Memo<Partition, SymFunc> memo;
    return memo.get(nu, [&] {
        const SymFunc& f = monomial_in_power_sums(nu);
        Scalar shift = Scalar(2L) / alpha() * (gen(Gen::P0) - Scalar(1L));
        SymFunc img = D_apply(2, f) - shift * E_apply(1, f);
        return convert(img, Basis::Monomial);
    });
}

using Key = std::tuple<Partition, std::string, std::string, int>;

std::string key_of(const Scalar& x) { return x.to_string(); }

SymFunc to_jack(const SymFunc& f) { return f.basis() == Basis::Jack ? f : convert(f, Basis::Jack); }

}  // namespace

SymFunc jack(const Partition& lambda) {
    static Memo<Partition, SymFunc> memo;
    return memo.get(lambda, [&] {
        std::vector<Partition> below;
        for (const Partition& mu : partitions_of(lambda.weight()))
            if (dominates(lambda, mu)) below.push_back(mu);
        Scalar top = eigenvalue_jack(lambda);
        std::map<Partition, Scalar> c;
        c[lambda] = Scalar(1L);
        for (auto it = below.rbegin(); it != below.rend(); ++it) {
            const Partition& mu = *it;
            if (mu == lambda) continue;
            Scalar rhs;
            for (const auto& [nu, cn] : c) rhs += cn * laplace_on_monomial(nu).coefficient(mu);
            Scalar v = rhs / (top - eigenvalue_jack(mu));
            if (!v.is_zero()) c[mu] = v;
        }
        SymFunc out(Basis::Monomial);
        for (const auto& [mu, v] : c) out.add_term(mu, v);
        return out;
    });
}

void install_default_jack_provider() {
    if (!has_jack_provider()) set_jack_provider([](const Partition& l) { return jack(l); });
}

std::string_view family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::Jack: return "jack";
        case FamilyKind::Hermite: return "hermite";
        case FamilyKind::Laguerre: return "laguerre";
        case FamilyKind::JacobiScript: return "jacobi";
        case FamilyKind::JacobiMonic: return "jacobi-monic";
    }
    return "?";
}

SymFunc hermite_nu2(const Partition& lambda, const Scalar& nu2, Route route) {
    install_default_jack_provider();
    static Memo<Key, SymFunc> memo;
    return memo.get(Key{lambda, key_of(nu2), "", static_cast<int>(route)}, [&] {
        CmsData L = CmsData::hermite(nu2);
        switch (route) {
            case Route::Solver: return triangular_eigenfunction(L, lambda);
            case Route::Product: return to_jack(frep_eigenfunction(L, lambda));
            case Route::Exponential: {
                OpExpr A = (Scalar(-1L) / (Scalar(4L) * nu2)) * OpExpr::D(0);
                return to_jack(exp_truncated(A, lambda.weight() / 2, jack_in_power_sums(lambda)));
            }
        }
        throw Error("unknown route");
    });
}

FamilyElement hermite(const Partition& lambda, const Scalar& nu) {
    return {FamilyKind::Hermite, lambda, hermite_nu2(lambda, nu * nu), {{Gen::Nu, nu}}};
}

SymFunc laguerre_value(const Partition& lambda, const Scalar& a, const Scalar& nu, Route route) {
    install_default_jack_provider();
    static Memo<Key, SymFunc> memo;
    return memo.get(Key{lambda, key_of(a), key_of(nu), static_cast<int>(route)}, [&] {
        CmsData L = CmsData::laguerre(a, nu);
        switch (route) {
            case Route::Solver: return triangular_eigenfunction(L, lambda);
            case Route::Product: return to_jack(frep_eigenfunction(L, lambda));
            case Route::Exponential: {
                OpExpr A = (Scalar(-1L) / nu) * (OpExpr::D(1) + (a + Scalar(1L)) * OpExpr::E(0));
                return to_jack(exp_truncated(A, lambda.weight(), jack_in_power_sums(lambda)));
            }
        }
        throw Error("unknown route");
    });
}

FamilyElement laguerre(const Partition& lambda, const Scalar& a, const Scalar& nu) {
    return {FamilyKind::Laguerre, lambda, laguerre_value(lambda, a, nu), {{Gen::A, a}, {Gen::Nu, nu}}};
}

SymFunc jacobi_value(const Partition& lambda, const Scalar& p, const Scalar& q, Route route) {
    install_default_jack_provider();
    static Memo<Key, SymFunc> memo;
    return memo.get(Key{lambda, key_of(p), key_of(q), static_cast<int>(route)}, [&] {
        CmsData L = CmsData::jacobi(p, q);
        switch (route) {
            case Route::Solver: return triangular_eigenfunction(L, lambda);
            case Route::Product: return to_jack(frep_eigenfunction(L, lambda));
            case Route::Exponential: break;
        }
        throw Error("Jacobi functions have no exponential formula");
    });
}

FamilyElement jacobi(const Partition& lambda, const Scalar& p, const Scalar& q) {
    return {FamilyKind::JacobiScript, lambda, jacobi_value(lambda, p, q), {{Gen::P, p}, {Gen::Q, q}}};
}

FamilyElement jacobi_monic(const Partition& lambda, const Scalar& p, const Scalar& q) {
    SymFunc v = apply_sigma(Scalar(-2L), to_power_sum(jacobi_value(lambda, p, q)));
    return {FamilyKind::JacobiMonic, lambda, Scalar(-2L).pow(-lambda.weight()) * v, {{Gen::P, p}, {Gen::Q, q}}};
}

Scalar jacobi_eps0(const Partition& lambda, const Scalar& p, const Scalar& q) {
    Scalar a = alpha(), p0 = gen(Gen::P0), half = Scalar::rational(1, 2), one(1L), two(2L);
    Scalar num = c_factor(CKind::Zero, lambda, p0 / a) *
                 c_factor(CKind::Zero, lambda, (p0 - one) / a - p - q + half);
    Scalar den = c_factor(CKind::Minus, lambda, a.inverse()) *
                 c_factor(CKind::Plus, lambda, two * p0 / a - p - two * q - one);
    return two.pow(lambda.weight()) * num / den;
}

Scalar constant_term(const SymFunc& f) { return to_power_sum(f).coefficient(Partition()); }

Scalar renormalization_factor(const Partition& lambda) { return c_factor(CKind::Minus, lambda, alpha().inverse()); }

FamilyElement renormalize(const FamilyElement& e) {
    FamilyElement out = e;
    out.value = renormalization_factor(e.label) * e.value;
    return out;
}

namespace {

Scalar b_dual(const Partition& lambda) {
    return b_coefficient(lambda.conjugate()).substitute({{Gen::Alpha, alpha().inverse()}});
}

// Right-hand side of a duality: b_{lambda'}(1/alpha) F_{lambda'} with alpha -> 1/alpha
// and the extra bindings applied simultaneously; p0 is left alone because
// omega_alpha already acts on it.
bool duality_holds(const Partition& lambda, const SymFunc& lhs_family, const SymFunc& dual_family, Bindings extra) {
    install_default_jack_provider();
    SymFunc lhs = apply_omega(alpha(), to_power_sum(lhs_family));
    extra[Gen::Alpha] = alpha().inverse();
    SymFunc rhs = b_dual(lambda) * to_power_sum(dual_family).substitute(extra);
    return lhs.equals(rhs);
}

}  // namespace

bool jack_duality_check(const Partition& lambda) {
    install_default_jack_provider();
    return duality_holds(lambda, SymFunc::element(Basis::Jack, lambda),
                         SymFunc::element(Basis::Jack, lambda.conjugate()), {});
}

bool hermite_duality_check(const Partition& lambda) {
    Scalar nu2 = gen(Gen::Nu);
    return duality_holds(lambda, hermite_nu2(lambda, nu2), hermite_nu2(lambda.conjugate(), nu2),
                         {{Gen::Nu, -alpha() * nu2}});
}

bool laguerre_duality_check(const Partition& lambda) {
    Scalar a = gen(Gen::A), nu = gen(Gen::Nu);
    return duality_holds(lambda, laguerre_value(lambda, a, nu), laguerre_value(lambda.conjugate(), a, nu),
                         {{Gen::A, -alpha() * a}, {Gen::Nu, alpha() * nu}});
}

bool laguerre_symmetry_check(const Partition& lambda) {
    Scalar a = gen(Gen::A), p0 = gen(Gen::P0), al = alpha(), one(1L);
    SymFunc lhs = to_power_sum(laguerre_value(lambda, a, one));
    Bindings b{{Gen::A, Scalar(2L) / al - a - Scalar(2L)}, {Gen::P0, p0 - one + al * (a + one)}};
    return lhs.equals(lhs.substitute(b));
}

bool ideal_membership(int n, int m, const Partition& lambda) { return lambda.contains(Cell{n + 1, m + 1}); }

bool supported_in_ideal(const SymFunc& f, int n, int m) {
    for (const SymFunc g = to_jack(f); const auto& [mu, c] : g.terms())
        if (!ideal_membership(n, m, mu) && !c.is_zero()) return false;
    return true;
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Equal: return "equal";
        case Verdict::NotEqual: return "not-equal";
        case Verdict::Divergent: return "divergent";
    }
    return "?";
}

namespace {

SymFunc limit_in(Gen g, const SymFunc& f) {
    return f.map_coefficients([g](const Scalar& c) { return c.limit_at_infinity(g); });
}

}  // namespace

LimitResult limit_transition(LimitKind kind, const Partition& lambda) {
    install_default_jack_provider();
    Scalar one(1L), two(2L), s = gen(Gen::S), q = gen(Gen::Q), a = gen(Gen::A);
    int w = lambda.weight();
    SymFunc before, target;
    Gen var = Gen::S;
    switch (kind) {
        case LimitKind::JacobiToHermite: {
            SymFunc j = to_power_sum(jacobi_value(lambda, gen(Gen::P), -s * s));
            before = s.pow(w) * apply_sigma(s.inverse(), apply_translate(Scalar(-1L), j));
            target = to_power_sum(hermite_nu2(lambda, one));
            break;
        }
        case LimitKind::JacobiToLaguerre: {
            SymFunc j = to_power_sum(jacobi_value(lambda, -a - q - Scalar::rational(1, 2), q));
            before = (q / two).pow(w) * apply_sigma(two / q, j);
            target = to_power_sum(laguerre_value(lambda, a, one));
            var = Gen::Q;
            break;
        }
        case LimitKind::LaguerreToHermiteConjecture: {
            Scalar half_s2 = s * s / two;
            SymFunc l = to_power_sum(laguerre_value(lambda, half_s2, one));
            before = s.pow(-w) * apply_sigma(s, apply_translate(half_s2, l));
            target = to_power_sum(hermite_nu2(lambda, one));
            break;
        }
    }
    try {
        SymFunc lim = limit_in(var, before);
        return {lim, target, lim.equals(target) ? Verdict::Equal : Verdict::NotEqual};
    } catch (const DivergentLimit&) {
        return {SymFunc(Basis::PowerSum), target, Verdict::Divergent};
    }
}

std::map<Partition, Scalar> expand_in_family(const SymFunc& f, const FamilyLookup& family,
                                             const std::function<Scalar(const Partition&)>& factor) {
    std::map<Partition, Scalar> out;
    SymFunc rest = to_jack(f);
    while (!rest.is_zero()) {
        auto it = std::prev(rest.terms().end());
        Partition kappa = it->first;
        SymFunc fk = to_jack(family(kappa));
        Scalar c = it->second / fk.coefficient(kappa);
        rest -= c * fk;
        if (rest.terms().count(kappa)) throw Error("family is not triangular at " + kappa.to_string());
        out[kappa] = factor ? c / factor(kappa) : c;
    }
    return out;
}

}  // namespace cms
