#include "cms/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "cms/errors.hpp"
#include "cms/hyper.hpp"
#include "cms/pieri.hpp"
#include "cms/super.hpp"

namespace cms {

int SuiteReport::failures() const {
    return static_cast<int>(std::count_if(items.begin(), items.end(), [](const CheckItem& c) { return !c.pass; }));
}

namespace {

const Scalar kOne(1L);

using Items = std::vector<CheckItem>;

void add(Items& out, std::string label, bool pass) { out.push_back({std::move(label), pass}); }

std::string str(int v) { return std::to_string(v); }

SymFunc psym(int r) {
    return r == 0 ? SymFunc::constant(gen(Gen::P0)) : SymFunc::element(Basis::PowerSum, Partition{r});
}

bool same(const OpExpr& lhs_a, const OpExpr& lhs_b, const OpExpr& rhs, int d) {
    return matrices_equal(commutator_eval(lhs_a, lhs_b, d), op_matrix(rhs, d));
}

std::vector<std::pair<int, int>> nm_range(const SuiteBounds& b) {
    std::vector<std::pair<int, int>> out;
    for (int n = 0; n <= 2; ++n)
        for (int m = 0; m <= 2; ++m)
            if ((!b.n || *b.n == n) && (!b.m || *b.m == m)) out.emplace_back(n, m);
    return out;
}

std::string nm_label(int n, int m) { return "(n,m)=(" + str(n) + "," + str(m) + ")"; }

Items commutators(const SuiteBounds& b) {
    int d = b.max_degree.value_or(5);
    Scalar al = alpha(), p0 = gen(Gen::P0);
    Items out;
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l) {
            std::string kl = " k=" + str(k) + " l=" + str(l);
            add(out, "[E^k,E^(l+1)] = (l+1-k)E^(k+l)" + kl,
                same(OpExpr::E(k), OpExpr::E(l + 1), Scalar(long(l + 1 - k)) * OpExpr::E(k + l), d));
            add(out, "[E^k,p_(l+1)] = (l+1)p_(k+l)" + kl,
                same(OpExpr::E(k), OpExpr::mul(psym(l + 1)), OpExpr::mul(Scalar(long(l + 1)) * psym(k + l)), d));
            SymFunc extra = k + l >= 1 ? Scalar(long(l * (l + 1))) * psym(k + l - 1) : SymFunc();
            for (int j = 0; j <= k + l - 1; ++j)
                extra += (Scalar(long(l + 1)) / al) * (multiply(psym(k + l - j - 1), psym(j)) - psym(k + l - 1));
            add(out, "[D^k,p_(l+1)]" + kl,
                same(OpExpr::D(k), OpExpr::mul(psym(l + 1)), Scalar(long(2 * (l + 1))) * OpExpr::E(k + l) + OpExpr::mul(extra), d));
        }
    for (int k = 0; k <= 3; ++k) {
        std::string ks = " k=" + str(k);
        add(out, "[E^0,D^(k+1)] = (k+1)D^k" + ks, same(OpExpr::E(0), OpExpr::D(k + 1), Scalar(long(k + 1)) * OpExpr::D(k), d));
        add(out, "[E^1,D^k] = (k-2)D^k" + ks, same(OpExpr::E(1), OpExpr::D(k), Scalar(long(k - 2)) * OpExpr::D(k), d));
        add(out, "[E^2,D^k] = (k-4)D^(k+1) + 2((p0-1)/alpha-1)E^k" + ks,
            same(OpExpr::E(2), OpExpr::D(k), Scalar(long(k - 4)) * OpExpr::D(k + 1) + (Scalar(2L) * ((p0 - kOne) / al - kOne)) * OpExpr::E(k), d));
    }
    return out;
}

Items actions(const SuiteBounds& b) {
    int w = b.max_weight.value_or(5);
    const Prim prims[] = {Prim::E0, Prim::E1, Prim::E2, Prim::D0, Prim::D1, Prim::D2};
    const char* names[] = {"E^0", "E^1", "E^2", "D^0", "D^1", "D^2"};
    const OpExpr ops[] = {OpExpr::E(0), OpExpr::E(1), OpExpr::E(2), OpExpr::D(0), OpExpr::D(1), OpExpr::D(2)};
    Items out;
    for (const auto& lam : partitions_up_to(w)) {
        const SymFunc& P = jack_in_power_sums(lam);
        for (int i = 0; i < 6; ++i) add(out, std::string(names[i]) + " P" + lam.to_string(), jack_action(prims[i], lam).equals(ops[i].apply(P)));
        SymFunc rhs(Basis::Jack);
        for (int i = 1; i <= lam.length() + 1; ++i)
            if (auto up = lam.add_box(i)) rhs.add_term(*up, binomial_one_box(lam, i) * hook_product(lam) / hook_product(*up));
        add(out, "p_1 P" + lam.to_string() + " binomial Pieri", convert(multiply(psym(1), P), Basis::Jack).equals(rhs));
    }
    return out;
}

Items jack_suite(const SuiteBounds& b) {
    int w = b.max_weight.value_or(5);
    Items out;
    SymFunc p2(Basis::Monomial);
    p2.add_term(Partition{2}, kOne);
    p2.add_term(Partition{1, 1}, Scalar(2L) / (kOne + alpha()));
    add(out, "P[2] = m[2] + (2/(1+alpha))m[1,1]", jack(Partition{2}).equals(p2));
    for (const auto& lam : partitions_up_to(w)) {
        bool integral = true;
        SymFunc P = jack(lam);
        for (const auto& [mu, c] : P.terms()) {
            auto r = c.substitute({{Gen::Alpha, kOne}}).as_rational();
            integral = integral && r && r->get_den() == 1;
        }
        add(out, "P" + lam.to_string() + " integral at alpha=1", integral);
        CmsData L{0, 0, kOne, 0, Scalar(-2L) / alpha() * (gen(Gen::P0) - kOne)};
        add(out, "P" + lam.to_string() + " eigenfunction",
            L.op().apply(jack_in_power_sums(lam)).equals(L.eigenvalue(lam) * SymFunc::element(Basis::Jack, lam)));
    }
    return out;
}

Items stanley(const SuiteBounds& b) {
    int w = b.max_weight.value_or(6);
    Scalar p0 = gen(Gen::P0);
    Items out;
    for (const auto& lam : partitions_up_to(w))
        add(out, "eps_p0(P" + lam.to_string() + ")", apply_eps(p0, jack_in_power_sums(lam)) == epsX_jack_product(lam, p0));
    return out;
}

Items hermite_suite(const SuiteBounds& b) {
    int w = b.max_weight.value_or(5);
    Scalar nu2 = gen(Gen::Nu);
    Items out;
    for (const auto& lam : partitions_up_to(w)) {
        SymFunc s = hermite_nu2(lam, nu2);
        add(out, "H" + lam.to_string() + " solver = exponential", s.equals(hermite_nu2(lam, nu2, Route::Exponential)));
        add(out, "H" + lam.to_string() + " solver = product", s.equals(hermite_nu2(lam, nu2, Route::Product)));
        CmsData L = CmsData::hermite(nu2);
        add(out, "H" + lam.to_string() + " eigenfunction", L.apply_jack(s).equals(L.eigenvalue(lam) * s));
    }
    for (int r = 1; r <= 2; ++r) {
        OpExpr H = bch_eigenop(BchKind::Hermite, ShiftedSymSpec::pi(r));
        for (const auto& lam : partitions_up_to(std::min(w, 4))) {
            SymFunc h = to_power_sum(hermite_nu2(lam, kOne));
            add(out, "L^H_pi" + str(r) + " H" + lam.to_string(), H.apply(h).equals(ShiftedSymSpec::pi(r).eval(lam) * h));
        }
    }
    return out;
}

Items laguerre_suite(const SuiteBounds& b) {
    int w = b.max_weight.value_or(4);
    Scalar a = gen(Gen::A), nu = gen(Gen::Nu);
    Items out;
    for (const auto& lam : partitions_up_to(w)) {
        SymFunc s = laguerre_value(lam, a, nu);
        add(out, "L" + lam.to_string() + " solver = exponential", s.equals(laguerre_value(lam, a, nu, Route::Exponential)));
        add(out, "L" + lam.to_string() + " solver = product", s.equals(laguerre_value(lam, a, nu, Route::Product)));
        CmsData L = CmsData::laguerre(a, nu);
        add(out, "L" + lam.to_string() + " eigenfunction", L.apply_jack(s).equals(L.eigenvalue(lam) * s));
        add(out, "L" + lam.to_string() + " symmetry a' = 2/alpha-a-2", laguerre_symmetry_check(lam));
    }
    for (int r = 1; r <= 2; ++r) {
        OpExpr Lop = bch_eigenop(BchKind::Laguerre, ShiftedSymSpec::pi(r));
        for (const auto& lam : partitions_up_to(std::min(w, 4))) {
            SymFunc l = to_power_sum(laguerre_value(lam, a, kOne));
            add(out, "L^L_pi" + str(r) + " L" + lam.to_string(), Lop.apply(l).equals(ShiftedSymSpec::pi(r).eval(lam) * l));
        }
    }
    return out;
}

Items jacobi_suite(const SuiteBounds& b) {
    int w = b.max_weight.value_or(3);
    Scalar p = gen(Gen::P), q = gen(Gen::Q);
    Items out;
    for (const auto& lam : partitions_up_to(w)) {
        SymFunc s = jacobi_value(lam, p, q);
        add(out, "J" + lam.to_string() + " solver = product", s.equals(jacobi_value(lam, p, q, Route::Product)));
        CmsData L = CmsData::jacobi(p, q);
        add(out, "J" + lam.to_string() + " eigenfunction", L.apply_jack(s).equals(L.eigenvalue(lam) * s));
        add(out, "J" + lam.to_string() + " constant term", constant_term(s) == jacobi_eps0(lam, p, q));
    }
    return out;
}

void pieri_items(Items& out, PieriFamily fam, const Partition& lam, int r) {
    ClosedFormReport rep = pieri_general(fam, lam, r);
    std::string head = std::string(pieri_family_name(fam)) + " r=" + str(r) + " " + lam.to_string();
    // Group per closed form so the item count stays readable.
    std::map<std::string, bool> forms;
    for (const auto& c : rep.checks) {
        auto [it, fresh] = forms.emplace(c.form, true);
        it->second = it->second && c.matches;
    }
    for (const auto& [form, ok] : forms) add(out, head + " " + form, ok);
    if (!rep.structure.empty()) {
        bool ok = std::all_of(rep.structure.begin(), rep.structure.end(), [](const StructureCheck& s) { return s.ok(); });
        add(out, head + " structure", ok);
    }
}

Items pieri_suite(const SuiteBounds& b) {
    int w = b.max_weight.value_or(5);
    Items out;
    for (const auto& lam : partitions_up_to(w)) pieri_items(out, PieriFamily::Hermite, lam, 1);
    for (const auto& lam : partitions_up_to(std::min(w, 3))) pieri_items(out, PieriFamily::Hermite, lam, 2);
    for (int r = 1; r <= 2; ++r)
        for (const auto& lam : partitions_up_to(std::min(w, 3))) pieri_items(out, PieriFamily::Laguerre, lam, r);
    for (const auto& lam : partitions_up_to(std::min(w, 2))) pieri_items(out, PieriFamily::Jacobi, lam, 1);
    return out;
}

Items duality(const SuiteBounds& b) {
    int w = b.max_weight.value_or(4);
    Items out;
    for (const auto& lam : partitions_up_to(w)) {
        add(out, "jack " + lam.to_string(), jack_duality_check(lam));
        add(out, "hermite " + lam.to_string(), hermite_duality_check(lam));
        add(out, "laguerre " + lam.to_string(), laguerre_duality_check(lam));
    }
    return out;
}

Items ideals(const SuiteBounds& b) {
    int w = b.max_weight.value_or(5);
    Items out;
    for (auto [n, m] : nm_range(b)) {
        std::string nm = nm_label(n, m);
        SuperAlgebra alg{n, m};
        for (const auto& lam : partitions_up_to(w)) {
            bool member = ideal_membership(n, m, lam);
            std::string tag = nm + " " + lam.to_string();
            add(out, "phi(H) = 0 iff cell in lambda " + tag, super_family(alg, SuperKind::Hermite, lam).value.is_zero() == member);
            add(out, "phi(L) = 0 iff cell in lambda " + tag, super_family(alg, SuperKind::Laguerre, lam).value.is_zero() == member);
            if (!member) continue;
            struct Case {
                PieriFamily fam;
                IdealForm form;
                const char* name;
            };
            const Case cases[] = {{PieriFamily::Hermite, IdealForm::First, "hermite p0=n-alpha m"},
                                  {PieriFamily::Laguerre, IdealForm::First, "laguerre p0=n-alpha m"},
                                  {PieriFamily::Laguerre, IdealForm::Second, "laguerre p0=n+1-alpha(m+a+1)"}};
            for (const auto& c : cases) {
                bool ok = family_in_ideal(c.fam, c.form, n, m, lam);
                for (int r = 1; r <= 2; ++r) ok = ok && pieri_preserves_ideal(c.fam, c.form, n, m, lam, r);
                add(out, std::string(c.name) + " " + tag, ok);
            }
        }
    }
    return out;
}

Items hyper_suite(const SuiteBounds& b) {
    int D = b.degree.value_or(4);
    Items out;
    for (auto which : {HyperOde::ZeroF0, HyperOde::ZeroF1, HyperOde::OneF1, HyperOde::TwoF1TwoSet, HyperOde::TwoF1OneSet}) {
        HyperResidual r = check_hyper_ode(which, D);
        add(out, std::string(hyper_ode_name(which)) + " residual, valid to " + str(r.valid_to), r.zero);
    }
    int g = std::max(D - 1, 0);
    add(out, "hermite generating function D=" + str(g), generating_function_check(GenFunKind::Hermite, g).zero);
    add(out, "laguerre generating function D=" + str(g), generating_function_check(GenFunKind::Laguerre, g).zero);
    add(out, "slot symmetry L_pi1", hyper_slot_symmetry(OpExpr::jack_diag(ShiftedSymSpec::pi(1)), D));
    add(out, "slot symmetry L_pi2", hyper_slot_symmetry(OpExpr::jack_diag(ShiftedSymSpec::pi(2)), D));
    add(out, "D^0 against p_2", hyper_d0_p2(D));
    add(out, "2F1 -> 1F1 confluence", hyper_2f1_limit(std::min(D, 3)));
    add(out, "2F1 contiguous recurrence", hyper_2f1_recurrence(std::min(D, 3)));
    return out;
}

Items super_kernel(const SuiteBounds& b) {
    int w = b.max_weight.value_or(4) + 2;
    Items out;
    for (auto [n, m] : nm_range(b)) {
        SuperAlgebra alg{n, m};
        bool kernel = true;
        for (const auto& lam : partitions_up_to(w))
            kernel = kernel && phi_nm(alg, SymFunc::element(Basis::Jack, lam)).is_zero() == ideal_membership(n, m, lam);
        add(out, "kernel theorem |lambda|<=" + str(w) + " " + nm_label(n, m), kernel);
    }
    return out;
}

Items super_intertwine(const SuiteBounds& b) {
    int w = b.max_weight.value_or(4);
    Items out;
    for (auto [n, m] : nm_range(b)) {
        std::string nm = nm_label(n, m);
        SuperAlgebra alg{n, m};
        if (alg.vars() == 0) continue;
        auto pts = generic_points(alg, 3);
        for (const auto& mu : partitions_up_to(w)) {
            SuperElement f = super_lift(alg, SymFunc::element(Basis::PowerSum, mu));
            bool ok = membership_check(alg, f.value);
            for (int k = 0; k <= 3; ++k)
                for (const auto& z : pts)
                    ok = ok && deformed_op_point_check(DeformedKind::E, k, f, z) && deformed_op_point_check(DeformedKind::D, k, f, z);
            add(out, "intertwining phi(p" + mu.to_string() + ") " + nm, ok);
            bool dual = true;
            for (int k = 0; k <= 2; ++k)
                for (const auto& z : pts) dual = dual && operator_duality_point_check(k, alg, f.value, z);
            add(out, "operator duality on phi(p" + mu.to_string() + ") " + nm, dual);
        }
    }
    if (!b.n && !b.m) add(out, "x1 is not in the (1,1) algebra", !membership_check(SuperAlgebra{1, 1}, MVPoly::variable(2, 0)));
    return out;
}

Items super_dualities(const SuiteBounds& b) {
    int w = b.max_weight.value_or(4);
    Items out;
    for (auto [n, m] : nm_range(b)) {
        SuperAlgebra alg{n, m};
        for (const auto& lam : partitions_up_to(w)) {
            if (ideal_membership(n, m, lam)) continue;
            for (auto k : {SuperKind::Jack, SuperKind::Hermite, SuperKind::Laguerre})
                add(out, std::string(super_kind_name(k)) + " duality " + lam.to_string() + " " + nm_label(n, m), super_duality_check(k, alg, lam));
        }
    }
    if (!b.n && !b.m) {
        Scalar a = gen(Gen::A), s = gen(Gen::S), q = gen(Gen::Q);
        add(out, "0SF0 duality (1,1) D=2", super_pFq(SuperAlgebra{1, 1}, {}, {}, 2).duality);
        add(out, "1SF1 duality (1,1) D=3", super_pFq(SuperAlgebra{1, 1}, {a}, {q}, 3).duality);
        add(out, "2SF1 duality (2,1) D=3", super_pFq(SuperAlgebra{2, 1}, {a, s}, {q}, 3).duality);
    }
    return out;
}

Items super_eigen(const SuiteBounds& b) {
    int w = b.max_weight.value_or(4);
    Items out;
    for (auto [n, m] : nm_range(b)) {
        SuperAlgebra alg{n, m};
        for (const auto& lam : partitions_up_to(w)) {
            if (ideal_membership(n, m, lam)) continue;
            std::string tag = lam.to_string() + " " + nm_label(n, m);
            for (auto k : {SuperKind::Hermite, SuperKind::Laguerre})
                add(out, std::string(super_kind_name(k)) + " eigen " + tag, super_eigen_check(k, alg, lam));
            add(out, "hermite exponential " + tag, super_hermite_exp_check(alg, lam));
        }
    }
    return out;
}

struct Part {
    const char* name;
    Items (*run)(const SuiteBounds&);
};
constexpr Part kSuperParts[] = {
    {"kernel", super_kernel}, {"intertwine", super_intertwine}, {"duality", super_dualities}, {"eigen", super_eigen}};

Items super_suite(const SuiteBounds& b) {
    Items out;
    for (const auto& p : kSuperParts) {
        Items part = p.run(b);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

Items limit_items(const SuiteBounds& b, std::initializer_list<std::pair<LimitKind, const char*>> kinds, int fallback) {
    int w = b.max_weight.value_or(fallback);
    Items out;
    for (auto [kind, name] : kinds)
        for (const auto& lam : partitions_up_to(w)) {
            LimitResult r = limit_transition(kind, lam);
            add(out, std::string(name) + " " + lam.to_string() + " " + std::string(verdict_name(r.verdict)), r.verdict == Verdict::Equal);
        }
    return out;
}

Items limits(const SuiteBounds& b) {
    return limit_items(b, {{LimitKind::JacobiToHermite, "jacobi->hermite"}, {LimitKind::JacobiToLaguerre, "jacobi->laguerre"}}, 3);
}

Items conjecture(const SuiteBounds& b) {
    return limit_items(b, {{LimitKind::LaguerreToHermiteConjecture, "laguerre->hermite"}}, 4);
}

struct Suite {
    std::string name;
    std::function<Items(const SuiteBounds&)> run;
    bool informational = false;
};

const std::vector<Suite>& registry() {
    static const std::vector<Suite> suites = {
        {"commutators", commutators}, {"actions", actions},   {"jack", jack_suite},         {"stanley", stanley},
        {"hermite", hermite_suite},   {"laguerre", laguerre_suite}, {"jacobi", jacobi_suite}, {"pieri", pieri_suite},
        {"duality", duality},         {"ideals", ideals},     {"hyper", hyper_suite},       {"super", super_suite},
        {"limits", limits},           {"conjecture", conjecture, true},
    };
    return suites;
}

SuiteReport run_one(const Suite& s, const SuiteBounds& b) {
    install_default_jack_provider();
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport rep{s.name, s.run(b), s.informational, 0};
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : registry()) out.push_back(s.name);
        return out;
    }();
    return names;
}

const std::vector<std::string>& super_parts() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& p : kSuperParts) out.emplace_back(p.name);
        return out;
    }();
    return names;
}

SuiteReport run_super_part(std::string_view part, const SuiteBounds& bounds) {
    for (const auto& p : kSuperParts)
        if (part == p.name) return run_one(Suite{std::string("super ") + p.name, p.run}, bounds);
    throw UnknownSuite("super " + std::string(part));
}

std::vector<SuiteReport> run_suite(std::string_view name, const SuiteBounds& bounds) {
    std::vector<SuiteReport> out;
    for (const auto& s : registry())
        if (name == "all" || s.name == name) out.push_back(run_one(s, bounds));
    if (out.empty()) throw UnknownSuite(std::string(name));
    return out;
}

}  // namespace cms
