// cms: compute and verify Jack, Hermite, Laguerre and Jacobi symmetric functions.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"

#include "cms/errors.hpp"
#include "cms/hyper.hpp"
#include "cms/io.hpp"
#include "cms/pieri.hpp"

using namespace cms;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Bad input detected after CLI parsing; reported as a usage error.
struct UsageError : Error {
    using Error::Error;
};

struct Options {
    std::string format;
    bool json = false;
    bool no_timing = false;
    std::vector<std::string> sets;
    std::string partition;
    std::string basis;
    std::string route = "solver";
    bool renormalize = false;
    int r = 1;
    int degree = -1;
    std::vector<std::string> a_list, b_list;
    bool one_set = false;
    std::string name;
    std::string expr;
    std::optional<int> max_degree, max_weight, n, m;
};

Bindings parse_sets(const std::vector<std::string>& sets) {
    Bindings out;
    for (const auto& s : sets) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw UsageError("--set expects name=value, got '" + s + "'");
        auto g = gen_from_name(s.substr(0, eq));
        if (!g) throw UsageError("unknown generator '" + s.substr(0, eq) + "'");
        out[*g] = Scalar::parse(s.substr(eq + 1));
    }
    return out;
}

Json sets_json(const Bindings& b) {
    Json out = Json::object();
    for (const auto& [g, v] : b) out[std::string(gen_name(g))] = v.to_string();
    return out;
}

// Takes a family parameter out of the bindings, leaving the rest for substitution.
Scalar take(Bindings& b, Gen g, const Scalar& fallback) {
    auto it = b.find(g);
    if (it == b.end()) return fallback;
    Scalar v = it->second;
    b.erase(it);
    return v;
}

Route route_from(const std::string& name) {
    if (name == "solver") return Route::Solver;
    if (name == "exponential") return Route::Exponential;
    if (name == "product") return Route::Product;
    throw UsageError("unknown route '" + name + "'");
}

Partition partition_from(const std::string& text) {
    if (text.empty()) throw UsageError("--partition is required");
    return Partition::parse(text);
}

Json items_json(const PieriExpansion& e, Format f) {
    Json out = Json::object();
    for (const auto& [mu, c] : e.terms) out[mu.to_string()] = render(c, f);
    return out;
}

Report family_cmd(const Options& o, Format f) {
    Partition lam = partition_from(o.partition);
    Bindings rest = parse_sets(o.sets);
    Report rep{"family"};
    rep.params = {{"family", o.name}, {"partition", lam.to_string()}, {"route", o.route}, {"set", sets_json(rest)}};
    Route route = route_from(o.route);
    SymFunc value;
    Scalar eigen;
    if (o.name == "jack") {
        value = SymFunc::element(Basis::Jack, lam);
        eigen = eigenvalue_jack(lam);
    } else if (o.name == "hermite") {
        Scalar nu = take(rest, Gen::Nu, Scalar(1L));
        value = hermite_nu2(lam, nu * nu, route);
        eigen = eigenvalue_hermite(lam, nu);
    } else if (o.name == "laguerre") {
        Scalar a = take(rest, Gen::A, gen(Gen::A)), nu = take(rest, Gen::Nu, Scalar(1L));
        value = laguerre_value(lam, a, nu, route);
        eigen = eigenvalue_laguerre(lam, nu);
    } else if (o.name == "jacobi") {
        Scalar p = take(rest, Gen::P, gen(Gen::P)), q = take(rest, Gen::Q, gen(Gen::Q));
        value = jacobi_value(lam, p, q, route);
        eigen = eigenvalue_jacobi(lam, p, q, gen(Gen::P0));
    } else {
        throw UsageError("unknown family '" + o.name + "'");
    }
    if (o.renormalize) value = renormalization_factor(lam) * value;
    std::string basis = o.basis.empty() ? (o.name == "jack" ? "m" : "jack") : o.basis;
    auto b = basis_from_name(basis);
    if (!b) throw UsageError("unknown basis '" + basis + "'");
    value = convert(value, *b);
    if (!rest.empty()) {
        value = value.substitute(rest);
        eigen = eigen.substitute(rest);
    }
    rep.params["basis"] = std::string(basis_name(*b));
    rep.params["renormalize"] = o.renormalize;
    rep.results = {{"value", render(value, f)}, {"eigenvalue", render(eigen, f)}};
    return rep;
}

Report pieri_cmd(const Options& o, Format f) {
    auto fam = pieri_family_from_name(o.name);
    if (!fam) throw UsageError(o.name.empty() ? "a Pieri family is required" : "unknown Pieri family '" + o.name + "'");
    Partition lam = partition_from(o.partition);
    if (o.r < 1) throw UsageError("--r must be positive");
    Report rep{"pieri"};
    rep.params = {{"family", o.name}, {"partition", lam.to_string()}, {"r", o.r}};
    ClosedFormReport cf = pieri_general(*fam, lam, o.r);
    rep.results["normalization"] = *fam == PieriFamily::Jacobi ? "J_lambda / eps0(J_lambda)" : render(pieri_normalization(lam), f);
    rep.results["coefficients"] = items_json(cf.oracle, f);
    std::map<std::string, bool> forms;
    for (const auto& c : cf.checks) {
        auto [it, fresh] = forms.emplace(c.form, true);
        it->second = it->second && c.matches;
    }
    for (const auto& [form, ok] : forms) rep.verdicts.push_back({"closed form " + form, ok});
    if (!cf.structure.empty()) {
        bool ok = std::all_of(cf.structure.begin(), cf.structure.end(), [](const StructureCheck& s) { return s.ok(); });
        rep.verdicts.push_back({"structure (parity, p0-polynomial, J- divisibility)", ok});
    }
    std::map<std::string, bool> literal;
    for (const auto& c : cf.literal) {
        auto [it, fresh] = literal.emplace(c.form, true);
        it->second = it->second && c.matches;
    }
    for (const auto& [form, ok] : literal) rep.verdicts.push_back({"literal form " + form, ok, true});
    return rep;
}

std::vector<Scalar> scalars(const std::vector<std::string>& xs) {
    std::vector<Scalar> out;
    for (const auto& x : xs) out.push_back(Scalar::parse(x));
    return out;
}

Json scalar_list(const std::vector<Scalar>& xs, Format f) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(render(x, f));
    return out;
}

Report residual_report(const std::string& command, const HyperResidual& r) {
    Report rep{command};
    rep.params = {{"equation", r.which}, {"degree", r.degree}};
    Json nz = Json::array();
    for (const auto& t : r.nonzero_terms) nz.push_back(t);
    rep.results = {{"valid_to", r.valid_to}, {"nonzero_terms", nz}};
    rep.verdicts.push_back({r.which + " residual vanishes", r.zero});
    return rep;
}

Report hyper_ode_cmd(const Options& o) {
    auto which = hyper_ode_from_name(o.name);
    if (!which) throw UsageError(o.name.empty() ? "an equation is required" : "unknown equation '" + o.name + "'");
    int D = o.degree < 0 ? 4 : o.degree;
    std::vector<Scalar> params = o.a_list.empty() ? std::vector<Scalar>{} : scalars(o.a_list);
    return residual_report("hyper ode", check_hyper_ode(*which, D, params));
}

Report hyper_genfun_cmd(const Options& o) {
    GenFunKind kind;
    if (o.name == "hermite") kind = GenFunKind::Hermite;
    else if (o.name == "laguerre") kind = GenFunKind::Laguerre;
    else throw UsageError("unknown generating function '" + o.name + "'");
    return residual_report("hyper genfun", generating_function_check(kind, o.degree < 0 ? 3 : o.degree));
}

Report hyper_series_cmd(const Options& o, Format f) {
    int D = o.degree < 0 ? 3 : o.degree;
    auto a = scalars(o.a_list), b = scalars(o.b_list);
    Report rep{"hyper series"};
    rep.params = {{"a", scalar_list(a, f)}, {"b", scalar_list(b, f)}, {"degree", D}, {"one_set", o.one_set}};
    if (o.one_set) {
        rep.results["series"] = render(pFq_one_set(a, b, D), f);
    } else {
        TensorSeries t = pFq_two_set(a, b, D);
        rep.results["series"] = t.to_string();
        rep.results["valid_to"] = t.valid_to();
    }
    return rep;
}

SuperAlgebra algebra(const Options& o) {
    SuperAlgebra alg{o.n.value_or(1), o.m.value_or(1)};
    if (alg.n < 0 || alg.m < 0) throw UsageError("--n and --m must be non-negative");
    alg.validate();
    return alg;
}

Report super_family_cmd(const Options& o, Format f) {
    auto kind = super_kind_from_name(o.name);
    if (!kind) throw UsageError("unknown super family '" + o.name + "'");
    SuperAlgebra alg = algebra(o);
    Partition lam = partition_from(o.partition);
    Bindings rest = parse_sets(o.sets);
    Report rep{"super family"};
    rep.params = {{"n", alg.n}, {"m", alg.m}, {"family", o.name}, {"partition", lam.to_string()}, {"set", sets_json(rest)}};
    Bindings params;
    if (*kind == SuperKind::Hermite) {
        Scalar nu = take(rest, Gen::Nu, Scalar(1L));
        params[Gen::Nu] = nu * nu;
    } else if (*kind == SuperKind::Laguerre) {
        params[Gen::A] = take(rest, Gen::A, gen(Gen::A));
        params[Gen::Nu] = take(rest, Gen::Nu, Scalar(1L));
    }
    SuperElement e = super_family(alg, *kind, lam, params);
    MVPoly value = rest.empty() ? e.value : e.value.map_coefficients([&](const Scalar& c) { return c.substitute(rest); });
    rep.results = {{"value", render(value, alg, f)}, {"kernel", e.in_kernel}};
    rep.verdicts.push_back({"value lies in the deformed algebra", membership_check(alg, e.value)});
    return rep;
}

Report super_pfq_cmd(const Options& o, Format f) {
    SuperAlgebra alg = algebra(o);
    int D = o.degree < 0 ? 2 : o.degree;
    auto a = scalars(o.a_list), b = scalars(o.b_list);
    Report rep{"super pFq"};
    rep.params = {{"n", alg.n}, {"m", alg.m}, {"a", scalar_list(a, f)}, {"b", scalar_list(b, f)}, {"degree", D}};
    SuperSeriesReport s = super_pFq(alg, a, b, D);
    rep.results = {{"series", render(s.series, alg, f)}};
    rep.verdicts.push_back({"duality under x <-> y, alpha -> 1/alpha", s.duality});
    return rep;
}

SuiteBounds bounds_of(const Options& o) {
    SuiteBounds b;
    b.max_degree = o.max_degree;
    b.max_weight = o.max_weight;
    if (o.degree >= 0) b.degree = o.degree;
    b.n = o.n;
    b.m = o.m;
    return b;
}

Json bounds_json(const SuiteBounds& b) {
    Json out = Json::object();
    auto put = [&](const char* k, const std::optional<int>& v) {
        if (v) out[k] = *v;
    };
    put("max_degree", b.max_degree);
    put("max_weight", b.max_weight);
    put("degree", b.degree);
    put("n", b.n);
    put("m", b.m);
    return out;
}

void add_suite(Report& rep, const SuiteReport& s, bool timing) {
    rep.results["suites"].push_back(suite_json(s, timing));
    rep.verdicts.push_back({s.suite + " (" + std::to_string(s.items.size() - s.failures()) + "/" + std::to_string(s.items.size()) + ")",
                            s.failures() == 0, s.informational});
}

Report super_verify_cmd(const Options& o, bool timing) {
    SuiteBounds b = bounds_of(o);
    Report rep{"super verify"};
    rep.params = {{"part", o.name}, {"bounds", bounds_json(b)}};
    rep.results["suites"] = Json::array();
    if (o.name == "all") {
        for (const auto& p : super_parts()) add_suite(rep, run_super_part(p, b), timing);
    } else {
        add_suite(rep, run_super_part(o.name, b), timing);
    }
    return rep;
}

Report verify_cmd(const Options& o, bool timing) {
    SuiteBounds b = bounds_of(o);
    Report rep{"verify"};
    rep.params = {{"suite", o.name}, {"bounds", bounds_json(b)}};
    rep.results["suites"] = Json::array();
    std::string name = o.name == "ideal" ? "ideals" : o.name;
    for (const auto& s : run_suite(name, b)) add_suite(rep, s, timing);
    return rep;
}

Report limits_cmd(const Options& o, Format f) {
    LimitKind kind;
    bool informational = false;
    if (o.name == "jacobi-hermite") kind = LimitKind::JacobiToHermite;
    else if (o.name == "jacobi-laguerre") kind = LimitKind::JacobiToLaguerre;
    else if (o.name == "conjecture") kind = LimitKind::LaguerreToHermiteConjecture, informational = true;
    else throw UsageError("unknown limit '" + o.name + "'");
    Partition lam = partition_from(o.partition);
    LimitResult r = limit_transition(kind, lam);
    Report rep{"limits"};
    rep.params = {{"limit", o.name}, {"partition", lam.to_string()}};
    rep.results = {{"limit", render(r.limit, f)}, {"target", render(r.target, f)}, {"verdict", verdict_name(r.verdict)}};
    rep.verdicts.push_back({o.name + " " + lam.to_string(), r.verdict == Verdict::Equal, informational});
    return rep;
}

Report convert_cmd(const Options& o, Format f) {
    auto b = basis_from_name(o.basis.empty() ? "p" : o.basis);
    if (!b) throw UsageError("unknown basis '" + o.basis + "'");
    Bindings sets = parse_sets(o.sets);
    SymFunc x = SymFunc::parse(o.expr);
    SymFunc y = convert(x, *b);
    if (!sets.empty()) y = y.substitute(sets);
    Report rep{"convert"};
    rep.params = {{"expr", o.expr}, {"to", std::string(basis_name(*b))}, {"set", sets_json(sets)}};
    rep.results = {{"value", render(y, f)}};
    return rep;
}

bool env_flag(const char* name) {
    const char* v = std::getenv(name);
    return v && *v && std::string(v) != "0";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Jack, Hermite, Laguerre and Jacobi symmetric functions and their checks", "cms"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "json, text or latex (env CMS_FORMAT; default json)");
    app.add_flag("--json", o.json, "same as --format json");
    app.add_flag("--no-timing", o.no_timing, "omit timings so output is byte-reproducible (env CMS_NO_TIMING)");

    auto partition_opt = [&](CLI::App* c) { c->add_option("--partition", o.partition, "partition literal, e.g. [2,1]"); };
    auto sets_opt = [&](CLI::App* c) {
        c->add_option("--set", o.sets, "generator binding name=value (repeatable)")->take_all();
    };
    auto list_opts = [&](CLI::App* c) {
        c->add_option("--a", o.a_list, "numerator parameters")->delimiter(',');
        c->add_option("--b", o.b_list, "denominator parameters")->delimiter(',');
    };

    auto* family = app.add_subcommand("family", "compute a family element");
    family->add_option("kind", o.name, "jack, hermite, laguerre or jacobi")->required();
    partition_opt(family);
    family->add_option("--basis", o.basis, "output basis: p, m, e or jack");
    family->add_option("--route", o.route, "solver, exponential or product");
    family->add_flag("--renormalize", o.renormalize, "multiply by C^-_lambda(1/alpha)");
    sets_opt(family);

    auto* pieri = app.add_subcommand("pieri", "Pieri coefficients and closed-form checks");
    pieri->add_option("kind", o.name, "hermite, laguerre or jacobi");
    pieri->add_option("--family", o.name, "same as the positional family");
    partition_opt(pieri);
    pieri->add_option("--r", o.r, "multiply by e_r");

    auto* hyper = app.add_subcommand("hyper", "truncated hypergeometric series");
    hyper->require_subcommand(1);
    auto* ode = hyper->add_subcommand("ode", "differential-equation residual");
    ode->alias("check");
    ode->add_option("equation", o.name, "2F1, 1F1, 0F1, 0F0 or 2F1-one-set");
    ode->add_option("--which", o.name, "same as the positional equation");
    ode->add_option("--degree", o.degree, "truncation degree (default 4)");
    ode->add_option("--params", o.a_list, "equation parameters a, b, c as needed")->delimiter(',');
    auto* genfun = hyper->add_subcommand("genfun", "generating-function identity");
    genfun->add_option("family", o.name, "hermite or laguerre")->required();
    genfun->add_option("--degree", o.degree, "truncation degree (default 3)");
    auto* series = hyper->add_subcommand("series", "the series itself");
    list_opts(series);
    series->add_option("--degree", o.degree, "truncation degree (default 3)");
    series->add_flag("--one-set", o.one_set, "one set of variables");

    auto* super = app.add_subcommand("super", "super polynomials in x_1..x_n, y_1..y_m");
    super->require_subcommand(1);
    super->add_option("--n", o.n, "number of x variables (default 1)");
    super->add_option("--m", o.m, "number of y variables (default 1)");
    auto* sfamily = super->add_subcommand("family", "image of a family element");
    sfamily->add_option("kind", o.name, "jack, hermite or laguerre")->required();
    partition_opt(sfamily);
    sets_opt(sfamily);
    auto* spfq = super->add_subcommand("pFq", "super hypergeometric series and its duality");
    list_opts(spfq);
    spfq->add_option("--degree", o.degree, "truncation degree (default 2)");
    auto* sverify = super->add_subcommand("verify", "super checks");
    sverify->add_option("part", o.name, "kernel, intertwine, duality, eigen or all")->required();
    sverify->add_option("--max-weight", o.max_weight, "weight bound");

    auto* limits = app.add_subcommand("limits", "limit transitions between families");
    limits->add_option("limit", o.name, "jacobi-hermite, jacobi-laguerre or conjecture")->required();
    partition_opt(limits);

    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    verify->add_option("suite", o.name, "suite name or all")->required();
    verify->add_option("--max-degree", o.max_degree, "degree bound (commutators)");
    verify->add_option("--max-weight", o.max_weight, "weight bound");
    verify->add_option("--degree", o.degree, "truncation degree (hyper)");
    verify->add_option("--n", o.n, "restrict to one n");
    verify->add_option("--m", o.m, "restrict to one m");

    auto* conv = app.add_subcommand("convert", "change of basis");
    conv->add_option("expr", o.expr, "e.g. \"P[2]\" or \"2*m[1,1] + p[2]\"")->required();
    conv->add_option("--to", o.basis, "target basis: p, m, e or jack");
    sets_opt(conv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "cms: " << e.what() << "\n" << "run 'cms --help' for usage\n";
        return kExitUsage;
    }

    std::string fname = o.json ? "json" : !o.format.empty() ? o.format : std::getenv("CMS_FORMAT") ? std::getenv("CMS_FORMAT") : "json";
    auto format = format_from_name(fname);
    if (!format) {
        std::cerr << "cms: unknown format '" << fname << "'\n";
        return kExitUsage;
    }
    bool timing = !(o.no_timing || env_flag("CMS_NO_TIMING"));
    Format f = *format;

    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    try {
        install_default_jack_provider();
        if (*family) rep = family_cmd(o, f);
        else if (*pieri) rep = pieri_cmd(o, f);
        else if (*ode) rep = hyper_ode_cmd(o);
        else if (*genfun) rep = hyper_genfun_cmd(o);
        else if (*series) rep = hyper_series_cmd(o, f);
        else if (*sfamily) rep = super_family_cmd(o, f);
        else if (*spfq) rep = super_pfq_cmd(o, f);
        else if (*sverify) rep = super_verify_cmd(o, timing);
        else if (*limits) rep = limits_cmd(o, f);
        else if (*verify) rep = verify_cmd(o, timing);
        else if (*conv) rep = convert_cmd(o, f);
    } catch (const UsageError& e) {
        std::cerr << "cms: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "cms: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotAPartition& e) {
        std::cerr << "cms: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownSuite& e) {
        std::cerr << "cms: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "cms: " << e.what() << "\n";
        return kExitFail;
    }
    if (timing) rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cout << render_report(rep, f);
    return rep.ok() ? 0 : kExitFail;
}
