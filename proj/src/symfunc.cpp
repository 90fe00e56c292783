#include "cms/symfunc.hpp"

#include <algorithm>
#include <mutex>

#include "cms/errors.hpp"
#include "cms/memo.hpp"
#include "text.hpp"

namespace cms {

std::string_view basis_name(Basis b) {
    switch (b) {
        case Basis::PowerSum: return "p";
        case Basis::Monomial: return "m";
        case Basis::Elementary: return "e";
        case Basis::Jack: return "jack";
    }
    return "?";
}

std::optional<Basis> basis_from_name(std::string_view name) {
    if (name == "p" || name == "powersum") return Basis::PowerSum;
    if (name == "m" || name == "monomial") return Basis::Monomial;
    if (name == "e" || name == "elementary") return Basis::Elementary;
    if (name == "jack" || name == "P") return Basis::Jack;
    return std::nullopt;
}

SymFunc SymFunc::element(Basis b, const Partition& lambda, const Scalar& c) {
    SymFunc f(b);
    f.add_term(lambda, c);
    return f;
}

SymFunc SymFunc::constant(const Scalar& c, Basis b) { return element(b, Partition(), c); }

int SymFunc::degree() const {
    int d = -1;
    for (const auto& [lambda, c] : terms_) d = std::max(d, lambda.weight());
    return d;
}

int SymFunc::min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.weight(); }

Scalar SymFunc::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Scalar() : it->second;
}

void SymFunc::add_term(const Partition& lambda, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymFunc SymFunc::operator-() const {
    SymFunc r = *this;
    for (auto& [lambda, c] : r.terms_) c = -c;
    return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (o.basis_ != basis_) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        throw BasisMismatch(std::string(basis_name(basis_)) + " + " + std::string(basis_name(o.basis_)));
    }
    for (const auto& [lambda, c] : o.terms_) add_term(lambda, c);
    return *this;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    SymFunc r = *this;
    r += o;
    return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const { return *this + (-o); }

SymFunc operator*(const Scalar& c, const SymFunc& f) {
    SymFunc r(f.basis_);
    if (c.is_zero()) return r;
    for (const auto& [lambda, x] : f.terms_) r.terms_.emplace(lambda, c * x);
    return r;
}

SymFunc SymFunc::truncated(int max_degree) const {
    SymFunc r(basis_);
    for (const auto& [lambda, c] : terms_)
        if (lambda.weight() <= max_degree) r.terms_.emplace(lambda, c);
    return r;
}

SymFunc SymFunc::homogeneous_part(int degree) const {
    SymFunc r(basis_);
    for (const auto& [lambda, c] : terms_)
        if (lambda.weight() == degree) r.terms_.emplace(lambda, c);
    return r;
}

SymFunc SymFunc::map_coefficients(const std::function<Scalar(const Scalar&)>& fn) const {
    SymFunc r(basis_);
    for (const auto& [lambda, c] : terms_) r.add_term(lambda, fn(c));
    return r;
}

SymFunc SymFunc::substitute(const Bindings& b) const {
    return map_coefficients([&](const Scalar& c) { return c.substitute(b); });
}

bool SymFunc::equals(const SymFunc& o) const {
    if (basis_ != o.basis_) return to_power_sum(*this).equals(to_power_sum(o));
    SymFunc d = *this - o;
    return d.is_zero();
}

namespace {

std::string element_text(Basis b, const Partition& lambda, bool latex) {
    std::string name = b == Basis::Jack ? "P" : std::string(basis_name(b));
    if (latex) return name + "_{" + lambda.to_string() + "}";
    return name + lambda.to_string();
}

std::string render(const SymFunc& f, bool latex) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [lambda, c] = *it;
        bool negative = sgn(c.coefficient()) < 0;
        Scalar mag = negative ? -c : c;
        std::string coeff = latex ? mag.to_latex() : mag.to_string();
        std::string term;
        if (lambda.empty()) {
            term = coeff;
        } else if (mag.is_one()) {
            term = element_text(f.basis(), lambda, latex);
        } else if (latex) {
            term = coeff + " " + element_text(f.basis(), lambda, true);
        } else {
            bool wrap = coeff.find('/') != std::string::npos;
            term = (wrap ? "(" + coeff + ")" : coeff) + "*" + element_text(f.basis(), lambda, false);
        }
        if (first) out += negative ? "-" + term : term;
        else out += (negative ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

struct Cache {
    Memo<Partition, SymFunc> p_in_m;
    Memo<Partition, SymFunc> m_in_p;
    Memo<int, SymFunc> e_r_in_p;
    Memo<int, SymFunc> p_r_in_e;
    Memo<Partition, SymFunc> e_in_p;
    Memo<Partition, SymFunc> p_in_e;
    Memo<Partition, SymFunc> jack_in_m;
    Memo<Partition, SymFunc> jack_in_p;
    Memo<Partition, SymFunc> p_in_jack;
    std::mutex provider_mu;
    JackProvider provider;
};

Cache& cache() {
    static Cache c;
    return c;
}

JackProvider current_provider() {
    std::lock_guard<std::mutex> lock(cache().provider_mu);
    return cache().provider;
}

// p_r * m_nu in the monomial basis.
SymFunc p_times_m(int r, const SymFunc& f) {
    SymFunc out(Basis::Monomial);
    for (const auto& [nu, c] : f.terms()) {
        std::vector<int> values = nu.parts();
        values.push_back(0);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (int v : values) {
            std::vector<int> parts = nu.parts();
            if (v == 0) {
                parts.push_back(r);
            } else {
                *std::find(parts.begin(), parts.end(), v) += r;
            }
            std::sort(parts.begin(), parts.end(), std::greater<>());
            Partition kappa(parts);
            out.add_term(kappa, c * Scalar(kappa.multiplicity(v + r)));
        }
    }
    return out;
}

// Product in a multiplicative basis (p or e): basis elements multiply by union.
SymFunc multiplicative_product(const SymFunc& f, const SymFunc& g) {
    SymFunc out(f.basis());
    for (const auto& [a, x] : f.terms())
        for (const auto& [b, y] : g.terms()) out.add_term(partition_union(a, b), x * y);
    return out;
}

SymFunc apply_rows(const SymFunc& f, Basis target, const std::function<const SymFunc&(const Partition&)>& row) {
    SymFunc out(target);
    for (const auto& [lambda, c] : f.terms()) {
        for (const auto& [mu, x] : row(lambda).terms()) out.add_term(mu, c * x);
    }
    return out;
}

const SymFunc& e_r_in_p(int r) {
    return cache().e_r_in_p.get(r, [r] {
        if (r == 0) return SymFunc::constant(Scalar(1L));
        SymFunc acc(Basis::PowerSum);
        for (int i = 1; i <= r; ++i) {
            SymFunc term = multiplicative_product(e_r_in_p(r - i), SymFunc::element(Basis::PowerSum, Partition{i}));
            acc += Scalar::rational(i % 2 == 1 ? 1 : -1, r) * term;
        }
        return acc;
    });
}

const SymFunc& p_r_in_e(int r) {
    return cache().p_r_in_e.get(r, [r] {
        SymFunc acc = SymFunc::element(Basis::Elementary, Partition{r}, Scalar(r % 2 == 1 ? r : -r));
        for (int i = 1; i < r; ++i) {
            SymFunc term = multiplicative_product(SymFunc::element(Basis::Elementary, Partition{i}), p_r_in_e(r - i));
            acc += Scalar(i % 2 == 1 ? 1 : -1) * term;
        }
        return acc;
    });
}

const SymFunc& e_in_p(const Partition& lambda) {
    return cache().e_in_p.get(lambda, [&] {
        SymFunc acc = SymFunc::constant(Scalar(1L));
        for (int r : lambda.parts()) acc = multiplicative_product(acc, e_r_in_p(r));
        return acc;
    });
}

const SymFunc& p_in_e(const Partition& lambda) {
    return cache().p_in_e.get(lambda, [&] {
        SymFunc acc = SymFunc::constant(Scalar(1L), Basis::Elementary);
        for (int r : lambda.parts()) acc = multiplicative_product(acc, p_r_in_e(r));
        return acc;
    });
}

const SymFunc& jack_in_monomials(const Partition& lambda) {
    return cache().jack_in_m.get(lambda, [&] {
        JackProvider provider = current_provider();
        if (!provider) throw NoJackProvider();
        SymFunc f = provider(lambda);
        if (f.basis() != Basis::Monomial) f = convert(f, Basis::Monomial);
        return f;
    });
}

}  // namespace


std::string SymFunc::to_string() const { return render(*this, false); }
std::string SymFunc::to_latex() const { return render(*this, true); }

SymFunc SymFunc::parse(std::string_view input) {
    std::optional<Basis> basis;
    std::vector<std::pair<Partition, Scalar>> terms;
    for (std::string chunk : text::split_sum(input)) {
        Scalar c(text::strip_sign(chunk) ? -1L : 1L);
        Partition key;
        for (const std::string& raw : text::split_product(chunk)) {
            std::string f = text::trim(raw);
            std::size_t open = f.find('[');
            if (open != std::string::npos && f.back() == ']' && f.find('(') == std::string::npos) {
                std::string name = f.substr(0, open);
                auto b = basis_from_name(name);
                if (!b) throw ParseError("unknown basis '" + name + "'");
                if (basis && *basis != *b) throw BasisMismatch(input.data());
                basis = b;
                key = partition_union(key, Partition::parse(f.substr(open)));
            } else {
                c *= Scalar::parse(f);
            }
        }
        terms.emplace_back(key, c);
    }
    SymFunc out(basis.value_or(Basis::PowerSum));
    for (const auto& [k, c] : terms) out.add_term(k, c);
    return out;
}

Partition partition_union(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

const SymFunc& power_sum_in_monomials(const Partition& lambda) {
    return cache().p_in_m.get(lambda, [&] {
        SymFunc acc = SymFunc::constant(Scalar(1L), Basis::Monomial);
        for (int r : lambda.parts()) acc = p_times_m(r, acc);
        return acc;
    });
}

const SymFunc& monomial_in_power_sums(const Partition& lambda) {
    if (const SymFunc* hit = cache().m_in_p.find(lambda)) return *hit;
    // Solve the whole degree block at once: p_mu = c m_mu + (dominant terms).
    auto block = partitions_of(lambda.weight());
    for (auto it = block.rbegin(); it != block.rend(); ++it) {
        const Partition& mu = *it;
        if (cache().m_in_p.find(mu)) continue;
        const SymFunc& row = power_sum_in_monomials(mu);
        SymFunc acc = SymFunc::element(Basis::PowerSum, mu);
        Scalar diag;
        for (const auto& [kappa, c] : row.terms()) {
            if (kappa == mu) diag = c;
            else acc -= c * *cache().m_in_p.find(kappa);
        }
        cache().m_in_p.put(mu, diag.inverse() * acc);
    }
    return *cache().m_in_p.find(lambda);
}

const SymFunc& jack_in_power_sums(const Partition& lambda) {
    return cache().jack_in_p.get(lambda, [&] {
        return apply_rows(jack_in_monomials(lambda), Basis::PowerSum, monomial_in_power_sums);
    });
}

const SymFunc& power_sum_in_jacks(const Partition& lambda) {
    return cache().p_in_jack.get(lambda, [&] {
        SymFunc rest = power_sum_in_monomials(lambda);
        SymFunc out(Basis::Jack);
        while (!rest.is_zero()) {
            auto top = std::prev(rest.terms().end());
            Partition kappa = top->first;
            Scalar c = top->second;
            out.add_term(kappa, c);
            rest -= c * jack_in_monomials(kappa);
        }
        return out;
    });
}

SymFunc to_power_sum(const SymFunc& f) {
    switch (f.basis()) {
        case Basis::PowerSum: return f;
        case Basis::Monomial: return apply_rows(f, Basis::PowerSum, monomial_in_power_sums);
        case Basis::Elementary: return apply_rows(f, Basis::PowerSum, e_in_p);
        case Basis::Jack: return apply_rows(f, Basis::PowerSum, jack_in_power_sums);
    }
    return f;
}

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    if (f.basis() == Basis::Jack && target == Basis::Monomial)
        return apply_rows(f, Basis::Monomial, jack_in_monomials);
    SymFunc g = to_power_sum(f);
    switch (target) {
        case Basis::PowerSum: return g;
        case Basis::Monomial: return apply_rows(g, Basis::Monomial, power_sum_in_monomials);
        case Basis::Elementary: return apply_rows(g, Basis::Elementary, p_in_e);
        case Basis::Jack: return apply_rows(g, Basis::Jack, power_sum_in_jacks);
    }
    return g;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    return multiplicative_product(to_power_sum(f), to_power_sum(g));
}

SymFunc apply_sigma(const Scalar& gamma, const SymFunc& f) {
    SymFunc out(Basis::PowerSum);
    for (const SymFunc g = to_power_sum(f); const auto& [lambda, c] : g.terms()) out.add_term(lambda, c * gamma.pow(lambda.weight()));
    return out;
}

SymFunc apply_omega(const Scalar& gamma, const SymFunc& f) {
    SymFunc out(Basis::PowerSum);
    Bindings b{{Gen::P0, -gamma * Scalar::gen(Gen::P0)}};
    for (const SymFunc g = to_power_sum(f); const auto& [lambda, c] : g.terms()) {
        int sign = (lambda.weight() - lambda.length()) % 2 == 0 ? 1 : -1;
        out.add_term(lambda, Scalar(sign) * gamma.pow(lambda.length()) * c.substitute(b));
    }
    return out;
}

namespace {

long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

SymFunc apply_translate(const Scalar& gamma, const SymFunc& f, const Scalar& p0) {
    std::map<int, SymFunc> images;
    SymFunc out(Basis::PowerSum);
    for (const SymFunc g = to_power_sum(f); const auto& [lambda, c] : g.terms()) {
        SymFunc acc = SymFunc::constant(c);
        for (int r : lambda.parts()) {
            auto it = images.find(r);
            if (it == images.end()) {
                SymFunc img = SymFunc::constant(gamma.pow(r) * p0);
                for (int m = 1; m <= r; ++m)
                    img.add_term(Partition{m}, Scalar(binomial(r, m)) * gamma.pow(r - m));
                it = images.emplace(r, std::move(img)).first;
            }
            acc = multiplicative_product(acc, it->second);
        }
        out += acc;
    }
    return out;
}

Scalar apply_eps(const Scalar& x, const SymFunc& f) {
    Scalar s;
    for (const SymFunc g = to_power_sum(f); const auto& [lambda, c] : g.terms()) s += c * x.pow(lambda.length());
    return s;
}

Scalar epsX_jack_product(const Partition& lambda, const Scalar& x) {
    Scalar r(1L), a = alpha();
    for (Cell c : lambda.cells()) {
        ArmLeg al = arm_leg(lambda, c);
        r *= (x + a * Scalar(al.coarm) - Scalar(al.coleg)) / (a * Scalar(al.arm) + Scalar(al.leg + 1));
    }
    return r;
}

void set_jack_provider(JackProvider provider) {
    {
        std::lock_guard<std::mutex> lock(cache().provider_mu);
        cache().provider = std::move(provider);
    }
    cache().jack_in_m.clear();
    cache().jack_in_p.clear();
    cache().p_in_jack.clear();
}

bool has_jack_provider() {
    std::lock_guard<std::mutex> lock(cache().provider_mu);
    return static_cast<bool>(cache().provider);
}

}  // namespace cms
