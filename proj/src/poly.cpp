#include "cms/poly.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "cms/errors.hpp"

namespace cms {

namespace {

constexpr std::array<std::string_view, kNumGens> kNames = {"alpha", "p0", "a", "nu", "p", "q", "s", "X"};
constexpr std::array<std::string_view, kNumGens> kLatex = {"\\alpha", "p_0", "a", "\\nu", "p", "q", "s", "X"};
constexpr std::uint64_t kHighBits = 0x8080808080808080ull;

Gen gen_at(int i) { return static_cast<Gen>(i); }

std::string monomial_text(Monomial m, bool latex) {
    std::string out;
    for (int i = 0; i < kNumGens; ++i) {
        unsigned e = m.exponent(gen_at(i));
        if (e == 0) continue;
        if (!out.empty()) out += latex ? " " : "*";
        out += latex ? kLatex[i] : kNames[i];
        if (e > 1) {
            if (latex) out += "^{" + std::to_string(e) + "}";
            else out += "^" + std::to_string(e);
        }
    }
    return out;
}

std::string rat_latex(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string poly_text(const std::vector<Poly::Term>& terms, bool latex) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        Rat c = t.coeff;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string mono = monomial_text(t.mono, latex);
        std::string coeff = latex ? rat_latex(c) : c.get_str();
        if (mono.empty()) {
            out += coeff;
        } else if (c == 1) {
            out += mono;
        } else {
            out += coeff + (latex ? " " : "*") + mono;
        }
    }
    return out;
}

}  // namespace

std::string_view gen_name(Gen g) { return kNames[static_cast<int>(g)]; }

std::optional<Gen> gen_from_name(std::string_view name) {
    for (int i = 0; i < kNumGens; ++i)
        if (kNames[i] == name) return gen_at(i);
    if (name == "α") return Gen::Alpha;
    if (name == "ν") return Gen::Nu;
    if (name == "p₀") return Gen::P0;
    return std::nullopt;
}

Monomial Monomial::of(Gen g, unsigned e) {
    if (e > 255) throw Error("exponent overflow");
    return Monomial(std::uint64_t{e} << shift(g));
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (int i = 0; i < kNumGens; ++i) d += exponent(gen_at(i));
    return d;
}

Monomial Monomial::operator*(Monomial o) const {
    std::uint64_t a = bits_, b = o.bits_, s = a + b;
    std::uint64_t carries = ((a & b) | ((a | b) & ~s)) & kHighBits;
    if (carries) throw Error("exponent overflow");
    return Monomial(s);
}

bool Monomial::divides(Monomial o) const {
    for (int i = 0; i < kNumGens; ++i)
        if (exponent(gen_at(i)) > o.exponent(gen_at(i))) return false;
    return true;
}

Monomial Monomial::operator/(Monomial o) const { return Monomial(bits_ - o.bits_); }

Monomial Monomial::gcd(Monomial o) const {
    std::uint64_t r = 0;
    for (int i = 0; i < kNumGens; ++i) {
        Gen g = gen_at(i);
        r |= std::uint64_t{std::min(exponent(g), o.exponent(g))} << shift(g);
    }
    return Monomial(r);
}

Monomial Monomial::lcm_degrees(Monomial o) const {
    std::uint64_t r = 0;
    for (int i = 0; i < kNumGens; ++i) {
        Gen g = gen_at(i);
        r |= std::uint64_t{std::max(exponent(g), o.exponent(g))} << shift(g);
    }
    return Monomial(r);
}

Poly::Poly(const Rat& c) {
    if (sgn(c) != 0) terms_.push_back({Monomial(), c});
}

Poly Poly::gen(Gen g, unsigned e) {
    Poly p;
    p.terms_.push_back({Monomial::of(g, e), Rat(1)});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.mono > y.mono; });
    Poly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
    return p;
}

Rat Poly::constant_value() const { return terms_.empty() ? Rat(0) : terms_[0].coeff; }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].mono > o.terms_[j].mono)) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].mono > terms_[i].mono) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rat c = terms_[i].coeff + o.terms_[j].coeff;
            if (sgn(c) != 0) r.terms_.push_back({terms_[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    if (o.terms_.size() == 1) return times_monomial(o.terms_[0].mono).scaled(o.terms_[0].coeff);
    if (terms_.size() == 1) return o.times_monomial(terms_[0].mono).scaled(terms_[0].coeff);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return from_terms(std::move(prod));
}

Poly Poly::scaled(const Rat& c) const {
    if (sgn(c) == 0) return Poly();
    if (c == 1) return *this;
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Poly Poly::times_monomial(Monomial m) const {
    Poly r = *this;
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r(1L), base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw DivisionByZero();
    if (is_zero()) return Poly();
    if (!d.leading().mono.divides(leading().mono)) return std::nullopt;
    if (!d.max_degrees().divides(max_degrees())) return std::nullopt;
    if (d.size() == 1) {
        Poly q = *this;
        Rat inv = 1 / d.leading().coeff;
        for (auto& t : q.terms_) {
            if (!d.leading().mono.divides(t.mono)) return std::nullopt;
            t.mono = t.mono / d.leading().mono;
            t.coeff *= inv;
        }
        return q;
    }
    std::map<std::uint64_t, Rat, std::greater<>> rem;
    for (const auto& t : terms_) rem.emplace(t.mono.bits(), t.coeff);
    std::vector<Term> quot;
    const Monomial dl = d.leading().mono;
    const Rat dinv = 1 / d.leading().coeff;
    while (!rem.empty()) {
        auto it = rem.begin();
        Monomial lm(it->first);
        if (!dl.divides(lm)) return std::nullopt;
        Monomial qm = lm / dl;
        Rat qc = it->second * dinv;
        for (const auto& t : d.terms_) {
            std::uint64_t key = (t.mono * qm).bits();
            auto [pos, inserted] = rem.try_emplace(key, 0);
            pos->second -= qc * t.coeff;
            if (sgn(pos->second) == 0) rem.erase(pos);
        }
        quot.push_back({qm, std::move(qc)});
    }
    Poly q;
    q.terms_ = std::move(quot);  // generated in descending order
    return q;
}

unsigned Poly::degree(Gen g) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exponent(g));
    return d;
}

Monomial Poly::max_degrees() const {
    Monomial m;
    for (const auto& t : terms_) m = m.lcm_degrees(t.mono);
    return m;
}

Monomial Poly::monomial_content() const {
    if (terms_.empty()) return Monomial();
    Monomial m = terms_[0].mono;
    for (const auto& t : terms_) m = m.gcd(t.mono);
    return m;
}

Poly Poly::divide_monomial(Monomial m) const {
    Poly r = *this;
    for (auto& t : r.terms_) t.mono = t.mono / m;
    return r;
}

Poly Poly::coefficient_of(Gen g, unsigned e) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (t.mono.exponent(g) == e) out.push_back({t.mono.without(g), t.coeff});
    return from_terms(std::move(out));
}

bool Poly::operator==(const Poly& o) const { return compare(o) == 0; }

int Poly::compare(const Poly& o) const {
    std::size_t n = std::min(terms_.size(), o.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (terms_[i].mono != o.terms_[i].mono) return terms_[i].mono > o.terms_[i].mono ? 1 : -1;
        int c = cmp(terms_[i].coeff, o.terms_[i].coeff);
        if (c != 0) return c > 0 ? 1 : -1;
    }
    if (terms_.size() == o.terms_.size()) return 0;
    return terms_.size() > o.terms_.size() ? 1 : -1;
}

std::string Poly::to_string() const { return poly_text(terms_, false); }
std::string Poly::to_latex() const { return poly_text(terms_, true); }

}  // namespace cms
