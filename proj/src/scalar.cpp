#include "cms/scalar.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "cms/errors.hpp"

namespace cms {

namespace {

using PolyPtr = std::shared_ptr<const Poly>;

const PolyPtr& gen_poly(Gen g) {
    static const std::array<PolyPtr, kNumGens> polys = [] {
        std::array<PolyPtr, kNumGens> a;
        for (int i = 0; i < kNumGens; ++i) a[i] = std::make_shared<const Poly>(Poly::gen(static_cast<Gen>(i)));
        return a;
    }();
    return polys[static_cast<int>(g)];
}

int compare_ptr(const PolyPtr& a, const PolyPtr& b) {
    if (a == b) return 0;
    return a->compare(*b);
}

// Insert f^e into a sorted factor list, merging with an equal factor.
void add_factor(std::vector<Scalar::Factor>& fs, const PolyPtr& f, int e) {
    if (e == 0) return;
    auto it = std::lower_bound(fs.begin(), fs.end(), f,
                               [](const Scalar::Factor& x, const PolyPtr& p) { return compare_ptr(x.poly, p) < 0; });
    if (it != fs.end() && compare_ptr(it->poly, f) == 0) {
        it->exp += e;
        if (it->exp == 0) fs.erase(it);
    } else {
        fs.insert(it, Scalar::Factor{f, e});
    }
}

struct Normalized {
    Rat lead;
    Monomial content;
    Poly monic;
};

Normalized normalize(const Poly& s) {
    Normalized n;
    n.content = s.monomial_content();
    Poly p = n.content.is_one() ? s : s.divide_monomial(n.content);
    n.lead = p.leading().coeff;
    n.monic = p.scaled(1 / n.lead);
    return n;
}

void add_content(std::vector<Scalar::Factor>& fs, Monomial m, int sign) {
    for (int i = 0; i < kNumGens; ++i) {
        Gen g = static_cast<Gen>(i);
        if (unsigned e = m.exponent(g)) add_factor(fs, gen_poly(g), sign * static_cast<int>(e));
    }
}

Poly expand(const std::vector<Scalar::Factor>& fs, int sign) {
    Poly r(1L);
    for (const auto& f : fs)
        if (f.exp * sign > 0) r = r * f.poly->pow(static_cast<unsigned>(f.exp * sign));
    return r;
}

bool might_divide(const Poly& d, const Poly& n) {
    if (d.size() < 2 || d.size() > n.size()) return false;
    if (!d.leading().mono.divides(n.leading().mono)) return false;
    return d.max_degrees().divides(n.max_degrees());
}

}  // namespace

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    Rat r(num, den);
    r.canonicalize();
    return Scalar(r);
}

Scalar Scalar::gen(Gen g) {
    Scalar s(1L);
    s.factors_.push_back({gen_poly(g), 1});
    return s;
}

Scalar Scalar::from_poly(const Poly& p) {
    if (p.is_zero()) return Scalar();
    if (p.is_constant()) return Scalar(p.constant_value());
    Scalar s(1L);
    s.absorb_sum(p);
    return s;
}

Scalar Scalar::make(Rat c, std::vector<Factor> fs) {
    Scalar s;
    if (sgn(c) == 0) return s;
    s.coeff_ = std::move(c);
    s.factors_ = std::move(fs);
    return s;
}

std::optional<Rat> Scalar::as_rational() const {
    if (!factors_.empty()) return std::nullopt;
    return coeff_;
}

// Adds the expanded polynomial s as a new factor of *this, cancelling it
// against denominator factors where it divides exactly.
void Scalar::absorb_sum(Poly s) {
    if (s.is_zero()) {
        coeff_ = 0;
        factors_.clear();
        return;
    }
    Normalized n = normalize(s);
    coeff_ *= n.lead;
    add_content(factors_, n.content, 1);
    Poly rest = std::move(n.monic);
    if (rest.is_constant()) return;
    for (std::size_t i = 0; i < factors_.size() && !rest.is_constant(); ++i) {
        Factor& f = factors_[i];
        while (f.exp < 0 && might_divide(*f.poly, rest)) {
            auto q = rest.divide_exact(*f.poly);
            if (!q) break;
            rest = std::move(*q);
            ++f.exp;
        }
    }
    std::erase_if(factors_, [](const Factor& f) { return f.exp == 0; });
    if (!rest.is_constant()) add_factor(factors_, std::make_shared<const Poly>(std::move(rest)), 1);
}

// Cancels numerator factors that are exact multiples of denominator factors.
void Scalar::cancel(std::vector<Factor>& fs) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < fs.size() && !changed; ++i) {
            if (fs[i].exp <= 0) continue;
            for (std::size_t j = 0; j < fs.size() && !changed; ++j) {
                if (fs[j].exp >= 0 || !might_divide(*fs[j].poly, *fs[i].poly)) continue;
                auto q = fs[i].poly->divide_exact(*fs[j].poly);
                if (!q) continue;
                PolyPtr num = fs[i].poly, den = fs[j].poly;
                int e = fs[i].exp;
                fs.erase(fs.begin() + static_cast<long>(i));
                add_factor(fs, den, e);
                // A quotient of monic content-free polynomials is again monic and content-free.
                if (!q->is_constant()) add_factor(fs, std::make_shared<const Poly>(std::move(*q)), e);
                changed = true;
            }
        }
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.coeff_ = -r.coeff_;
    return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    std::vector<Scalar::Factor> fs;
    fs.reserve(a.factors_.size() + b.factors_.size());
    std::size_t i = 0, j = 0;
    bool num_a = false, den_a = false, num_b = false, den_b = false;
    for (const auto& f : a.factors_) (f.exp > 0 ? num_a : den_a) = true;
    for (const auto& f : b.factors_) (f.exp > 0 ? num_b : den_b) = true;
    while (i < a.factors_.size() || j < b.factors_.size()) {
        int c = i == a.factors_.size()   ? 1
                : j == b.factors_.size() ? -1
                                         : compare_ptr(a.factors_[i].poly, b.factors_[j].poly);
        if (c < 0) {
            fs.push_back(a.factors_[i++]);
        } else if (c > 0) {
            fs.push_back(b.factors_[j++]);
        } else {
            int e = a.factors_[i].exp + b.factors_[j].exp;
            if (e != 0) fs.push_back({a.factors_[i].poly, e});
            ++i;
            ++j;
        }
    }
    Rat c = a.coeff_ * b.coeff_;
    if ((num_a && den_b) || (num_b && den_a)) Scalar::cancel(fs);
    return Scalar::make(std::move(c), std::move(fs));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar r;
    r.coeff_ = 1 / coeff_;
    r.factors_ = factors_;
    for (auto& f : r.factors_) f.exp = -f.exp;
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DivisionByZero();
    return a * b.inverse();
}

Scalar Scalar::pow(int e) const {
    if (e == 0) return Scalar(1L);
    if (is_zero()) {
        if (e < 0) throw DivisionByZero();
        return Scalar();
    }
    Scalar r;
    mpz_class n = coeff_.get_num(), d = coeff_.get_den();
    unsigned ae = static_cast<unsigned>(e < 0 ? -e : e);
    mpz_class np, dp;
    mpz_pow_ui(np.get_mpz_t(), n.get_mpz_t(), ae);
    mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), ae);
    r.coeff_ = e > 0 ? Rat(np, dp) : Rat(dp, np);
    r.coeff_.canonicalize();
    r.factors_ = factors_;
    for (auto& f : r.factors_) f.exp *= e;
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.factors_.empty() && b.factors_.empty()) return Scalar(a.coeff_ + b.coeff_);
    Scalar common(1L);
    std::vector<Scalar::Factor> ra, rb;
    std::size_t i = 0, j = 0;
    auto take = [&](const PolyPtr& p, int ea, int eb) {
        int c = std::min(ea, eb);
        if (c != 0) common.factors_.push_back({p, c});
        if (ea - c > 0) ra.push_back({p, ea - c});
        if (eb - c > 0) rb.push_back({p, eb - c});
    };
    while (i < a.factors_.size() || j < b.factors_.size()) {
        int c = i == a.factors_.size()   ? 1
                : j == b.factors_.size() ? -1
                                         : compare_ptr(a.factors_[i].poly, b.factors_[j].poly);
        if (c < 0) {
            take(a.factors_[i].poly, a.factors_[i].exp, 0);
            ++i;
        } else if (c > 0) {
            take(b.factors_[j].poly, 0, b.factors_[j].exp);
            ++j;
        } else {
            take(a.factors_[i].poly, a.factors_[i].exp, b.factors_[j].exp);
            ++i;
            ++j;
        }
    }
    Poly s = expand(ra, 1).scaled(a.coeff_) + expand(rb, 1).scaled(b.coeff_);
    if (s.is_zero()) return Scalar();
    common.absorb_sum(std::move(s));
    return common;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

bool Scalar::identical(const Scalar& o) const {
    if (coeff_ != o.coeff_ || factors_.size() != o.factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].exp != o.factors_[i].exp || compare_ptr(factors_[i].poly, o.factors_[i].poly) != 0)
            return false;
    return true;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.identical(b)) return true;
    return (a - b).is_zero();
}

Poly Scalar::numerator() const {
    if (is_zero()) return Poly();
    return expand(factors_, 1).scaled(Rat(coeff_.get_num()));
}

Poly Scalar::denominator() const { return expand(factors_, -1).scaled(Rat(coeff_.get_den())); }

bool Scalar::depends_on(Gen g) const {
    for (const auto& f : factors_)
        if (f.poly->involves(g)) return true;
    return false;
}

bool Scalar::is_polynomial() const {
    for (const auto& f : factors_)
        if (f.exp < 0) return false;
    return true;
}

namespace {

// Value of p under the bindings, computed over a common denominator.
Scalar eval_poly(const Poly& p, const Bindings& b) {
    struct Bound {
        Gen g;
        unsigned deg;
        std::vector<Poly> num_pows;
        std::vector<Poly> den_pows;
        Scalar den;
    };
    std::vector<Bound> bound;
    bool all_poly = true;
    for (const auto& [g, v] : b) {
        unsigned d = p.degree(g);
        if (d == 0) continue;
        Bound x{g, d, {}, {}, Scalar(Rat(v.coefficient().get_den()))};
        for (const auto& f : v.factors())
            if (f.exp < 0) x.den *= Scalar::from_poly(*f.poly).pow(-f.exp);
        Poly num = v.numerator();
        Poly den = v.denominator();
        if (!den.is_constant() || den.constant_value() != 1) all_poly = false;
        x.num_pows.push_back(Poly(1L));
        x.den_pows.push_back(Poly(1L));
        for (unsigned e = 1; e <= d; ++e) {
            x.num_pows.push_back(x.num_pows.back() * num);
            x.den_pows.push_back(x.den_pows.back() * den);
        }
        bound.push_back(std::move(x));
    }
    Poly total;
    std::vector<Poly::Term> free_terms;
    for (const auto& t : p.terms()) {
        Monomial rest = t.mono;
        Poly term(t.coeff);
        for (const auto& x : bound) {
            unsigned e = rest.exponent(x.g);
            rest = rest.without(x.g);
            term = term * x.num_pows[e];
            if (!all_poly) term = term * x.den_pows[x.deg - e];
        }
        total += term.times_monomial(rest);
    }
    Scalar r = Scalar::from_poly(total);
    if (!all_poly)
        for (const auto& x : bound) r /= x.den.pow(static_cast<int>(x.deg));
    return r;
}

bool involves_any(const Poly& p, const Bindings& b) {
    for (const auto& [g, v] : b)
        if (p.involves(g)) return true;
    return false;
}

}  // namespace

Scalar Scalar::substitute(const Bindings& b) const {
    if (is_zero()) return *this;
    Scalar r(coeff_);
    Scalar untouched(1L);
    for (const auto& f : factors_) {
        if (!involves_any(*f.poly, b)) {
            untouched.factors_.push_back(f);
            continue;
        }
        Scalar v = eval_poly(*f.poly, b);
        if (v.is_zero()) {
            if (f.exp < 0) throw DenominatorVanishes("factor (" + f.poly->to_string() + ")");
            return Scalar();
        }
        r *= v.pow(f.exp);
    }
    return r * untouched;
}

Scalar Scalar::limit_at_infinity(Gen g) const {
    if (is_zero()) return *this;
    long deg = 0;
    for (const auto& f : factors_) deg += static_cast<long>(f.exp) * f.poly->degree(g);
    if (deg > 0) throw DivergentLimit(std::string(gen_name(g)) + " in " + to_string());
    if (deg < 0) return Scalar();
    Scalar r(coeff_);
    for (const auto& f : factors_) {
        unsigned d = f.poly->degree(g);
        if (d == 0) {
            Scalar s(1L);
            s.factors_.push_back(f);
            r *= s;
        } else {
            r *= Scalar::from_poly(f.poly->coefficient_of(g, d)).pow(f.exp);
        }
    }
    return r;
}

namespace {

std::string factor_text(const Poly& p, int e, bool latex) {
    std::string s;
    bool single = p.size() == 1;
    if (latex) s = single ? p.to_latex() : "\\left(" + p.to_latex() + "\\right)";
    else s = single ? p.to_string() : "(" + p.to_string() + ")";
    if (e > 1) s += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
    return s;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

}  // namespace

std::string Scalar::to_string() const {
    if (is_zero()) return "0";
    mpz_class cn = abs(coeff_.get_num()), cd = coeff_.get_den();
    std::vector<std::string> num, den;
    bool has_num = std::any_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.exp > 0; });
    if (cn != 1 || !has_num) num.push_back(cn.get_str());
    if (cd != 1) den.push_back(cd.get_str());
    for (const auto& f : factors_) {
        if (f.exp > 0) num.push_back(factor_text(*f.poly, f.exp, false));
        else den.push_back(factor_text(*f.poly, -f.exp, false));
    }
    std::string out = sgn(coeff_) < 0 ? "-" : "";
    out += join(num, "*");
    if (!den.empty()) out += den.size() > 1 ? "/(" + join(den, "*") + ")" : "/" + den[0];
    return out;
}

std::string Scalar::to_latex() const {
    if (is_zero()) return "0";
    mpz_class cn = abs(coeff_.get_num()), cd = coeff_.get_den();
    std::vector<std::string> num, den;
    bool has_num = std::any_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.exp > 0; });
    if (cn != 1 || !has_num) num.push_back(cn.get_str());
    if (cd != 1) den.push_back(cd.get_str());
    for (const auto& f : factors_) {
        if (f.exp > 0) num.push_back(factor_text(*f.poly, f.exp, true));
        else den.push_back(factor_text(*f.poly, -f.exp, true));
    }
    std::string out = sgn(coeff_) < 0 ? "-" : "";
    if (den.empty()) return out + join(num, " ");
    return out + "\\frac{" + join(num, " ") + "}{" + join(den, " ") + "}";
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view t) : text_(t) {}

    Scalar parse_all() {
        Scalar v = expr();
        skip();
        if (pos_ != text_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }
    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (eat('*')) v = v * unary();
            else if (eat('/')) v = v / unary();
            else return v;
        }
    }
    Scalar unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    Scalar power() {
        Scalar base = primary();
        if (eat('^')) {
            bool neg = eat('-');
            skip();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
            return base.pow(neg ? -e : e);
        }
        return base;
    }
    Scalar primary() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end");
        if (eat('(')) {
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Scalar(Rat(mpz_class(std::string(text_.substr(start, pos_ - start)))));
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || static_cast<unsigned char>(text_[pos_]) >= 0x80))
            ++pos_;
        if (start == pos_) fail("unexpected character");
        auto g = gen_from_name(text_.substr(start, pos_ - start));
        if (!g) fail("unknown generator '" + std::string(text_.substr(start, pos_ - start)) + "'");
        return Scalar::gen(*g);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace cms
