#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cms {

// Big rational; GMP keeps it canonical (positive denominator, reduced).
using Rat = mpq_class;

enum class Gen : std::uint8_t { Alpha = 0, P0, A, Nu, P, Q, S, X };
inline constexpr int kNumGens = 8;

std::string_view gen_name(Gen g);
std::optional<Gen> gen_from_name(std::string_view name);

// Exponent vector packed one byte per generator, alpha in the top byte, so
// that integer comparison is lexicographic order over the generator list.
class Monomial {
public:
    constexpr Monomial() = default;
    constexpr explicit Monomial(std::uint64_t bits) : bits_(bits) {}
    static Monomial of(Gen g, unsigned e = 1);

    unsigned exponent(Gen g) const { return (bits_ >> shift(g)) & 0xffu; }
    unsigned total_degree() const;
    bool is_one() const { return bits_ == 0; }
    std::uint64_t bits() const { return bits_; }

    Monomial operator*(Monomial o) const;
    bool divides(Monomial o) const;
    Monomial operator/(Monomial o) const;  // requires divides
    Monomial gcd(Monomial o) const;
    Monomial lcm_degrees(Monomial o) const;  // componentwise max
    Monomial without(Gen g) const { return Monomial(bits_ & ~(std::uint64_t{0xff} << shift(g))); }

    auto operator<=>(const Monomial&) const = default;

private:
    static constexpr unsigned shift(Gen g) { return 8u * (7u - static_cast<unsigned>(g)); }
    std::uint64_t bits_ = 0;
};

// Sparse polynomial over Q in the fixed generators; terms sorted by
// descending monomial, never a zero coefficient.
class Poly {
public:
    struct Term {
        Monomial mono;
        Rat coeff;
    };

    Poly() = default;
    explicit Poly(const Rat& c);
    explicit Poly(long c) : Poly(Rat(c)) {}
    static Poly gen(Gen g, unsigned e = 1);
    static Poly from_terms(std::vector<Term> terms);  // sorts and merges

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    Rat constant_value() const;  // requires is_constant
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    const Term& leading() const { return terms_.front(); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Rat& c) const;
    Poly times_monomial(Monomial m) const;
    Poly pow(unsigned e) const;

    // Exact division; nullopt when d does not divide *this.
    std::optional<Poly> divide_exact(const Poly& d) const;

    unsigned degree(Gen g) const;
    Monomial max_degrees() const;
    Monomial monomial_content() const;
    Poly divide_monomial(Monomial m) const;
    bool involves(Gen g) const { return degree(g) > 0; }
    // Coefficient of g^e, as a polynomial in the remaining generators.
    Poly coefficient_of(Gen g, unsigned e) const;

    bool operator==(const Poly& o) const;
    int compare(const Poly& o) const;

    std::string to_string() const;
    std::string to_latex() const;

private:
    std::vector<Term> terms_;
};

}  // namespace cms
