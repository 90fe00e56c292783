#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cms/poly.hpp"

namespace cms {

class Scalar;
using Bindings = std::map<Gen, Scalar>;

// Exact rational function over Q in the fixed generators, kept as
//   coeff * prod_i f_i^{e_i}
// with every f_i a monic, non-constant polynomial free of monomial content
// (single generators appear as their own factors) and e_i a nonzero integer.
// Equality is semantic: the difference is tested against the zero polynomial.
class Scalar {
public:
    struct Factor {
        std::shared_ptr<const Poly> poly;
        int exp;
    };

    Scalar() = default;
    Scalar(long v) : coeff_(v) {}  // NOLINT: implicit on purpose, integers are scalars
    Scalar(const Rat& v) : coeff_(v) {}  // NOLINT
    static Scalar rational(long num, long den);
    static Scalar gen(Gen g);
    static Scalar from_poly(const Poly& p);

    bool is_zero() const { return sgn(coeff_) == 0; }
    bool is_one() const { return factors_.empty() && coeff_ == 1; }
    std::optional<Rat> as_rational() const;
    const Rat& coefficient() const { return coeff_; }
    const std::vector<Factor>& factors() const { return factors_; }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    Scalar pow(int e) const;
    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    // True when the stored representations coincide (implies semantic equality).
    bool identical(const Scalar& o) const;

    // Expanded numerator (including the rational coefficient) and denominator.
    Poly numerator() const;
    Poly denominator() const;

    bool depends_on(Gen g) const;
    bool is_polynomial() const;

    // Simultaneous substitution; throws DenominatorVanishes.
    Scalar substitute(const Bindings& b) const;
    // Limit as g -> infinity; throws DivergentLimit.
    Scalar limit_at_infinity(Gen g) const;

    std::string to_string() const;
    std::string to_latex() const;
    static Scalar parse(std::string_view text);

private:
    void absorb_sum(Poly s);
    static Scalar make(Rat c, std::vector<Factor> fs);
    static void cancel(std::vector<Factor>& fs);

    Rat coeff_;
    std::vector<Factor> factors_;  // sorted by Poly::compare, distinct
};

inline Scalar gen(Gen g) { return Scalar::gen(g); }

}  // namespace cms
