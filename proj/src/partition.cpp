#include "cms/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "cms/errors.hpp"

namespace cms {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0 || (k > 0 && parts_[k] > parts_[k - 1])) throw NotAPartition(to_string());
        weight_ += parts_[k];
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        parts.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c))) cur += c;
        else if (c == ',' || c == ' ') flush();
        else if (c == '[' || c == ']' || c == '(' || c == ')') flush();
        else throw ParseError("bad partition literal '" + std::string(text) + "'");
    }
    flush();
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int j = 1; j <= (parts_.empty() ? 0 : parts_[0]); ++j) {
        int n = 0;
        for (int p : parts_)
            if (p >= j) ++n;
        c.push_back(n);
    }
    return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu[i] > (*this)[i]) return false;
    return true;
}

int Partition::multiplicity(int part) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), part)); }

std::optional<Partition> Partition::add_box(int i) const {
    if (i < 1 || i > length() + 1) return std::nullopt;
    if (i > 1 && (*this)[i - 1] < (*this)[i] + 1) return std::nullopt;
    std::vector<int> p = parts_;
    if (i == length() + 1) p.push_back(1);
    else ++p[i - 1];
    return Partition(std::move(p));
}

std::optional<Partition> Partition::remove_box(int i) const {
    if (i < 1 || i > length()) return std::nullopt;
    if ((*this)[i + 1] > (*this)[i] - 1) return std::nullopt;
    std::vector<int> p = parts_;
    --p[i - 1];
    return Partition(std::move(p));
}

Partition Partition::with_box(int i) const {
    auto p = add_box(i);
    if (!p) throw NotAPartition(to_string() + " + e_" + std::to_string(i));
    return *p;
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= parts_[i - 1]; ++j) out.push_back({i, j});
    return out;
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(parts_[k]);
    }
    return s + "]";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (a.weight_ != b.weight_) return a.weight_ <=> b.weight_;
    return a.parts_ <=> b.parts_;
}

ArmLeg arm_leg(const Partition& lambda, Cell c) {
    if (!lambda.contains(c))
        throw CellOutsideDiagram("(" + std::to_string(c.i) + "," + std::to_string(c.j) + ") in " + lambda.to_string());
    Partition conj = lambda.conjugate();
    return {lambda[c.i] - c.j, conj[c.j] - c.i, c.j - 1, c.i - 1};
}

bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) return false;
    int a = 0, b = 0;
    for (int i = 1; i <= std::max(lambda.length(), mu.length()); ++i) {
        a += lambda[i];
        b += mu[i];
        if (a < b) return false;
    }
    return true;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int max) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, max); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto ps = partitions_of(k);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int max) {
        out.emplace_back(cur);
        if (row > lambda.length()) return;
        for (int p = 1; p <= std::min(max, lambda[row]); ++p) {
            cur.push_back(p);
            rec(row + 1, p);
            cur.pop_back();
        }
    };
    rec(1, lambda.empty() ? 0 : lambda[1]);
    std::sort(out.begin(), out.end());
    return out;
}

Scalar alpha() { return Scalar::gen(Gen::Alpha); }

Scalar hook_product(const Partition& lambda) {
    Scalar h(1L), inv = alpha().inverse();
    for (Cell c : lambda.cells()) {
        ArmLeg al = arm_leg(lambda, c);
        h *= Scalar(1 + al.arm) + Scalar(al.leg) * inv;
    }
    return h;
}

Scalar deformed_pochhammer(const Scalar& x, const Partition& lambda) {
    Scalar r(1L), inv = alpha().inverse();
    for (Cell c : lambda.cells()) r *= x + Scalar(c.j - 1) - Scalar(c.i - 1) * inv;
    return r;
}

Scalar deformed_pochhammer_rows(const Scalar& x, const Partition& lambda) {
    Scalar r(1L), inv = alpha().inverse();
    for (int i = 1; i <= lambda.length(); ++i) {
        Scalar base = x - Scalar(i - 1) * inv;
        for (int k = 0; k < lambda[i]; ++k) r *= base + Scalar(k);
    }
    return r;
}

Scalar b_coefficient(const Partition& lambda) {
    Scalar r(1L), a = alpha();
    for (Cell c : lambda.cells()) {
        ArmLeg al = arm_leg(lambda, c);
        r *= (Scalar(al.leg + 1) + a * Scalar(al.arm)) / (Scalar(al.leg) + a * Scalar(al.arm + 1));
    }
    return r;
}

Scalar c_factor(CKind kind, const Partition& lambda, const Scalar& z) {
    Scalar r(1L), inv = alpha().inverse();
    Partition conj = lambda.conjugate();
    for (Cell c : lambda.cells()) {
        int li = lambda[c.i], lj = conj[c.j];
        switch (kind) {
            case CKind::Plus: r *= Scalar(li + c.j) - Scalar(lj + c.i) * inv + z; break;
            case CKind::Minus: r *= Scalar(li - c.j) + Scalar(lj - c.i) * inv + z; break;
            case CKind::Zero: r *= Scalar(c.j - 1) - Scalar(c.i - 1) * inv + z; break;
        }
    }
    return r;
}

Scalar binomial_one_box(const Partition& lambda, int i) {
    Partition mu = lambda.with_box(i);
    Scalar a = alpha();
    int len = mu.length();
    Scalar r = Scalar(lambda[i] + 1) + Scalar(len - i) / a;
    for (int j = 1; j <= len; ++j) {
        if (j == i) continue;
        Scalar base = a * Scalar(lambda[i] + 1 - lambda[j]);
        r *= (base + Scalar(j - i - 1)) / (base + Scalar(j - i));
    }
    return r;
}

Scalar shifted_power_sum_eval(int r, const Partition& lambda) {
    Scalar s, inv = alpha().inverse();
    for (int i = 1; i <= lambda.length(); ++i) {
        Scalar shift = Scalar(i) * inv;
        s += (Scalar(lambda[i]) - shift).pow(r) - (-shift).pow(r);
    }
    return s;
}

Scalar d_lambda(const Partition& lambda, const Scalar& p0) {
    Scalar s, two_over_alpha = Scalar(2) / alpha();
    for (int i = 1; i <= lambda.length(); ++i)
        s += Scalar(lambda[i]) * (Scalar(lambda[i] - 1) + two_over_alpha * (p0 - Scalar(i)));
    return s;
}

Scalar eigenvalue_generic(const Scalar& a2, const Scalar& b1, const Partition& lambda, const Scalar& p0) {
    return a2 * d_lambda(lambda, p0) + b1 * Scalar(lambda.weight());
}

Scalar eigenvalue_hermite(const Partition& lambda, const Scalar& nu) { return Scalar(-2 * lambda.weight()) * nu * nu; }

Scalar eigenvalue_laguerre(const Partition& lambda, const Scalar& nu) { return -Scalar(lambda.weight()) * nu; }

Scalar eigenvalue_jacobi(const Partition& lambda, const Scalar& p, const Scalar& q, const Scalar& p0) {
    return eigenvalue_generic(Scalar(1L), -(p + Scalar(2) * q - Scalar(1L)), lambda, p0);
}

Scalar eigenvalue_jack(const Partition& lambda) {
    Scalar s, two_over_alpha = Scalar(2) / alpha();
    for (int i = 1; i <= lambda.length(); ++i)
        s += Scalar(lambda[i]) * (Scalar(lambda[i] - 1) - two_over_alpha * Scalar(i - 1));
    return s;
}

}  // namespace cms
