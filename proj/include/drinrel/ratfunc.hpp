#pragma once

// Elements of k = F_q(theta) and of k[t].

#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace drinrel {

/// Reduced fraction num/den of theta-polynomials; den monic, zero is 0/1.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(ThetaPoly p) : num_(std::move(p)), den_(ThetaPoly::one(num_.field())) {}
    /// Normalizing constructor (see ratfunc_normalize).
    RatFunc(ThetaPoly num, ThetaPoly den) {
        if (den.is_zero()) throw InputError("division by zero");
        const FieldPtr f = den.field();
        if (num.is_zero()) {
            num_ = ThetaPoly(f);
            den_ = ThetaPoly::one(f);
            return;
        }
        if (!den.is_constant()) {
            const ThetaPoly g = poly_gcd(num, den);
            if (!g.is_one()) {
                num = num.exact_div(g);
                den = den.exact_div(g);
            }
        }
        const Fq li = f->inv(den.lead());
        num_ = num.scaled(li);
        den_ = den.scaled(li);
    }

    static RatFunc zero(const FieldPtr& f) { return RatFunc(ThetaPoly(f)); }
    static RatFunc one(const FieldPtr& f) { return RatFunc(ThetaPoly::one(f)); }
    static RatFunc theta(const FieldPtr& f) { return RatFunc(ThetaPoly::x(f)); }
    static RatFunc constant(const FieldPtr& f, Fq c) { return RatFunc(ThetaPoly::constant(f, c)); }

    const ThetaPoly& num() const noexcept { return num_; }
    const ThetaPoly& den() const noexcept { return den_; }
    const FieldPtr& field() const noexcept { return den_.field() ? den_.field() : num_.field(); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }
    /// Element of F_q (including zero).
    bool is_constant() const noexcept { return den_.is_one() && num_.is_constant(); }

    RatFunc operator-() const { return from_reduced(-num_, den_); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return a.add(b, false); }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a.add(b, true); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return zero(a.field() ? a.field() : b.field());
        if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
        // cross-cancel: gcd(a.num, b.den) and gcd(b.num, a.den)
        ThetaPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
        if (!bd.is_one()) {
            const ThetaPoly g = poly_gcd(an, bd);
            if (!g.is_one()) {
                an = an.exact_div(g);
                bd = bd.exact_div(g);
            }
        }
        if (!ad.is_one()) {
            const ThetaPoly g = poly_gcd(bn, ad);
            if (!g.is_one()) {
                bn = bn.exact_div(g);
                ad = ad.exact_div(g);
            }
        }
        return monic_den(an * bn, ad * bd);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    RatFunc inverse() const {
        if (is_zero()) throw InputError("division by zero");
        return monic_den(den_, num_);
    }

    RatFunc scaled(Fq c) const {
        if (c.raw == 0) return zero(field());
        return from_reduced(num_.scaled(c), den_);
    }

    /// Integer power; negative exponents invert (zero base then throws).
    RatFunc pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        return from_reduced(num_.pow(static_cast<std::uint64_t>(n)), den_.pow(static_cast<std::uint64_t>(n)));
    }

    /// f^{q^n}; a reduced fraction stays reduced because gcd(a^m, b^m) = gcd(a, b)^m.
    RatFunc frobenius(unsigned n) const { return from_reduced(num_.frobenius(n), den_.frobenius(n)); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// "<poly>" or "<num>/<den>" with multi-term parts parenthesized; parseable by the text grammar.
    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        auto wrap = [](std::string s) { return s.find(' ') == std::string::npos ? s : "(" + s + ")"; };
        return wrap(num_.to_string()) + "/" + wrap(den_.to_string());
    }

    /// Total degree max(deg num, deg den): the height of the point [num : den] of P^1.
    long naive_height() const {
        long h = den_.deg();
        if (!num_.is_zero()) h = std::max(h, num_.deg());
        return h;
    }

private:
    static RatFunc from_reduced(ThetaPoly n, ThetaPoly d) {
        RatFunc r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        if (r.num_.is_zero()) r.den_ = ThetaPoly::one(r.den_.field());
        return r;
    }
    // coprime inputs, only the denominator's leading coefficient needs fixing
    static RatFunc monic_den(const ThetaPoly& n, const ThetaPoly& d) {
        const Fq li = d.field()->inv(d.lead());
        return from_reduced(n.scaled(li), d.scaled(li));
    }

    RatFunc add(const RatFunc& b, bool subtract) const {
        const ThetaPoly bn = subtract ? -b.num_ : b.num_;
        if (is_zero()) return from_reduced(bn.with_field(b.field()), b.den_);
        if (b.is_zero()) return *this;
        if (den_.is_one() && b.den_.is_one()) return RatFunc(num_ + bn);
        if (den_.is_one()) return from_reduced(num_ * b.den_ + bn, b.den_);
        if (b.den_.is_one()) return from_reduced(num_ + bn * den_, den_);
        if (den_ == b.den_) {
            ThetaPoly n = num_ + bn;
            if (n.is_zero()) return zero(field());
            const ThetaPoly g = poly_gcd(n, den_);
            if (g.is_one()) return from_reduced(std::move(n), den_);
            return from_reduced(n.exact_div(g), den_.exact_div(g));
        }
        const ThetaPoly g = poly_gcd(den_, b.den_);
        if (g.is_one()) return from_reduced(num_ * b.den_ + bn * den_, den_ * b.den_);
        const ThetaPoly d1 = den_.exact_div(g), d2 = b.den_.exact_div(g);
        ThetaPoly n = num_ * d2 + bn * d1;
        if (n.is_zero()) return zero(field());
        const ThetaPoly g2 = poly_gcd(n, g);
        return from_reduced(n.exact_div(g2), d1 * b.den_.exact_div(g2));
    }

    ThetaPoly num_;
    ThetaPoly den_;
};

/// Reduced fraction with monic denominator; throws "division by zero" on den = 0.
inline RatFunc ratfunc_normalize(const ThetaPoly& num, const ThetaPoly& den) { return RatFunc(num, den); }

/// Polynomial in t with coefficients in k; top coefficient nonzero unless zero.
class PolyTOverK {
public:
    PolyTOverK() = default;
    explicit PolyTOverK(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// Embed an F_q[t] polynomial.
    static PolyTOverK from_tpoly(const TPoly& a) {
        std::vector<RatFunc> v;
        for (Fq c : a.coeffs()) v.push_back(RatFunc::constant(a.field(), c));
        return PolyTOverK(std::move(v));
    }
    /// The polynomial t - theta.
    static PolyTOverK t_minus_theta(const FieldPtr& f) {
        return PolyTOverK({-RatFunc::theta(f), RatFunc::one(f)});
    }

    const std::vector<RatFunc>& coeffs() const noexcept { return c_; }
    std::size_t size() const noexcept { return c_.size(); }
    bool is_zero() const noexcept { return c_.empty(); }
    Degree degree() const noexcept {
        return c_.empty() ? Degree::neg_inf() : Degree(static_cast<long>(c_.size()) - 1);
    }
    /// Coefficient of t^i; `f` supplies the field for out-of-range zeros.
    RatFunc coeff(std::size_t i, const FieldPtr& f) const { return i < c_.size() ? c_[i] : RatFunc::zero(f); }

    friend PolyTOverK operator+(const PolyTOverK& a, const PolyTOverK& b) { return combine(a, b, false); }
    friend PolyTOverK operator-(const PolyTOverK& a, const PolyTOverK& b) { return combine(a, b, true); }
    friend PolyTOverK operator*(const PolyTOverK& a, const PolyTOverK& b) {
        if (a.is_zero() || b.is_zero()) return {};
        const FieldPtr f = a.c_.front().field();
        std::vector<RatFunc> out(a.c_.size() + b.c_.size() - 1, RatFunc::zero(f));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                out[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return PolyTOverK(std::move(out));
    }
    PolyTOverK scaled(const RatFunc& s) const {
        std::vector<RatFunc> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(c * s);
        return PolyTOverK(std::move(v));
    }

    /// Coefficientwise f^{q^n}; t is untouched.
    PolyTOverK frobenius(unsigned n) const {
        std::vector<RatFunc> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(c.frobenius(n));
        return PolyTOverK(std::move(v));
    }

    friend bool operator==(const PolyTOverK& a, const PolyTOverK& b) noexcept { return a.c_ == b.c_; }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            std::string mon = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
            if (i == 0) out += "(" + c_[i].to_string() + ")";
            else if (c_[i].is_one()) out += mon;
            else out += "(" + c_[i].to_string() + ")*" + mon;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    static PolyTOverK combine(const PolyTOverK& a, const PolyTOverK& b, bool subtract) {
        std::vector<RatFunc> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i < a.c_.size() && i < b.c_.size()) v[i] = subtract ? a.c_[i] - b.c_[i] : a.c_[i] + b.c_[i];
            else if (i < a.c_.size()) v[i] = a.c_[i];
            else v[i] = subtract ? -b.c_[i] : b.c_[i];
        }
        return PolyTOverK(std::move(v));
    }

    std::vector<RatFunc> c_;
};

/// n-fold Frobenius twist a -> a^{q^n}; n < 0 would need q-th roots.
inline RatFunc frobenius_twist(const RatFunc& f, long n) {
    if (n < 0) throw InputError("negative twist unsupported");
    return f.frobenius(static_cast<unsigned>(n));
}
inline PolyTOverK frobenius_twist(const PolyTOverK& f, long n) {
    if (n < 0) throw InputError("negative twist unsupported");
    return f.frobenius(static_cast<unsigned>(n));
}

}  // namespace drinrel
