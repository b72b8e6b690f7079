#pragma once

// Places of F_q(theta), valuations and divisors on the projective line.

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ratfunc.hpp"
#include "rational.hpp"

namespace drinrel {

/// The infinite place, or the finite place of a monic irreducible pi.
class Place {
public:
    static Place infinity() { return Place(); }
    static Place finite(ThetaPoly pi) {
        if (pi.is_zero() || pi.is_constant() || !(pi.lead() == pi.field()->one()))
            throw InputError("place polynomial must be monic of positive degree");
        if (!is_irreducible(pi)) throw InputError("place polynomial must be irreducible");
        return Place(std::move(pi));
    }
    /// Skips the irreducibility test; for factors returned by factor_into_irreducibles.
    static Place finite_unchecked(ThetaPoly pi) { return Place(std::move(pi)); }

    bool is_infinity() const noexcept { return inf_; }
    const ThetaPoly& poly() const noexcept { return pi_; }
    long degree() const noexcept { return inf_ ? 1 : pi_.deg(); }

    std::string to_string() const { return inf_ ? "inf" : pi_.to_string(); }

    /// Canonical order: infinity first, then by degree, then coefficients.
    friend std::strong_ordering operator<=>(const Place& a, const Place& b) noexcept {
        if (a.inf_ != b.inf_) return a.inf_ ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.inf_) return std::strong_ordering::equal;
        return a.pi_ <=> b.pi_;
    }
    friend bool operator==(const Place& a, const Place& b) noexcept {
        return a.inf_ == b.inf_ && (a.inf_ || a.pi_ == b.pi_);
    }

private:
    Place() = default;
    explicit Place(ThetaPoly pi) : inf_(false), pi_(std::move(pi)) {}

    bool inf_ = true;
    ThetaPoly pi_;
};

/// Finite formal sum of places; zero coefficients are never stored.
class Divisor {
public:
    using Map = std::map<Place, long>;

    Divisor() = default;

    long coeff(const Place& v) const {
        auto it = m_.find(v);
        return it == m_.end() ? 0 : it->second;
    }
    void set(const Place& v, long c) {
        if (c == 0) m_.erase(v);
        else m_.insert_or_assign(v, c);
    }
    void add(const Place& v, long c) { set(v, coeff(v) + c); }

    const Map& terms() const noexcept { return m_; }
    bool empty() const noexcept { return m_.empty(); }
    std::set<Place> support() const {
        std::set<Place> s;
        for (const auto& [v, c] : m_) s.insert(v);
        return s;
    }

    long degree() const {
        long d = 0;
        for (const auto& [v, c] : m_) d += c * v.degree();
        return d;
    }
    /// All coefficients nonnegative.
    bool effective() const {
        for (const auto& [v, c] : m_)
            if (c < 0) return false;
        return true;
    }

    Divisor operator-() const {
        Divisor r;
        for (const auto& [v, c] : m_) r.m_.emplace(v, -c);
        return r;
    }
    friend Divisor operator+(Divisor a, const Divisor& b) {
        for (const auto& [v, c] : b.m_) a.add(v, c);
        return a;
    }
    friend Divisor operator-(const Divisor& a, const Divisor& b) { return a + (-b); }
    friend bool operator==(const Divisor& a, const Divisor& b) { return a.m_ == b.m_; }

    /// Placewise a <= b.
    friend bool leq(const Divisor& a, const Divisor& b) { return (b - a).effective(); }

    /// "1*(inf) + 1*(T)"; "0" when empty.
    std::string to_string() const {
        if (m_.empty()) return "0";
        std::string out;
        for (const auto& [v, c] : m_) {
            if (!out.empty()) out += c < 0 ? " - " : " + ";
            else if (c < 0) out += "-";
            out += std::to_string(c < 0 ? -c : c) + "*(" + v.to_string() + ")";
        }
        return out;
    }

private:
    Map m_;
};

/// ord_v(f) for f != 0.
inline long ord_at_place(const RatFunc& f, const Place& v) {
    if (f.is_zero()) throw InputError("valuation of zero");
    if (v.is_infinity()) return f.den().deg() - f.num().deg();
    return multiplicity(f.num(), v.poly()) - multiplicity(f.den(), v.poly());
}

/// min of ord_v over the nonzero entries.
inline long ord_vector(const std::vector<RatFunc>& xs, const Place& v) {
    bool any = false;
    long m = 0;
    for (const auto& x : xs) {
        if (x.is_zero()) continue;
        const long o = ord_at_place(x, v);
        m = any ? std::min(m, o) : o;
        any = true;
    }
    if (!any) throw InputError("valuation of the zero vector");
    return m;
}

/// min of ord_v over the nonzero t-coefficients.
inline long ord_poly_t(const PolyTOverK& h, const Place& v) {
    if (h.is_zero()) throw InputError("valuation of zero");
    return ord_vector(h.coeffs(), v);
}

/// Infinity plus the irreducible factors of every numerator and denominator.
inline std::set<Place> candidate_places(const std::vector<RatFunc>& xs) {
    std::set<Place> out{Place::infinity()};
    for (const auto& x : xs) {
        if (x.is_zero()) continue;
        for (const ThetaPoly* p : {&x.num(), &x.den()}) {
            if (p->is_constant()) continue;
            for (auto& [pi, m] : factor_into_irreducibles(*p)) out.insert(Place::finite_unchecked(pi));
        }
    }
    return out;
}

/// div(x) = sum over v of min_i ord_v(x_i) * v.
inline Divisor div_of_vector(const std::vector<RatFunc>& xs) {
    bool any = false;
    for (const auto& x : xs) any = any || !x.is_zero();
    if (!any) throw InputError("divisor of the zero vector");
    Divisor d;
    for (const auto& v : candidate_places(xs)) d.set(v, ord_vector(xs, v));
    return d;
}

/// Placewise maximum.
inline Divisor divisor_join(const Divisor& a, const Divisor& b) {
    Divisor r;
    for (const auto& [v, c] : a.terms()) r.set(v, std::max(c, b.coeff(v)));
    for (const auto& [v, c] : b.terms()) r.set(v, std::max(c, a.coeff(v)));
    return r;
}

inline long divisor_degree(const Divisor& d) { return d.degree(); }

/// h(x) = -deg div(x); nonnegative and invariant under scaling.
inline Rational height(const std::vector<RatFunc>& xs) { return Rational(-div_of_vector(xs).degree()); }

}  // namespace drinrel
