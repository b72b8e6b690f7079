#pragma once

// Dense univariate polynomials over F_q, tagged by variable (theta or t).

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "degree.hpp"
#include "error.hpp"
#include "field.hpp"

namespace drinrel {

/// The base variable theta of k = F_q(theta); printed as `T`.
struct ThetaVar {
    static constexpr char symbol = 'T';
};
/// The module variable t of F_q[t]; printed as `t`.
struct TVar {
    static constexpr char symbol = 't';
};
/// The root of the modulus of F_{p^e}, for printing moduli over F_p.
struct WVar {
    static constexpr char symbol = 'w';
};

template <class Var>
class Poly {
public:
    /// Zero polynomial not yet bound to a field; adopts the field of the other operand.
    Poly() = default;
    explicit Poly(FieldPtr f) : f_(std::move(f)) {}
    Poly(FieldPtr f, std::vector<Fq> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { trim(); }

    static Poly zero(const FieldPtr& f) { return Poly(f); }
    static Poly one(const FieldPtr& f) { return constant(f, f->one()); }
    static Poly constant(const FieldPtr& f, Fq c) { return Poly(f, {c}); }
    static Poly x(const FieldPtr& f) { return monomial(f, f->one(), 1); }
    static Poly monomial(const FieldPtr& f, Fq c, std::size_t k) {
        std::vector<Fq> v(k + 1, f->zero());
        v[k] = c;
        return Poly(f, std::move(v));
    }
    /// Coefficients as small integers mod p, low to high.
    static Poly from_ints(const FieldPtr& f, std::initializer_list<std::int64_t> ints) {
        std::vector<Fq> v;
        for (auto n : ints) v.push_back(f->from_int(n));
        return Poly(f, std::move(v));
    }

    const FieldPtr& field() const noexcept { return f_; }
    const std::vector<Fq>& coeffs() const noexcept { return c_; }
    std::size_t size() const noexcept { return c_.size(); }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].raw == 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back().raw == 1; }

    Degree degree() const noexcept {
        return c_.empty() ? Degree::neg_inf() : Degree(static_cast<long>(c_.size()) - 1);
    }
    /// Degree of a nonzero polynomial as an integer; throws on zero.
    long deg() const { return degree().value(); }

    Fq coeff(std::size_t k) const noexcept { return k < c_.size() ? c_[k] : Fq{0}; }
    Fq lead() const noexcept { return c_.empty() ? Fq{0} : c_.back(); }

    void set_coeff(std::size_t k, Fq v) {
        if (k >= c_.size()) {
            if (v.raw == 0) return;
            c_.resize(k + 1, Fq{0});
        }
        c_[k] = v;
        trim();
    }

    Poly monic() const {
        if (c_.empty()) return *this;
        return scaled(f_->inv(lead()));
    }

    Poly scaled(Fq s) const {
        if (s.raw == 0) return Poly(f_);
        Poly r(*this);
        for (auto& x : r.c_) x = f_->mul(x, s);
        return r;
    }

    /// Multiplication by x^k.
    Poly shifted(std::size_t k) const {
        if (c_.empty() || k == 0) return *this;
        std::vector<Fq> v(k, Fq{0});
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(f_, std::move(v));
    }

    /// Substitute x -> x^m. With m = q^n this is the n-fold q-power of the
    /// polynomial, since F_q coefficients are fixed by Frobenius.
    Poly substitute_power(std::uint64_t m) const {
        if (c_.size() <= 1 || m == 1) return *this;
        std::vector<Fq> v((c_.size() - 1) * m + 1, Fq{0});
        for (std::size_t i = 0; i < c_.size(); ++i) v[i * m] = c_[i];
        return Poly(f_, std::move(v));
    }

    /// f^{q^n} computed by substitution.
    Poly frobenius(unsigned n = 1) const {
        std::uint64_t m = 1;
        for (unsigned i = 0; i < n; ++i) m *= f_->q();
        return substitute_power(m);
    }

    Fq eval(Fq x) const noexcept {
        Fq r{0};
        for (std::size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x), c_[i]);
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(f_);
        std::vector<Fq> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = f_->mul(c_[i], f_->from_int(static_cast<std::int64_t>(i % f_->p())));
        return Poly(f_, std::move(v));
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& x : r.c_) x = f_->neg(x);
        return r;
    }

    Poly& operator+=(const Poly& o) {
        adopt(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Fq{0});
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_->add(c_[i], o.c_[i]);
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        adopt(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Fq{0});
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_->sub(c_[i], o.c_[i]);
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        const FieldPtr& f = a.f_ ? a.f_ : b.f_;
        if (a.c_.empty() || b.c_.empty()) return Poly(f);
        std::vector<Fq> out(a.c_.size() + b.c_.size() - 1, Fq{0});
        mul_into(*f, a.c_.data(), a.c_.size(), b.c_.data(), b.c_.size(), out.data());
        return Poly(f, std::move(out));
    }

    /// Quotient and remainder; throws "division by zero" when b = 0.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw InputError("division by zero");
        const FieldPtr& f = b.f_;
        if (a.c_.size() < b.c_.size()) return {Poly(f), a.with_field(f)};
        std::vector<Fq> r = a.c_;
        std::vector<Fq> q(a.c_.size() - b.c_.size() + 1, Fq{0});
        const Fq li = f->inv(b.lead());
        const std::size_t bl = b.c_.size();
        for (std::size_t k = q.size(); k-- > 0;) {
            const Fq c = f->mul(r[k + bl - 1], li);
            q[k] = c;
            if (c.raw == 0) continue;
            const Fq nc = f->neg(c);
            for (std::size_t i = 0; i < bl; ++i) r[k + i] = f->add(r[k + i], f->mul(nc, b.c_[i]));
        }
        r.resize(bl - 1);
        return {Poly(f, std::move(q)), Poly(f, std::move(r))};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) {
        if (a.c_.size() < b.c_.size() && !b.is_zero()) return a.with_field(b.f_);
        return divmod(a, b).second;
    }

    /// Exact division; throws InternalError when b does not divide a.
    Poly exact_div(const Poly& b) const {
        auto [q, r] = divmod(*this, b);
        if (!r.is_zero()) throw InternalError("inexact polynomial division");
        return q;
    }

    bool divisible_by(const Poly& b) const { return (*this % b).is_zero(); }

    Poly pow(std::uint64_t n) const {
        Poly r = one(f_), b = *this;
        while (n) {
            if (n & 1) r *= b;
            n >>= 1;
            if (n) b *= b;
        }
        return r;
    }

    Poly powmod(std::uint64_t n, const Poly& m) const {
        Poly r = one(f_) % m, b = *this % m;
        while (n) {
            if (n & 1) r = (r * b) % m;
            n >>= 1;
            if (n) b = (b * b) % m;
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.c_ == b.c_; }

    /// Canonical order: by degree, then coefficients from the top down.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
        if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;)
            if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
        return std::strong_ordering::equal;
    }

    /// Human-readable form, highest power first: "T^3 + 2*T + 1".
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const Fq c = c_[i];
            if (c.raw == 0) continue;
            if (!out.empty()) out += " + ";
            std::string mon;
            if (i == 1) mon = std::string(1, Var::symbol);
            else if (i > 1) mon = std::string(1, Var::symbol) + "^" + std::to_string(i);
            if (i == 0) {
                out += f_->format(c);
            } else if (c.raw == 1) {
                out += mon;
            } else {
                const std::string cs = f_->format(c);
                out += (f_->is_atomic(c) ? cs : "(" + cs + ")") + "*" + mon;
            }
        }
        return out;
    }

    Poly with_field(const FieldPtr& f) const {
        Poly r(*this);
        if (!r.f_) r.f_ = f;
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().raw == 0) c_.pop_back();
    }
    void adopt(const Poly& o) {
        if (!f_) f_ = o.f_;
    }

    static constexpr std::size_t kKaratsubaCutoff = 48;

    // out[0 .. na+nb-1) += a * b
    static void mul_into(const Field& f, const Fq* a, std::size_t na, const Fq* b, std::size_t nb, Fq* out) {
        if (na < kKaratsubaCutoff || nb < kKaratsubaCutoff) {
            for (std::size_t i = 0; i < na; ++i) {
                const Fq ai = a[i];
                if (ai.raw == 0) continue;
                for (std::size_t j = 0; j < nb; ++j) out[i + j] = f.add(out[i + j], f.mul(ai, b[j]));
            }
            return;
        }
        if (na != nb) {
            // split the longer operand into chunks of the shorter length
            if (na < nb) {
                std::swap(a, b);
                std::swap(na, nb);
            }
            for (std::size_t s = 0; s < na; s += nb) {
                const std::size_t len = std::min(nb, na - s);
                mul_into(f, a + s, len, b, nb, out + s);
            }
            return;
        }
        // Karatsuba on equal lengths: a = a0 + x^h a1, b = b0 + x^h b1
        const std::size_t n = na, h = n / 2, h1 = n - h;
        std::vector<Fq> sa(h1, Fq{0}), sb(h1, Fq{0});
        for (std::size_t i = 0; i < h; ++i) {
            sa[i] = a[i];
            sb[i] = b[i];
        }
        for (std::size_t i = 0; i < h1; ++i) {
            sa[i] = f.add(sa[i], a[h + i]);
            sb[i] = f.add(sb[i], b[h + i]);
        }
        std::vector<Fq> z0(2 * h - 1, Fq{0}), z2(2 * h1 - 1, Fq{0}), z1(2 * h1 - 1, Fq{0});
        mul_into(f, a, h, b, h, z0.data());
        mul_into(f, a + h, h1, b + h, h1, z2.data());
        mul_into(f, sa.data(), h1, sb.data(), h1, z1.data());
        for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = f.sub(z1[i], z0[i]);
        for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = f.sub(z1[i], z2[i]);
        for (std::size_t i = 0; i < z0.size(); ++i) out[i] = f.add(out[i], z0[i]);
        for (std::size_t i = 0; i < z1.size(); ++i) out[h + i] = f.add(out[h + i], z1[i]);
        for (std::size_t i = 0; i < z2.size(); ++i) out[2 * h + i] = f.add(out[2 * h + i], z2[i]);
    }

    FieldPtr f_;
    std::vector<Fq> c_;
};

using ThetaPoly = Poly<ThetaVar>;
using TPoly = Poly<TVar>;

/// Monic gcd; throws when both arguments are zero.
template <class V>
Poly<V> poly_gcd(Poly<V> a, Poly<V> b) {
    if (a.is_zero() && b.is_zero()) throw InputError("gcd of two zero polynomials");
    while (!b.is_zero()) {
        a = a % b;
        std::swap(a, b);
    }
    return a.monic();
}

/// Extended gcd: returns (g, s, u) with s*a + u*b = g, g monic.
template <class V>
std::tuple<Poly<V>, Poly<V>, Poly<V>> poly_xgcd(const Poly<V>& a, const Poly<V>& b) {
    const FieldPtr& f = a.field() ? a.field() : b.field();
    Poly<V> r0 = a, r1 = b, s0 = Poly<V>::one(f), s1(f), u0(f), u1 = Poly<V>::one(f);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<V> s2 = s0 - q * s1, u2 = u0 - q * u1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.is_zero()) throw InputError("gcd of two zero polynomials");
    const Fq li = f->inv(r0.lead());
    return {r0.scaled(li), s0.scaled(li), u0.scaled(li)};
}

/// Inverse of a modulo m (gcd(a, m) must be 1).
template <class V>
Poly<V> poly_invmod(const Poly<V>& a, const Poly<V>& m) {
    auto [g, s, u] = poly_xgcd(a % m, m);
    if (!g.is_one()) throw InputError("division by zero");
    return s % m;
}

/// Rabin irreducibility test over F_q.
template <class V>
bool is_irreducible(const Poly<V>& f) {
    if (f.is_constant()) return false;
    const long n = f.deg();
    if (n == 1) return true;
    const FieldPtr& F = f.field();
    const Poly<V> x = Poly<V>::x(F);
    auto frob_power = [&](long k) {
        Poly<V> h = x % f;
        for (long i = 0; i < k; ++i) h = h.powmod(F->q(), f);
        return h;
    };
    if (!((frob_power(n) - x) % f).is_zero()) return false;
    for (auto r : detail::prime_factors(static_cast<std::uint64_t>(n))) {
        const Poly<V> g = poly_gcd(f, frob_power(n / static_cast<long>(r)) - x);
        if (!g.is_one()) return false;
    }
    return true;
}

namespace detail {

// p-th root of a polynomial whose derivative vanishes.
template <class V>
Poly<V> pth_root(const Poly<V>& f) {
    const FieldPtr& F = f.field();
    const std::uint64_t p = F->p();
    const std::uint64_t root_exp = F->q() / p;  // a^(q/p) is the p-th root in F_q
    std::vector<Fq> v;
    for (std::size_t i = 0; i < f.size(); i += p) v.push_back(F->pow(f.coeff(i), root_exp));
    return Poly<V>(F, std::move(v));
}

// Square-free decomposition of a monic polynomial: pairs (square-free factor, multiplicity).
template <class V>
void squarefree_into(const Poly<V>& f, std::uint64_t mult, std::vector<std::pair<Poly<V>, std::uint64_t>>& out) {
    if (f.is_constant()) return;
    const Poly<V> d = f.derivative();
    if (d.is_zero()) {
        squarefree_into(pth_root(f), mult * f.field()->p(), out);
        return;
    }
    Poly<V> c = poly_gcd(f, d);
    Poly<V> w = f.exact_div(c);
    std::uint64_t i = 1;
    while (!w.is_one()) {
        Poly<V> y = poly_gcd(w, c);
        Poly<V> fac = w.exact_div(y);
        if (!fac.is_one()) out.emplace_back(fac.monic(), i * mult);
        w = y;
        c = c.exact_div(y);
        ++i;
    }
    if (!c.is_one()) squarefree_into(pth_root(c.monic()), mult * f.field()->p(), out);
}

// Distinct-degree factorization of a monic square-free polynomial.
template <class V>
std::vector<std::pair<Poly<V>, long>> distinct_degree(Poly<V> f) {
    std::vector<std::pair<Poly<V>, long>> out;
    const FieldPtr& F = f.field();
    const Poly<V> x = Poly<V>::x(F);
    Poly<V> h = x % f;
    for (long i = 1; !f.is_constant() && 2 * i <= f.deg(); ++i) {
        h = h.powmod(F->q(), f);
        Poly<V> g = poly_gcd(f, h - x);
        if (!g.is_one()) {
            out.emplace_back(g, i);
            f = f.exact_div(g);
            h = h % f;
        }
    }
    if (!f.is_constant()) out.emplace_back(f.monic(), f.deg());
    return out;
}

// Cantor-Zassenhaus splitting of a product of distinct irreducibles of degree d.
template <class V>
void equal_degree(const Poly<V>& f, long d, std::mt19937_64& rng, std::vector<Poly<V>>& out) {
    if (f.deg() == d) {
        out.push_back(f.monic());
        return;
    }
    const FieldPtr& F = f.field();
    const std::uint64_t q = F->q();
    while (true) {
        std::vector<Fq> rc(static_cast<std::size_t>(f.deg()));
        for (auto& c : rc) c = F->element(rng() % q);
        const Poly<V> a(F, std::move(rc));
        if (a.is_constant()) continue;
        Poly<V> b(F);
        if (q % 2 == 1) {
            // b = a^((q^d - 1)/2) - 1 = (a^(1 + q + ... + q^(d-1)))^((q-1)/2) - 1
            Poly<V> norm = Poly<V>::one(F), ai = a % f;
            for (long i = 0; i < d; ++i) {
                norm = (norm * ai) % f;
                ai = ai.powmod(q, f);
            }
            b = norm.powmod((q - 1) / 2, f) - Poly<V>::one(F);
        } else {
            // absolute trace: a + a^2 + ... + a^(2^(e*d - 1))
            const long steps = static_cast<long>(F->e()) * d;
            Poly<V> ai = a % f;
            for (long i = 0; i < steps; ++i) {
                b += ai;
                ai = (ai * ai) % f;
            }
        }
        if (b.is_zero()) continue;
        const Poly<V> g = poly_gcd(f, b);
        if (g.is_constant() || g.deg() == f.deg()) continue;
        equal_degree(g, d, rng, out);
        equal_degree(f.exact_div(g), d, rng, out);
        return;
    }
}

}  // namespace detail

/// Factorization of a nonzero polynomial into monic irreducibles with multiplicities,
/// sorted canonically. The leading coefficient is not included.
template <class V>
std::vector<std::pair<Poly<V>, std::uint64_t>> factor_into_irreducibles(const Poly<V>& a) {
    if (a.is_zero()) throw InputError("cannot factor the zero polynomial");
    std::vector<std::pair<Poly<V>, std::uint64_t>> sqf;
    detail::squarefree_into(a.monic(), 1, sqf);
    std::mt19937_64 rng(0x5eed5eedULL);
    std::vector<std::pair<Poly<V>, std::uint64_t>> out;
    for (auto& [s, m] : sqf) {
        for (auto& [g, d] : detail::distinct_degree(s)) {
            std::vector<Poly<V>> pieces;
            detail::equal_degree(g, d, rng, pieces);
            for (auto& p : pieces) out.emplace_back(std::move(p), m);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::pair<Poly<V>, std::uint64_t>> merged;
    for (auto& pr : out) {
        if (!merged.empty() && merged.back().first == pr.first) merged.back().second += pr.second;
        else merged.push_back(std::move(pr));
    }
    return merged;
}

/// Multiplicity of the irreducible pi in a (a != 0).
template <class V>
long multiplicity(Poly<V> a, const Poly<V>& pi) {
    long m = 0;
    while (true) {
        auto [q, r] = divmod(a, pi);
        if (!r.is_zero()) return m;
        a = std::move(q);
        ++m;
    }
}

/// The monic polynomial following `cur` in canonical order (same degree,
/// packed coefficients counting upward), or the first monic of degree+1.
template <class V>
Poly<V> next_monic(const Poly<V>& cur) {
    const FieldPtr& F = cur.field();
    std::vector<Fq> c = cur.coeffs();
    const std::size_t n = c.size() - 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i].raw + 1 < F->q()) {
            c[i].raw += 1;
            return Poly<V>(F, std::move(c));
        }
        c[i].raw = 0;
    }
    return Poly<V>::monomial(F, F->one(), n + 1);
}

}  // namespace drinrel
