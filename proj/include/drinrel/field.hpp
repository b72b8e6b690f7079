#pragma once

// Finite fields F_q, q = p^e, with elements packed as base-p digit integers.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "error.hpp"

namespace drinrel {

/// Raw element of some F_q. Meaningful only together with its Field.
/// The packed value is sum_i r_i p^i where r is the residue polynomial.
struct Fq {
    std::uint32_t raw = 0;

    friend constexpr bool operator==(Fq, Fq) = default;
    friend constexpr auto operator<=>(Fq, Fq) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Minimal dense arithmetic in F_p[x], used only while a Field is being built.
struct FpPoly {
    using Vec = std::vector<std::uint64_t>;

    static void trim(Vec& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    static std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
        std::uint64_t r = 1, b = a % p, n = p - 2;
        while (n) {
            if (n & 1) r = r * b % p;
            b = b * b % p;
            n >>= 1;
        }
        return r;
    }

    static Vec mod(Vec a, const Vec& m, std::uint64_t p) {
        trim(a);
        const std::uint64_t li = inv(m.back(), p);
        while (a.size() >= m.size()) {
            const std::uint64_t c = a.back() * li % p;
            const std::size_t s = a.size() - m.size();
            for (std::size_t i = 0; i < m.size(); ++i)
                a[s + i] = (a[s + i] + p - c * m[i] % p) % p;
            trim(a);
        }
        return a;
    }

    static Vec mulmod(const Vec& a, const Vec& b, const Vec& m, std::uint64_t p) {
        if (a.empty() || b.empty()) return {};
        Vec c(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
        return mod(std::move(c), m, p);
    }

    static Vec powmod(Vec b, std::uint64_t n, const Vec& m, std::uint64_t p) {
        Vec r{1};
        b = mod(std::move(b), m, p);
        while (n) {
            if (n & 1) r = mulmod(r, b, m, p);
            b = mulmod(b, b, m, p);
            n >>= 1;
        }
        return r;
    }

    static Vec gcd(Vec a, Vec b, std::uint64_t p) {
        trim(a);
        trim(b);
        while (!b.empty()) {
            a = mod(std::move(a), b, p);
            std::swap(a, b);
        }
        return a;
    }

    static Vec sub(Vec a, const Vec& b, std::uint64_t p) {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
        trim(a);
        return a;
    }

    // Rabin's test: x^(p^n) = x mod m and gcd(x^(p^(n/r)) - x, m) = 1 for primes r | n.
    static bool irreducible(const Vec& m, std::uint64_t p) {
        const std::size_t n = m.size() - 1;
        if (n == 0) return false;
        if (n == 1) return true;
        const Vec x{0, 1};
        auto frob_iter = [&](std::size_t k) {
            Vec h = x;
            for (std::size_t i = 0; i < k; ++i) h = powmod(h, p, m, p);
            return h;
        };
        if (sub(frob_iter(n), x, p).size() != 0) return false;
        for (std::uint64_t r : prime_factors(n)) {
            const Vec g = gcd(m, sub(frob_iter(n / r), x, p), p);
            if (g.size() > 1) return false;
        }
        return true;
    }
};

}  // namespace detail

/// Description of F_q: characteristic p, extension degree e, and (for e > 1)
/// a monic irreducible modulus over F_p whose root is written `w`.
///
/// Fields are immutable and shared through FieldPtr. Arithmetic is table
/// driven when q <= 256; otherwise direct (e = 1) or via log tables (e > 1).
class Field {
public:
    /// F_p for a prime p < 2^31.
    static FieldPtr prime(std::uint64_t p) {
        if (!detail::is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
        if (p >= (1ull << 31)) throw InputError("characteristic too large");
        return FieldPtr(new Field(p, {}));
    }

    /// F_{p^e} = F_p[w]/(modulus); modulus given low-to-high, monic, degree e >= 2.
    static FieldPtr extension(std::uint64_t p, std::vector<std::uint32_t> modulus) {
        if (!detail::is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
        while (!modulus.empty() && modulus.back() % p == 0) modulus.pop_back();
        if (modulus.size() < 2) throw InputError("modulus must have degree >= 1");
        if (modulus.size() == 2) {
            // a linear modulus defines F_p itself
            return prime(p);
        }
        for (auto& c : modulus) c %= p;
        if (modulus.back() != 1) throw InputError("modulus must be monic");
        std::uint64_t q = 1;
        for (std::size_t i = 1; i < modulus.size(); ++i) {
            q *= p;
            if (q > (1u << 16)) throw InputError("extension fields limited to q <= 65536");
        }
        detail::FpPoly::Vec m(modulus.begin(), modulus.end());
        if (!detail::FpPoly::irreducible(m, p)) throw InputError("modulus is not irreducible over F_p");
        return FieldPtr(new Field(p, std::move(modulus)));
    }

    /// Convenience dispatcher: e == 1 ignores the modulus.
    static FieldPtr make(std::uint64_t p, int e, std::vector<std::uint32_t> modulus = {}) {
        if (e < 1) throw InputError("extension degree must be >= 1");
        if (e == 1) return prime(p);
        if (static_cast<int>(modulus.size()) != e + 1)
            throw InputError("modulus degree must equal e = " + std::to_string(e));
        return extension(p, std::move(modulus));
    }

    std::uint64_t p() const noexcept { return p_; }
    int e() const noexcept { return e_; }
    std::uint64_t q() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    Fq zero() const noexcept { return Fq{0}; }
    Fq one() const noexcept { return Fq{1}; }
    /// The class of the modulus variable `w` (only for e > 1).
    Fq generator() const {
        if (e_ == 1) throw InputError("generator symbol w requires e > 1");
        return Fq{static_cast<std::uint32_t>(p_)};
    }
    Fq from_int(std::int64_t n) const noexcept {
        std::int64_t r = n % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        return Fq{static_cast<std::uint32_t>(r)};
    }
    /// The i-th element in packed order, 0 <= i < q.
    Fq element(std::uint64_t i) const noexcept { return Fq{static_cast<std::uint32_t>(i)}; }

    bool is_zero(Fq a) const noexcept { return a.raw == 0; }

    Fq add(Fq a, Fq b) const noexcept {
        if (small_) return Fq{add_tab_[a.raw * q_ + b.raw]};
        if (e_ == 1) {
            std::uint64_t s = std::uint64_t(a.raw) + b.raw;
            if (s >= p_) s -= p_;
            return Fq{static_cast<std::uint32_t>(s)};
        }
        if (p_ == 2) return Fq{a.raw ^ b.raw};
        return digitwise(a, b, false);
    }
    Fq sub(Fq a, Fq b) const noexcept { return add(a, neg(b)); }
    Fq neg(Fq a) const noexcept {
        if (small_) return Fq{neg_tab_[a.raw]};
        if (e_ == 1) return Fq{a.raw == 0 ? 0u : static_cast<std::uint32_t>(p_ - a.raw)};
        if (p_ == 2) return a;
        return digitwise(Fq{0}, a, true);
    }
    Fq mul(Fq a, Fq b) const noexcept {
        if (small_) return Fq{mul_tab_[a.raw * q_ + b.raw]};
        if (e_ == 1) return Fq{static_cast<std::uint32_t>(std::uint64_t(a.raw) * b.raw % p_)};
        if (a.raw == 0 || b.raw == 0) return Fq{0};
        return Fq{exp_[log_[a.raw] + log_[b.raw]]};
    }
    Fq inv(Fq a) const {
        if (a.raw == 0) throw InputError("division by zero");
        if (small_) return Fq{inv_tab_[a.raw]};
        if (e_ == 1) return Fq{static_cast<std::uint32_t>(detail::FpPoly::inv(a.raw, p_))};
        return Fq{exp_[(q_ - 1 - log_[a.raw]) % (q_ - 1)]};
    }
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
    Fq pow(Fq a, std::uint64_t n) const noexcept {
        Fq r = one();
        while (n) {
            if (n & 1) r = mul(r, a);
            a = mul(a, a);
            n >>= 1;
        }
        return r;
    }

    /// Residue polynomial digits (length e, low to high).
    std::vector<std::uint32_t> digits(Fq a) const {
        std::vector<std::uint32_t> d(e_);
        std::uint64_t v = a.raw;
        for (int i = 0; i < e_; ++i) {
            d[i] = static_cast<std::uint32_t>(v % p_);
            v /= p_;
        }
        return d;
    }

    /// Decimal for e = 1; an expression in w otherwise ("w^2 + 2*w + 1").
    std::string format(Fq a) const {
        if (e_ == 1) return std::to_string(a.raw);
        const auto d = digits(a);
        std::string out;
        for (int i = e_ - 1; i >= 0; --i) {
            if (d[i] == 0) continue;
            if (!out.empty()) out += " + ";
            std::string mon = i == 0 ? "" : (i == 1 ? "w" : "w^" + std::to_string(i));
            if (i == 0) out += std::to_string(d[i]);
            else if (d[i] == 1) out += mon;
            else out += std::to_string(d[i]) + "*" + mon;
        }
        return out.empty() ? "0" : out;
    }

    /// True when a is a single term (no spaces in its formatted form).
    bool is_atomic(Fq a) const {
        if (e_ == 1) return true;
        const auto d = digits(a);
        return std::count_if(d.begin(), d.end(), [](std::uint32_t x) { return x != 0; }) <= 1;
    }

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.p_ == b.p_ && a.modulus_ == b.modulus_;
    }

    std::string describe() const {
        std::string s = "F_" + std::to_string(q_);
        if (e_ > 1) {
            s += " = F_" + std::to_string(p_) + "[w]/(";
            bool first = true;
            for (int i = e_; i >= 0; --i) {
                if (modulus_[i] == 0) continue;
                if (!first) s += " + ";
                first = false;
                std::string mon = i == 0 ? "" : (i == 1 ? "w" : "w^" + std::to_string(i));
                if (i == 0) s += std::to_string(modulus_[i]);
                else if (modulus_[i] == 1) s += mon;
                else s += std::to_string(modulus_[i]) + "*" + mon;
            }
            s += ")";
        }
        return s;
    }

private:
    Field(std::uint64_t p, std::vector<std::uint32_t> modulus)
        : p_(p), e_(modulus.empty() ? 1 : static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)) {
        q_ = 1;
        for (int i = 0; i < e_; ++i) q_ *= p_;
        if (e_ > 1) build_log_tables();
        small_ = q_ <= 256;
        if (small_) build_small_tables();
    }

    Fq digitwise(Fq a, Fq b, bool negate_b) const noexcept {
        std::uint64_t x = a.raw, y = b.raw, out = 0, scale = 1;
        for (int i = 0; i < e_; ++i) {
            std::uint64_t dx = x % p_, dy = y % p_;
            x /= p_;
            y /= p_;
            if (negate_b) dy = (p_ - dy) % p_;
            out += ((dx + dy) % p_) * scale;
            scale *= p_;
        }
        return Fq{static_cast<std::uint32_t>(out)};
    }

    // Multiplication through residue polynomials; used only while building tables.
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
        auto to_vec = [&](std::uint32_t v) {
            detail::FpPoly::Vec r(e_);
            for (int i = 0; i < e_; ++i) {
                r[i] = v % p_;
                v /= static_cast<std::uint32_t>(p_);
            }
            detail::FpPoly::trim(r);
            return r;
        };
        detail::FpPoly::Vec m(modulus_.begin(), modulus_.end());
        const auto c = detail::FpPoly::mulmod(to_vec(a), to_vec(b), m, p_);
        std::uint64_t out = 0, scale = 1;
        for (std::size_t i = 0; i < c.size(); ++i) {
            out += c[i] * scale;
            scale *= p_;
        }
        return static_cast<std::uint32_t>(out);
    }

    void build_log_tables() {
        const std::uint64_t order = q_ - 1;
        const auto factors = detail::prime_factors(order);
        auto slow_pow = [&](std::uint32_t g, std::uint64_t n) {
            std::uint32_t r = 1;
            while (n) {
                if (n & 1) r = slow_mul(r, g);
                g = slow_mul(g, g);
                n >>= 1;
            }
            return r;
        };
        std::uint32_t gen = 0;
        for (std::uint32_t g = 2; g < q_; ++g) {
            bool primitive = true;
            for (auto r : factors)
                if (slow_pow(g, order / r) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) {
                gen = g;
                break;
            }
        }
        exp_.assign(2 * order, 0);
        log_.assign(q_, 0);
        std::uint32_t x = 1;
        for (std::uint64_t i = 0; i < order; ++i) {
            exp_[i] = exp_[i + order] = x;
            log_[x] = static_cast<std::uint32_t>(i);
            x = slow_mul(x, gen);
        }
    }

    void build_small_tables() {
        small_ = false;  // compute entries with the general routines first
        add_tab_.assign(q_ * q_, 0);
        mul_tab_.assign(q_ * q_, 0);
        neg_tab_.assign(q_, 0);
        inv_tab_.assign(q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a) {
            neg_tab_[a] = static_cast<std::uint8_t>(neg(Fq{a}).raw);
            if (a) inv_tab_[a] = static_cast<std::uint8_t>(inv(Fq{a}).raw);
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_tab_[a * q_ + b] = static_cast<std::uint8_t>(add(Fq{a}, Fq{b}).raw);
                mul_tab_[a * q_ + b] = static_cast<std::uint8_t>(mul(Fq{a}, Fq{b}).raw);
            }
        }
        small_ = true;
    }

    std::uint64_t p_;
    int e_;
    std::uint64_t q_ = 1;
    std::vector<std::uint32_t> modulus_;
    bool small_ = false;
    std::vector<std::uint8_t> add_tab_, mul_tab_, neg_tab_, inv_tab_;
    std::vector<std::uint32_t> exp_, log_;
};

/// An element of F_q tagged with its field, for value-level arithmetic.
class FqElem {
public:
    FqElem(FieldPtr f, Fq v) : f_(std::move(f)), v_(v) {}
    FqElem(FieldPtr f, std::int64_t n) : f_(std::move(f)), v_(f_->from_int(n)) {}

    const FieldPtr& field() const noexcept { return f_; }
    Fq raw() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_.raw == 0; }

    friend FqElem operator+(const FqElem& a, const FqElem& b) { return {a.f_, a.f_->add(a.v_, b.v_)}; }
    friend FqElem operator-(const FqElem& a, const FqElem& b) { return {a.f_, a.f_->sub(a.v_, b.v_)}; }
    friend FqElem operator*(const FqElem& a, const FqElem& b) { return {a.f_, a.f_->mul(a.v_, b.v_)}; }
    friend FqElem operator/(const FqElem& a, const FqElem& b) { return {a.f_, a.f_->div(a.v_, b.v_)}; }
    FqElem operator-() const { return {f_, f_->neg(v_)}; }
    FqElem inverse() const { return {f_, f_->inv(v_)}; }
    FqElem pow(std::uint64_t n) const { return {f_, f_->pow(v_, n)}; }

    friend bool operator==(const FqElem& a, const FqElem& b) noexcept { return a.v_ == b.v_; }

    std::string to_string() const { return f_->format(v_); }

private:
    FieldPtr f_;
    Fq v_;
};

}  // namespace drinrel
