#pragma once

// Twisted polynomials k[tau] with tau*c = c^q*tau, and Drinfeld F_q[t]-modules
// phi_t = theta + kappa_1 tau + ... + kappa_r tau^r.

#include <string>
#include <utility>
#include <vector>

#include "ratfunc.hpp"

namespace drinrel {

class TwistedPoly {
public:
    TwistedPoly() = default;
    explicit TwistedPoly(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }
    static TwistedPoly constant(const RatFunc& c) { return TwistedPoly({c}); }
    /// tau^k.
    static TwistedPoly tau(const FieldPtr& f, std::size_t k = 1) {
        std::vector<RatFunc> v(k + 1, RatFunc::zero(f));
        v[k] = RatFunc::one(f);
        return TwistedPoly(std::move(v));
    }

    const std::vector<RatFunc>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    Degree degree() const noexcept {
        return c_.empty() ? Degree::neg_inf() : Degree(static_cast<long>(c_.size()) - 1);
    }
    RatFunc coeff(std::size_t i, const FieldPtr& f) const { return i < c_.size() ? c_[i] : RatFunc::zero(f); }

    friend TwistedPoly operator+(const TwistedPoly& a, const TwistedPoly& b) {
        std::vector<RatFunc> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i < a.c_.size() && i < b.c_.size()) v[i] = a.c_[i] + b.c_[i];
            else v[i] = i < a.c_.size() ? a.c_[i] : b.c_[i];
        }
        return TwistedPoly(std::move(v));
    }
    TwistedPoly operator-() const {
        std::vector<RatFunc> v;
        for (const auto& c : c_) v.push_back(-c);
        return TwistedPoly(std::move(v));
    }
    friend TwistedPoly operator-(const TwistedPoly& a, const TwistedPoly& b) { return a + (-b); }
    /// Left scalar multiplication c*f.
    TwistedPoly scaled(const RatFunc& s) const {
        std::vector<RatFunc> v;
        for (const auto& c : c_) v.push_back(s * c);
        return TwistedPoly(std::move(v));
    }
    friend bool operator==(const TwistedPoly& a, const TwistedPoly& b) noexcept { return a.c_ == b.c_; }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            std::string mon = i == 0 ? "" : (i == 1 ? "tau" : "tau^" + std::to_string(i));
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
    std::vector<RatFunc> c_;
};

/// (sum a_i tau^i)(sum b_j tau^j) = sum a_i b_j^{q^i} tau^{i+j}.
inline TwistedPoly twisted_mul(const TwistedPoly& f, const TwistedPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    const FieldPtr fld = a.back().field();
    std::vector<RatFunc> out(a.size() + b.size() - 1, RatFunc::zero(fld));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j].frobenius(static_cast<unsigned>(i));
        }
    }
    return TwistedPoly(std::move(out));
}

/// sum c_i P^{q^i}.
inline RatFunc evaluate(const TwistedPoly& f, const RatFunc& P) {
    const FieldPtr fld = P.field() ? P.field() : (f.is_zero() ? nullptr : f.coeffs().back().field());
    if (!fld) return P;
    RatFunc acc = RatFunc::zero(fld);
    if (P.is_zero()) return acc;
    RatFunc pw = P;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i > 0) pw = pw.frobenius(1);
        if (!f.coeffs()[i].is_zero()) acc += f.coeffs()[i] * pw;
    }
    return acc;
}

/// phi_t = theta + kappa_1 tau + ... + kappa_r tau^r with kappa_r != 0.
class DrinfeldModule {
public:
    DrinfeldModule(FieldPtr f, std::vector<RatFunc> kappa) : f_(std::move(f)), kappa_(std::move(kappa)) {
        if (kappa_.empty()) throw InputError("Drinfeld module needs rank >= 1");
        if (kappa_.back().is_zero()) throw InputError("leading coefficient kappa_r must be nonzero");
        for (auto& k : kappa_)
            if (k.is_zero()) k = RatFunc::zero(f_);
    }

    const FieldPtr& field() const noexcept { return f_; }
    int rank() const noexcept { return static_cast<int>(kappa_.size()); }
    /// kappa_j for 1 <= j <= r; kappa_0 = theta.
    const RatFunc& kappa(int j) const { return kappa_.at(static_cast<std::size_t>(j - 1)); }
    const std::vector<RatFunc>& kappas() const noexcept { return kappa_; }

    TwistedPoly phi_t() const {
        std::vector<RatFunc> v{RatFunc::theta(f_)};
        v.insert(v.end(), kappa_.begin(), kappa_.end());
        return TwistedPoly(std::move(v));
    }

    /// phi_t(x) = theta x + sum kappa_j x^{q^j}.
    RatFunc act_t(const RatFunc& x) const {
        if (x.is_zero()) return x;
        RatFunc acc = RatFunc::theta(f_) * x;
        RatFunc pw = x;
        for (const auto& k : kappa_) {
            pw = pw.frobenius(1);
            if (!k.is_zero()) acc += k * pw;
        }
        return acc;
    }

    friend bool operator==(const DrinfeldModule& a, const DrinfeldModule& b) {
        return *a.f_ == *b.f_ && a.kappa_ == b.kappa_;
    }

private:
    FieldPtr f_;
    std::vector<RatFunc> kappa_;
};

/// Memoized twisted powers (phi_t)^i; one cache per computation.
class PhiPowers {
public:
    explicit PhiPowers(const DrinfeldModule& E) : phi_t_(E.phi_t()), pw_{TwistedPoly::constant(RatFunc::one(E.field()))} {}
    const TwistedPoly& power(std::size_t i) {
        while (pw_.size() <= i) pw_.push_back(twisted_mul(pw_.back(), phi_t_));
        return pw_[i];
    }

private:
    TwistedPoly phi_t_;
    std::vector<TwistedPoly> pw_;
};

/// phi_a = sum c_i (phi_t)^i.
inline TwistedPoly phi_of_a(const DrinfeldModule& E, const TPoly& a, PhiPowers& cache) {
    TwistedPoly acc;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const Fq c = a.coeffs()[i];
        if (c.raw == 0) continue;
        acc = acc + cache.power(i).scaled(RatFunc::constant(E.field(), c));
    }
    return acc;
}
inline TwistedPoly phi_of_a(const DrinfeldModule& E, const TPoly& a) {
    PhiPowers cache(E);
    return phi_of_a(E, a, cache);
}

/// a . P = phi_a(P), by Horner in phi_t without forming phi_a.
inline RatFunc act(const DrinfeldModule& E, const TPoly& a, const RatFunc& P) {
    const FieldPtr& f = E.field();
    RatFunc acc = RatFunc::zero(f);
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        acc = E.act_t(acc);
        if (a.coeffs()[i].raw != 0) acc += P.scaled(a.coeffs()[i]);
    }
    return acc;
}

/// j(E) = kappa_1^{q+1} / kappa_2 for rank 2.
inline RatFunc j_invariant(const DrinfeldModule& E) {
    if (E.rank() != 2) throw InputError("j-invariant defined for rank 2 only");
    return E.kappa(1).pow(static_cast<long>(E.field()->q() + 1)) / E.kappa(2);
}

/// The isomorphic module E' with u phi_t = phi'_t u: kappa'_j = kappa_j / u^{q^j - 1}.
inline DrinfeldModule twist_by_unit(const DrinfeldModule& E, const RatFunc& u) {
    if (u.is_zero()) throw InputError("twist by zero");
    std::vector<RatFunc> k;
    RatFunc uj = u;
    for (int j = 1; j <= E.rank(); ++j) {
        uj = uj.frobenius(1);
        k.push_back(E.kappa(j) * u / uj);
    }
    return DrinfeldModule(E.field(), std::move(k));
}

}  // namespace drinrel
