#pragma once

// Riemann-Roch spaces L(D) = {f : div(f) + D >= 0} on the projective line.
//
// With D = sum n_v (pi_v) + n_inf (inf), Den = prod_{n_v > 0} pi_v^{n_v} and
// N = prod_{n_v < 0} pi_v^{-n_v}, f lies in L(D) iff f * Den / N is a polynomial
// of degree at most deg Den + n_inf - deg N. The basis below is N theta^s / Den.

#include <vector>

#include "places.hpp"

namespace drinrel {

struct RRBasis {
    Divisor divisor;
    std::vector<RatFunc> elements;
    ThetaPoly numer;  // N
    ThetaPoly denom;  // Den
    long dimension = 0;
};

inline long rr_dimension(const Divisor& D) {
    const long d = D.degree();
    return d < 0 ? 0 : d + 1;
}

inline RRBasis rr_basis(const FieldPtr& f, const Divisor& D) {
    RRBasis b;
    b.divisor = D;
    b.numer = ThetaPoly::one(f);
    b.denom = ThetaPoly::one(f);
    long n_inf = 0;
    for (const auto& [v, c] : D.terms()) {
        if (v.is_infinity()) n_inf = c;
        else if (c > 0) b.denom *= v.poly().pow(static_cast<std::uint64_t>(c));
        else b.numer *= v.poly().pow(static_cast<std::uint64_t>(-c));
    }
    const long top = b.denom.deg() + n_inf - b.numer.deg();
    b.dimension = top < 0 ? 0 : top + 1;
    for (long s = 0; s <= top; ++s)
        b.elements.emplace_back(b.numer.shifted(static_cast<std::size_t>(s)), b.denom);
    if (b.dimension != rr_dimension(D)) throw InternalError("Riemann-Roch dimension mismatch");
    return b;
}

/// ord_v(f) >= -coeff_D(v) on supp(f) and supp(D).
inline bool rr_contains(const Divisor& D, const RatFunc& f) {
    if (f.is_zero()) return true;
    std::set<Place> places = candidate_places({f});
    for (const auto& [v, c] : D.terms()) places.insert(v);
    for (const auto& v : places)
        if (ord_at_place(f, v) < -D.coeff(v)) return false;
    return true;
}

/// Coordinates of f in the basis N theta^s / Den: the coefficients of f Den / N.
inline std::vector<Fq> rr_coordinates(const RRBasis& b, const RatFunc& f) {
    const FieldPtr& fld = b.denom.field();
    std::vector<Fq> out(static_cast<std::size_t>(b.dimension), fld->zero());
    if (f.is_zero()) return out;
    auto [g, rem] = divmod(f.num() * b.denom, f.den() * b.numer);
    if (!rem.is_zero() || g.deg() >= b.dimension) throw InputError("not in Riemann-Roch space");
    for (std::size_t s = 0; s < g.coeffs().size(); ++s) out[s] = g.coeffs()[s];
    return out;
}

/// sum c_s element_s.
inline RatFunc rr_combine(const RRBasis& b, const std::vector<Fq>& c) {
    const FieldPtr& fld = b.denom.field();
    ThetaPoly n(fld, c);
    return RatFunc(n * b.numer, b.denom);
}

}  // namespace drinrel
