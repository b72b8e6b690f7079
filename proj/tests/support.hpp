#pragma once

// Random instances shared by the unit tests and the acceptance runner.

#include <climits>
#include <random>
#include <vector>

#include "drinrel/drinrel.hpp"

namespace drinrel::testing {

using Rng = std::mt19937_64;

inline FieldPtr small_field(std::uint64_t q) {
    switch (q) {
        case 2: return Field::prime(2);
        case 3: return Field::prime(3);
        case 4: return Field::make(2, 2, {1, 1, 1});
        case 5: return Field::prime(5);
        case 8: return Field::make(2, 3, {1, 1, 0, 1});
        case 9: return Field::make(3, 2, {1, 0, 1});
        default: throw InputError("no test field of order " + std::to_string(q));
    }
}

inline Fq random_elem(const FieldPtr& f, Rng& rng) {
    return f->element(std::uniform_int_distribution<std::uint64_t>(0, f->q() - 1)(rng));
}
inline Fq random_unit(const FieldPtr& f, Rng& rng) {
    return f->element(std::uniform_int_distribution<std::uint64_t>(1, f->q() - 1)(rng));
}

/// Degree exactly `deg` when deg >= 0.
template <class V>
Poly<V> random_poly_exact(const FieldPtr& f, long deg, Rng& rng, bool monic = false) {
    std::vector<Fq> c;
    for (long i = 0; i < deg; ++i) c.push_back(random_elem(f, rng));
    c.push_back(monic ? f->one() : random_unit(f, rng));
    return Poly<V>(f, std::move(c));
}
template <class V>
Poly<V> random_poly(const FieldPtr& f, long max_deg, Rng& rng) {
    std::vector<Fq> c;
    for (long i = 0; i <= max_deg; ++i) c.push_back(random_elem(f, rng));
    return Poly<V>(f, std::move(c));
}

inline ThetaPoly random_theta_poly(const FieldPtr& f, long max_deg, Rng& rng) {
    return random_poly<ThetaVar>(f, max_deg, rng);
}
inline TPoly random_t_poly(const FieldPtr& f, long max_deg, Rng& rng) { return random_poly<TVar>(f, max_deg, rng); }

/// Nonzero element of F_q(theta) with numerator and denominator degree <= h.
inline RatFunc random_ratfunc(const FieldPtr& f, long h, Rng& rng) {
    while (true) {
        ThetaPoly n = random_theta_poly(f, h, rng);
        ThetaPoly d = random_theta_poly(f, std::uniform_int_distribution<long>(0, h)(rng), rng);
        if (n.is_zero() || d.is_zero()) continue;
        return RatFunc(n, d);
    }
}

inline DrinfeldModule random_module(const FieldPtr& f, int r, long h, Rng& rng, bool sparse = true) {
    std::vector<RatFunc> k;
    for (int j = 1; j <= r; ++j) {
        const bool zero = sparse && j < r && std::uniform_int_distribution<int>(0, 3)(rng) == 0;
        k.push_back(zero ? RatFunc::zero(f) : random_ratfunc(f, h, rng));
    }
    return DrinfeldModule(f, std::move(k));
}

/// Distinct nonzero points of height <= h; h grows by one after 64 repeats, since
/// F_q^x may hold fewer than ell constants.
inline std::vector<RatFunc> random_points(const FieldPtr& f, std::size_t ell, long h, Rng& rng) {
    std::vector<RatFunc> pts;
    int misses = 0;
    while (pts.size() < ell) {
        RatFunc p = random_ratfunc(f, h, rng);
        bool dup = false;
        for (const auto& x : pts) dup = dup || x == p;
        if (!dup) pts.push_back(p);
        else if (++misses % 64 == 0) ++h;
    }
    return pts;
}

/// Infinity and every finite place of degree <= deg.
inline std::vector<Place> places_up_to(const FieldPtr& f, long deg) {
    std::vector<Place> ps{Place::infinity()};
    for (ThetaPoly p = ThetaPoly::x(f); p.deg() <= deg; p = next_monic(p))
        if (is_irreducible(p)) ps.push_back(Place::finite_unchecked(p));
    return ps;
}

/// Random divisor supported on `ps` with degree <= max_deg.
inline Divisor random_divisor(const std::vector<Place>& ps, long max_deg, Rng& rng) {
    while (true) {
        Divisor d;
        const int n = std::uniform_int_distribution<int>(0, 4)(rng);
        for (int i = 0; i < n; ++i)
            d.add(ps[std::uniform_int_distribution<std::size_t>(0, ps.size() - 1)(rng)],
                  std::uniform_int_distribution<long>(-3, 4)(rng));
        if (d.degree() <= max_deg) return d;
    }
}

struct Instance {
    DrinfeldModule E;
    std::vector<RatFunc> points;
};

/// The worked rank-2 example over F_2: phi_t = T + (1/T) tau + tau^2, points (T, T + 1).
inline Instance worked_example() {
    const FieldPtr f = Field::prime(2);
    const RatFunc T = RatFunc::theta(f);
    return {DrinfeldModule(f, {T.inverse(), RatFunc::one(f)}), {T, T + RatFunc::one(f)}};
}

/// Random instance for the divisor identity: q in {2,3,4}, r <= 3, heights <= 4.
inline Instance random_instance(Rng& rng) {
    const std::uint64_t qs[] = {2, 3, 4};
    const FieldPtr f = small_field(qs[std::uniform_int_distribution<int>(0, 2)(rng)]);
    const int r = std::uniform_int_distribution<int>(1, 3)(rng);
    const std::size_t ell = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    auto E = random_module(f, r, std::uniform_int_distribution<long>(0, 4)(rng), rng);
    return {E, random_points(f, ell, std::uniform_int_distribution<long>(0, 4)(rng), rng)};
}

struct Planted {
    Instance inst;
    TPoly b, c;
    long bound = 0;
};

/// P_1 = phi_b(P), P_2 = phi_c(P) with deg b, deg c <= 2, rejecting instances whose
/// bound d + l exceeds max_bound.
inline Planted planted_instance(Rng& rng, long max_bound = 24) {
    while (true) {
        const FieldPtr f = small_field(std::uniform_int_distribution<int>(0, 2)(rng) ? 2 : 3);
        const int r = std::uniform_int_distribution<int>(1, 2)(rng);
        auto E = random_module(f, r, std::uniform_int_distribution<long>(0, 1)(rng), rng);
        const RatFunc P = random_ratfunc(f, 1, rng);
        const TPoly b = random_t_poly(f, std::uniform_int_distribution<long>(0, 2)(rng), rng);
        const TPoly c = random_t_poly(f, std::uniform_int_distribution<long>(0, 2)(rng), rng);
        if (b.is_zero() || c.is_zero()) continue;
        const RatFunc P1 = act(E, b, P), P2 = act(E, c, P);
        if (P1.is_zero() || P2.is_zero() || P1 == P2) continue;
        if (P1.naive_height() > 3 * max_bound || P2.naive_height() > 3 * max_bound) continue;
        const Instance inst{E, {P1, P2}};
        const long bound = rr_dimension(masser_divisor(E, inst.points)) + 2;
        if (bound > max_bound) continue;
        return {inst, b, c, bound};
    }
}

/// Rank 1 with kappa_1 = -theta P^{1-q}, so phi_t(P) = 0.
inline Instance torsion_instance(Rng& rng) {
    const std::uint64_t qs[] = {2, 3, 4, 5};
    const FieldPtr f = small_field(qs[std::uniform_int_distribution<int>(0, 3)(rng)]);
    const RatFunc P = random_ratfunc(f, 3, rng);
    const RatFunc k1 = -(RatFunc::theta(f) * P.pow(1 - static_cast<long>(f->q())));
    return {DrinfeldModule(f, {k1}), {P}};
}

/// Every polynomial with coefficients in F_q and degree <= max_deg, zero included.
inline std::vector<TPoly> all_t_polys(const FieldPtr& f, long max_deg) {
    std::vector<TPoly> out{TPoly(f)};
    std::vector<Fq> c(static_cast<std::size_t>(max_deg + 1), f->zero());
    while (true) {
        std::size_t i = 0;
        while (i < c.size() && c[i].raw == f->q() - 1) c[i++] = f->zero();
        if (i == c.size()) return out;
        c[i] = f->element(c[i].raw + 1);
        out.emplace_back(f, c);
    }
}

/// Random generators of a rank-2 submodule of F_q[t]^2 with entry degrees <= max_deg.
inline std::vector<PolyVec> random_rank2_generators(const FieldPtr& f, std::size_t count, long max_deg, Rng& rng) {
    while (true) {
        std::vector<PolyVec> g;
        for (std::size_t i = 0; i < count; ++i) g.push_back({random_t_poly(f, max_deg, rng), random_t_poly(f, max_deg, rng)});
        if (poly_rank(g) == 2) return g;
    }
}

/// Successive minima (d_1, d_2) of the span M of `gens` in F_q[t]^2 found by brute force:
/// every vector with entry degrees <= search_deg is tested for membership in the
/// F_q-span of {t^e g : e <= mult_deg}. For two independent generators of degree <= g and
/// mult_deg >= search_deg + g this span contains all of M up to search_deg (Cramer).
/// Minima not reached within search_deg are LONG_MAX.
inline std::pair<long, long> exhaustive_profile(const std::vector<PolyVec>& gens, long search_deg, long mult_deg) {
    const FieldPtr& f = gens[0][0].field();
    long gd = 0;
    for (const auto& g : gens) gd = std::max(gd, vec_degree(g).value());
    const std::size_t w = static_cast<std::size_t>(mult_deg + gd + 1);
    auto encode = [&](const PolyVec& v) {
        FqVec x(2 * w, f->zero());
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t e = 0; e < v[j].coeffs().size(); ++e) x[j * w + e] = v[j].coeffs()[e];
        return x;
    };
    FqSpace span(f, 2 * w);
    for (const auto& g : gens)
        for (long e = 0; e <= mult_deg; ++e) span.insert(encode(vec_scaled(g, TPoly::monomial(f, f->one(), static_cast<std::size_t>(e)))));

    const auto polys = all_t_polys(f, search_deg);
    std::vector<std::vector<PolyVec>> by_deg(static_cast<std::size_t>(search_deg + 1));
    for (const auto& a : polys)
        for (const auto& b : polys) {
            const PolyVec v{a, b};
            if (vec_is_zero(v) || !span.contains(encode(v))) continue;
            by_deg[static_cast<std::size_t>(vec_degree(v).value())].push_back(v);
        }
    long d1 = LONG_MAX, d2 = LONG_MAX;
    std::optional<PolyVec> first;
    for (long d = 0; d <= search_deg && d2 == LONG_MAX; ++d)
        for (const auto& v : by_deg[static_cast<std::size_t>(d)]) {
            if (!first) {
                first = v;
                d1 = d;
                continue;
            }
            if (!((*first)[0] * v[1] - (*first)[1] * v[0]).is_zero()) {
                d2 = d;
                break;
            }
        }
    return {d1, d2};
}

}  // namespace drinrel::testing
