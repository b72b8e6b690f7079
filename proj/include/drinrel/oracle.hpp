#pragma once

// Brute-force relation oracle and the independence decision.
//
// The oracle never looks at divisors, Riemann-Roch spaces or B. Relations of
// degree <= delta are the kernel of the F_q-linear map
//     (a_{i,e}) -> sum_{i,e} a_{i,e} phi_t^e(P_i).
// Small cases evaluate phi_t^e(P_i) in k directly. Otherwise the map is reduced
// at finite places pi, which can only enlarge the kernel; once the stacked
// reductions stabilize, the candidate kernel is certified exactly by checking
// its F_q[t]-generators with the Horner evaluation in k.

#include <string>

#include "relation.hpp"

namespace drinrel {

struct OracleResult {
    FqSpace space;  // encoded as in encode_relation
    std::string strategy;
    std::size_t places = 0;

    std::vector<PolyVec> relations(const FieldPtr& f, std::size_t ell, long delta) const {
        std::vector<PolyVec> out;
        for (const auto& v : space.basis()) out.push_back(decode_relation(f, v, ell, delta));
        return out;
    }
};

namespace detail {

inline constexpr long kDirectHeightLimit = 512;

inline std::optional<FqSpace> oracle_direct(const DrinfeldModule& E, const std::vector<RatFunc>& points, long delta) {
    const FieldPtr& f = E.field();
    const std::size_t w = static_cast<std::size_t>(delta + 1);
    const std::size_t cols = points.size() * w;
    std::vector<RatFunc> vals(cols);
    for (std::size_t i = 0; i < points.size(); ++i) {
        RatFunc x = points[i];
        for (std::size_t e = 0; e < w; ++e) {
            if (e > 0) x = E.act_t(x);
            if (x.naive_height() > kDirectHeightLimit) return std::nullopt;
            vals[i * w + e] = x;
        }
    }
    ThetaPoly L = ThetaPoly::one(f);
    for (const auto& v : vals) {
        if (v.is_zero() || v.den().is_one()) continue;
        L = L * v.den().exact_div(poly_gcd(L, v.den()));
        if (L.deg() > 2 * kDirectHeightLimit) return std::nullopt;
    }
    std::vector<ThetaPoly> nums;
    std::size_t rows = 0;
    for (const auto& v : vals) {
        nums.push_back(v.is_zero() ? ThetaPoly(f) : v.num() * L.exact_div(v.den()));
        rows = std::max(rows, nums.back().coeffs().size());
    }
    std::vector<FqVec> M(rows, FqVec(cols, f->zero()));
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t s = 0; s < nums[c].coeffs().size(); ++s) M[s][c] = nums[c].coeffs()[s];
    FqSpace out(f, cols);
    for (const auto& v : fq_nullspace(f, M, cols)) out.insert(v);
    return out;
}

// x mod pi for x with denominator prime to pi
inline ThetaPoly residue(const RatFunc& x, const ThetaPoly& pi) {
    if (x.is_zero()) return ThetaPoly(pi.field());
    return (x.num() % pi) * poly_invmod(x.den(), pi) % pi;
}

inline bool good_reduction(const ThetaPoly& pi, const DrinfeldModule& E, const std::vector<RatFunc>& points) {
    for (const auto& k : E.kappas())
        if (!k.is_zero() && k.den().divisible_by(pi)) return false;
    for (const auto& P : points)
        if (P.den().divisible_by(pi)) return false;
    return true;
}

inline FqSpace oracle_modular(const DrinfeldModule& E, const std::vector<RatFunc>& points, long delta,
                              std::size_t& places_used) {
    const FieldPtr& f = E.field();
    const std::size_t w = static_cast<std::size_t>(delta + 1);
    const std::size_t ell = points.size();
    const std::size_t cols = ell * w;
    const std::uint64_t q = f->q();

    long cap = 64;
    for (const auto& P : points) cap += 4 * P.naive_height();
    for (const auto& k : E.kappas()) cap += 4 * k.naive_height();

    FqSpace eqs(f, cols);
    int stable = 0;
    ThetaPoly pi = ThetaPoly::x(f);
    while (true) {
        if (pi.deg() > 64) throw InternalError("oracle did not converge");
        const ThetaPoly cur = pi;
        pi = next_monic(pi);
        if (!is_irreducible(cur) || !good_reduction(cur, E, points)) continue;
        ++places_used;

        const ThetaPoly th = ThetaPoly::x(f) % cur;
        std::vector<ThetaPoly> kap;
        for (const auto& k : E.kappas()) kap.push_back(residue(k, cur));
        const std::size_t before = eqs.dim();
        const std::size_t k = static_cast<std::size_t>(cur.deg());
        std::vector<FqVec> rows(k, FqVec(cols, f->zero()));
        for (std::size_t i = 0; i < ell; ++i) {
            ThetaPoly x = residue(points[i], cur);
            for (std::size_t e = 0; e < w; ++e) {
                if (e > 0) {
                    ThetaPoly nx = th * x % cur;
                    ThetaPoly pw = x;
                    for (const auto& kj : kap) {
                        pw = pw.powmod(q, cur);
                        if (!kj.is_zero()) nx = (nx + kj * pw) % cur;
                    }
                    x = std::move(nx);
                }
                for (std::size_t s = 0; s < x.coeffs().size(); ++s) rows[s][i * w + e] = x.coeffs()[s];
            }
        }
        for (const auto& r : rows) eqs.insert(r);
        if (eqs.dim() == cols) return FqSpace(f, cols);
        stable = eqs.dim() == before ? stable + 1 : 0;
        if (stable < 3) continue;

        FqSpace cand(f, cols);
        std::vector<PolyVec> gens;
        for (const auto& v : fq_nullspace(f, eqs.basis(), cols)) {
            cand.insert(v);
            gens.push_back(decode_relation(f, v, ell, delta));
        }
        bool certified = true;
        for (const auto& m : module_basis_reduce(gens)) {
            const auto val = relation_value(E, points, m, cap);
            if (!val) {
                cap *= 2;
                certified = false;
                break;
            }
            if (!val->is_zero()) {
                certified = false;
                break;
            }
        }
        if (certified) return cand;
        stable = 0;
    }
}

}  // namespace detail

/// F_q-basis of all relations with every deg a_i <= delta.
inline OracleResult oracle_relations(const DrinfeldModule& E, const std::vector<RatFunc>& points, long delta) {
    if (delta < 0) throw InputError("oracle degree must be nonnegative");
    check_points(points);
    if (auto s = detail::oracle_direct(E, points, delta)) return {std::move(*s), "direct", 0};
    OracleResult r{FqSpace(E.field(), points.size() * static_cast<std::size_t>(delta + 1)), "modular", 0};
    r.space = detail::oracle_modular(E, points, delta, r.places);
    return r;
}

struct IndependenceReport {
    bool independent = false;
    RelationBasis basis;
    bool audited = false;
    std::size_t oracle_dim = 0;
    std::string oracle_strategy;
};

/// Independence verdict; in audit mode cross-checks the oracle at degree d + l and
/// re-runs the kernel search with a larger degree bound.
inline IndependenceReport is_independent(const DrinfeldModule& E, const std::vector<RatFunc>& points,
                                         bool audit = false) {
    const LinearSystem sys = build_linear_system(E, points);
    IndependenceReport rep;
    rep.basis = relation_basis_of(E, points, sys);
    rep.independent = rep.basis.vectors.empty();
    if (!audit) return rep;
    rep.audited = true;
    const FieldPtr& f = E.field();
    const OracleResult orc = oracle_relations(E, points, rep.basis.bound);
    rep.oracle_dim = orc.space.dim();
    rep.oracle_strategy = orc.strategy;
    if (!(relation_slice(f, rep.basis.vectors, points.size(), rep.basis.bound) == orc.space))
        throw InternalError("solver/oracle disagreement");
    if (rep.basis.rank_B < sys.B.cols() && !(kernel_module_basis(sys.B, rep.basis.bound + 2) == rep.basis.kernel))
        throw InternalError("solver/oracle disagreement: kernel unstable under a larger degree bound");
    return rep;
}

/// (deg D, deg D') for E and its twist by u, asserting D' = D - div(u).
inline std::pair<long, long> invariance_check(const DrinfeldModule& E, const std::vector<RatFunc>& points,
                                              const RatFunc& u) {
    if (u.is_zero()) throw InputError("twist by zero");
    const Divisor D = masser_divisor(E, points);
    std::vector<RatFunc> up;
    for (const auto& P : points) up.push_back(u * P);
    const Divisor D2 = masser_divisor(twist_by_unit(E, u), up);
    if (!(D2 == D - div_of_vector({u}))) throw InternalError("twisted divisor differs from D - div(u)");
    if (D.degree() != D2.degree()) throw InternalError("deg D not invariant under twisting");
    return {D.degree(), D2.degree()};
}

}  // namespace drinrel
