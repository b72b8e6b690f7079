#pragma once

// Linear relations sum phi_{a_i}(P_i) = 0 among points of a Drinfeld module over F_q(theta).
//
// A relation a corresponds to a solution g in k[t] of
//     (t - theta) g + F = kappa_1 g^(1) + ... + kappa_r g^(r),   F = sum a_i P_i,
// and g lies in L(D)[t]. Writing g = sum g_i beta_i over a basis of L(D) and
// expanding every term over a basis of a larger space L(D~) linearizes the
// equation into B (g, a) = 0 with B over F_q[t] of degree at most 1.

#include <optional>
#include <vector>

#include "fq_linalg.hpp"
#include "newton.hpp"
#include "polymat.hpp"
#include "riemann_roch.hpp"

namespace drinrel {

struct LinearSystem {
    PolyMatFqT B;
    MasserData masser;
    RRBasis beta;
    Divisor Dtilde;
    RRBasis gamma;
    long d = 0;
    long ell = 0;
};

namespace detail {

inline std::vector<Fq> coords_or_fail(const RRBasis& b, const RatFunc& f) {
    try {
        return rr_coordinates(b, f);
    } catch (const InputError&) {
        throw InternalError("generator element outside L(D~): " + f.to_string());
    }
}

}  // namespace detail

inline LinearSystem build_linear_system(const DrinfeldModule& E, const std::vector<RatFunc>& points) {
    const FieldPtr& f = E.field();
    LinearSystem s;
    s.masser = masser_analysis(E, points);
    s.beta = rr_basis(f, s.masser.D);
    s.d = s.beta.dimension;
    s.ell = static_cast<long>(points.size());
    const int r = E.rank();

    // places that can carry a pole of some generator element
    std::set<Place> places = relevant_places(E, points);
    places.insert(Place::finite_unchecked(ThetaPoly::x(f)));
    for (const auto& [v, c] : s.masser.D.terms()) places.insert(v);

    s.Dtilde = s.masser.D;
    auto require = [&](const Place& v, long ord) { s.Dtilde.set(v, std::max(s.Dtilde.coeff(v), -ord)); };
    std::vector<std::int64_t> qj{1};
    for (int j = 1; j <= r; ++j) qj.push_back(qj.back() * static_cast<std::int64_t>(f->q()));
    for (const auto& v : places) {
        const long ord_theta = v.is_infinity() ? -1 : (v.poly().deg() == 1 && v.poly().coeff(0).raw == 0 ? 1 : 0);
        for (const auto& b : s.beta.elements) {
            const long ob = ord_at_place(b, v);
            require(v, ob);
            require(v, ob + ord_theta);
            for (int j = 1; j <= r; ++j)
                if (!E.kappa(j).is_zero()) require(v, ord_at_place(E.kappa(j), v) + qj[static_cast<std::size_t>(j)] * ob);
        }
        for (const auto& P : points) require(v, ord_at_place(P, v));
    }
    s.gamma = rr_basis(f, s.Dtilde);

    const std::size_t rows = static_cast<std::size_t>(s.gamma.dimension);
    const std::size_t cols = static_cast<std::size_t>(s.d + s.ell);
    std::vector<PolyVec> B(rows, vec_zero(f, cols));
    const RatFunc theta = RatFunc::theta(f);
    for (std::size_t i = 0; i < static_cast<std::size_t>(s.d); ++i) {
        const RatFunc& b = s.beta.elements[i];
        const auto c1 = detail::coords_or_fail(s.gamma, b);
        std::vector<Fq> c0 = detail::coords_or_fail(s.gamma, theta * b);
        RatFunc bj = b;
        for (int j = 1; j <= r; ++j) {
            bj = bj.frobenius(1);
            if (E.kappa(j).is_zero()) continue;
            const auto cj = detail::coords_or_fail(s.gamma, E.kappa(j) * bj);
            for (std::size_t k = 0; k < rows; ++k) c0[k] = f->add(c0[k], cj[k]);
        }
        for (std::size_t k = 0; k < rows; ++k) B[k][i] = TPoly(f, {f->neg(c0[k]), c1[k]});
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto c = detail::coords_or_fail(s.gamma, points[i]);
        for (std::size_t k = 0; k < rows; ++k) B[k][static_cast<std::size_t>(s.d) + i] = TPoly::constant(f, c[k]);
    }
    s.B = PolyMatFqT(f, cols, std::move(B));
    if (s.B.max_deg() > 1) throw InternalError("linear system has t-degree above 1");
    return s;
}

namespace detail {

// F_q row reduction of the stacked coefficient matrices; preserves the kernel.
inline std::vector<PolyVec> compress_rows(const PolyMatFqT& B, std::size_t mu) {
    const FieldPtr& f = B.field();
    const std::size_t n = B.cols();
    FqSpace space(f, n * (mu + 1));
    for (const auto& row : B.row_vectors()) {
        FqVec v(n * (mu + 1), f->zero());
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k <= mu; ++k) v[k * n + j] = row[j].coeff(k);
        space.insert(v);
    }
    std::vector<PolyVec> out;
    for (const auto& v : space.basis()) {
        PolyVec p = vec_zero(f, n);
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Fq> c(mu + 1);
            for (std::size_t k = 0; k <= mu; ++k) c[k] = v[k * n + j];
            p[j] = TPoly(f, std::move(c));
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace detail

/// F_q[t]-basis (Popov form) of the module generated by kernel vectors of degree <= delta.
///
/// Unknowns x = sum_{e <= delta} x_e t^e are ordered so that column order agrees
/// with the term-over-position order; the reduced null vector of each free column
/// then has that column as leading monomial, and the free column of least degree
/// in each position yields a Groebner basis of the kernel once delta is large enough.
inline std::vector<PolyVec> kernel_module_basis(const PolyMatFqT& B, long delta) {
    if (delta < 0) throw InputError("kernel degree bound must be nonnegative");
    const FieldPtr& f = B.field();
    const std::size_t n = B.cols();
    const std::size_t mu = B.max_deg().is_finite() ? static_cast<std::size_t>(B.max_deg().value()) : 0;
    const std::size_t D = static_cast<std::size_t>(delta);
    auto col = [n](std::size_t e, std::size_t j) { return e * n + (n - 1 - j); };

    const auto rows = detail::compress_rows(B, mu);
    BandedEliminator elim(f, (D + 1) * n);
    for (std::size_t c = 0; c <= D + mu; ++c) {
        const std::size_t lo = c > mu ? c - mu : 0;
        const std::size_t hi = std::min(c, D);
        if (lo > hi) continue;
        for (const auto& row : rows) {
            BandedEliminator::Row br{lo * n, FqVec((hi - lo + 1) * n, f->zero())};
            for (std::size_t e = lo; e <= hi; ++e)
                for (std::size_t j = 0; j < n; ++j) br.v[col(e, j) - lo * n] = row[j].coeff(c - e);
            elim.insert(std::move(br));
        }
    }
    std::vector<PolyVec> gens;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t e = 0; e <= D; ++e) {
            if (elim.is_pivot(col(e, j))) continue;
            const FqVec x = elim.null_vector(col(e, j));
            PolyVec v = vec_zero(f, n);
            for (std::size_t jj = 0; jj < n; ++jj) {
                std::vector<Fq> c(e + 1, f->zero());
                for (std::size_t ee = 0; ee <= e; ++ee)
                    if (col(ee, jj) < x.size()) c[ee] = x[col(ee, jj)];
                v[jj] = TPoly(f, std::move(c));
            }
            gens.push_back(std::move(v));
            break;
        }
    }
    return module_basis_reduce(gens);
}

struct RelationBasis {
    std::vector<PolyVec> vectors;
    std::vector<long> degrees;
    long d = 0;
    long ell = 0;
    long bound = 0;
    std::vector<PolyVec> kernel;  // Popov basis of ker B
    std::size_t rank_B = 0;
    std::size_t nu() const noexcept { return vectors.size(); }
};

/// The F_q-linear value sum_e phi_t^e(F_e) of a relation candidate given by F = sum a_i P_i,
/// by Horner; nullopt once an intermediate exceeds `height_cap` (0 = no cap).
inline std::optional<RatFunc> relation_value(const DrinfeldModule& E, const std::vector<RatFunc>& points,
                                             const PolyVec& a, long height_cap = 0) {
    const FieldPtr& f = E.field();
    if (a.size() != points.size()) throw InputError("relation has " + std::to_string(a.size()) +
                                                    " entries for " + std::to_string(points.size()) + " points");
    std::size_t len = 0;
    for (const auto& ai : a) len = std::max(len, ai.coeffs().size());
    RatFunc X = RatFunc::zero(f);
    for (std::size_t e = len; e-- > 0;) {
        X = E.act_t(X);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].coeff(e).raw != 0) X += points[i].scaled(a[i].coeff(e));
        if (height_cap > 0 && X.naive_height() > height_cap) return std::nullopt;
    }
    return X;
}

/// sum_i phi_{a_i}(P_i) == 0.
inline bool verify_relation(const DrinfeldModule& E, const std::vector<RatFunc>& points, const PolyVec& a) {
    return relation_value(E, points, a)->is_zero();
}

/// F = sum a_i P_i in k[t].
inline PolyTOverK combine_points(const std::vector<RatFunc>& points, const PolyVec& a) {
    PolyTOverK F;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<RatFunc> c;
        for (Fq x : a[i].coeffs()) c.push_back(points[i].scaled(x));
        F = F + PolyTOverK(std::move(c));
    }
    return F;
}

/// Left side minus right side of (t - theta) g + F = sum kappa_j g^(j).
inline PolyTOverK difference_residual(const DrinfeldModule& E, const PolyTOverK& g, const PolyTOverK& F) {
    PolyTOverK lhs = PolyTOverK::t_minus_theta(E.field()) * g + F;
    PolyTOverK rhs;
    for (int j = 1; j <= E.rank(); ++j)
        if (!E.kappa(j).is_zero()) rhs = rhs + g.frobenius(static_cast<unsigned>(j)).scaled(E.kappa(j));
    return lhs - rhs;
}

/// Solves for g coefficient by coefficient from the top; nullopt when the t^0 equation fails.
inline std::optional<PolyTOverK> recover_g(const DrinfeldModule& E, const std::vector<RatFunc>& points,
                                           const PolyVec& a) {
    if (vec_is_zero(a)) throw InputError("trivial candidate");
    const FieldPtr& f = E.field();
    const PolyTOverK F = combine_points(points, a);
    if (F.is_zero()) return PolyTOverK{};
    const long top = F.degree().value();
    if (top == 0) return std::nullopt;
    const RatFunc theta = RatFunc::theta(f);
    auto twist_sum = [&](const RatFunc& x) {
        RatFunc s = RatFunc::zero(f);
        RatFunc pw = x;
        for (int j = 1; j <= E.rank(); ++j) {
            pw = pw.frobenius(1);
            if (!E.kappa(j).is_zero()) s += E.kappa(j) * pw;
        }
        return s;
    };
    const std::size_t n = static_cast<std::size_t>(top - 1);
    std::vector<RatFunc> g(n + 1, RatFunc::zero(f));
    g[n] = -F.coeff(n + 1, f);
    for (std::size_t i = n; i >= 1; --i) g[i - 1] = theta * g[i] - F.coeff(i, f) + twist_sum(g[i]);
    if (!(-(theta * g[0]) + F.coeff(0, f) == twist_sum(g[0]))) return std::nullopt;
    return PolyTOverK(std::move(g));
}

/// Coefficient vector of a in F_q^{ell (delta + 1)}, entry i*(delta+1) + e = coeff of t^e in a_i.
inline FqVec encode_relation(const FieldPtr& f, const PolyVec& a, long delta) {
    const std::size_t w = static_cast<std::size_t>(delta + 1);
    FqVec v(a.size() * w, f->zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].degree() > delta) throw InputError("relation degree exceeds the slice");
        for (std::size_t e = 0; e < a[i].coeffs().size(); ++e) v[i * w + e] = a[i].coeffs()[e];
    }
    return v;
}
inline PolyVec decode_relation(const FieldPtr& f, const FqVec& v, std::size_t ell, long delta) {
    const std::size_t w = static_cast<std::size_t>(delta + 1);
    PolyVec a;
    for (std::size_t i = 0; i < ell; ++i) a.emplace_back(f, FqVec(v.begin() + static_cast<std::ptrdiff_t>(i * w),
                                                             v.begin() + static_cast<std::ptrdiff_t>((i + 1) * w)));
    return a;
}

/// F_q-span of {t^e m : m in basis, deg(t^e m) <= delta}.
inline FqSpace relation_slice(const FieldPtr& f, const std::vector<PolyVec>& basis, std::size_t ell, long delta) {
    FqSpace s(f, ell * static_cast<std::size_t>(delta + 1));
    for (const auto& m : basis) {
        const long dm = vec_degree(m).value();
        for (long e = 0; e + dm <= delta; ++e) s.insert(encode_relation(f, vec_scaled(m, TPoly::monomial(f, f->one(), static_cast<std::size_t>(e))), delta));
    }
    return s;
}

inline RelationBasis relation_basis_of(const DrinfeldModule& E, const std::vector<RatFunc>& points,
                                       const LinearSystem& sys) {
    RelationBasis rb;
    rb.d = sys.d;
    rb.ell = sys.ell;
    rb.bound = sys.d + sys.ell;
    rb.rank_B = poly_rank(detail::compress_rows(sys.B, 1));
    const long cols = sys.d + sys.ell;
    if (rb.rank_B == static_cast<std::size_t>(cols)) return rb;

    rb.kernel = kernel_module_basis(sys.B, rb.bound);
    const long kernel_cap = static_cast<long>(rb.rank_B) * std::max(0L, sys.B.max_deg().is_finite() ? sys.B.max_deg().value() : 0L);
    std::vector<PolyVec> proj;
    for (const auto& k : rb.kernel) {
        if (!vec_is_zero(sys.B.apply(k))) throw InternalError("kernel vector does not solve B x = 0");
        if (vec_degree(k) > kernel_cap) throw InternalError("theorem bound violated: kernel degree above rank * deg B");
        proj.emplace_back(k.begin() + sys.d, k.end());
    }
    if (rb.kernel.size() != static_cast<std::size_t>(cols) - rb.rank_B)
        throw InternalError("kernel rank disagrees with rank of B");
    rb.vectors = module_basis_reduce(proj);
    for (const auto& m : rb.vectors) {
        const long dm = vec_degree(m).value();
        if (dm > rb.bound) throw InternalError("theorem bound violated: relation degree above d + l");
        if (!verify_relation(E, points, m)) throw InternalError("theorem bound violated: basis vector is no relation");
        rb.degrees.push_back(dm);
    }
    return rb;
}

/// Degree-minimal F_q[t]-basis of the relation module G.
inline RelationBasis relation_basis(const DrinfeldModule& E, const std::vector<RatFunc>& points) {
    return relation_basis_of(E, points, build_linear_system(E, points));
}

}  // namespace drinrel
