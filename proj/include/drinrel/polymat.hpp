#pragma once

// Vectors and matrices over F_q[t]; Hermite, weak Popov and Popov normal forms.
//
// Row vectors are compared in the term-over-position order: a larger degree wins,
// and among equal degrees the lower index counts as larger. The pivot of a vector
// is its leading position, the lowest index among the entries of maximal degree.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace drinrel {

using PolyVec = std::vector<TPoly>;

inline Degree vec_degree(const PolyVec& v) {
    Degree d = Degree::neg_inf();
    for (const auto& e : v) d = max(d, e.degree());
    return d;
}
inline bool vec_is_zero(const PolyVec& v) {
    for (const auto& e : v)
        if (!e.is_zero()) return false;
    return true;
}
inline std::optional<std::size_t> vec_pivot(const PolyVec& v) {
    const Degree d = vec_degree(v);
    if (!d.is_finite()) return std::nullopt;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i].degree() == d) return i;
    return std::nullopt;
}

inline PolyVec vec_zero(const FieldPtr& f, std::size_t n) { return PolyVec(n, TPoly(f)); }
inline PolyVec vec_scaled(const PolyVec& v, const TPoly& s) {
    PolyVec r;
    r.reserve(v.size());
    for (const auto& e : v) r.push_back(e * s);
    return r;
}
/// a -= c t^k b
inline void vec_submul(PolyVec& a, Fq c, std::size_t k, const PolyVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] -= b[i].scaled(c).shifted(k);
}
inline PolyVec vec_add(PolyVec a, const PolyVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
inline std::string vec_to_string(const PolyVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s + ")";
}

/// Dense matrix over F_q[t] with cached max/min entry degrees.
class PolyMatFqT {
public:
    PolyMatFqT() = default;
    PolyMatFqT(FieldPtr f, std::size_t rows, std::size_t cols)
        : f_(std::move(f)), cols_(cols), e_(rows, vec_zero(f_, cols)) {}
    PolyMatFqT(FieldPtr f, std::size_t cols, std::vector<PolyVec> rows) : f_(std::move(f)), cols_(cols), e_(std::move(rows)) {
        refresh();
    }

    const FieldPtr& field() const noexcept { return f_; }
    std::size_t rows() const noexcept { return e_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    const TPoly& at(std::size_t i, std::size_t j) const { return e_[i][j]; }
    void set(std::size_t i, std::size_t j, TPoly p) {
        e_[i][j] = std::move(p);
        refresh();
    }
    const std::vector<PolyVec>& row_vectors() const noexcept { return e_; }

    /// Max entry degree; -inf for the zero matrix.
    Degree max_deg() const noexcept { return max_; }
    /// Min entry degree over all entries (-inf as soon as one entry is zero).
    Degree min_deg() const noexcept { return min_; }

    PolyVec apply(const PolyVec& x) const {
        PolyVec y = vec_zero(f_, e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!e_[i][j].is_zero() && !x[j].is_zero()) y[i] += e_[i][j] * x[j];
        return y;
    }

    /// Coefficient matrix of t^k, rows x cols over F_q.
    std::vector<std::vector<Fq>> coeff_matrix(std::size_t k) const {
        std::vector<std::vector<Fq>> m(e_.size(), std::vector<Fq>(cols_, f_->zero()));
        for (std::size_t i = 0; i < e_.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) m[i][j] = e_[i][j].coeff(k);
        return m;
    }

private:
    void refresh() {
        max_ = Degree::neg_inf();
        min_ = Degree::neg_inf();
        bool first = true;
        for (const auto& r : e_)
            for (const auto& p : r) {
                max_ = max(max_, p.degree());
                min_ = first ? p.degree() : min(min_, p.degree());
                first = false;
            }
    }

    FieldPtr f_;
    std::size_t cols_ = 0;
    std::vector<PolyVec> e_;
    Degree max_, min_;
};

namespace detail {

// monomial (deg, pos) comparison in term-over-position order
inline bool top_greater(long da, std::size_t pa, long db, std::size_t pb) {
    return da != db ? da > db : pa < pb;
}

inline void drop_zero_rows(std::vector<PolyVec>& rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(), [](const PolyVec& v) { return vec_is_zero(v); }),
               rows.end());
}

inline void make_pivot_monic(PolyVec& v) {
    const auto p = vec_pivot(v);
    if (!p) return;
    const FieldPtr& f = v[*p].field();
    const Fq li = f->inv(v[*p].lead());
    for (auto& e : v) e = e.scaled(li);
}

}  // namespace detail

/// Row Hermite normal form: echelon by gcd elimination, monic pivots, entries above pivots reduced.
inline std::vector<PolyVec> hermite_form(std::vector<PolyVec> rows) {
    detail::drop_zero_rows(rows);
    if (rows.empty()) return rows;
    const std::size_t n = rows[0].size();
    std::size_t top = 0;
    for (std::size_t c = 0; c < n && top < rows.size(); ++c) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = top; i < rows.size(); ++i)
                if (!rows[i][c].is_zero() && (best == rows.size() || rows[i][c].deg() < rows[best][c].deg())) best = i;
            if (best == rows.size()) break;
            std::swap(rows[top], rows[best]);
            bool done = true;
            for (std::size_t i = top + 1; i < rows.size(); ++i) {
                if (rows[i][c].is_zero()) continue;
                const TPoly q = rows[i][c] / rows[top][c];
                for (std::size_t j = c; j < n; ++j) rows[i][j] -= q * rows[top][j];
                if (!rows[i][c].is_zero()) done = false;
            }
            if (done) break;
        }
        if (rows[top][c].is_zero()) continue;
        const FieldPtr& f = rows[top][c].field();
        const Fq li = f->inv(rows[top][c].lead());
        for (std::size_t j = c; j < n; ++j) rows[top][j] = rows[top][j].scaled(li);
        for (std::size_t i = 0; i < top; ++i) {
            if (rows[i][c].is_zero()) continue;
            const TPoly q = rows[i][c] / rows[top][c];
            if (q.is_zero()) continue;
            for (std::size_t j = c; j < n; ++j) rows[i][j] -= q * rows[top][j];
        }
        ++top;
    }
    rows.resize(top);
    return rows;
}

/// Rank over F_q(t).
inline std::size_t poly_rank(const std::vector<PolyVec>& rows) { return hermite_form(rows).size(); }

/// Mulders-Storjohann: cancel leading terms until all pivots are distinct. Zero rows vanish.
inline std::vector<PolyVec> weak_popov(std::vector<PolyVec> rows) {
    detail::drop_zero_rows(rows);
    while (true) {
        bool changed = false;
        for (std::size_t a = 0; a < rows.size() && !changed; ++a) {
            for (std::size_t b = 0; b < rows.size() && !changed; ++b) {
                if (a == b) continue;
                const auto pa = vec_pivot(rows[a]), pb = vec_pivot(rows[b]);
                if (*pa != *pb) continue;
                const long da = rows[a][*pa].deg(), db = rows[b][*pb].deg();
                if (da < db) continue;
                const FieldPtr& f = rows[b][*pb].field();
                const Fq c = f->div(rows[a][*pa].lead(), rows[b][*pb].lead());
                vec_submul(rows[a], c, static_cast<std::size_t>(da - db), rows[b]);
                changed = true;
            }
        }
        if (!changed) break;
        detail::drop_zero_rows(rows);
    }
    return rows;
}

/// Popov form of rows already in weak Popov form: the reduced Groebner basis, sorted by (degree, pivot).
inline std::vector<PolyVec> popov_from_weak(std::vector<PolyVec> rows) {
    for (auto& r : rows) detail::make_pivot_monic(r);
    auto lm = [](const PolyVec& v) { return std::make_pair(vec_degree(v).value(), *vec_pivot(v)); };
    std::sort(rows.begin(), rows.end(), [&](const PolyVec& x, const PolyVec& y) {
        const auto [dx, px] = lm(x);
        const auto [dy, py] = lm(y);
        return detail::top_greater(dy, py, dx, px);
    });
    for (std::size_t k = 1; k < rows.size(); ++k) {
        while (true) {
            // largest monomial of row k divisible by the leading monomial of an earlier row
            std::size_t best = k;
            long best_deg = 0;
            for (std::size_t i = 0; i < k; ++i) {
                const auto [di, pi] = lm(rows[i]);
                const long dk = rows[k][pi].is_zero() ? -1 : rows[k][pi].deg();
                if (dk < di) continue;
                if (best == k || detail::top_greater(dk, pi, best_deg, lm(rows[best]).second)) {
                    best = i;
                    best_deg = dk;
                }
            }
            if (best == k) break;
            const auto [di, pi] = lm(rows[best]);
            vec_submul(rows[k], rows[k][pi].lead(), static_cast<std::size_t>(best_deg - di), rows[best]);
        }
    }
    std::sort(rows.begin(), rows.end(), [&](const PolyVec& x, const PolyVec& y) {
        const auto [dx, px] = lm(x);
        const auto [dy, py] = lm(y);
        return dx != dy ? dx < dy : px < py;
    });
    return rows;
}

inline std::vector<PolyVec> popov_form(std::vector<PolyVec> rows) { return popov_from_weak(weak_popov(std::move(rows))); }

/// Basis of the F_q[t]-span of the generators, in Popov form with minimal degree profile.
inline std::vector<PolyVec> module_basis_reduce(const std::vector<PolyVec>& generators) {
    return popov_from_weak(weak_popov(hermite_form(generators)));
}

/// Remainder of v modulo a Popov (or weak Popov) basis; zero iff v lies in the span.
inline PolyVec reduce_by_basis(PolyVec v, const std::vector<PolyVec>& basis) {
    std::vector<std::pair<long, std::size_t>> lms;
    for (const auto& b : basis) lms.emplace_back(vec_degree(b).value(), *vec_pivot(b));
    while (true) {
        std::size_t best = basis.size();
        long best_deg = 0;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const auto [di, pi] = lms[i];
            const long dv = v[pi].is_zero() ? -1 : v[pi].deg();
            if (dv < di) continue;
            if (best == basis.size() || detail::top_greater(dv, pi, best_deg, lms[best].second)) {
                best = i;
                best_deg = dv;
            }
        }
        if (best == basis.size()) return v;
        const auto [di, pi] = lms[best];
        const Fq c = v[pi].field()->div(v[pi].lead(), basis[best][pi].lead());
        vec_submul(v, c, static_cast<std::size_t>(best_deg - di), basis[best]);
    }
}

inline bool in_span(const PolyVec& v, const std::vector<PolyVec>& basis) {
    return vec_is_zero(reduce_by_basis(v, basis));
}

}  // namespace drinrel
