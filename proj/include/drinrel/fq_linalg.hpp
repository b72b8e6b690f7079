#pragma once

// Linear algebra over F_q: incremental echelon spaces and banded elimination.

#include <map>
#include <optional>
#include <vector>

#include "field.hpp"

namespace drinrel {

using FqVec = std::vector<Fq>;

namespace detail {

inline bool is_zero_vec(const FqVec& v) {
    for (Fq c : v)
        if (c.raw != 0) return false;
    return true;
}

// dst += s * src, columns aligned
inline void axpy(const Field& f, FqVec& dst, Fq s, const FqVec& src, std::size_t from = 0) {
    if (s.raw == 0) return;
    for (std::size_t i = from; i < src.size(); ++i)
        if (src[i].raw != 0) dst[i] = f.add(dst[i], f.mul(s, src[i]));
}

}  // namespace detail

/// Subspace of F_q^n kept in reduced row echelon form; pivot = first nonzero column.
class FqSpace {
public:
    FqSpace(FieldPtr f, std::size_t n) : f_(std::move(f)), n_(n) {}

    std::size_t ambient() const noexcept { return n_; }
    std::size_t dim() const noexcept { return rows_.size(); }

    /// v minus its projection onto the span; zero iff v is in the space.
    FqVec reduce(FqVec v) const {
        for (const auto& [p, row] : rows_)
            if (v[p].raw != 0) detail::axpy(*f_, v, f_->neg(v[p]), row, p);
        return v;
    }
    bool contains(const FqVec& v) const { return detail::is_zero_vec(reduce(v)); }

    /// Adds v; false when already contained.
    bool insert(const FqVec& v) {
        FqVec r = reduce(v);
        std::size_t p = 0;
        while (p < n_ && r[p].raw == 0) ++p;
        if (p == n_) return false;
        const Fq li = f_->inv(r[p]);
        for (auto& c : r) c = f_->mul(c, li);
        for (auto& [q, row] : rows_)
            if (row[p].raw != 0) detail::axpy(*f_, row, f_->neg(row[p]), r, p);
        rows_.emplace(p, std::move(r));
        return true;
    }

    /// Canonical basis: the reduced echelon rows in pivot order.
    std::vector<FqVec> basis() const {
        std::vector<FqVec> out;
        for (const auto& [p, row] : rows_) out.push_back(row);
        return out;
    }
    std::vector<std::size_t> pivots() const {
        std::vector<std::size_t> out;
        for (const auto& [p, row] : rows_) out.push_back(p);
        return out;
    }

    friend bool operator==(const FqSpace& a, const FqSpace& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
    FieldPtr f_;
    std::size_t n_;
    std::map<std::size_t, FqVec> rows_;
};

/// Null space {x : M x = 0} of a dense matrix, as a reduced echelon basis.
inline std::vector<FqVec> fq_nullspace(const FieldPtr& f, const std::vector<FqVec>& M, std::size_t cols) {
    FqSpace rs(f, cols);
    for (const auto& row : M) rs.insert(row);
    std::vector<bool> is_pivot(cols, false);
    const auto rows = rs.basis();
    const auto piv = rs.pivots();
    for (auto p : piv) is_pivot[p] = true;
    FqSpace out(f, cols);
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        FqVec x(cols, f->zero());
        x[fc] = f->one();
        for (std::size_t i = 0; i < rows.size(); ++i) x[piv[i]] = f->neg(rows[i][fc]);
        out.insert(x);
    }
    return out.basis();
}

inline std::size_t fq_rank(const FieldPtr& f, const std::vector<FqVec>& M, std::size_t cols) {
    FqSpace rs(f, cols);
    for (const auto& row : M) rs.insert(row);
    return rs.dim();
}

/// Echelon elimination for sparse systems whose rows are contiguous column bands.
class BandedEliminator {
public:
    struct Row {
        std::size_t start = 0;
        FqVec v;  // columns start .. start + v.size() - 1
    };

    BandedEliminator(FieldPtr f, std::size_t cols) : f_(std::move(f)), cols_(cols) {}

    /// Reduces the row against the current pivots; stores it if independent.
    void insert(Row r) {
        while (true) {
            normalize(r);
            if (r.v.empty()) return;
            auto it = piv_.find(r.start);
            if (it == piv_.end()) break;
            subtract(r, r.v[0], it->second);
        }
        const Fq li = f_->inv(r.v[0]);
        for (auto& c : r.v) c = f_->mul(c, li);
        const std::size_t p = r.start;
        piv_.emplace(p, std::move(r));
    }

    bool is_pivot(std::size_t c) const { return piv_.count(c) != 0; }
    std::size_t rank() const noexcept { return piv_.size(); }

    /// Null vector with x_fc = 1, zero on every other free column; support within [0, fc].
    FqVec null_vector(std::size_t fc) const {
        FqVec x(fc + 1, f_->zero());
        x[fc] = f_->one();
        for (auto it = std::make_reverse_iterator(piv_.lower_bound(fc)); it != piv_.rend(); ++it) {
            const auto& [p, row] = *it;
            Fq s = f_->zero();
            const std::size_t end = std::min(row.start + row.v.size(), fc + 1);
            for (std::size_t k = p + 1; k < end; ++k)
                if (row.v[k - p].raw != 0 && x[k].raw != 0) s = f_->add(s, f_->mul(row.v[k - p], x[k]));
            x[p] = f_->neg(s);
        }
        return x;
    }

private:
    static void normalize(Row& r) {
        std::size_t lead = 0;
        while (lead < r.v.size() && r.v[lead].raw == 0) ++lead;
        if (lead == r.v.size()) {
            r.v.clear();
            return;
        }
        std::size_t end = r.v.size();
        while (r.v[end - 1].raw == 0) --end;
        r.v.erase(r.v.begin() + static_cast<std::ptrdiff_t>(end), r.v.end());
        r.v.erase(r.v.begin(), r.v.begin() + static_cast<std::ptrdiff_t>(lead));
        r.start += lead;
    }
    // r -= s * pivot, where pivot starts at r.start
    void subtract(Row& r, Fq s, const Row& pivot) const {
        if (pivot.v.size() > r.v.size()) r.v.resize(pivot.v.size(), f_->zero());
        const Fq ns = f_->neg(s);
        for (std::size_t k = 0; k < pivot.v.size(); ++k)
            if (pivot.v[k].raw != 0) r.v[k] = f_->add(r.v[k], f_->mul(ns, pivot.v[k]));
    }

    FieldPtr f_;
    std::size_t cols_;
    std::map<std::size_t, Row> piv_;
};

}  // namespace drinrel
