#pragma once

// Newton polygons of the associate polynomial (t - theta)x + kappa_1 x^q + ... + kappa_r x^{q^r},
// slopes S_v, the slope divisor and the Masser divisor D.

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "drinfeld.hpp"
#include "places.hpp"

namespace drinrel {

/// Points (q^j, ord_v) of the associate polynomial at one place, and their lower hull.
struct NewtonPolygon {
    std::vector<std::pair<std::int64_t, long>> points;
    std::vector<std::pair<std::int64_t, long>> hull;

    /// Slope of the hull edge ending at the last point.
    Rational last_slope() const {
        if (hull.size() < 2) throw InternalError("Newton polygon has a single vertex");
        const auto& a = hull[hull.size() - 2];
        const auto& b = hull.back();
        return Rational(b.second - a.second, b.first - a.first);
    }
};

struct SlopeData {
    Place place;
    std::vector<std::optional<long>> ord_kappa;  // empty entry where kappa_j = 0
    long ord_t_minus_theta = 0;
    Rational slope;
    long ceil_slope = 0;
    long c_v = 0;
};

namespace detail {

inline std::int64_t qpow(const DrinfeldModule& E, int j) {
    std::int64_t r = 1;
    for (int i = 0; i < j; ++i) r *= static_cast<std::int64_t>(E.field()->q());
    return r;
}

inline long ord_t_minus_theta(const Place& v) {
    return v.is_infinity() ? -1 : 0;
}

inline std::vector<RatFunc> module_and_points(const DrinfeldModule& E, const std::vector<RatFunc>& pts) {
    std::vector<RatFunc> all = E.kappas();
    all.insert(all.end(), pts.begin(), pts.end());
    return all;
}

}  // namespace detail

inline NewtonPolygon newton_polygon(const DrinfeldModule& E, const Place& v) {
    NewtonPolygon np;
    np.points.emplace_back(1, detail::ord_t_minus_theta(v));
    for (int j = 1; j <= E.rank(); ++j)
        if (!E.kappa(j).is_zero()) np.points.emplace_back(detail::qpow(E, j), ord_at_place(E.kappa(j), v));
    for (const auto& pt : np.points) {
        while (np.hull.size() >= 2) {
            const auto& a = np.hull[np.hull.size() - 2];
            const auto& b = np.hull.back();
            // drop b unless it lies strictly below the chord a -> pt
            const __int128 lhs = static_cast<__int128>(b.second - a.second) * (pt.first - a.first);
            const __int128 rhs = static_cast<__int128>(pt.second - a.second) * (b.first - a.first);
            if (lhs >= rhs) np.hull.pop_back();
            else break;
        }
        np.hull.push_back(pt);
    }
    return np;
}

/// Infinity and every finite place in the support of some kappa_j or P_i.
inline std::set<Place> relevant_places(const DrinfeldModule& E, const std::vector<RatFunc>& points) {
    return candidate_places(detail::module_and_points(E, points));
}

/// S_v as the max over closing-edge candidates; j runs over 1..r-1 with kappa_j != 0.
inline Rational slope_at_place(const DrinfeldModule& E, const Place& v) {
    const int r = E.rank();
    const long okr = ord_at_place(E.kappa(r), v);
    const std::int64_t qr = detail::qpow(E, r);
    Rational s(okr - detail::ord_t_minus_theta(v), qr - 1);
    for (int j = 1; j < r; ++j) {
        if (E.kappa(j).is_zero()) continue;
        s = std::max(s, Rational(okr - ord_at_place(E.kappa(j), v), qr - detail::qpow(E, j)));
    }
    return s;
}

/// sum ceil(S_v) v over the places relevant to E alone.
inline Divisor slope_divisor(const DrinfeldModule& E) {
    Divisor d;
    for (const auto& v : candidate_places(E.kappas())) d.set(v, slope_at_place(E, v).ceil());
    return d;
}

/// C_v = min{ord_v P_i, floor((ord kappa_j - ord kappa_r)/(q^r - q^j)), floor((ord(t-theta) - ord kappa_r)/(q^r - 1))}.
inline long cv(const DrinfeldModule& E, const std::vector<RatFunc>& points, const Place& v) {
    const int r = E.rank();
    const long okr = ord_at_place(E.kappa(r), v);
    const std::int64_t qr = detail::qpow(E, r);
    long c = Rational(detail::ord_t_minus_theta(v) - okr, qr - 1).floor();
    for (int j = 1; j < r; ++j) {
        if (E.kappa(j).is_zero()) continue;
        c = std::min<long>(c, Rational(ord_at_place(E.kappa(j), v) - okr, qr - detail::qpow(E, j)).floor());
    }
    for (const auto& P : points) c = std::min(c, ord_at_place(P, v));
    return c;
}

inline SlopeData slope_data(const DrinfeldModule& E, const std::vector<RatFunc>& points, const Place& v) {
    SlopeData s{v, {}, detail::ord_t_minus_theta(v), slope_at_place(E, v), 0, cv(E, points, v)};
    for (int j = 1; j <= E.rank(); ++j) {
        if (E.kappa(j).is_zero()) s.ord_kappa.emplace_back();
        else s.ord_kappa.emplace_back(ord_at_place(E.kappa(j), v));
    }
    s.ceil_slope = s.slope.ceil();
    return s;
}

/// Nonzero and pairwise distinct points.
inline void check_points(const std::vector<RatFunc>& points) {
    if (points.empty()) throw InputError("theorem hypothesis violated: no points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].is_zero()) throw InputError("theorem hypothesis violated: zero point");
        for (std::size_t j = 0; j < i; ++j)
            if (points[i] == points[j]) throw InputError("theorem hypothesis violated: duplicate points");
    }
}

struct MasserData {
    Divisor div_points;
    Divisor slope;
    Divisor D;
    std::vector<SlopeData> table;  // one row per relevant place, canonical order
    Rational height;
};

/// D = (-div P) v div(E_slope), cross-checked against sum(-C_v) v and deg D >= h(P).
inline MasserData masser_analysis(const DrinfeldModule& E, const std::vector<RatFunc>& points) {
    check_points(points);
    MasserData m;
    m.div_points = div_of_vector(points);
    m.slope = slope_divisor(E);
    m.D = divisor_join(-m.div_points, m.slope);
    m.height = Rational(-m.div_points.degree());
    Divisor via_cv;
    for (const auto& v : relevant_places(E, points)) {
        m.table.push_back(slope_data(E, points, v));
        via_cv.set(v, -m.table.back().c_v);
    }
    if (!(via_cv == m.D))
        throw InternalError("divisor identity failed: " + m.D.to_string() + " vs " + via_cv.to_string());
    if (Rational(m.D.degree()) < m.height) throw InternalError("deg D below the height of the points");
    return m;
}

inline Divisor masser_divisor(const DrinfeldModule& E, const std::vector<RatFunc>& points) {
    return masser_analysis(E, points).D;
}

}  // namespace drinrel
