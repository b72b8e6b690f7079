#pragma once

// Instance files and JSON reports for the command-line front end.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "drinrel.hpp"

namespace drinrel {

using json = nlohmann::ordered_json;

struct Instance {
    FieldPtr field;
    DrinfeldModule module;
    std::vector<RatFunc> points;
};

namespace detail {

template <class F>
auto field_entry(const std::string& name, F&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        throw ParseError(name + ": " + e.message(), e.position());
    } catch (const InputError& e) {
        throw InputError(name + ": " + e.what());
    }
}

inline const json& require_field(const json& doc, const char* key) {
    if (!doc.contains(key)) throw InputError(std::string("instance is missing field '") + key + "'");
    return doc.at(key);
}

inline std::vector<std::string> string_list(const json& doc, const char* key) {
    const json& a = require_field(doc, key);
    if (!a.is_array()) throw InputError(std::string("field '") + key + "' must be an array of strings");
    std::vector<std::string> out;
    for (const auto& s : a) {
        if (!s.is_string()) throw InputError(std::string("field '") + key + "' must be an array of strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

}  // namespace detail

/// Parses {"p", "e", "modulus", "phi", "points"}.
inline Instance parse_instance(const json& doc) {
    if (!doc.is_object()) throw InputError("instance must be a JSON object");
    const json& jp = detail::require_field(doc, "p");
    if (!jp.is_number_integer() || jp.get<std::int64_t>() < 1) throw InputError("field 'p' must be a positive integer");
    const auto p = jp.get<std::uint64_t>();
    int e = 1;
    if (doc.contains("e")) {
        if (!doc["e"].is_number_integer() || doc["e"].get<std::int64_t>() < 1)
            throw InputError("field 'e' must be a positive integer");
        e = doc["e"].get<int>();
    }
    std::vector<std::uint32_t> modulus;
    if (e > 1) {
        const json& jm = detail::require_field(doc, "modulus");
        if (!jm.is_string()) throw InputError("field 'modulus' must be a string");
        modulus = detail::field_entry("modulus", [&] { return parse_modulus(p, jm.get<std::string>()); });
    }
    const FieldPtr f = Field::make(p, e, modulus);

    std::vector<RatFunc> kappa;
    const auto phi = detail::string_list(doc, "phi");
    for (std::size_t i = 0; i < phi.size(); ++i)
        kappa.push_back(detail::field_entry("phi[" + std::to_string(i) + "]", [&] { return parse_ratfunc(f, phi[i]); }));
    std::vector<RatFunc> points;
    const auto pts = detail::string_list(doc, "points");
    for (std::size_t i = 0; i < pts.size(); ++i)
        points.push_back(
            detail::field_entry("points[" + std::to_string(i) + "]", [&] { return parse_ratfunc(f, pts[i]); }));
    check_points(points);
    return Instance{f, DrinfeldModule(f, std::move(kappa)), std::move(points)};
}

inline Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read instance file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("instance file is not valid JSON: " + std::string(e.what()));
    }
    return parse_instance(doc);
}

inline json to_json(const Divisor& d) {
    json a = json::array();
    for (const auto& [v, c] : d.terms()) a.push_back({{"place", v.to_string()}, {"coeff", c}});
    return a;
}

inline Divisor divisor_from_json(const FieldPtr& f, const json& a) {
    Divisor d;
    for (const auto& t : a) {
        const auto s = t.at("place").get<std::string>();
        d.set(s == "inf" ? Place::infinity() : Place::finite(parse_theta_poly(f, s)), t.at("coeff").get<long>());
    }
    return d;
}

inline json to_json(const PolyVec& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(e.to_string());
    return a;
}

inline json strings(const std::vector<RatFunc>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(x.to_string());
    return a;
}

inline json describe_instance(const Instance& in) {
    json fld = {{"p", in.field->p()}, {"e", in.field->e()}, {"q", in.field->q()}};
    if (in.field->e() > 1) {
        std::vector<Fq> m;
        for (auto c : in.field->modulus()) m.push_back(Fq{c});
        fld["modulus"] = Poly<WVar>(Field::prime(in.field->p()), m).to_string();
    }
    return {{"field", fld}, {"phi", strings(in.module.kappas())}, {"points", strings(in.points)}};
}

inline json slope_table(const MasserData& m) {
    json rows = json::array();
    for (const auto& s : m.table) {
        json ok = json::array();
        for (const auto& o : s.ord_kappa) ok.push_back(o ? json(*o) : json(nullptr));
        rows.push_back({{"place", s.place.to_string()},
                        {"ord_kappa", ok},
                        {"ord_t_minus_theta", s.ord_t_minus_theta},
                        {"S_v", s.slope.to_string()},
                        {"ceil_S_v", s.ceil_slope},
                        {"C_v", s.c_v}});
    }
    return rows;
}

inline json relation_list(const std::vector<PolyVec>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back({{"vector", to_json(v)}, {"degree", vec_degree(v).value()}});
    return a;
}

inline json cmd_bound(const Instance& in) {
    const MasserData m = masser_analysis(in.module, in.points);
    const long d = rr_dimension(m.D);
    const long ell = static_cast<long>(in.points.size());
    json r = {{"command", "bound"}};
    r.update(describe_instance(in));
    r["div_points"] = to_json(m.div_points);
    r["div_slope"] = to_json(m.slope);
    r["D"] = to_json(m.D);
    r["deg_D"] = m.D.degree();
    r["height"] = m.height.to_string();
    r["d"] = d;
    r["ell"] = ell;
    r["bound"] = d + ell;
    r["slopes"] = slope_table(m);
    if (in.module.rank() == 2) r["j_invariant"] = j_invariant(in.module).to_string();
    return r;
}

inline json audit_json(const IndependenceReport& rep) {
    return {{"oracle_degree", rep.basis.bound},
            {"oracle_dimension", rep.oracle_dim},
            {"oracle_strategy", rep.oracle_strategy},
            {"agrees", true},
            {"kernel_stable", true}};
}

inline json cmd_basis(const Instance& in, bool audit) {
    const LinearSystem sys = build_linear_system(in.module, in.points);
    IndependenceReport rep;
    if (audit) rep = is_independent(in.module, in.points, true);
    else rep.basis = relation_basis_of(in.module, in.points, sys);
    json r = {{"command", "basis"}};
    r.update(describe_instance(in));
    r["D"] = to_json(sys.masser.D);
    r["Dtilde"] = to_json(sys.Dtilde);
    r["L_D_basis"] = strings(sys.beta.elements);
    r["d"] = sys.d;
    r["dim_L_Dtilde"] = sys.gamma.dimension;
    r["ell"] = sys.ell;
    r["bound"] = sys.d + sys.ell;
    r["B"] = {{"rows", sys.B.rows()},
              {"cols", sys.B.cols()},
              {"max_deg", sys.B.max_deg().to_string()},
              {"min_deg", sys.B.min_deg().to_string()},
              {"rank", rep.basis.rank_B}};
    r["kernel_rank"] = rep.basis.kernel.size();
    r["nu"] = rep.basis.nu();
    r["relation_basis"] = relation_list(rep.basis.vectors);
    if (audit) r["audit"] = audit_json(rep);
    return r;
}

inline json cmd_independent(const Instance& in, bool audit) {
    const IndependenceReport rep = is_independent(in.module, in.points, audit);
    json r = {{"command", "independent"}};
    r.update(describe_instance(in));
    r["independent"] = rep.independent;
    r["certificate"] = {{"d", rep.basis.d}, {"ell", rep.basis.ell}, {"bound", rep.basis.bound}, {"nu", rep.basis.nu()}};
    if (!rep.independent) r["relation_basis"] = relation_list(rep.basis.vectors);
    if (audit) r["audit"] = audit_json(rep);
    return r;
}

inline json cmd_oracle(const Instance& in, long delta) {
    const OracleResult o = oracle_relations(in.module, in.points, delta);
    json r = {{"command", "oracle"}};
    r.update(describe_instance(in));
    r["deg"] = delta;
    r["strategy"] = o.strategy;
    r["dimension"] = o.space.dim();
    json rel = json::array();
    for (const auto& v : o.relations(in.field, in.points.size(), delta)) rel.push_back(to_json(v));
    r["relations"] = rel;
    return r;
}

inline json cmd_verify(const Instance& in, const std::string& relation) {
    const auto a = detail::field_entry("relation", [&] { return parse_tpoly_list(in.field, relation); });
    if (a.size() != in.points.size())
        throw InputError("relation has " + std::to_string(a.size()) + " entries for " +
                         std::to_string(in.points.size()) + " points");
    const bool holds = verify_relation(in.module, in.points, a);
    json r = {{"command", "verify"}};
    r.update(describe_instance(in));
    r["relation"] = to_json(a);
    r["holds"] = holds;
    if (vec_is_zero(a)) {
        r["g"] = "0";
    } else {
        const auto g = recover_g(in.module, in.points, a);
        r["g"] = g ? json(g->to_string()) : json(nullptr);
        if (g.has_value() != holds) throw InternalError("difference equation disagrees with direct evaluation");
    }
    return r;
}

inline json cmd_twist(const Instance& in, const std::string& ustr) {
    const RatFunc u = detail::field_entry("u", [&] { return parse_ratfunc(in.field, ustr); });
    if (u.is_zero()) throw InputError("u: twist by zero");
    const auto [deg, deg2] = invariance_check(in.module, in.points, u);
    const DrinfeldModule E2 = twist_by_unit(in.module, u);
    std::vector<RatFunc> up;
    for (const auto& P : in.points) up.push_back(u * P);
    json r = {{"command", "twist"}};
    r.update(describe_instance(in));
    r["u"] = u.to_string();
    r["div_u"] = to_json(div_of_vector({u}));
    r["phi_twisted"] = strings(E2.kappas());
    r["points_twisted"] = strings(up);
    r["D"] = to_json(masser_divisor(in.module, in.points));
    r["D_twisted"] = to_json(masser_divisor(E2, up));
    r["deg_D"] = deg;
    r["deg_D_twisted"] = deg2;
    r["invariant"] = deg == deg2;
    return r;
}

}  // namespace drinrel
