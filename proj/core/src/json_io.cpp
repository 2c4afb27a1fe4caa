#include "capax/json_io.hpp"

namespace capax {

Json to_json(const Ellipsoid& e) {
    Json arr = Json::array();
    for (const ExtRational& p : e.params()) arr.push_back(to_string(p));
    return arr;
}

Ellipsoid ellipsoid_from_json(const Json& j) {
    if (!j.is_array()) throw std::domain_error("ellipsoid: expected a JSON array");
    std::vector<ExtRational> params;
    for (const Json& item : j) {
        if (!item.is_string()) throw std::domain_error("ellipsoid: entries must be strings");
        params.push_back(parse_ext_rational(item.get<std::string>()));
    }
    return Ellipsoid(std::move(params));
}

Json to_json(const ToricProfile& p) {
    Json verts = Json::array();
    for (const Point& v : p.vertices())
        verts.push_back(Json::array({to_string(v.x), to_string(v.y)}));
    return Json{{"kind", p.kind() == ProfileKind::Concave ? "concave" : "convex"},
                {"vertices", verts}};
}

ToricProfile profile_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("vertices"))
        throw std::domain_error("profile: expected {kind, vertices}");
    std::string kind_str = j.at("kind").get<std::string>();
    ProfileKind kind;
    if (kind_str == "concave")
        kind = ProfileKind::Concave;
    else if (kind_str == "convex")
        kind = ProfileKind::Convex;
    else
        throw std::domain_error("profile: kind must be \"concave\" or \"convex\"");
    std::vector<Point> vertices;
    for (const Json& v : j.at("vertices")) {
        if (!v.is_array() || v.size() != 2) throw std::domain_error("profile: vertex must be a pair");
        vertices.push_back(Point{parse_rational(v.at(0).get<std::string>()),
                                 parse_rational(v.at(1).get<std::string>())});
    }
    return ToricProfile(kind, std::move(vertices));
}

Json to_json(const RatioValue& r) {
    return Json{{"nth_power", to_string(r.nth_power)}, {"n", r.dim_half}, {"approx", r.approx}};
}

RatioValue ratio_from_json(const Json& j) {
    return make_ratio(parse_rational(j.at("nth_power").get<std::string>()), j.at("n").get<int>());
}

Json to_json(const SpectrumEntry& entry) {
    return Json{{"value", to_string(entry.value)},
                {"j", entry.source_index},
                {"m", entry.multiplier}};
}

Json to_json(const MaximizerReport& report) {
    Json out{{"candidate", to_json(report.candidate)},
             {"ratio", to_json(report.ratio)},
             {"verdict", report.verdict == Verdict::ConfirmedMax ? "confirmed_max" : "witness_found"}};
    if (report.witness) {
        out["witness"] = Json{{"ellipsoid", to_json(report.witness->ellipsoid)},
                              {"ratio", to_json(report.witness->ratio)},
                              {"eps", to_string(report.witness->eps)},
                              {"direction", report.witness->direction}};
    }
    return out;
}

Json to_json(const GridSpec& grid) {
    return Json{{"r_denom_bound", grid.r_denom_bound},
                {"s_steps", grid.s_steps},
                {"t_steps", grid.t_steps},
                {"balanced", grid.balanced},
                {"rectangle_s_cap", grid.rectangle_s_cap}};
}

Json to_json(const ConvexSweepReport& report) {
    Json loci = Json::array();
    if (report.equality_at_s0) loci.push_back(Json{{"s", "0"}});
    for (const EqualityLocus& loc : report.extra_loci)
        loci.push_back(Json{{"i", loc.i},
                            {"r", to_string(loc.r)},
                            {"s", to_string(loc.s)},
                            {"t", to_string(loc.t)}});
    return Json{{"k", report.k},
                {"verdict", report.holds},
                {"bound_ok", report.bound_ok},
                {"identity_ok", report.identity_ok},
                {"thresholds_ok", report.thresholds_ok},
                {"cover_ok", report.cover_ok},
                {"points_checked", report.points_checked},
                {"equality_loci", loci}};
}

}  // namespace capax
