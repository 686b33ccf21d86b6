#include "polars/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <stdexcept>

namespace polars {

using json = nlohmann::ordered_json;

namespace {

json box_json(const Box& b) {
    return {{"x", {to_string(b.x.lo), to_string(b.x.hi)}}, {"y", {to_string(b.y.lo), to_string(b.y.hi)}}};
}

Rational rat(const json& j) { return parse_rational(j.get<std::string>()); }

Box box_from(const json& j) {
    return {Interval(rat(j.at("x").at(0)), rat(j.at("x").at(1))), Interval(rat(j.at("y").at(0)), rat(j.at("y").at(1)))};
}

json point_json(const PointRecord& p) {
    json j{{"box", box_json(p.box)}, {"approx", {p.x, p.y}}, {"multiplicity_hint", p.multiplicity_hint},
           {"singular", p.singular}, {"component", p.component}};
    if (!p.reason.empty()) j["reason"] = p.reason;
    return j;
}

PointRecord point_from(const json& j) {
    PointRecord p;
    p.box = box_from(j.at("box"));
    p.x = j.at("approx").at(0).get<double>();
    p.y = j.at("approx").at(1).get<double>();
    p.multiplicity_hint = j.at("multiplicity_hint").get<int>();
    p.singular = j.at("singular").get<bool>();
    p.component = j.at("component").get<int>();
    p.reason = j.value("reason", "");
    return p;
}

json to_json(const Report& r) {
    json j;
    j["command"] = r.command;
    if (!r.corpus.empty()) j["corpus"] = r.corpus;
    j["curve"] = r.curve;
    j["degree"] = r.degree;
    if (!r.flag_point.empty()) j["flag_point"] = r.flag_point;
    if (!r.quadric.empty()) j["quadric"] = r.quadric;
    if (!r.center.empty()) j["center"] = r.center;
    if (!r.polar.empty()) j["polar"] = r.polar;
    if (r.box) j["box"] = box_json(*r.box);
    if (r.resolution) j["resolution"] = r.resolution;
    if (r.stable) j["stable_under_refinement"] = *r.stable;

    j["witnesses"] = json::array();
    for (const auto& p : r.witnesses) j["witnesses"].push_back(point_json(p));
    j["excluded"] = json::array();
    for (const auto& p : r.excluded) j["excluded"].push_back(point_json(p));
    j["singular_points"] = json::array();
    for (const auto& s : r.singular_points) {
        json t = json::array();
        for (std::size_t k = 0; k < s.tangents.size(); ++k)
            t.push_back({{"direction", s.tangents[k]}, {"multiplicity", s.tangent_multiplicities[k]}});
        json e{{"location", point_json(s.location)}, {"multiplicity", s.multiplicity}, {"kind", s.kind},
               {"real_branches", s.real_branches}, {"tangents", t}, {"complex_pairs", s.complex_pairs}};
        if (s.exact_x) e["exact"] = {*s.exact_x, *s.exact_y};
        j["singular_points"].push_back(e);
    }
    j["components"] = json::array();
    for (const auto& c : r.components) {
        json e{{"id", c.id}, {"compact", c.compact}, {"cells", c.cells}, {"witnesses", c.witnesses},
               {"singular_points", c.singular_points}};
        if (!c.verdict.empty()) e["verdict"] = c.verdict;
        j["components"].push_back(e);
    }
    j["checklist"] = json::array();
    for (const auto& c : r.checklist)
        j["checklist"].push_back({{"name", c.name}, {"status", c.status}, {"required", c.required}, {"detail", c.detail}});
    if (!r.facts.empty()) {
        j["facts"] = json::array();
        for (const auto& f : r.facts)
            j["facts"].push_back({{"name", f.name}, {"expected", f.expected}, {"actual", f.actual}, {"ok", f.ok}});
    }
    if (!r.entries.empty()) {
        j["entries"] = json::array();
        for (const auto& e : r.entries) j["entries"].push_back(to_json(e));
    }
    if (!r.error.empty()) j["error"] = r.error;
    if (!r.suggestion.empty()) j["suggestion"] = r.suggestion;
    j["exit_code"] = r.exit_code;
    return j;
}

Report from_json(const json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.corpus = j.value("corpus", "");
    r.curve = j.at("curve").get<std::string>();
    r.degree = j.at("degree").get<int>();
    r.flag_point = j.value("flag_point", "");
    r.quadric = j.value("quadric", "");
    r.center = j.value("center", "");
    r.polar = j.value("polar", "");
    if (j.contains("box")) r.box = box_from(j["box"]);
    r.resolution = j.value("resolution", 0);
    if (j.contains("stable_under_refinement")) r.stable = j["stable_under_refinement"].get<bool>();

    for (const auto& p : j.at("witnesses")) r.witnesses.push_back(point_from(p));
    for (const auto& p : j.at("excluded")) r.excluded.push_back(point_from(p));
    for (const auto& e : j.at("singular_points")) {
        SingularRecord s;
        s.location = point_from(e.at("location"));
        if (e.contains("exact")) {
            s.exact_x = e["exact"].at(0).get<std::string>();
            s.exact_y = e["exact"].at(1).get<std::string>();
        }
        s.multiplicity = e.at("multiplicity").get<int>();
        s.kind = e.at("kind").get<std::string>();
        s.real_branches = e.at("real_branches").get<int>();
        for (const auto& t : e.at("tangents")) {
            s.tangents.push_back(t.at("direction").get<std::string>());
            s.tangent_multiplicities.push_back(t.at("multiplicity").get<int>());
        }
        s.complex_pairs = e.at("complex_pairs").get<int>();
        r.singular_points.push_back(s);
    }
    for (const auto& e : j.at("components")) {
        ComponentRecord c;
        c.id = e.at("id").get<int>();
        c.compact = e.at("compact").get<bool>();
        c.cells = e.at("cells").get<std::size_t>();
        c.verdict = e.value("verdict", "");
        c.witnesses = e.at("witnesses").get<std::vector<int>>();
        c.singular_points = e.at("singular_points").get<std::vector<int>>();
        r.components.push_back(c);
    }
    for (const auto& e : j.at("checklist"))
        r.checklist.push_back({e.at("name").get<std::string>(), e.at("status").get<std::string>(),
                               e.at("required").get<bool>(), e.at("detail").get<std::string>()});
    if (j.contains("facts"))
        for (const auto& e : j["facts"])
            r.facts.push_back({e.at("name").get<std::string>(), e.at("expected").get<std::string>(),
                               e.at("actual").get<std::string>(), e.at("ok").get<bool>()});
    if (j.contains("entries"))
        for (const auto& e : j["entries"]) r.entries.push_back(from_json(e));
    r.error = j.value("error", "");
    r.suggestion = j.value("suggestion", "");
    r.exit_code = j.at("exit_code").get<int>();
    return r;
}

}  // namespace

std::string serialize(const Report& r) { return to_json(r).dump(2) + "\n"; }

Report parse_report(const std::string& text) {
    try {
        return from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

double display_decimal(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

}  // namespace polars
