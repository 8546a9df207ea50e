#include "tdoa/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tdoa {

using nlohmann::json;

namespace {
Vec2 parse_vec2(const json& j, const char* field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ConfigError(std::string(field) + ": expected [x, y]");
    return Vec2{j[0].get<double>(), j[1].get<double>()};
}

Interval parse_interval(const json& j, const char* field) {
    if (!j.is_array() || j.size() != 2)
        throw ConfigError(std::string(field) + ": expected [lo, hi]");
    return Interval(j[0].get<double>(), j[1].get<double>());
}
}  // namespace

Scenario parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("scenario: invalid JSON: ") + e.what());
    }
    Scenario s;
    if (j.contains("microphones")) {
        for (const auto& m : j["microphones"])
            s.microphones.push_back(parse_vec2(m, "microphones"));
    }
    if (j.contains("foci")) {
        const auto& f = j["foci"];
        if (!f.contains("a") || !f.contains("b"))
            throw ConfigError("foci: expected fields a and b");
        s.foci = TdoaConstraint{parse_vec2(f["a"], "foci.a"),
                                parse_vec2(f["b"], "foci.b")};
    }
    if (j.contains("y_interval"))
        s.y_interval = parse_interval(j["y_interval"], "y_interval");
    if (j.contains("disks")) {
        for (const auto& d : j["disks"]) {
            if (!d.contains("center") || !d.contains("radius"))
                throw ConfigError("disks: expected center and radius");
            s.disks.push_back(DiskSet{parse_vec2(d["center"], "disks.center"),
                                      d["radius"].get<double>()});
        }
    }
    if (j.contains("alpha_levels"))
        s.alpha_levels = j["alpha_levels"].get<std::vector<double>>();
    if (j.contains("mu_center"))
        s.mu_center = parse_vec2(j["mu_center"], "mu_center");
    if (!j.contains("frame"))
        throw ConfigError("frame: required field missing");
    {
        const auto& f = j["frame"];
        if (!f.is_array() || f.size() < 1)
            throw ConfigError("frame: expected list of [lo, hi] pairs");
        std::vector<Interval> dims;
        for (const auto& d : f) dims.push_back(parse_interval(d, "frame"));
        s.frame = IntervalBox(std::move(dims));
    }
    if (j.contains("eps")) s.eps = j["eps"].get<double>();
    if (j.contains("method")) {
        const std::string m = j["method"].get<std::string>();
        if (m == "kkt") s.method = RangeMethod::Kkt;
        else if (m == "natural") s.method = RangeMethod::Natural;
        else throw ConfigError("method: expected \"kkt\" or \"natural\"");
    }
    validate_scenario(s);
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("scenario: cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_scenario(ss.str());
}

std::string serialize_scenario(const Scenario& s) {
    json j;
    if (!s.microphones.empty()) {
        j["microphones"] = json::array();
        for (const auto& m : s.microphones) j["microphones"].push_back({m.x, m.y});
    }
    if (s.foci) {
        j["foci"] = {{"a", {s.foci->a.x, s.foci->a.y}},
                     {"b", {s.foci->b.x, s.foci->b.y}}};
    }
    if (s.y_interval) j["y_interval"] = {s.y_interval->lo(), s.y_interval->hi()};
    if (!s.disks.empty()) {
        j["disks"] = json::array();
        for (const auto& d : s.disks)
            j["disks"].push_back(
                {{"center", {d.center.x, d.center.y}}, {"radius", d.radius}});
    }
    if (!s.alpha_levels.empty()) j["alpha_levels"] = s.alpha_levels;
    j["mu_center"] = {s.mu_center.x, s.mu_center.y};
    j["frame"] = json::array();
    for (std::size_t i = 0; i < s.frame.size(); ++i)
        j["frame"].push_back({s.frame[i].lo(), s.frame[i].hi()});
    j["eps"] = s.eps;
    j["method"] = s.method == RangeMethod::Kkt ? "kkt" : "natural";
    return j.dump(2);
}

void validate_scenario(const Scenario& s) {
    if (s.eps <= 0.0) throw ConfigError("eps: must be > 0");
    if (s.frame.size() < 1 || s.frame.is_empty())
        throw ConfigError("frame: must be non-empty");
    if (s.frame.width() <= 0.0) throw ConfigError("frame: must be non-degenerate");
    for (std::size_t i = 0; i < s.frame.size(); ++i)
        if (!std::isfinite(s.frame[i].lo()) || !std::isfinite(s.frame[i].hi()))
            throw ConfigError("frame: endpoints must be finite");
    for (double a : s.alpha_levels)
        if (!(a > 0.0 && a <= 1.0))
            throw ConfigError("alpha_levels: values must lie in (0,1]");
    for (std::size_t i = 1; i < s.alpha_levels.size(); ++i)
        if (!(s.alpha_levels[i] < s.alpha_levels[i - 1]))
            throw ConfigError("alpha_levels: must be strictly decreasing");
    for (const auto& d : s.disks)
        if (d.radius < 0.0) throw ConfigError("disks: radius must be >= 0");
}

}  // namespace tdoa
