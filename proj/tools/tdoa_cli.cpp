#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tdoa/contractor.hpp"
#include "tdoa/interval.hpp"
#include "tdoa/paver.hpp"
#include "tdoa/scenario.hpp"
#include "tdoa/tdoa.hpp"

namespace {

using namespace tdoa;

struct CommonOpts {
    std::string scenario_path;
    std::optional<double> eps;
    std::optional<std::string> method;
    std::string out = "paving.txt";
    std::string svg;
    std::string stats;
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--scenario", o.scenario_path, "Scenario JSON file")->required();
    cmd->add_option("--eps", o.eps, "Override paving accuracy");
    cmd->add_option("--method", o.method, "kkt or natural");
    cmd->add_option("--out", o.out, "Paving output file");
    cmd->add_option("--svg", o.svg, "SVG output file");
    cmd->add_option("--stats", o.stats, "Stats JSON output file");
    cmd->add_option("--threads", o.threads, "Paver worker threads");
}

Scenario load(const CommonOpts& o) {
    Scenario s = load_scenario(o.scenario_path);
    if (o.eps) s.eps = *o.eps;
    if (o.method) {
        if (*o.method == "kkt") s.method = RangeMethod::Kkt;
        else if (*o.method == "natural") s.method = RangeMethod::Natural;
        else throw ConfigError("method: expected kkt or natural");
    }
    validate_scenario(s);
    return s;
}

void require_foci(const Scenario& s) {
    if (!s.foci) throw ConfigError("foci: required by this command");
}

nlohmann::json stats_json(const PavingStats& st) {
    return {{"n_inside", st.n_inside},
            {"n_outside", st.n_outside},
            {"n_boundary", st.n_boundary},
            {"n_bisections", st.n_bisections},
            {"wall_time", st.wall_time}};
}

void write_file(const std::string& path, const std::string& what,
                const std::function<void(std::ostream&)>& emit) {
    if (path.empty()) return;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw NumericalError("cannot write " + what + " file " + path);
    emit(f);
}

void print_stats(const char* label, const PavingStats& st) {
    std::printf("%s: inside=%zu outside=%zu boundary=%zu bisections=%zu total=%zu "
                "time=%.3fs\n",
                label, st.n_inside, st.n_outside, st.n_boundary, st.n_bisections,
                st.n_inside + st.n_outside + st.n_boundary, st.wall_time);
}

void emit_paving(const CommonOpts& o, const Paving& p) {
    write_file(o.out, "paving", [&](std::ostream& os) { write_paving(os, p); });
    write_file(o.svg, "svg", [&](std::ostream& os) { write_svg(os, p); });
    write_file(o.stats, "stats", [&](std::ostream& os) {
        os << stats_json(p.stats).dump(2) << "\n";
    });
}

int cmd_range(const CommonOpts& o, const std::vector<double>& box_vals) {
    Scenario s = load(o);
    require_foci(s);
    if (box_vals.size() != 4) throw ConfigError("box: expected 4 numbers");
    const IntervalBox box(Interval(box_vals[0], box_vals[1]),
                          Interval(box_vals[2], box_vals[3]));
    if (box.is_empty()) throw ConfigError("box: empty");
    const Interval mr = minimal_range(box, *s.foci);
    const Interval nr = natural_range(box, *s.foci);
    std::printf("minimal_range: %s\n", to_string(mr).c_str());
    std::printf("natural_range: %s\n", to_string(nr).c_str());
    const CriticalPointSet cs = critical_points(box, *s.foci);
    for (const auto& p : cs.corners)
        std::printf("corner (%.17g,%.17g) f=%.17g\n", p.x, p.y,
                    tdoa_eval(p, *s.foci));
    for (const auto& ep : cs.edge_points)
        std::printf("edge%d (%.17g,%.17g) f=%.17g\n", ep.edge, ep.p.x, ep.p.y,
                    tdoa_eval(ep.p, *s.foci));
    for (const auto& p : cs.ray_points)
        std::printf("ray (%.17g,%.17g) f=%.17g\n", p.x, p.y,
                    tdoa_eval(p, *s.foci));
    return 0;
}

int cmd_pave(const CommonOpts& o) {
    Scenario s = load(o);
    require_foci(s);
    if (!s.y_interval) throw ConfigError("y_interval: required by pave");
    const Separator sep = separator_from_test(
        [c = *s.foci, y = *s.y_interval, m = s.method](const IntervalBox& b) {
            return inclusion_test(b, y, c, m);
        });
    const Paving p = pave(sep, s.frame, s.eps, o.threads);
    emit_paving(o, p);
    print_stats(s.method == RangeMethod::Kkt ? "kkt" : "natural", p.stats);
    return 0;
}

Separator disks_union(const std::vector<DiskSet>& disks) {
    Separator sep = disk_separator(disks.front());
    for (std::size_t i = 1; i < disks.size(); ++i)
        sep = sep_union(sep, disk_separator(disks[i]));
    return sep;
}

int cmd_compose(const CommonOpts& o) {
    Scenario s = load(o);
    if (s.microphones.size() < 3)
        throw ConfigError("microphones: compose needs at least 3");
    if (s.disks.empty()) throw ConfigError("disks: compose needs at least 1");
    const Correspondence F = Correspondence::from_microphones(s.microphones);
    const Separator sX = act_inverse(F, disks_union(s.disks), s.frame);
    const Paving p = pave(sX, s.frame, s.eps, o.threads);
    emit_paving(o, p);
    print_stats("compose", p.stats);
    return 0;
}

int cmd_localize(const CommonOpts& o) {
    Scenario s = load(o);
    if (s.microphones.size() < 3)
        throw ConfigError("microphones: localize needs at least 3");
    if (s.alpha_levels.empty())
        throw ConfigError("alpha_levels: required by localize");
    const Correspondence F = Correspondence::from_microphones(s.microphones);
    std::vector<Paving> levels;
    nlohmann::json jlevels = nlohmann::json::array();
    for (std::size_t i = 0; i < s.alpha_levels.size(); ++i) {
        const double alpha = s.alpha_levels[i];
        // mu(y) >= alpha  <=>  ||y - mu_center||^2 <= -ln(alpha)
        const DiskSet cut{s.mu_center, std::sqrt(-std::log(alpha))};
        const Separator sX = act_inverse(F, disk_separator(cut), s.frame);
        levels.push_back(pave(sX, s.frame, s.eps, o.threads));
        const Paving& p = levels.back();
        if (!o.out.empty()) {
            std::string base = o.out;
            const auto dot = base.rfind(".txt");
            if (dot != std::string::npos && dot == base.size() - 4)
                base = base.substr(0, dot);
            std::ofstream f(base + "_" + std::to_string(i) + ".txt",
                            std::ios::binary);
            write_paving(f, p);
        }
        char label[64];
        std::snprintf(label, sizeof label, "alpha=%.6g r=%.6g", alpha, cut.radius);
        print_stats(label, p.stats);
        auto js = stats_json(p.stats);
        js["alpha"] = alpha;
        js["radius"] = cut.radius;
        jlevels.push_back(js);
    }
    write_file(o.svg, "svg",
               [&](std::ostream& os) { write_svg_layers(os, levels); });
    write_file(o.stats, "stats",
               [&](std::ostream& os) { os << jlevels.dump(2) << "\n"; });
    return 0;
}

int cmd_compare(const CommonOpts& o) {
    Scenario s = load(o);
    require_foci(s);
    if (!s.y_interval) throw ConfigError("y_interval: required by compare");
    auto run = [&](RangeMethod m) {
        const Separator sep = separator_from_test(
            [c = *s.foci, y = *s.y_interval, m](const IntervalBox& b) {
                return inclusion_test(b, y, c, m);
            });
        return pave(sep, s.frame, s.eps, o.threads);
    };
    const Paving pk = run(RangeMethod::Kkt);
    const Paving pn = run(RangeMethod::Natural);
    print_stats("kkt", pk.stats);
    print_stats("natural", pn.stats);
    const std::size_t tk =
        pk.stats.n_inside + pk.stats.n_outside + pk.stats.n_boundary;
    const std::size_t tn =
        pn.stats.n_inside + pn.stats.n_outside + pn.stats.n_boundary;
    const double ratio = tk ? double(tn) / double(tk) : 0.0;
    std::printf("count_ratio natural/kkt = %.3f\n", ratio);
    write_file(o.stats, "stats", [&](std::ostream& os) {
        nlohmann::json j{{"kkt", stats_json(pk.stats)},
                         {"natural", stats_json(pn.stats)},
                         {"count_ratio", ratio}};
        os << j.dump(2) << "\n";
    });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"TDoA interval toolkit: exact-range inclusion tests, "
                 "separator composition and SIVIA paving"};
    app.require_subcommand(1);

    CommonOpts range_o, pave_o, compose_o, localize_o, compare_o;
    std::vector<double> box_vals;

    auto* range = app.add_subcommand("range", "Range of f over one box");
    add_common(range, range_o);
    range->add_option("--box", box_vals, "Box as x1lo x1hi x2lo x2hi")
        ->expected(4)
        ->required();

    auto* pv = app.add_subcommand("pave", "Pave X = f^-1([y])");
    add_common(pv, pave_o);

    auto* compose = app.add_subcommand("compose", "Pave X = F# . (union of disks)");
    add_common(compose, compose_o);

    auto* localize =
        app.add_subcommand("localize", "Alpha-cut pavings of the source location");
    add_common(localize, localize_o);

    auto* compare = app.add_subcommand("compare", "KKT vs natural paving stats");
    add_common(compare, compare_o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (range->parsed()) return cmd_range(range_o, box_vals);
        if (pv->parsed()) return cmd_pave(pave_o);
        if (compose->parsed()) return cmd_compose(compose_o);
        if (localize->parsed()) return cmd_localize(localize_o);
        if (compare->parsed()) return cmd_compare(compare_o);
    } catch (const tdoa::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const tdoa::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
