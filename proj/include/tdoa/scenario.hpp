#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdoa/contractor.hpp"
#include "tdoa/interval.hpp"
#include "tdoa/tdoa.hpp"

namespace tdoa {

/// Invalid or incomplete scenario input (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical failure during a run (CLI exit code 3).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One experiment configuration, loaded from a JSON file.
struct Scenario {
    std::vector<Vec2> microphones;
    std::optional<TdoaConstraint> foci;
    std::optional<Interval> y_interval;
    std::vector<DiskSet> disks;
    std::vector<double> alpha_levels;      // strictly decreasing, in (0,1]
    Vec2 mu_center{2.0, 1.0};              // peak of the possibility distribution
    IntervalBox frame;
    double eps = 0.01;
    RangeMethod method = RangeMethod::Kkt;
};

Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);
std::string serialize_scenario(const Scenario& s);

/// Throws ConfigError naming the offending field.
void validate_scenario(const Scenario& s);

}  // namespace tdoa
