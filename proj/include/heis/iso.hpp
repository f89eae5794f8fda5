#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "heis/extremal.hpp"
#include "heis/profile_set.hpp"
#include "heis/section_set.hpp"

namespace heis {

struct RatioReport {
    double volume = 0.0;
    double diameter = 0.0;
    double ratio = 0.0;  // volume / diameter^{2n+2}
    std::size_t n = 1;
    std::size_t grid_r = 0, grid_theta = 0;  // diagnostics
    double tol = 0.0;
};

RatioReport iso_ratio(const ProfileSet& s, const SearchConfig& cfg = {});
RatioReport iso_ratio(const SectionSet& s, const SearchConfig& cfg = {});

struct CompareReport {
    RatioReport first, second;
    double difference = 0.0;   // first.ratio - second.ratio
    double rel_margin = 0.0;   // difference / second.ratio
};

CompareReport compare(const RatioReport& a, const RatioReport& b);

struct OptimizerConfig {
    std::size_t m = 256;           // profile nodes
    int max_sweeps = 50;
    double step_tol = 1e-7;        // sweep stops when no node moves more
    double diameter_budget = 1.0;
    std::size_t theta_grid = 256;  // constraint-angle scan per node pair
    double R = 0.5;                // horizontal radius of the search class
};

struct OptimizerTrace {
    std::vector<double> volume_per_sweep;
    std::vector<double> max_rise_per_sweep;
    int sweeps = 0;
    bool converged = false;
};

/// Coordinate ascent toward the maximal symmetric profile of unit diameter:
/// raises each node to the largest value keeping every sampled pair within
/// distance 1, sweeping outer-to-inner until stationary.
std::tuple<ProfileSet, RatioReport, OptimizerTrace> optimize_profile(
    const OptimizerConfig& cfg, const ProfileSet* start = nullptr);

}  // namespace heis
