#pragma once

#include <optional>
#include <vector>

#include "heis/point.hpp"
#include "heis/section_set.hpp"

namespace heis {

struct SearchConfig {
    std::size_t grid_r = 128;       // radial grid per point
    std::size_t grid_theta = 64;    // relative-angle grid on [0, pi]
    std::size_t grid_mu = 8;        // |c| grid for n >= 2 pair reduction
    int refine_starts = 16;         // multistart count for local refinement
    int refine_rounds = 24;         // coordinate-ascent rounds per start
    double tol = 1e-10;             // coordinate step tolerance
};

struct DiameterReport {
    double value = 0.0;
    Point witness_p, witness_q;
    std::size_t iterations = 0;    // objective evaluations
    int refinement_level = 0;      // refinement rounds actually used
    double lower_witness_gap = 0.0;  // value - d(witness) >= 0
};

DiameterReport diameter(const ProfileSet& s, const SearchConfig& cfg = {});
DiameterReport diameter(const SectionSet& s, const SearchConfig& cfg = {});

std::pair<double, Point> max_dist_from_point(const ProfileSet& s, const Point& p,
                                             const SearchConfig& cfg = {});
std::pair<double, Point> max_dist_from_point(const SectionSet& s, const Point& p,
                                             const SearchConfig& cfg = {});

struct NcSample {
    Point p;
    double slack = 0.0;
    Point partner;  // best diametral partner found
};

// Diametral-partner slack per boundary sample; the necessary condition holds
// when the worst (largest) slack is ~0 and fails where slack stays positive.
struct NcReport {
    double diam = 0.0;
    std::vector<NcSample> samples;
    double worst_slack = 0.0;
    Point worst_point;
    double min_slack = 0.0;
};

NcReport nc_check(const ProfileSet& s, std::optional<double> diam_hint = {},
                  const SearchConfig& cfg = {});
NcReport nc_check(const SectionSet& s, std::optional<double> diam_hint = {},
                  const SearchConfig& cfg = {});

}  // namespace heis
