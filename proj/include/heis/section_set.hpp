#pragma once

#include <iosfwd>
#include <vector>

#include "heis/profile_set.hpp"

namespace heis {

struct Interval {
    double lo = 0.0, hi = 0.0;
    double length() const { return hi - lo; }
};

/// General compact set sampled as z |-> disjoint t-intervals, with a
/// quadrature cell area per z sample. Handles sets outside the rotationally
/// invariant class (perturbations, envelope extraction).
class SectionSet {
public:
    std::size_t n = 1;
    std::vector<std::vector<double>> zsamples;        // flat (x...,y...) per sample
    std::vector<std::vector<Interval>> sections;      // sorted, disjoint per sample
    std::vector<double> cell_areas;                   // 2n-dim cell measures

    void validate() const;
    std::size_t sample_count() const { return zsamples.size(); }
    double znorm(std::size_t i) const;
    bool empty_body() const;

    /// Quasi-uniform polar grid over the disc ||z|| <= R (n = 1), built from
    /// sigma-symmetric pairs so reflection invariance is exact in floating
    /// point. target_count is approximate.
    static SectionSet polar_grid(double R, std::size_t target_count);
};

double volume(const SectionSet& s);
SectionSet t_convex_hull(const SectionSet& s);
SectionSet steiner_symmetrize(const SectionSet& s);
SectionSet dilate_set(double lambda, const SectionSet& s);

struct EnvelopeData {
    std::vector<double> f_plus, f_minus;  // outer section bounds per sample
    std::vector<char> in_U;               // thickness above threshold
    SectionSet ehat;                      // closure of U, t-convex hull sections
};
EnvelopeData envelopes(const SectionSet& s, double thickness_eps = -1.0);

SectionSet profile_to_sections(const ProfileSet& s, std::size_t zcount);

SectionSet sectionset_from_json(std::istream& in);
void to_json(const SectionSet& s, std::ostream& out);

}  // namespace heis
