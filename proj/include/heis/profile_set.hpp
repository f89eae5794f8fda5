#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

namespace heis {

// Shape-preserving piecewise cubic: Hermite with slopes from a local cubic
// fit, clamped by the Fritsch-Carlson monotonicity region afterwards.
// Reproduces polynomial data of degree <= 3 wherever the clamp is inactive.
struct MonotoneCubic {
    std::vector<double> x, y, slope;

    static MonotoneCubic fit(const std::vector<double>& x, const std::vector<double>& y);
    double eval(double at) const;
    /// integral of y(r) * r^power over the full grid, exact per segment (Gauss)
    double integrate_weighted(int power) const;
};

/// Rotationally invariant, plane-symmetric, t-convex compact set
/// { ||z|| <= R, |t| <= u(||z||) }, described by a sampled radial profile.
class ProfileSet {
public:
    static ProfileSet from_samples(std::size_t n, std::vector<double> radii,
                                   std::vector<double> values);
    static ProfileSet from_function(std::size_t n, double R, std::size_t m,
                                    const std::function<double(double)>& fn);
    /// Closed CC ball of given radius, sampled on a cusp-graded grid.
    static ProfileSet ball(std::size_t n, double radius, std::size_t m = 256);

    std::size_t n() const { return n_; }
    double R() const { return grid_.back(); }
    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }

    /// Interpolated upper profile at radius r in [0, R].
    double u(double r) const;

    const MonotoneCubic& interp() const { return interp_; }

    static ProfileSet from_csv(std::istream& in);
    void to_csv(std::ostream& out) const;

private:
    ProfileSet() = default;
    std::size_t n_ = 1;
    std::vector<double> grid_, values_;
    MonotoneCubic interp_;
};

/// Haar volume: s_{2n-1} * int_0^R 2 u(r) r^{2n-1} dr.
double volume(const ProfileSet& s);

ProfileSet dilate_set(double lambda, const ProfileSet& s);

/// Surface area of the unit sphere in R^{2n}.
double sphere_area(std::size_t n);

}  // namespace heis
