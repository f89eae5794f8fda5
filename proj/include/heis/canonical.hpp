#pragma once

#include <functional>

#include "heis/point.hpp"
#include "heis/profile_set.hpp"
#include "heis/section_set.hpp"

namespace heis {

/// Profile of A_lambda: flat top lambda^2/(2 pi) over the cylinder
/// [0, lambda/pi], then the ball profile h_{lambda/2} out to lambda/2.
double l_profile(double lambda, double r);

/// A_lambda as a ProfileSet: cylinder of the maximal height joined with the
/// outer cap of B(0, lambda/2); the Euclidean convex hull of that ball.
ProfileSet build_A(double lambda, std::size_t grid_size = 256);

/// Diametral partner of a point on the outer sphere cap of A_lambda
/// (||z_p|| in (lambda/pi, lambda/2)): q = [e^{i(pi+2 phi)} z_p, -t_p].
Point antipode(const Point& p, double lambda);

struct AdmissibilityConstants {
    double kappa = 0.0;  // h'(0)/2 = 1/pi
    double rbar1 = 0.0;  // half the largest radius where the tangent-line bound holds
    double rhat = 0.0;   // pole-neighbourhood radius keeping the outer boundary enclosed
    double r_adm = 0.0;  // min(rbar_eff, 2 rhat/pi, kappa/4)
};

/// Perturbation-admissibility constants; scale-free, computed at lambda = 1.
AdmissibilityConstants admissibility(double lambda, std::size_t samples = 4096);

struct BumpSpec {
    enum class Kind { radial_cone, offcenter_cone, custom };
    Kind kind = Kind::radial_cone;
    std::vector<double> center;       // flat (x...,y...), zeros for radial
    double support_radius = 0.0;
    double lipschitz = 0.0;
    double amplitude = 0.0;
    std::function<double(std::span<const double>)> custom;  // Kind::custom only
};

/// Cone bump families with amplitude at 0.9x the Lipschitz budget.
BumpSpec radial_cone_bump(double lambda);
BumpSpec offcenter_cone_bump(double lambda);

double bump_eval(const BumpSpec& f, std::span<const double> z);

/// Throws listing the violated constraint when f is inadmissible for lambda.
void validate_bump(const BumpSpec& f, double lambda);

/// A_{lambda,f}: the central cylinder sheared vertically by f, glued to the
/// unchanged outer cap. Volume matches A_lambda exactly on the same grid.
SectionSet build_A_perturbed(double lambda, const BumpSpec& f, std::size_t grid_target = 4096);

}  // namespace heis
