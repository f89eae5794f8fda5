#pragma once

#include <span>

#include "heis/point.hpp"

namespace heis {

enum class DistMethod {
    inversion,  // solve g(phi)/rho(phi)^2 = |s|/||w||^2, then d = ||w||/rho(phi)
    bisection,  // solve d^2 h(||w||/d) = |s| by ball nesting; independent oracle
};

/// CC distance. Reduces to w = z-part, s = t-part of p^{-1} q by left
/// invariance, then dispatches on the special cases ||w|| = 0 / s = 0.
double distance(const Point& p, const Point& q, DistMethod method = DistMethod::inversion);

/// Distance from the origin to a point with horizontal norm wnorm and
/// vertical coordinate s.
double distance_reduced(double wnorm, double s, DistMethod method = DistMethod::inversion);

struct GeodesicParam {
    std::vector<double> chi;  // flat (x...,y...), ||chi|| = distance to endpoint
    double phi;               // in [-pi, pi]
};

/// Endpoint [rho(|phi|) chi, sign(phi) g(|phi|) ||chi||^2] of the unit-speed
/// geodesic from the origin; lies at distance ||chi||.
Point geodesic_point(const GeodesicParam& gp);

bool ball_contains(const Point& center, double radius, const Point& p, bool closed = true);

/// t-envelope of the closed ball B(p, dbar) over the horizontal point z:
/// sign * h_dbar(||z - z_p||) + t_p + 2 Im z_p conj(z).
double ball_envelope(const Point& p, double dbar, std::span<const double> z, int sign);

}  // namespace heis
