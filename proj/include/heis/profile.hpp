#pragma once

namespace heis {

// Scalar functions describing the unit CC ball:
//   g(phi)   = (2 phi - sin 2 phi) / (2 phi^2),  g(0) = 0, on [0, pi]
//   rho(phi) = sin(phi) / phi,                   rho(0) = 1, on [0, pi]
//   h        = g o rho^{-1} on [0, 1], so that
//   closed unit ball = { ||z|| <= 1, |t| <= h(||z||) }.
// Near phi = 0 and phi = pi the direct formulas lose digits to cancellation;
// series expansions take over below kSeriesCut from either endpoint.

double g_fn(double phi);
double rho_fn(double phi);

/// Inverse of rho: [0,1] -> [0,pi], monotone decreasing.
double rho_inv(double r);

double h_fn(double r);
double h_prime(double r);   // -2 cos(phi)/phi at phi = rho_inv(r)
double h_second(double r);  // 2 (phi sin phi + cos phi) / (phi^2 rho'(phi)), r in (0,1)

struct CriticalPoint {
    double phi_c;  // root of phi sin phi + cos phi in (pi/2, pi)
    double r_c;    // rho(phi_c): inflection radius of h
};
CriticalPoint critical_point();

/// Profile of the ball of radius lambda: lambda^2 h(r/lambda), 0 <= r <= lambda.
double ball_profile(double lambda, double r);

// psi(phi) = g(phi)/rho(phi)^2, the vertical-to-horizontal shape ratio used by
// the distance inversion solver; strictly increasing on (0, pi).
double psi_fn(double phi);
double psi_prime(double phi);

/// Numerically checks strict monotonicity of psi on a grid of (0, pi).
bool psi_monotone_on_grid(int samples);

/// Fast tabulated h with closed-form Hermite slopes in the variable
/// xi = sqrt(1-r); accurate to ~1e-12, for use in hot search loops.
double h_fast(double r);

}  // namespace heis
