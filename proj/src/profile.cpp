#include "heis/profile.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "heis/roots.hpp"

namespace heis {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
// Below this distance from phi = 0 the direct formula for g loses digits to
// the cancellation 2*phi - sin(2*phi); the series is exact to ~1e-19 there.
constexpr double kSeriesCut = 0.05;

void check_phi(double phi) {
    if (!(phi >= 0.0 && phi <= kPi + 1e-12))
        throw std::domain_error("phi outside [0, pi]");
}

double g_series(double phi) {
    const double p2 = phi * phi;
    // (2 phi - sin 2 phi) / (2 phi^2), odd series
    return phi * (2.0 / 3.0 +
                  p2 * (-2.0 / 15.0 +
                        p2 * (4.0 / 315.0 + p2 * (-2.0 / 2835.0 + p2 * (4.0 / 155925.0)))));
}

}  // namespace

double g_fn(double phi) {
    check_phi(phi);
    if (phi < kSeriesCut) return g_series(phi);
    if (phi > kPi) phi = kPi;
    return (2.0 * phi - std::sin(2.0 * phi)) / (2.0 * phi * phi);
}

double rho_fn(double phi) {
    check_phi(phi);
    if (phi == 0.0) return 1.0;
    if (phi > kPi) phi = kPi;
    return std::sin(phi) / phi;
}

double rho_inv(double r) {
    if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("rho_inv: r outside [0, 1]");
    if (r == 0.0) return kPi;
    if (r == 1.0) return 0.0;
    // rho is decreasing, so rho(phi) - r crosses from + to - on [0, pi]
    return bisect_newton([r](double p) { return rho_fn(p) - r; },
                         [](double p) {
                             if (p == 0.0) return 0.0;
                             return (p * std::cos(p) - std::sin(p)) / (p * p);
                         },
                         0.0, kPi);
}

double h_fn(double r) {
    if (!(r >= 0.0 && r <= 1.0)) throw std::domain_error("h_fn: r outside [0, 1]");
    return g_fn(rho_inv(r));
}

double h_prime(double r) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("h_prime: r outside [0, 1)");
    const double phi = rho_inv(r);
    return -2.0 * std::cos(phi) / phi;
}

double h_second(double r) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("h_second: r outside (0, 1)");
    const double phi = rho_inv(r);
    const double rho_p = (phi * std::cos(phi) - std::sin(phi)) / (phi * phi);
    return 2.0 * (phi * std::sin(phi) + std::cos(phi)) / (phi * phi * rho_p);
}

CriticalPoint critical_point() {
    // phi sin phi + cos phi decreases from pi/2 to -1 on [pi/2, pi]
    const double phi_c = bisect_newton(
        [](double p) { return p * std::sin(p) + std::cos(p); },
        [](double p) { return p * std::cos(p); }, 0.5 * kPi, kPi, 1e-15);
    return {phi_c, rho_fn(phi_c)};
}

double ball_profile(double lambda, double r) {
    if (!(lambda > 0.0)) throw std::domain_error("ball_profile: lambda must be positive");
    if (!(r >= 0.0 && r <= lambda * (1.0 + 1e-12)))
        throw std::domain_error("ball_profile: r outside [0, lambda]");
    return lambda * lambda * h_fn(std::min(r / lambda, 1.0));
}

double psi_fn(double phi) {
    check_phi(phi);
    if (phi == 0.0) return 0.0;
    const double rho = rho_fn(phi);
    return g_fn(phi) / (rho * rho);
}

double psi_prime(double phi) {
    check_phi(phi);
    if (phi == 0.0) return 2.0 / 3.0;
    const double s = std::sin(phi);
    return 2.0 - 2.0 * phi * phi * g_fn(phi) * std::cos(phi) / (s * s * s);
}

bool psi_monotone_on_grid(int samples) {
    double prev = 0.0;
    for (int i = 1; i < samples; ++i) {
        const double phi = kPi * static_cast<double>(i) / samples;
        const double v = psi_fn(phi);
        if (!(v > prev)) return false;
        prev = v;
    }
    return true;
}

namespace {

// h tabulated against xi = sqrt(1 - r), where it is smooth up to the cusp;
// cubic Hermite with closed-form slopes dH/dxi = 4 xi cos(phi)/phi.
struct ProfileTable {
    static constexpr int N = 4096;
    std::array<double, N + 1> val{}, slope{};

    ProfileTable() {
        for (int k = 0; k <= N; ++k) {
            const double xi = static_cast<double>(k) / N;
            const double r = 1.0 - xi * xi;
            val[k] = h_fn(r);
            if (k == 0) {
                slope[k] = 4.0 / std::sqrt(6.0);  // limit of 4 xi cos(phi)/phi at xi = 0
            } else {
                const double phi = rho_inv(r);
                slope[k] = 4.0 * xi * std::cos(phi) / phi;
            }
        }
    }

    double eval(double r) const {
        const double xi = std::sqrt(std::max(0.0, 1.0 - r));
        const double u = xi * N;
        int k = static_cast<int>(u);
        if (k >= N) k = N - 1;
        const double dx = 1.0 / N;
        const double s = u - k;  // in [0,1]
        const double y0 = val[k], y1 = val[k + 1];
        const double m0 = slope[k] * dx, m1 = slope[k + 1] * dx;
        const double s2 = s * s, s3 = s2 * s;
        return (2 * s3 - 3 * s2 + 1) * y0 + (s3 - 2 * s2 + s) * m0 +
               (-2 * s3 + 3 * s2) * y1 + (s3 - s2) * m1;
    }
};

}  // namespace

double h_fast(double r) {
    static const ProfileTable table;
    if (!(r >= 0.0)) throw std::domain_error("h_fast: r outside [0, 1]");
    if (r >= 1.0) {
        if (r > 1.0 + 1e-12) throw std::domain_error("h_fast: r outside [0, 1]");
        return 0.0;
    }
    return table.eval(r);
}

}  // namespace heis
