#include "heis/metric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "heis/profile.hpp"
#include "heis/roots.hpp"

namespace heis {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Outside these shape ratios |s|/||w||^2 the solvers switch to the asymptotic
// forms shared by both methods (relative error < 1e-12 at the cutovers).
constexpr double kShapeHi = 1e12;
constexpr double kShapeLo = 1e-12;

// Monotone table of psi over a uniform phi grid, used to seed the Newton
// iteration on g(phi)/rho(phi)^2 = target.
struct PsiTable {
    static constexpr int N = 2048;
    std::array<double, N + 1> val{};
    PsiTable() {
        for (int k = 0; k <= N; ++k) val[k] = psi_fn(kPi * k / N);
    }
};

// psi and psi' sharing one sincos; the numerator 2 phi - sin 2 phi switches
// to its series below the cancellation cutoff
inline void psi_pair(double phi, double& psi, double& dpsi) {
    const double sn = std::sin(phi), cs = std::cos(phi);
    double num;
    if (phi < 0.05) {
        const double p2 = phi * phi;
        num = phi * p2 *
              (4.0 / 3.0 + p2 * (-4.0 / 15.0 + p2 * (8.0 / 315.0 - p2 * (4.0 / 2835.0))));
    } else {
        num = 2.0 * phi - 2.0 * sn * cs;
    }
    const double s2 = sn * sn;
    psi = num / (2.0 * s2);
    dpsi = 2.0 - num * cs / (s2 * sn);
}

double solve_inversion(double wn, double s) {
    const double target = s / (wn * wn);
    static const PsiTable table;
    const auto it = std::upper_bound(table.val.begin(), table.val.end(), target);
    int hi_idx = static_cast<int>(it - table.val.begin());
    hi_idx = std::clamp(hi_idx, 1, PsiTable::N);
    double lo = kPi * (hi_idx - 1) / PsiTable::N;
    double hi = kPi * hi_idx / PsiTable::N;

    // seed: asymptotic inverses near the endpoints, value interpolation else
    double phi;
    if (target < 0.03) {
        const double t0 = 1.5 * target;
        phi = t0 * (1.0 - (2.0 / 15.0) * t0 * t0);
    } else if (target > 1.0e3) {
        phi = kPi - std::sqrt(kPi / target);
    } else {
        const double flo = table.val[hi_idx - 1], fhi = table.val[hi_idx];
        phi = fhi > flo ? lo + (hi - lo) * (target - flo) / (fhi - flo) : 0.5 * (lo + hi);
    }
    phi = std::clamp(phi, lo, hi);

    bool converged = false;
    for (int iter = 0; iter < 30; ++iter) {
        double psi, dpsi;
        psi_pair(phi, psi, dpsi);
        if (psi > target)
            hi = phi;
        else
            lo = phi;
        const double step = (psi - target) / dpsi;
        double next = phi - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // safeguard into bracket
        if (std::abs(next - phi) < 1e-15 * kPi) {
            phi = next;
            converged = true;
            break;
        }
        phi = next;
    }
    if (!converged) {
        // rare stall: restart with plain bisection on the full range
        phi = bisect([target](double p) { return psi_fn(p) - target; }, 0.0, kPi, 1e-14);
    }
    const double d = wn / rho_fn(phi);
    if (!std::isfinite(d))
        throw std::runtime_error("distance: inversion solver did not converge, residual " +
                                 std::to_string(psi_fn(phi) - target));
    return d;
}

double solve_bisection(double wn, double s) {
    // unique d >= wn with d^2 h(wn/d) = s, by strict nesting of ball profiles
    const auto gap = [wn, s](double d) { return d * d * h_fn(std::min(1.0, wn / d)) - s; };
    double hi = std::max(wn * (1.0 + 1e-9), std::sqrt(kPi * s));
    int guard = 0;
    while (gap(hi) <= 0.0) {
        hi *= 1.25;
        if (++guard > 300) throw std::runtime_error("distance: bisection bracket not found");
    }
    // the bracket width, not |gap|, measures convergence here: near the cusp
    // r -> 1 the profile has unbounded slope and |gap| stays O(slope * width)
    const double d = bisect(gap, wn, hi, 1e-14 * hi, 240);
    if (!std::isfinite(d))
        throw std::runtime_error("distance: profile solver did not converge, residual " +
                                 std::to_string(gap(hi)));
    return d;
}

}  // namespace

double distance_reduced(double wnorm, double s, DistMethod method) {
    if (!(std::isfinite(wnorm) && std::isfinite(s)) || wnorm < 0.0)
        throw std::invalid_argument("distance: non-finite input");
    s = std::abs(s);
    if (s == 0.0) return wnorm;
    if (wnorm == 0.0) return std::sqrt(kPi * s);
    const double shape = s / (wnorm * wnorm);
    if (shape > kShapeHi) return std::sqrt(kPi * s) - wnorm;  // near-vertical expansion
    if (shape < kShapeLo) {
        const double phi = 1.5 * shape;  // psi(phi) ~ (2/3) phi
        return wnorm * (1.0 + phi * phi / 6.0);
    }
    return method == DistMethod::inversion ? solve_inversion(wnorm, s)
                                           : solve_bisection(wnorm, s);
}

double distance(const Point& p, const Point& q, DistMethod method) {
    if (!p.finite() || !q.finite()) throw std::invalid_argument("distance: non-finite input");
    const Point w = mul(inv(p), q);
    return distance_reduced(w.znorm(), w.t(), method);
}

Point geodesic_point(const GeodesicParam& gp) {
    if (!(std::abs(gp.phi) <= kPi + 1e-12)) throw std::domain_error("geodesic_point: |phi| > pi");
    if (gp.chi.size() % 2 != 0) throw std::invalid_argument("geodesic_point: chi must be (x...,y...)");
    const std::size_t n = gp.chi.size() / 2;
    const double aphi = std::min(std::abs(gp.phi), kPi);
    const double scale = rho_fn(aphi);
    double norm2 = 0.0;
    Point p(n);
    for (std::size_t j = 0; j < 2 * n; ++j) norm2 += gp.chi[j] * gp.chi[j];
    for (std::size_t j = 0; j < n; ++j) {
        p.x(j) = scale * gp.chi[j];
        p.y(j) = scale * gp.chi[n + j];
    }
    p.t() = (gp.phi < 0.0 ? -1.0 : 1.0) * g_fn(aphi) * norm2;
    return p;
}

bool ball_contains(const Point& center, double radius, const Point& p, bool closed) {
    if (!(radius > 0.0)) throw std::invalid_argument("ball_contains: radius must be positive");
    constexpr double band = 1e-12;
    const Point w = mul(inv(center), p);
    const double wn = w.znorm(), s = std::abs(w.t());
    if (closed) {
        if (wn > radius + band) return false;
        return s <= ball_profile(radius, std::min(wn, radius)) + band;
    }
    if (wn >= radius - band) return false;
    return s < ball_profile(radius, wn) - band;
}

double ball_envelope(const Point& p, double dbar, std::span<const double> z, int sign) {
    if (!(dbar > 0.0)) throw std::invalid_argument("ball_envelope: dbar must be positive");
    if (z.size() != 2 * p.n()) throw std::invalid_argument("ball_envelope: dimension mismatch");
    double off2 = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
        const double d = z[j] - p.coords()[j];
        off2 += d * d;
    }
    const double off = std::sqrt(off2);
    if (off > dbar * (1.0 + 1e-12))
        throw std::domain_error("ball_envelope: z outside the projected ball");
    const double sgn = sign >= 0 ? 1.0 : -1.0;
    return sgn * ball_profile(dbar, std::min(off, dbar)) + p.t() +
           2.0 * im_z_zbar(std::span<const double>(p.coords().data(), 2 * p.n()), z);
}

}  // namespace heis
