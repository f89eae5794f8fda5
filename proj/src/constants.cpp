#include "heis/constants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "heis/profile.hpp"
#include "heis/roots.hpp"

namespace heis {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_d_delta(double d, double delta) {
    if (!(d > 0.0)) throw std::invalid_argument("lemma constants: d must be positive");
    if (!(delta > 0.0)) throw std::invalid_argument("lemma constants: delta must be positive");
    if (delta > ball_profile(d, 2.0 * d / kPi))
        throw std::invalid_argument("lemma constants: delta above the profile maximum");
}

// sup of |h'| on [0, x_end] in the unit-ball variable; h' has a single
// interior extremum per monotone branch, so the endpoints, the inflection
// radius and a grid pin it down.
double sup_abs_hprime(double x_end) {
    static const CriticalPoint cp = critical_point();
    double best = std::abs(h_prime(0.0));
    if (cp.r_c < x_end) best = std::max(best, std::abs(h_prime(cp.r_c)));
    constexpr int kGrid = 256;
    for (int i = 1; i <= kGrid; ++i) {
        const double x = x_end * i / kGrid;
        if (x >= 1.0) break;
        best = std::max(best, std::abs(h_prime(x)));
    }
    return best;
}

}  // namespace

double rbar_fn(double d, double delta) {
    check_d_delta(d, delta);
    const double target = delta / (d * d);  // h(x) = target on [2/pi, 1]
    const double lo = 2.0 / kPi, hi = 1.0;
    double root;
    if (target >= h_fn(lo)) {
        root = lo;
    } else {
        root = bisect([target](double x) { return h_fn(x) - target; }, lo, hi, 1e-13);
    }
    // kept in (d/2, d) as required by the bicone lemma; never binds since
    // the decreasing branch starts at 2d/pi > d/2
    return std::max(root * d, 0.5 * d * (1.0 + 1e-9));
}

double cone_alpha(double d, double delta) {
    const double rbar = rbar_fn(d, delta);
    return d * sup_abs_hprime(rbar / d);
}

LemmaConstants lemma_constants(double C, double d, double delta) {
    if (!(C >= 0.0)) throw std::invalid_argument("lemma_constants: C must be >= 0");
    check_d_delta(d, delta);
    LemmaConstants lc;
    lc.C = C;
    lc.d = d;
    lc.delta = delta;
    lc.rbar = rbar_fn(d, delta);
    lc.alpha = d * sup_abs_hprime(lc.rbar / d);
    lc.M = d * sup_abs_hprime(0.5 * (d + lc.rbar) / d);
    lc.gamma = std::min(0.5 * (d - lc.rbar), delta / (2.0 * C + 2.0 * d + lc.M));
    lc.beta = lc.alpha + 2.0 * C;
    return lc;
}

bool bicone_contains(const Point& p1, const Point& p2, double r, const Point& q) {
    if (p1.n() != p2.n() || p1.n() != q.n())
        throw std::invalid_argument("bicone_contains: dimension mismatch");
    if (!(r > 0.0)) throw std::invalid_argument("bicone_contains: r must be positive");
    double zgap2 = 0.0;
    for (std::size_t j = 0; j < 2 * p1.n(); ++j) {
        const double dz = p1.coords()[j] - p2.coords()[j];
        zgap2 += dz * dz;
    }
    if (zgap2 > 1e-24) throw std::invalid_argument("bicone_contains: pair is not vertical");
    const double delta12 = 0.5 * (p2.t() - p1.t());
    if (!(delta12 > 0.0)) throw std::invalid_argument("bicone_contains: requires t_p2 > t_p1");

    double wd2 = 0.0;
    for (std::size_t j = 0; j < 2 * p1.n(); ++j) {
        const double dz = q.coords()[j] - p1.coords()[j];
        wd2 += dz * dz;
    }
    const double wd = std::sqrt(wd2);
    constexpr double band = 1e-12;
    if (wd > r + band) return false;
    const double mid = 0.5 * (p1.t() + p2.t());
    return std::abs(q.t() - mid) <= delta12 * (1.0 - std::min(wd, r) / r) + band;
}

}  // namespace heis
