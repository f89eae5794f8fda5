#include "heis/profile_set.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "heis/profile.hpp"

namespace heis {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// derivative at xs[i] of the Lagrange cubic through 4 consecutive nodes
double lagrange_slope(const std::vector<double>& xs, const std::vector<double>& ys,
                      std::size_t k0, std::size_t i) {
    double slope = 0.0;
    for (std::size_t j = k0; j < k0 + 4; ++j) {
        double term = ys[j];
        for (std::size_t l = k0; l < k0 + 4; ++l) {
            if (l == j) continue;
            term /= (xs[j] - xs[l]);
        }
        // derivative of prod_{l != j} (x - x_l) at x = xs[i]
        double prod_deriv = 0.0;
        for (std::size_t m = k0; m < k0 + 4; ++m) {
            if (m == j) continue;
            double p = 1.0;
            for (std::size_t l = k0; l < k0 + 4; ++l) {
                if (l == j || l == m) continue;
                p *= (xs[i] - xs[l]);
            }
            prod_deriv += p;
        }
        slope += term * prod_deriv;
    }
    return slope;
}

// 5-point Gauss-Legendre: exact to degree 9, covering cubic * r^{2n-1} for n <= 3
const std::array<double, 5> kGaussX = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                       0.5384693101056831, 0.9061798459386640};
const std::array<double, 5> kGaussW = {0.2369268850561891, 0.4786286704993665,
                                       0.5688888888888889, 0.4786286704993665,
                                       0.2369268850561891};

}  // namespace

MonotoneCubic MonotoneCubic::fit(const std::vector<double>& x, const std::vector<double>& y) {
    MonotoneCubic mc;
    mc.x = x;
    mc.y = y;
    const std::size_t m = x.size();
    mc.slope.assign(m, 0.0);
    if (m == 1) return mc;
    if (m < 4) {
        for (std::size_t i = 0; i < m; ++i) {  // secant slopes for tiny grids
            if (i == 0)
                mc.slope[i] = (y[1] - y[0]) / (x[1] - x[0]);
            else if (i == m - 1)
                mc.slope[i] = (y[m - 1] - y[m - 2]) / (x[m - 1] - x[m - 2]);
            else
                mc.slope[i] = (y[i + 1] - y[i - 1]) / (x[i + 1] - x[i - 1]);
        }
    } else {
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t k0 = i == 0 ? 0 : i - 1;
            k0 = std::min(k0, m - 4);
            mc.slope[i] = lagrange_slope(x, y, k0, i);
        }
    }
    // Fritsch-Carlson clamp: only ever shrinks slopes, so passes stay valid
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const double d = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
        if (d == 0.0) {
            mc.slope[i] = 0.0;
            mc.slope[i + 1] = 0.0;
            continue;
        }
        double a = mc.slope[i] / d, b = mc.slope[i + 1] / d;
        if (a < 0.0) {
            mc.slope[i] = 0.0;
            a = 0.0;
        }
        if (b < 0.0) {
            mc.slope[i + 1] = 0.0;
            b = 0.0;
        }
        const double r2 = a * a + b * b;
        if (r2 > 9.0) {
            const double tau = 3.0 / std::sqrt(r2);
            mc.slope[i] = tau * a * d;
            mc.slope[i + 1] = tau * b * d;
        }
    }
    return mc;
}

double MonotoneCubic::eval(double at) const {
    if (x.size() == 1) return y[0];
    const auto it = std::upper_bound(x.begin(), x.end(), at);
    std::size_t k = it == x.begin() ? 0 : static_cast<std::size_t>(it - x.begin()) - 1;
    k = std::min(k, x.size() - 2);
    const double hseg = x[k + 1] - x[k];
    const double s = (at - x[k]) / hseg;
    const double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * y[k] + (s3 - 2 * s2 + s) * hseg * slope[k] +
           (-2 * s3 + 3 * s2) * y[k + 1] + (s3 - s2) * hseg * slope[k + 1];
}

double MonotoneCubic::integrate_weighted(int power) const {
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
        const double a = x[k], b = x[k + 1], half = 0.5 * (b - a), mid = 0.5 * (a + b);
        double seg = 0.0;
        for (int gi = 0; gi < 5; ++gi) {
            const double r = mid + half * kGaussX[gi];
            seg += kGaussW[gi] * eval(r) * std::pow(r, power);
        }
        total += seg * half;
    }
    return total;
}

ProfileSet ProfileSet::from_samples(std::size_t n, std::vector<double> radii,
                                    std::vector<double> values) {
    if (n < 1) throw std::invalid_argument("ProfileSet: n must be >= 1");
    if (radii.empty() || radii.size() != values.size())
        throw std::invalid_argument("ProfileSet: grid/value size mismatch");
    if (radii.front() != 0.0) throw std::invalid_argument("ProfileSet: grid must start at r = 0");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!std::isfinite(radii[i]) || !std::isfinite(values[i]))
            throw std::invalid_argument("ProfileSet: non-finite sample");
        if (i > 0 && radii[i] <= radii[i - 1])
            throw std::invalid_argument("ProfileSet: radii must be strictly increasing");
        if (values[i] < 0.0) throw std::invalid_argument("ProfileSet: profile must be >= 0");
    }
    ProfileSet s;
    s.n_ = n;
    s.grid_ = std::move(radii);
    s.values_ = std::move(values);
    s.interp_ = MonotoneCubic::fit(s.grid_, s.values_);
    return s;
}

ProfileSet ProfileSet::from_function(std::size_t n, double R, std::size_t m,
                                     const std::function<double(double)>& fn) {
    if (!(R > 0.0) || m < 2) throw std::invalid_argument("ProfileSet: bad grid parameters");
    std::vector<double> radii(m + 1), values(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        radii[i] = R * static_cast<double>(i) / m;
        values[i] = std::max(0.0, fn(radii[i]));
    }
    radii.back() = R;
    return from_samples(n, std::move(radii), std::move(values));
}

ProfileSet ProfileSet::ball(std::size_t n, double radius, std::size_t m) {
    if (!(radius > 0.0)) throw std::invalid_argument("ProfileSet::ball: radius must be positive");
    // grid r = radius * sin(s) concentrates nodes at the cusp r = radius
    std::vector<double> radii(m + 1), values(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
        const double s = 0.5 * kPi * static_cast<double>(i) / m;
        radii[i] = i == m ? radius : radius * std::sin(s);
        values[i] = ball_profile(radius, radii[i]);
    }
    return from_samples(n, std::move(radii), std::move(values));
}

double ProfileSet::u(double r) const {
    if (r < 0.0 || r > R()) {
        if (r > -1e-12 && r < R() * (1.0 + 1e-12))
            r = std::clamp(r, 0.0, R());
        else
            throw std::domain_error("ProfileSet::u: radius outside [0, R]");
    }
    return std::max(0.0, interp_.eval(r));
}

double sphere_area(std::size_t n) {
    // area of S^{2n-1} in R^{2n}: 2 pi^n / (n-1)!
    double fact = 1.0;
    for (std::size_t k = 2; k < n; ++k) fact *= static_cast<double>(k);
    return 2.0 * std::pow(kPi, static_cast<double>(n)) / fact;
}

double volume(const ProfileSet& s) {
    if (s.grid().size() == 1) return 0.0;
    return sphere_area(s.n()) * 2.0 *
           s.interp().integrate_weighted(static_cast<int>(2 * s.n() - 1));
}

ProfileSet dilate_set(double lambda, const ProfileSet& s) {
    if (!(lambda > 0.0)) throw std::invalid_argument("dilate_set: lambda must be positive");
    std::vector<double> radii = s.grid(), values = s.values();
    for (double& r : radii) r *= lambda;
    for (double& v : values) v *= lambda * lambda;
    return ProfileSet::from_samples(s.n(), std::move(radii), std::move(values));
}

ProfileSet ProfileSet::from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("ProfileSet: empty CSV");
    if (line.rfind("r,u", 0) != 0) throw std::invalid_argument("ProfileSet: expected header r,u");
    std::vector<double> radii, values;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        double r, u;
        char comma;
        if (!(ls >> r >> comma >> u) || comma != ',')
            throw std::invalid_argument("ProfileSet: malformed CSV row '" + line + "'");
        radii.push_back(r);
        values.push_back(u);
    }
    return from_samples(1, std::move(radii), std::move(values));
}

void ProfileSet::to_csv(std::ostream& out) const {
    out << "r,u\n";
    char buf[80];
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", grid_[i], values_[i]);
        out << buf;
    }
}

}  // namespace heis
