#include "heis/canonical.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "heis/metric.hpp"
#include "heis/profile.hpp"
#include "heis/roots.hpp"

namespace heis {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double l_profile(double lambda, double r) {
    if (!(lambda > 0.0)) throw std::invalid_argument("l_profile: lambda must be positive");
    if (!(r >= 0.0 && r <= 0.5 * lambda * (1.0 + 1e-12)))
        throw std::domain_error("l_profile: r outside [0, lambda/2]");
    if (r <= lambda / kPi) return lambda * lambda / (2.0 * kPi);
    return ball_profile(0.5 * lambda, std::min(r, 0.5 * lambda));
}

ProfileSet build_A(double lambda, std::size_t grid_size) {
    if (!(lambda > 0.0)) throw std::invalid_argument("build_A: lambda must be positive");
    if (grid_size < 8) throw std::invalid_argument("build_A: grid too small");
    const double rj = lambda / kPi, R = 0.5 * lambda;
    const auto m_in = static_cast<std::size_t>(std::max<double>(4, std::round(grid_size * rj / R)));
    const std::size_t m_out = grid_size - std::min(grid_size - 4, m_in);

    std::vector<double> radii, values;
    for (std::size_t i = 0; i < m_in; ++i) {
        radii.push_back(rj * static_cast<double>(i) / static_cast<double>(m_in));
        values.push_back(lambda * lambda / (2.0 * kPi));
    }
    // junction node lambda/pi lands exactly; cap nodes graded into the cusp
    for (std::size_t i = 0; i <= m_out; ++i) {
        const double srel = std::sin(0.5 * kPi * static_cast<double>(i) / static_cast<double>(m_out));
        const double r = i == m_out ? R : rj + (R - rj) * srel;
        radii.push_back(r);
        values.push_back(l_profile(lambda, r));
    }
    return ProfileSet::from_samples(1, std::move(radii), std::move(values));
}

Point antipode(const Point& p, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("antipode: lambda must be positive");
    const double rz = p.znorm();
    // the equator ||z_p|| = lambda/2 is the phi = 0 case and is admitted
    if (!(rz > lambda / kPi && rz <= 0.5 * lambda * (1.0 + 1e-12)))
        throw std::domain_error("antipode: ||z_p|| outside (lambda/pi, lambda/2]");
    const double half = 0.5 * lambda;
    // recover phi from t_p = g(phi) (lambda/2)^2, sign from t_p
    const double g_target = std::abs(p.t()) / (half * half);
    double aphi = 0.0;
    if (g_target > 0.0) {
        if (g_target > 2.0 / kPi + 1e-9)
            throw std::domain_error("antipode: p not on the sphere cap");
        aphi = bisect([g_target](double q) { return g_fn(q) - g_target; }, 0.0, 0.5 * kPi, 1e-13);
    }
    if (std::abs(rho_fn(aphi) * half - rz) > 1e-6 * lambda)
        throw std::domain_error("antipode: p not on the sphere cap");
    const double phi = p.t() >= 0.0 ? aphi : -aphi;

    const double ang = kPi + 2.0 * phi;
    const double c = std::cos(ang), s = std::sin(ang);
    Point q(p.n());
    for (std::size_t j = 0; j < p.n(); ++j) {
        q.x(j) = c * p.x(j) - s * p.y(j);
        q.y(j) = s * p.x(j) + c * p.y(j);
    }
    q.t() = -p.t();
    return q;
}

namespace {

AdmissibilityConstants compute_admissibility(std::size_t samples) {
    AdmissibilityConstants ac;
    ac.kappa = h_prime(0.0) / 2.0;  // = 1/pi

    // largest rho* <= 1 with |h(r) - h(0) - h'(0) r| <= (kappa/2) r on (0, rho*]
    const auto dev = [&ac](double r) {
        return std::abs(h_fn(r) - h_fn(0.0) - h_prime(0.0) * r) - 0.5 * ac.kappa * r;
    };
    double rv = 1.0;
    constexpr int kScan = 20000;
    for (int i = 1; i <= kScan; ++i) {
        const double r = static_cast<double>(i) / kScan;
        if (dev(r) > 0.0) {
            rv = r;
            break;
        }
    }
    const double rho_star = rv >= 1.0 ? 1.0 : bisect(dev, rv - 1.0 / kScan, rv, 1e-12);
    ac.rbar1 = 0.5 * rho_star;

    // the outer-boundary dichotomy needs the threshold below 1/pi
    const double rbar_eff = std::min(ac.rbar1, (1.0 - 1e-9) / kPi);

    // margin of K = bd A_1 with ||z|| >= rbar_eff inside both unit balls
    // around the poles p0 = [0, 1/(2 pi)] and p0^{-1}
    const Point p0{0.0, 0.0, 1.0 / (2.0 * kPi)};
    const Point p0i{0.0, 0.0, -1.0 / (2.0 * kPi)};
    const auto l1 = [](double r) { return l_profile(1.0, r); };
    double margin = 1e300;
    for (std::size_t i = 0; i <= samples; ++i) {
        const double r =
            rbar_eff + (0.5 - rbar_eff) * static_cast<double>(i) / static_cast<double>(samples);
        for (int sgn : {1, -1}) {
            const Point q{r, 0.0, sgn * l1(std::min(r, 0.5))};
            const double m = 1.0 - std::max(distance(p0, q), distance(p0i, q));
            margin = std::min(margin, m);
        }
    }
    if (!(margin > 0.0)) throw std::runtime_error("admissibility: no pole margin found");
    ac.rhat = 0.95 * margin;  // sampled margin, shrunk below the true enclosure radius

    ac.r_adm = std::min({rbar_eff, 2.0 * ac.rhat / kPi, ac.kappa / 4.0});
    return ac;
}

}  // namespace

AdmissibilityConstants admissibility(double lambda, std::size_t samples) {
    if (!(lambda > 0.0)) throw std::invalid_argument("admissibility: lambda must be positive");
    static std::mutex mu;
    static std::size_t cached_samples = 0;
    static AdmissibilityConstants cached;
    std::lock_guard<std::mutex> lock(mu);
    if (cached_samples != samples) {
        cached = compute_admissibility(samples);
        cached_samples = samples;
    }
    return cached;  // dimensionless: the same constants serve every lambda
}

double bump_eval(const BumpSpec& f, std::span<const double> z) {
    switch (f.kind) {
        case BumpSpec::Kind::custom:
            return f.custom ? f.custom(z) : 0.0;
        case BumpSpec::Kind::radial_cone:
        case BumpSpec::Kind::offcenter_cone: {
            double d2 = 0.0;
            for (std::size_t c = 0; c < z.size(); ++c) {
                const double off = f.center.empty() ? 0.0 : f.center[c];
                const double dd = z[c] - off;
                d2 += dd * dd;
            }
            const double d = std::sqrt(d2);
            return f.amplitude * std::max(0.0, 1.0 - d / f.support_radius);
        }
    }
    return 0.0;
}

void validate_bump(const BumpSpec& f, double lambda) {
    const AdmissibilityConstants ac = admissibility(lambda);
    const double budget_lip = kPi * lambda * ac.r_adm / 4.0;
    const double support_bound = lambda * ac.r_adm;
    double center_norm = 0.0;
    for (double c : f.center) center_norm += c * c;
    center_norm = std::sqrt(center_norm);

    if (!(f.support_radius > 0.0))
        throw std::invalid_argument("bump: support_radius must be positive");
    if (!(center_norm + f.support_radius < support_bound))
        throw std::invalid_argument(
            "bump: support exceeds the admissible disc ||z|| < lambda*r_adm (" +
            std::to_string(center_norm + f.support_radius) + " >= " +
            std::to_string(support_bound) + ")");
    if (!(f.lipschitz < budget_lip))
        throw std::invalid_argument("bump: Lipschitz constant " + std::to_string(f.lipschitz) +
                                    " >= budget pi*lambda*r_adm/4 = " + std::to_string(budget_lip));
    if (!(std::abs(f.amplitude) <= f.lipschitz * f.support_radius * (1.0 + 1e-12)))
        throw std::invalid_argument("bump: |amplitude| exceeds lipschitz * support_radius");
}

BumpSpec radial_cone_bump(double lambda) {
    const AdmissibilityConstants ac = admissibility(lambda);
    BumpSpec f;
    f.kind = BumpSpec::Kind::radial_cone;
    f.center = {0.0, 0.0};
    f.support_radius = 0.5 * lambda * ac.r_adm;
    f.lipschitz = 0.9 * kPi * lambda * ac.r_adm / 4.0;
    f.amplitude = f.lipschitz * f.support_radius;
    return f;
}

BumpSpec offcenter_cone_bump(double lambda) {
    const AdmissibilityConstants ac = admissibility(lambda);
    BumpSpec f;
    f.kind = BumpSpec::Kind::offcenter_cone;
    f.center = {0.4 * lambda * ac.r_adm, 0.0};
    f.support_radius = 0.35 * lambda * ac.r_adm;
    f.lipschitz = 0.9 * kPi * lambda * ac.r_adm / 4.0;
    f.amplitude = f.lipschitz * f.support_radius;
    return f;
}

SectionSet build_A_perturbed(double lambda, const BumpSpec& f, std::size_t grid_target) {
    if (!(lambda > 0.0)) throw std::invalid_argument("build_A_perturbed: lambda must be positive");
    validate_bump(f, lambda);
    SectionSet out = SectionSet::polar_grid(0.5 * lambda, grid_target);
    const double htop = lambda * lambda / (2.0 * kPi);
    for (std::size_t i = 0; i < out.sample_count(); ++i) {
        const double r = out.znorm(i);
        if (r <= lambda / kPi) {
            const double shift = bump_eval(f, out.zsamples[i]);
            out.sections[i] = {Interval{shift - htop, shift + htop}};
        } else {
            const double u = ball_profile(0.5 * lambda, std::min(r, 0.5 * lambda));
            out.sections[i] = {Interval{-u, u}};
        }
    }
    return out;
}

}  // namespace heis
