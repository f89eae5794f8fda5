#include "heis/iso.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "heis/parallel.hpp"
#include "heis/profile.hpp"
#include "heis/roots.hpp"

namespace heis {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

static RatioReport make_ratio(double vol, double diam, std::size_t n, const SearchConfig& cfg) {
    if (!(diam > 0.0)) throw std::invalid_argument("iso_ratio: set has zero diameter");
    RatioReport r;
    r.volume = vol;
    r.diameter = diam;
    r.ratio = vol / std::pow(diam, 2.0 * static_cast<double>(n) + 2.0);
    r.n = n;
    r.grid_r = cfg.grid_r;
    r.grid_theta = cfg.grid_theta;
    r.tol = cfg.tol;
    return r;
}

RatioReport iso_ratio(const ProfileSet& s, const SearchConfig& cfg) {
    return make_ratio(volume(s), diameter(s, cfg).value, s.n(), cfg);
}

RatioReport iso_ratio(const SectionSet& s, const SearchConfig& cfg) {
    return make_ratio(volume(s), diameter(s, cfg).value, s.n, cfg);
}

CompareReport compare(const RatioReport& a, const RatioReport& b) {
    CompareReport c;
    c.first = a;
    c.second = b;
    c.difference = a.ratio - b.ratio;
    c.rel_margin = b.ratio != 0.0 ? c.difference / b.ratio : 0.0;
    return c;
}

namespace {

// Largest node value keeping the moved node within distance D of the sampled
// pair (r_j, sigma u_j) over all relative angles: the membership condition
// |s| <= D^2 h(||w||/D) is linear in the node value, so each angle yields a
// closed-form cap and only the minimum over angles is searched.
class NodeConstraint {
public:
    NodeConstraint(double D, std::size_t theta_grid) : D_(D), ntheta_(theta_grid) {}

    // cap for a pair against a fixed partner level t_q = sigma * u_j
    double pair_cap(double ri, double rj, double tq) const {
        return min_over_theta([&](double theta) {
            const double wn = wnorm(ri, rj, theta);
            return tq + 2.0 * ri * rj * std::sin(theta) + prof(wn);
        });
    }

    // cap when the partner is the moved node's own lower sheet (both move)
    double self_cap(double ri) const {
        return min_over_theta([&](double theta) {
            const double wn = wnorm(ri, ri, theta);
            return ri * ri * std::sin(theta) + 0.5 * prof(wn);
        });
    }

private:
    double D_;
    std::size_t ntheta_;

    double wnorm(double ri, double rj, double theta) const {
        const double w2 = ri * ri + rj * rj - 2.0 * ri * rj * std::cos(theta);
        return std::sqrt(std::max(0.0, w2));
    }

    double prof(double wn) const {
        return D_ * D_ * h_fast(std::min(wn / D_, 1.0));
    }

    template <class F>
    double min_over_theta(F&& fn) const {
        double best = 1e300, best_theta = 0.0;
        for (std::size_t k = 0; k < ntheta_; ++k) {
            const double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(ntheta_);
            const double v = fn(theta);
            if (v < best) {
                best = v;
                best_theta = theta;
            }
        }
        const double dtheta = 2.0 * kPi / static_cast<double>(ntheta_);
        const double th_star = golden_max([&](double th) { return -fn(th); },
                                          best_theta - dtheta, best_theta + dtheta, 1e-12);
        return std::min(best, fn(th_star));
    }
};

}  // namespace

std::tuple<ProfileSet, RatioReport, OptimizerTrace> optimize_profile(const OptimizerConfig& cfg,
                                                                     const ProfileSet* start) {
    if (cfg.m < 8 || cfg.max_sweeps < 1 || !(cfg.diameter_budget > 0.0) || !(cfg.R > 0.0))
        throw std::invalid_argument("optimize_profile: bad configuration");
    const double D = cfg.diameter_budget;

    ProfileSet init = start ? *start : ProfileSet::ball(1, cfg.R, cfg.m);
    if (start && start->n() != 1)
        throw std::invalid_argument("optimize_profile: profile search implemented for n = 1");
    std::vector<double> nodes = init.grid();
    std::vector<double> u = init.values();
    const std::size_t m = nodes.size();

    OptimizerTrace trace;
    const NodeConstraint constraint(D, cfg.theta_grid);

    for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
        double max_rise = 0.0;
        // outer nodes first: the cap region is the most constrained
        for (std::size_t rev = 0; rev < m; ++rev) {
            const std::size_t i = m - 1 - rev;
            std::vector<double> caps(m, 1e300);
            parallel_for(m, [&](std::size_t b, std::size_t e) {
                for (std::size_t j = b; j < e; ++j) {
                    double cap;
                    if (j == i) {
                        cap = constraint.self_cap(nodes[i]);
                    } else {
                        cap = std::min(constraint.pair_cap(nodes[i], nodes[j], u[j]),
                                       constraint.pair_cap(nodes[i], nodes[j], -u[j]));
                    }
                    caps[j] = cap;
                }
            });
            double bound = 1e300;
            for (double c : caps) bound = std::min(bound, c);
            bound = std::max(bound, 0.0);
            if (bound > u[i]) {
                max_rise = std::max(max_rise, bound - u[i]);
                u[i] = bound;
            }
        }
        trace.max_rise_per_sweep.push_back(max_rise);
        ProfileSet current = ProfileSet::from_samples(1, nodes, u);
        trace.volume_per_sweep.push_back(volume(current));
        trace.sweeps = sweep + 1;
        if (max_rise < cfg.step_tol) {
            trace.converged = true;
            break;
        }
    }

    ProfileSet result = ProfileSet::from_samples(1, std::move(nodes), std::move(u));
    RatioReport ratio = iso_ratio(result);
    return {std::move(result), std::move(ratio), std::move(trace)};
}

}  // namespace heis
