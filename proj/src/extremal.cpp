#include "heis/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "heis/metric.hpp"
#include "heis/parallel.hpp"
#include "heis/roots.hpp"

namespace heis {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Pair reduction for rotationally invariant profile bodies: with p rotated to
// the real axis, a pair is determined by (r_p, r_q, sides, c = mu e^{i
// theta}) where c is the normalized inner product <z_p, z_q>/(r_p r_q). For
// n = 1 only |c| = 1 is attainable.
struct PairGeometry {
    static double reduced(double rp, double tp, double rq, double tq, double theta, double mu) {
        const double wn2 = rp * rp + rq * rq - 2.0 * rp * rq * mu * std::cos(theta);
        const double sv = tq - tp + 2.0 * rp * rq * mu * std::sin(theta);
        return distance_reduced(std::sqrt(std::max(0.0, wn2)), sv);
    }

    // embeds the reduced coordinates back into H^n
    static Point embed_p(std::size_t n, double rp, double tp) {
        Point p(n);
        p.x(0) = rp;
        p.t() = tp;
        return p;
    }
    static Point embed_q(std::size_t n, double rq, double tq, double theta, double mu) {
        Point q(n);
        q.x(0) = rq * mu * std::cos(theta);
        q.y(0) = rq * mu * std::sin(theta);
        if (n > 1) q.x(1) = rq * std::sqrt(std::max(0.0, 1.0 - mu * mu));
        q.t() = tq;
        return q;
    }
};

struct Candidate {
    double value = -1.0;
    double rp = 0.0, rq = 0.0, theta = 0.0, mu = 1.0;
    int sp = 1, sq = 1;
};

struct ObjectiveCounters {
    std::size_t evals = 0;
    int rounds = 0;
};

// golden-section polish of one candidate, cycling through coordinates with a
// shrinking trust window
template <class EvalFn>
Candidate refine_candidate(const ProfileSet& s, Candidate c, const SearchConfig& cfg,
                           double theta_max, bool vary_rp, EvalFn&& eval,
                           ObjectiveCounters& ctr) {
    const double R = s.R();
    double wr = std::max(R / static_cast<double>(cfg.grid_r), 1e-6);
    double wt = theta_max / static_cast<double>(cfg.grid_theta);
    double wm = 0.25;
    for (int round = 0; round < cfg.refine_rounds; ++round) {
        const double before = c.value;
        if (vary_rp && R > 0.0) {
            const double lo = std::max(0.0, c.rp - wr), hi = std::min(R, c.rp + wr);
            c.rp = golden_max([&](double v) { ++ctr.evals; return eval(v, c.rq, c.theta, c.mu, c.sp, c.sq); },
                              lo, hi, cfg.tol);
        }
        if (R > 0.0) {
            const double lo = std::max(0.0, c.rq - wr), hi = std::min(R, c.rq + wr);
            c.rq = golden_max([&](double v) { ++ctr.evals; return eval(c.rp, v, c.theta, c.mu, c.sp, c.sq); },
                              lo, hi, cfg.tol);
        }
        {
            const double lo = std::max(0.0, c.theta - wt), hi = std::min(theta_max, c.theta + wt);
            c.theta = golden_max([&](double v) { ++ctr.evals; return eval(c.rp, c.rq, v, c.mu, c.sp, c.sq); },
                                 lo, hi, cfg.tol);
        }
        if (s.n() > 1) {
            const double lo = std::max(0.0, c.mu - wm), hi = std::min(1.0, c.mu + wm);
            c.mu = golden_max([&](double v) { ++ctr.evals; return eval(c.rp, c.rq, c.theta, v, c.sp, c.sq); },
                              lo, hi, cfg.tol);
            wm *= 0.6;
        }
        c.value = eval(c.rp, c.rq, c.theta, c.mu, c.sp, c.sq);
        ++ctr.evals;
        ctr.rounds = std::max(ctr.rounds, round + 1);
        wr *= 0.6;
        wt *= 0.6;
        if (c.value - before < cfg.tol && round >= 2) break;
    }
    return c;
}

std::vector<double> radial_grid(const ProfileSet& s, std::size_t count) {
    std::vector<double> rgrid;
    if (s.R() == 0.0) {
        rgrid.push_back(0.0);
        return rgrid;
    }
    rgrid.reserve(count + 1);
    for (std::size_t i = 0; i <= count; ++i)
        rgrid.push_back(s.R() * static_cast<double>(i) / static_cast<double>(count));
    return rgrid;
}

}  // namespace

DiameterReport diameter(const ProfileSet& s, const SearchConfig& cfg) {
    const auto rgrid = radial_grid(s, cfg.grid_r);
    std::vector<double> ugrid(rgrid.size());
    for (std::size_t i = 0; i < rgrid.size(); ++i) ugrid[i] = s.u(rgrid[i]);

    const std::size_t ntheta = cfg.grid_theta;
    std::vector<double> mus = s.n() == 1 ? std::vector<double>{1.0} : [&] {
        std::vector<double> v(cfg.grid_mu + 1);
        for (std::size_t i = 0; i <= cfg.grid_mu; ++i)
            v[i] = static_cast<double>(i) / static_cast<double>(cfg.grid_mu);
        return v;
    }();

    const auto eval = [&s](double rp, double rq, double theta, double mu, int sp, int sq) {
        return PairGeometry::reduced(rp, sp * s.u(rp), rq, sq * s.u(rq), theta, mu);
    };

    // coarse grid scan, one best candidate per r_p row (parallel, deterministic)
    std::vector<Candidate> row_best(rgrid.size());
    std::vector<std::size_t> row_evals(rgrid.size(), 0);
    parallel_for(rgrid.size(), [&](std::size_t b, std::size_t e) {
        for (std::size_t ip = b; ip < e; ++ip) {
            Candidate best;
            std::size_t evals = 0;
            for (std::size_t iq = 0; iq < rgrid.size(); ++iq)
                for (std::size_t it = 0; it <= ntheta; ++it) {
                    const double theta = kPi * static_cast<double>(it) / static_cast<double>(ntheta);
                    for (double mu : mus)
                        for (int sp : {1, -1})
                            for (int sq : {1, -1}) {
                                const double v = PairGeometry::reduced(
                                    rgrid[ip], sp * ugrid[ip], rgrid[iq], sq * ugrid[iq], theta, mu);
                                ++evals;
                                if (v > best.value) {
                                    best = {v, rgrid[ip], rgrid[iq], theta, mu, sp, sq};
                                }
                            }
                }
            row_best[ip] = best;
            row_evals[ip] = evals;
        }
    });

    ObjectiveCounters ctr;
    for (std::size_t v : row_evals) ctr.evals += v;

    std::vector<std::size_t> order(rgrid.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return row_best[a].value > row_best[b].value; });

    Candidate best;
    const int starts = std::min<int>(cfg.refine_starts, static_cast<int>(order.size()));
    for (int k = 0; k < starts; ++k) {
        Candidate c = refine_candidate(s, row_best[order[k]], cfg, kPi, true, eval, ctr);
        if (c.value > best.value) best = c;
    }

    DiameterReport rep;
    rep.witness_p = PairGeometry::embed_p(s.n(), best.rp, best.sp * s.u(best.rp));
    rep.witness_q = PairGeometry::embed_q(s.n(), best.rq, best.sq * s.u(best.rq), best.theta, best.mu);
    const double dw = distance(rep.witness_p, rep.witness_q);
    rep.value = std::max(best.value, dw);
    rep.lower_witness_gap = rep.value - dw;
    rep.iterations = ctr.evals;
    rep.refinement_level = ctr.rounds;
    return rep;
}

namespace {

struct EndpointList {
    std::vector<const std::vector<double>*> z;
    std::vector<double> t;

    explicit EndpointList(const SectionSet& s) {
        for (std::size_t i = 0; i < s.sample_count(); ++i)
            for (const Interval& iv : s.sections[i]) {
                z.push_back(&s.zsamples[i]);
                t.push_back(iv.lo);
                if (iv.hi != iv.lo) {
                    z.push_back(&s.zsamples[i]);
                    t.push_back(iv.hi);
                }
            }
    }

    std::size_t size() const { return t.size(); }

    double dist(std::size_t i, std::size_t j) const {
        const auto& zi = *z[i];
        const auto& zj = *z[j];
        double wn2 = 0.0;
        for (std::size_t c = 0; c < zi.size(); ++c) {
            const double d = zj[c] - zi[c];
            wn2 += d * d;
        }
        const double sv = t[j] - t[i] - 2.0 * im_z_zbar(zi, zj);
        return distance_reduced(std::sqrt(wn2), sv);
    }

    Point point(std::size_t i, std::size_t n) const {
        std::vector<double> coords = *z[i];
        coords.push_back(t[i]);
        (void)n;
        return Point::from_coords(std::move(coords));
    }
};

}  // namespace

DiameterReport diameter(const SectionSet& s, const SearchConfig& cfg) {
    (void)cfg;
    s.validate();
    if (s.empty_body()) throw std::invalid_argument("diameter: empty set");
    const EndpointList eps(s);
    const std::size_t m = eps.size();

    struct Best {
        double v = -1.0;
        std::size_t i = 0, j = 0;
    };
    std::vector<Best> chunk_best(m);
    parallel_for(m, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            Best loc;
            for (std::size_t j = i; j < m; ++j) {
                const double v = eps.dist(i, j);
                if (v > loc.v) loc = {v, i, j};
            }
            chunk_best[i] = loc;
        }
    });
    Best best;
    for (const Best& cb : chunk_best)
        if (cb.v > best.v) best = cb;

    DiameterReport rep;
    rep.value = best.v;
    rep.witness_p = eps.point(best.i, s.n);
    rep.witness_q = eps.point(best.j, s.n);
    rep.iterations = m * (m + 1) / 2;
    rep.refinement_level = 0;
    const double dw = distance(rep.witness_p, rep.witness_q);
    rep.value = std::max(rep.value, dw);
    rep.lower_witness_gap = rep.value - dw;
    return rep;
}

namespace {

// max_q d(p, q) over the boundary of a profile body, with p given by
// (r_p, t_p) after rotating into the real axis; theta runs over [0, 2 pi)
// because p itself is not reflected.
std::pair<double, Candidate> max_from_reduced(const ProfileSet& s, double rp, double tp,
                                              const SearchConfig& cfg, ObjectiveCounters& ctr) {
    const auto rgrid = radial_grid(s, cfg.grid_r);
    std::vector<double> ugrid(rgrid.size());
    for (std::size_t i = 0; i < rgrid.size(); ++i) ugrid[i] = s.u(rgrid[i]);
    const std::size_t ntheta = 2 * cfg.grid_theta;
    std::vector<double> mus = s.n() == 1 ? std::vector<double>{1.0} : [&] {
        std::vector<double> v(cfg.grid_mu + 1);
        for (std::size_t i = 0; i <= cfg.grid_mu; ++i)
            v[i] = static_cast<double>(i) / static_cast<double>(cfg.grid_mu);
        return v;
    }();

    Candidate best;
    for (std::size_t iq = 0; iq < rgrid.size(); ++iq)
        for (std::size_t it = 0; it < ntheta; ++it) {
            const double theta = 2.0 * kPi * static_cast<double>(it) / static_cast<double>(ntheta);
            for (double mu : mus)
                for (int sq : {1, -1}) {
                    const double v =
                        PairGeometry::reduced(rp, tp, rgrid[iq], sq * ugrid[iq], theta, mu);
                    ++ctr.evals;
                    if (v > best.value) best = {v, rp, rgrid[iq], theta, mu, 1, sq};
                }
        }

    const auto eval = [&s, rp, tp](double, double rq, double theta, double mu, int, int sq) {
        return PairGeometry::reduced(rp, tp, rq, sq * s.u(rq), theta, mu);
    };
    best = refine_candidate(s, best, cfg, 2.0 * kPi, false, eval, ctr);
    return {best.value, best};
}

}  // namespace

std::pair<double, Point> max_dist_from_point(const ProfileSet& s, const Point& p,
                                             const SearchConfig& cfg) {
    if (p.n() != s.n()) throw std::invalid_argument("max_dist_from_point: dimension mismatch");
    ObjectiveCounters ctr;
    const auto [value, cand] = max_from_reduced(s, p.znorm(), p.t(), cfg, ctr);
    // the reduction fixes p on the real axis; rotate the witness back
    Point q = PairGeometry::embed_q(s.n(), cand.rq, cand.sq * s.u(cand.rq), cand.theta, cand.mu);
    if (s.n() == 1 && p.znorm() > 0.0) {
        const double ang = std::atan2(p.y(0), p.x(0));
        q = rotate(RotationAngles({ang}), q);
    }
    return {value, q};
}

std::pair<double, Point> max_dist_from_point(const SectionSet& s, const Point& p,
                                             const SearchConfig& cfg) {
    (void)cfg;
    s.validate();
    if (s.empty_body()) throw std::invalid_argument("max_dist_from_point: empty set");
    const EndpointList eps(s);
    double best = -1.0;
    std::size_t bi = 0;
    std::vector<double> pz(p.coords().begin(), p.coords().end() - 1);
    for (std::size_t i = 0; i < eps.size(); ++i) {
        const auto& zi = *eps.z[i];
        double wn2 = 0.0;
        for (std::size_t c = 0; c < zi.size(); ++c) {
            const double d = zi[c] - pz[c];
            wn2 += d * d;
        }
        const double sv = eps.t[i] - p.t() - 2.0 * im_z_zbar(pz, zi);
        const double v = distance_reduced(std::sqrt(wn2), sv);
        if (v > best) {
            best = v;
            bi = i;
        }
    }
    return {best, eps.point(bi, s.n)};
}

NcReport nc_check(const ProfileSet& s, std::optional<double> diam_hint, const SearchConfig& cfg) {
    NcReport rep;
    rep.diam = diam_hint ? *diam_hint : diameter(s, cfg).value;

    const auto& rnodes = s.grid();
    const std::size_t m = rnodes.size();
    std::vector<double> values(m);
    std::vector<Candidate> partners(m);
    // slack is iota-invariant for these plane-symmetric bodies, so the upper
    // boundary sheet t = +u(r) suffices
    parallel_for(m, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            ObjectiveCounters ctr;
            const auto [v, cand] = max_from_reduced(s, rnodes[i], s.u(rnodes[i]), cfg, ctr);
            values[i] = v;
            partners[i] = cand;
        }
    });

    rep.worst_slack = -1e300;
    rep.min_slack = 1e300;
    for (std::size_t i = 0; i < m; ++i) {
        NcSample sample;
        sample.p = PairGeometry::embed_p(s.n(), rnodes[i], s.u(rnodes[i]));
        sample.slack = rep.diam - values[i];
        sample.partner = PairGeometry::embed_q(s.n(), partners[i].rq,
                                               partners[i].sq * s.u(partners[i].rq),
                                               partners[i].theta, partners[i].mu);
        if (sample.slack > rep.worst_slack) {
            rep.worst_slack = sample.slack;
            rep.worst_point = sample.p;
        }
        rep.min_slack = std::min(rep.min_slack, sample.slack);
        rep.samples.push_back(std::move(sample));
    }
    return rep;
}

NcReport nc_check(const SectionSet& s, std::optional<double> diam_hint, const SearchConfig& cfg) {
    s.validate();
    if (s.empty_body()) throw std::invalid_argument("nc_check: empty set");
    NcReport rep;
    rep.diam = diam_hint ? *diam_hint : diameter(s, cfg).value;
    const EndpointList eps(s);
    const std::size_t m = eps.size();
    std::vector<double> values(m);
    std::vector<std::size_t> arg(m);
    parallel_for(m, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            double best = -1.0;
            std::size_t bj = 0;
            for (std::size_t j = 0; j < m; ++j) {
                const double v = eps.dist(i, j);
                if (v > best) {
                    best = v;
                    bj = j;
                }
            }
            values[i] = best;
            arg[i] = bj;
        }
    });
    rep.worst_slack = -1e300;
    rep.min_slack = 1e300;
    for (std::size_t i = 0; i < m; ++i) {
        NcSample sample;
        sample.p = eps.point(i, s.n);
        sample.slack = rep.diam - values[i];
        sample.partner = eps.point(arg[i], s.n);
        if (sample.slack > rep.worst_slack) {
            rep.worst_slack = sample.slack;
            rep.worst_point = sample.p;
        }
        rep.min_slack = std::min(rep.min_slack, sample.slack);
        rep.samples.push_back(std::move(sample));
    }
    return rep;
}

}  // namespace heis
