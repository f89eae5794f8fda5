#include "heis/verify.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "heis/canonical.hpp"
#include "heis/constants.hpp"
#include "heis/extremal.hpp"
#include "heis/iso.hpp"
#include "heis/metric.hpp"
#include "heis/profile.hpp"
#include "heis/rng.hpp"
#include "heis/roots.hpp"

namespace heis {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct Sizes {
    std::size_t formulas, cross, axioms, cone, bicone, sets, antipode, bumps;
};

Sizes sizes_for(VerifyLevel level) {
    if (level == VerifyLevel::fast) return {300, 2000, 2000, 200, 200, 20, 300, 2};
    return {1000, 10000, 10000, 1000, 1000, 100, 1000, 10};
}

ClaimResult claim(std::string name, double residual, double tolerance, std::string note = {}) {
    ClaimResult c;
    c.name = std::move(name);
    c.residual = residual;
    c.tolerance = tolerance;
    c.pass = residual <= tolerance;
    c.note = std::move(note);
    return c;
}

Point random_ball_point(Rng& rng, std::size_t n, double radius) {
    // uniform-ish via the geodesic parametrization of the closed ball
    GeodesicParam gp;
    gp.chi.resize(2 * n);
    double norm2 = 0.0;
    for (double& c : gp.chi) {
        c = rng.uniform(-1.0, 1.0);
        norm2 += c * c;
    }
    const double scale = radius * std::pow(rng.uniform(), 1.0 / (2.0 * n)) / std::sqrt(norm2);
    for (double& c : gp.chi) c *= scale;
    gp.phi = rng.uniform(-kPi, kPi);
    return geodesic_point(gp);
}

// sigma-invariant random section map: intervals depend on (x, y^2) only,
// evaluated identically for conjugate samples
SectionSet random_symmetric_sections(Rng& rng, std::size_t samples) {
    SectionSet s = SectionSet::polar_grid(rng.uniform(0.3, 1.2), samples);
    const double a = rng.uniform(-0.3, 0.3), b = rng.uniform(0.5, 4.0);
    const double c = rng.uniform(0.5, 4.0), w0 = rng.uniform(0.05, 0.3);
    const bool split = rng.uniform() < 0.5;
    for (std::size_t i = 0; i < s.sample_count(); ++i) {
        const double x = s.zsamples[i][0], y2 = s.zsamples[i][1] * s.zsamples[i][1];
        const double mid = a * std::sin(b * x) * std::cos(c * y2);
        const double w = w0 * (1.0 + 0.5 * std::cos(b * x + c * y2));
        if (split && std::cos(3.0 * x) > 0.3) {
            const double gap = 0.4 * w;
            s.sections[i] = {Interval{mid - w, mid - gap}, Interval{mid + gap, mid + w}};
        } else {
            s.sections[i] = {Interval{mid - w, mid + w}};
        }
    }
    return s;
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max({1e-300, std::abs(a), std::abs(b)}); }

void special_formula_claims(std::vector<ClaimResult>& out, Rng& rng, std::size_t count) {
    double worst_h = 0.0, worst_v = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t n = 1 + k % 2;
        Point p = rng.point(n, 5.0);
        // horizontal move: z' = alpha z keeps Im z conj(z') = 0 in any dimension
        const double alpha = rng.uniform(-2.0, 2.0);
        Point q = p;
        double gap2 = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            q.x(j) = alpha * p.x(j);
            q.y(j) = alpha * p.y(j);
            gap2 += (q.x(j) - p.x(j)) * (q.x(j) - p.x(j)) + (q.y(j) - p.y(j)) * (q.y(j) - p.y(j));
        }
        worst_h = std::max(worst_h, rel_err(distance(p, q), std::sqrt(gap2)));

        Point v = p;
        v.t() = rng.uniform(-8.0, 8.0);
        worst_v = std::max(worst_v, rel_err(distance(p, v), std::sqrt(kPi * std::abs(v.t() - p.t()))));
    }
    out.push_back(claim("horizontal_distance_formula", worst_h, 1e-10));
    out.push_back(claim("vertical_distance_formula", worst_v, 1e-10));
}

void cross_oracle_claim(std::vector<ClaimResult>& out, Rng& rng, std::size_t count) {
    double worst = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const Point p = rng.point(1, 10.0), q = rng.point(1, 10.0);
        const double a = distance(p, q, DistMethod::inversion);
        const double b = distance(p, q, DistMethod::bisection);
        worst = std::max(worst, rel_err(a, b));
    }
    out.push_back(claim("distance_solver_cross_agreement", worst, 1e-8));
}

void metric_axiom_claims(std::vector<ClaimResult>& out, Rng& rng, std::size_t count) {
    double worst_sym = 0.0, worst_tri = 0.0, worst_left = 0.0, worst_hom = 0.0, worst_iso = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t n = 1 + k % 2;
        const Point p = rng.point(n, 4.0), q = rng.point(n, 4.0), g = rng.point(n, 4.0);
        const double dpq = distance(p, q);
        worst_sym = std::max(worst_sym, rel_err(dpq, distance(q, p)));

        const Point r = rng.point(n, 4.0);
        const double slack = distance(p, r) + distance(r, q) - dpq;
        worst_tri = std::max(worst_tri, -slack);

        worst_left = std::max(worst_left, rel_err(distance(mul(g, p), mul(g, q)), dpq));

        const double lam = rng.uniform(0.2, 3.0);
        worst_hom = std::max(worst_hom, rel_err(distance(dilate(lam, p), dilate(lam, q)), lam * dpq));

        std::vector<double> th(n);
        for (double& a : th) a = rng.uniform(-kPi, kPi);
        const RotationAngles rot(th);
        worst_iso = std::max(worst_iso, rel_err(distance(rotate(rot, p), rotate(rot, q)), dpq));
        worst_iso = std::max(worst_iso, rel_err(distance(reflect_iota(p), reflect_iota(q)), dpq));
    }
    out.push_back(claim("metric_symmetry", worst_sym, 1e-10));
    out.push_back(claim("triangle_inequality", worst_tri, 1e-9, "worst negative slack"));
    out.push_back(claim("left_invariance", worst_left, 1e-10));
    out.push_back(claim("dilation_homogeneity", worst_hom, 1e-10));
    out.push_back(claim("rotation_reflection_isometry", worst_iso, 1e-10));
}

void profile_identity_claims(std::vector<ClaimResult>& out) {
    double resid = 0.0;
    resid = std::max(resid, std::abs(h_fn(0.0) - 1.0 / kPi));
    resid = std::max(resid, std::abs(h_fn(2.0 / kPi) - 2.0 / kPi));
    resid = std::max(resid, std::abs(h_fn(1.0)));
    resid = std::max(resid, std::abs(h_prime(0.0) - 2.0 / kPi));
    resid = std::max(resid, std::abs(g_fn(0.5 * kPi) - 2.0 / kPi));
    resid = std::max(resid, std::abs(rho_fn(kPi)));
    out.push_back(claim("profile_special_values", resid, 1e-12));

    double worst1 = 0.0;
    for (int i = 0; i <= 980; ++i) {
        const double r = 0.01 + 0.98 * i / 980.0;
        const double fd = (h_fn(r + 1e-6) - h_fn(r - 1e-6)) / 2e-6;
        worst1 = std::max(worst1, std::abs(fd - h_prime(r)));
    }
    out.push_back(claim("h_prime_vs_finite_differences", worst1, 1e-6));

    double worst2 = 0.0;
    for (int i = 0; i <= 980; ++i) {
        const double r = 0.01 + 0.98 * i / 980.0;
        const double fd = (h_prime(r + 3e-7) - h_prime(r - 3e-7)) / 6e-7;
        worst2 = std::max(worst2, std::abs(fd - h_second(r)));
    }
    out.push_back(claim("h_second_vs_finite_differences", worst2, 1e-6));

    const CriticalPoint cp = critical_point();
    const double eq_resid = std::abs(cp.phi_c * std::sin(cp.phi_c) + std::cos(cp.phi_c));
    const bool bracketed = h_second(cp.r_c * 0.98) > 0.0 && h_second(cp.r_c * 1.02) < 0.0 &&
                           cp.r_c > 0.0 && cp.r_c < 2.0 / kPi;
    out.push_back(claim("inflection_point_residual", eq_resid + (bracketed ? 0.0 : 1.0), 1e-12,
                        "second derivative changes sign across r_c"));
}

void vertical_segment_claim(std::vector<ClaimResult>& out, Rng& rng, std::size_t count) {
    double worst = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t n = 1 + k % 2;
        const Point p = rng.point(n, 3.0);
        Point p1 = rng.point(n, 3.0);
        Point p2 = p1;
        p2.t() = p1.t() + rng.uniform(0.0, 5.0);
        Point q = p1;
        q.t() = p1.t() + rng.uniform() * (p2.t() - p1.t());
        const double bound = std::max(distance(p, p1), distance(p, p2));
        worst = std::max(worst, distance(p, q) - bound);
    }
    out.push_back(claim("vertical_segment_max_distance_bound", worst, 1e-9));
}

void interior_distance_claim(std::vector<ClaimResult>& out, Rng& rng, std::size_t count) {
    double worst = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        SectionSet s = t_convex_hull(random_symmetric_sections(rng, 128));
        const double diam = diameter(s).value;
        for (int tries = 0; tries < 20; ++tries) {
            const std::size_t i = rng.index(s.sample_count());
            if (s.sections[i].empty()) continue;
            const Interval iv = s.sections[i].front();
            if (iv.length() <= 0.0) continue;
            Point q = Point::from_coords({s.zsamples[i][0], s.zsamples[i][1],
                                          iv.lo + rng.uniform(0.25, 0.75) * iv.length()});
            const std::size_t j = rng.index(s.sample_count());
            if (s.sections[j].empty()) continue;
            Point p = Point::from_coords({s.zsamples[j][0], s.zsamples[j][1], s.sections[j].front().lo});
            worst = std::max(worst, distance(p, q) - diam);
        }
    }
    out.push_back(claim("interior_points_within_diameter", worst, 1e-9));
}

void psi_monotonicity_claim(std::vector<ClaimResult>& out) {
    out.push_back(claim("inversion_ratio_monotone", psi_monotone_on_grid(10000) ? 0.0 : 1.0, 0.0,
                        "g/rho^2 strictly increasing on a 10^4-point grid"));
}

void cone_claim(std::vector<ClaimResult>& out, Rng& rng, std::size_t count) {
    std::size_t violations = 0;
    for (std::size_t k = 0; k < count; ++k) {
        const double d = rng.uniform(0.5, 2.5);
        const double delta = rng.uniform(0.05, 0.95) * ball_profile(d, 2.0 * d / kPi);
        const double alpha = cone_alpha(d, delta);
        // p on the upper boundary sheet with t_p >= delta
        const double hd0 = ball_profile(d, 0.0);
        double r_lo = 0.0;
        if (delta > hd0)
            r_lo = bisect([&](double r) { return ball_profile(d, r) - delta; }, 0.0, 2.0 * d / kPi);
        const double r_hi = rbar_fn(d, delta);
        const double rp = rng.uniform(r_lo, r_hi);
        const double tp = ball_profile(d, rp);
        const double ang = rng.uniform(0.0, 2.0 * kPi);
        const Point p{rp * std::cos(ang), rp * std::sin(ang), tp};

        const double woff = rng.uniform(0.0, 1.5 * d);
        const double wang = rng.uniform(0.0, 2.0 * kPi);
        const double wx = p.x(0) + woff * std::cos(wang), wy = p.y(0) + woff * std::sin(wang);
        const double s = tp + alpha * woff + rng.uniform(1e-9, d * d);
        if (ball_contains(origin(1), d, Point{wx, wy, s}, true)) ++violations;
    }
    out.push_back(claim("outer_cone_excludes_ball_points", static_cast<double>(violations), 0.0,
                        "count of sampled cone points found inside the closed ball"));
}

void bicone_claim(std::vector<ClaimResult>& out, Rng& rng, std::size_t count) {
    std::size_t violations = 0;
    for (std::size_t k = 0; k < count; ++k) {
        const double C = rng.uniform(0.1, 1.5);
        const double d = rng.uniform(0.8, 2.0);
        const double delta = rng.uniform(0.02, 0.5) * ball_profile(d, 2.0 * d / kPi);
        const LemmaConstants lc = lemma_constants(C, d, delta);

        const double zr = rng.uniform(0.0, C), za = rng.uniform(0.0, 2.0 * kPi);
        const double tmid = rng.uniform(-0.5, 0.5);
        const Point p1{zr * std::cos(za), zr * std::sin(za), tmid - delta};
        const Point p2{zr * std::cos(za), zr * std::sin(za), tmid + delta};

        Point center;
        bool found = false;
        for (int tries = 0; tries < 400 && !found; ++tries) {
            const Point g = random_ball_point(rng, 1, 0.995 * d);
            center = mul(p1, inv(g));
            if (distance(center, p2) <= d) found = true;
        }
        if (!found) continue;

        for (int m = 0; m < 10; ++m) {
            const double ru = rng.uniform(0.0, 0.999 * lc.gamma);
            const double ua = rng.uniform(0.0, 2.0 * kPi);
            const double smax = delta * (1.0 - ru / lc.gamma);
            const double sv = tmid + rng.uniform(-0.999, 0.999) * smax;
            const Point q{p1.x(0) + ru * std::cos(ua), p1.y(0) + ru * std::sin(ua), sv};
            if (!bicone_contains(p1, p2, lc.gamma, q)) ++violations;
            if (!ball_contains(center, d, q, true)) ++violations;
        }
    }
    out.push_back(claim("bicone_inside_common_balls", static_cast<double>(violations), 0.0,
                        "count of bicone samples escaping an enclosing ball"));
}

void transform_claims(std::vector<ClaimResult>& out, Rng& rng, std::size_t count) {
    double worst_tco = 0.0, worst_st = 0.0, worst_vol = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const SectionSet s = random_symmetric_sections(rng, 96);
        const double diam = diameter(s).value;

        const SectionSet hull = t_convex_hull(s);
        worst_tco = std::max(worst_tco, std::abs(diameter(hull).value - diam));

        const SectionSet st = steiner_symmetrize(s);
        worst_vol = std::max(worst_vol, std::abs(volume(st) - volume(s)));
        worst_st = std::max(worst_st, diameter(st).value - diam);
    }
    out.push_back(claim("t_convexification_preserves_diameter", worst_tco, 1e-6));
    out.push_back(claim("symmetrization_preserves_volume", worst_vol, 0.0, "exact in discretization"));
    out.push_back(claim("symmetrization_shrinks_diameter", worst_st, 1e-6));
}

void cylinder_bound_claim(std::vector<ClaimResult>& out, Rng& rng, std::size_t count) {
    double worst = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const double R = rng.uniform(0.2, 1.5);
        const double a = rng.uniform(0.05, 0.5), b = rng.uniform(0.0, 3.0);
        const ProfileSet s = ProfileSet::from_function(
            1, R, 64, [&](double r) { return a * (1.0 + 0.4 * std::cos(b * r)) * (1.0 - r / R) + 0.01; });
        const double diam = diameter(s).value;
        for (std::size_t i = 0; i < s.grid().size(); ++i) {
            worst = std::max(worst, 2.0 * s.grid()[i] - diam);
            worst = std::max(worst, 2.0 * kPi * s.values()[i] - diam * diam);
        }
    }
    out.push_back(claim("invariant_set_cylinder_bound", worst, 1e-9));
}

void canonical_set_claims(std::vector<ClaimResult>& out, Rng& rng, std::size_t antipode_count) {
    const ProfileSet A1 = build_A(1.0);
    const DiameterReport rep = diameter(A1);
    out.push_back(claim("canonical_set_diameter", std::abs(rep.value - 1.0), 2e-3));

    // witness pair separated by t-gap 1/pi at equal z: distance exactly 1
    const double zr = 0.25 / kPi;
    const double dvert = distance(Point{zr, 0.0, 0.5 / kPi}, Point{zr, 0.0, -0.5 / kPi});
    out.push_back(claim("canonical_set_vertical_witness", std::abs(dvert - 1.0), 1e-12));

    double worst_anti = 0.0, worst_inv = 0.0;
    for (std::size_t k = 0; k < antipode_count; ++k) {
        const double r = rng.uniform(1.0 / kPi + 1e-6, 0.5 - 1e-6);
        const double ang = rng.uniform(0.0, 2.0 * kPi);
        const int side = rng.sign();
        const Point p{r * std::cos(ang), r * std::sin(ang), side * l_profile(1.0, r)};
        const Point q = antipode(p, 1.0);
        worst_anti = std::max(worst_anti, std::abs(distance(p, q) - 1.0));
        const Point back = antipode(q, 1.0);
        double diff = std::abs(back.t() - p.t());
        for (std::size_t c = 0; c < 2; ++c) diff = std::max(diff, std::abs(back.coords()[c] - p.coords()[c]));
        worst_inv = std::max(worst_inv, diff);
    }
    out.push_back(claim("cap_antipode_distance", worst_anti, 1e-6));
    out.push_back(claim("cap_antipode_involution", worst_inv, 1e-9));

    out.push_back(claim(
        "canonical_set_contains_ball",
        [&] {
            double worst = 0.0;
            for (int i = 0; i <= 256; ++i) {
                const double r = 0.5 * i / 256.0;
                worst = std::max(worst, ball_profile(0.5, r) - l_profile(1.0, r));
            }
            return worst;
        }(),
        1e-12, "profile dominates the ball profile"));

    // sampled concavity of the hull profile (recorded, not an exit gate: the
    // Euclidean-convex-hull description rests on it)
    out.push_back(claim(
        "canonical_profile_concavity",
        [&] {
            double worst = 0.0;
            const double step = 1e-3;
            for (int i = 1; i < 499; ++i) {
                const double r = step * i;
                worst = std::max(worst, l_profile(1.0, r - step) + l_profile(1.0, r + step) -
                                            2.0 * l_profile(1.0, r));
            }
            return worst;
        }(),
        1e-12, "second differences stay non-positive"));
}

void nc_claims(std::vector<ClaimResult>& out) {
    SearchConfig cfg;
    cfg.grid_r = 96;
    cfg.grid_theta = 48;

    const ProfileSet ball = ProfileSet::ball(1, 1.0, 192);
    const NcReport ball_rep = nc_check(ball, {}, cfg);
    out.push_back(claim("ball_fails_necessary_condition", 0.3 - ball_rep.worst_slack, 0.0,
                        "worst slack " + std::to_string(ball_rep.worst_slack) + " must stay >= 0.3"));

    const ProfileSet A1 = build_A(1.0, 192);
    const NcReport a_rep = nc_check(A1, {}, cfg);
    out.push_back(claim("canonical_set_satisfies_necessary_condition", a_rep.worst_slack, 2e-3));
}

void perturbation_claims(std::vector<ClaimResult>& out, Rng& rng, std::size_t bumps) {
    const double lambda = 1.0;
    const AdmissibilityConstants ac = admissibility(lambda);
    out.push_back(claim("admissibility_kappa", std::abs(ac.kappa - 1.0 / kPi), 1e-15));
    out.push_back(claim("admissibility_radius_cap", ac.r_adm - ac.kappa / 4.0, 1e-15,
                        "r_adm never exceeds kappa/4"));

    const std::size_t grid = 1200;
    const BumpSpec zero = [] {
        BumpSpec f;
        f.kind = BumpSpec::Kind::custom;
        f.support_radius = 1e-3;
        f.lipschitz = 1e-6;
        f.amplitude = 0.0;
        f.custom = [](std::span<const double>) { return 0.0; };
        return f;
    }();
    const SectionSet base = build_A_perturbed(lambda, zero, grid);
    const double vol_base = volume(base);

    double worst_vol = 0.0, worst_diam = 0.0;
    for (std::size_t k = 0; k < bumps; ++k) {
        BumpSpec f = k % 2 == 0 ? radial_cone_bump(lambda) : offcenter_cone_bump(lambda);
        const double shrink = rng.uniform(0.4, 1.0);
        f.support_radius *= shrink;
        f.amplitude *= shrink * rng.uniform(0.3, 1.0) * rng.sign();
        if (f.kind == BumpSpec::Kind::offcenter_cone) {
            const double ang = rng.uniform(0.0, 2.0 * kPi);
            const double cr = std::sqrt(f.center[0] * f.center[0] + f.center[1] * f.center[1]);
            f.center = {cr * std::cos(ang), cr * std::sin(ang)};
        }
        const SectionSet pert = build_A_perturbed(lambda, f, grid);
        worst_vol = std::max(worst_vol, rel_err(volume(pert), vol_base));
        worst_diam = std::max(worst_diam, std::abs(diameter(pert).value - lambda));
    }
    out.push_back(claim("perturbation_preserves_volume", worst_vol, 1e-6));
    out.push_back(claim("perturbation_preserves_diameter", worst_diam, 2e-3));

    bool rejected = false;
    try {
        BumpSpec bad = radial_cone_bump(lambda);
        bad.lipschitz = kPi * lambda * ac.r_adm;  // 4x the allowed constant
        bad.amplitude = bad.lipschitz * bad.support_radius;
        build_A_perturbed(lambda, bad, 256);
    } catch (const std::invalid_argument&) {
        rejected = true;
    }
    out.push_back(claim("inadmissible_bump_rejected", rejected ? 0.0 : 1.0, 0.0));
}

void ratio_claims(std::vector<ClaimResult>& out) {
    const ProfileSet A1 = build_A(1.0);
    const ProfileSet half_ball = ProfileSet::ball(1, 0.5);
    const RatioReport ra = iso_ratio(A1);
    const RatioReport rb = iso_ratio(half_ball);
    out.push_back(claim("canonical_set_beats_ball", 1.03 - ra.ratio / rb.ratio, 0.0,
                        "ratio advantage " + std::to_string(ra.ratio / rb.ratio)));

    const double v1 = volume(ProfileSet::ball(1, 0.5, 256));
    const double v2 = volume(ProfileSet::ball(1, 0.5, 512));
    out.push_back(claim("volume_grid_stability", rel_err(v1, v2), 1e-4));

    double worst = 0.0;
    for (double lam : {0.5, 2.0, 5.0}) {
        const RatioReport rs = iso_ratio(dilate_set(lam, A1));
        worst = std::max(worst, rel_err(rs.ratio, ra.ratio));
    }
    out.push_back(claim("ratio_scale_invariance", worst, 1e-6));
}

}  // namespace

VerifyReport verify_suite(VerifyLevel level, std::uint64_t seed) {
    const Sizes sz = sizes_for(level);
    VerifyReport rep;
    rep.level = level == VerifyLevel::fast ? "fast" : "full";
    rep.seed = seed;

    Rng rng(seed);
    auto& claims = rep.claims;
    special_formula_claims(claims, rng, sz.formulas);
    cross_oracle_claim(claims, rng, sz.cross);
    metric_axiom_claims(claims, rng, sz.axioms);
    profile_identity_claims(claims);
    vertical_segment_claim(claims, rng, sz.formulas);
    interior_distance_claim(claims, rng, 5);
    psi_monotonicity_claim(claims);
    cone_claim(claims, rng, sz.cone);
    bicone_claim(claims, rng, sz.bicone);
    transform_claims(claims, rng, sz.sets);
    cylinder_bound_claim(claims, rng, 20);
    canonical_set_claims(claims, rng, sz.antipode);
    nc_claims(claims);
    perturbation_claims(claims, rng, sz.bumps);
    ratio_claims(claims);

    rep.all_pass = true;
    for (const ClaimResult& c : claims) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

namespace {
double round9(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return std::strtod(buf, nullptr);
}
}  // namespace

std::string verify_report_json(const VerifyReport& rep) {
    nlohmann::json j;
    j["level"] = rep.level;
    j["seed"] = rep.seed;
    j["all_pass"] = rep.all_pass;
    auto arr = nlohmann::json::array();
    for (const ClaimResult& c : rep.claims) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["residual"] = round9(c.residual);
        jc["tolerance"] = round9(c.tolerance);
        if (!c.note.empty()) jc["note"] = c.note;
        arr.push_back(std::move(jc));
    }
    j["claims"] = std::move(arr);
    return j.dump(1, '\t') + "\n";
}

}  // namespace heis
