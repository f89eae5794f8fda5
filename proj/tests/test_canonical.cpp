#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "heis/canonical.hpp"
#include "heis/extremal.hpp"
#include "heis/metric.hpp"
#include "heis/profile.hpp"
#include "heis/rng.hpp"

using namespace heis;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_SUITE_BEGIN("canonical");

TEST_CASE("l profile pieces join continuously") {
    CHECK(l_profile(1.0, 0.0) == doctest::Approx(0.5 / kPi).epsilon(1e-15));
    CHECK(l_profile(1.0, 0.5) == doctest::Approx(0.0).epsilon(1e-14));
    // both branches give lambda^2/(2 pi) at the junction r = lambda/pi
    const double rj = 1.0 / kPi;
    CHECK(l_profile(1.0, rj) == doctest::Approx(0.5 / kPi).epsilon(1e-12));
    CHECK(ball_profile(0.5, rj * (1.0 + 1e-13)) == doctest::Approx(0.5 / kPi).epsilon(1e-12));
    for (double lam : {0.5, 2.0, 3.0}) {
        const double j = lam / kPi;
        CHECK(l_profile(lam, j * (1 - 1e-12)) ==
              doctest::Approx(l_profile(lam, j * (1 + 1e-12))).epsilon(1e-12));
    }
    CHECK_THROWS_AS(l_profile(1.0, 0.6), std::domain_error);
}

TEST_CASE("built set volume matches the quadrature oracle") {
    const auto A1 = build_A(1.0);
    // oracle 0.21763819050 = 1/pi^2 + (pi/4) int_{2/pi}^1 x h(x) dx (Simpson,
    // cusp absorbed by x = sin(u))
    CHECK(volume(A1) == doctest::Approx(0.21763819050).epsilon(5e-6));
    CHECK(std::abs(diameter(A1).value - 1.0) <= 2e-3);
}

TEST_CASE("built sets are dilates of the unit one") {
    const auto A1 = build_A(1.0, 64);
    for (double lam : {0.5, 2.0}) {
        const auto Al = build_A(lam, 64);
        const auto scaled = dilate_set(lam, A1);
        REQUIRE(Al.grid().size() == scaled.grid().size());
        for (std::size_t i = 0; i < Al.grid().size(); ++i) {
            CHECK(Al.grid()[i] == doctest::Approx(scaled.grid()[i]).epsilon(1e-12));
            CHECK(Al.values()[i] == doctest::Approx(scaled.values()[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("canonical set contains its generating ball") {
    for (int i = 0; i <= 512; ++i) {
        const double r = 0.5 * i / 512.0;
        CHECK(l_profile(1.0, r) >= ball_profile(0.5, r) - 1e-12);
    }
}

TEST_CASE("antipode pairs realize the diameter") {
    // horizontal case: [lambda/2, 0] -> [-lambda/2, 0]
    const Point eq{0.5, 0.0, 0.0};
    const Point aeq = antipode(eq, 1.0);
    CHECK(aeq.x(0) == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(std::abs(aeq.t()) <= 1e-15);
    CHECK(distance(eq, aeq) == doctest::Approx(1.0).epsilon(1e-12));

    Rng rng(53);
    for (int k = 0; k < 300; ++k) {
        const double lam = k % 3 == 0 ? 1.0 : rng.uniform(0.5, 2.0);
        const double r = rng.uniform(lam / kPi * (1 + 1e-9), 0.5 * lam * (1 - 1e-9));
        const double ang = rng.uniform(0.0, 2.0 * kPi);
        const Point p{r * std::cos(ang), r * std::sin(ang),
                      rng.sign() * l_profile(lam, r)};
        const Point q = antipode(p, lam);
        CHECK(std::abs(distance(p, q) - lam) <= 1e-6 * lam);

        const Point back = antipode(q, lam);
        for (std::size_t c = 0; c < back.coords().size(); ++c)
            CHECK(back.coords()[c] == doctest::Approx(p.coords()[c]).epsilon(1e-9));
    }

    CHECK_THROWS_AS(antipode(Point{0.1, 0.0, 0.5 / kPi}, 1.0), std::domain_error);
    CHECK_THROWS_AS(antipode(Point{0.6, 0.0, 0.0}, 1.0), std::domain_error);
    // in range but far off the sphere cap
    CHECK_THROWS_AS(antipode(Point{0.4, 0.0, 0.9 / kPi}, 1.0), std::domain_error);
}

TEST_CASE("admissibility constants") {
    const AdmissibilityConstants ac = admissibility(1.0);
    CHECK(ac.kappa == h_prime(0.0) / 2.0);
    CHECK(ac.kappa == doctest::Approx(1.0 / kPi).epsilon(1e-15));
    CHECK(ac.r_adm <= ac.kappa / 4.0 + 1e-15);
    CHECK(ac.r_adm > 0.0);
    CHECK(ac.rbar1 > 0.0);
    CHECK(ac.rbar1 < 0.5);
    CHECK(ac.rhat > 0.0);
    // regression values frozen from the scan oracles
    CHECK(ac.rbar1 == doctest::Approx(0.332046081172995).epsilon(1e-6));
    CHECK(ac.rhat == doctest::Approx(0.248919516440031).epsilon(1e-6));
    CHECK(ac.r_adm == doctest::Approx(ac.kappa / 4.0).epsilon(1e-12));
    // scale-free: the same constants serve every lambda
    const AdmissibilityConstants ac2 = admissibility(2.5);
    CHECK(ac2.r_adm == ac.r_adm);
}

TEST_CASE("zero bump reproduces the unperturbed set") {
    BumpSpec zero;
    zero.kind = BumpSpec::Kind::custom;
    zero.support_radius = 1e-3;
    zero.lipschitz = 1e-6;
    zero.amplitude = 0.0;
    zero.custom = [](std::span<const double>) { return 0.0; };
    const SectionSet a = build_A_perturbed(1.0, zero, 2000);

    const auto A1 = build_A(1.0, 512);
    for (std::size_t i = 0; i < a.sample_count(); ++i) {
        const double r = a.znorm(i);
        const double expect = l_profile(1.0, std::min(r, 0.5));
        CHECK(a.sections[i][0].hi == doctest::Approx(expect).epsilon(1e-9));
        CHECK(a.sections[i][0].lo == doctest::Approx(-expect).epsilon(1e-9));
    }
    CHECK(std::abs(volume(a) - volume(A1)) / volume(A1) <= 1e-3);
}

TEST_CASE("admissible bumps keep volume exactly and diameter within tolerance") {
    const std::size_t grid = 1500;
    BumpSpec zero;
    zero.kind = BumpSpec::Kind::custom;
    zero.support_radius = 1e-3;
    zero.lipschitz = 1e-6;
    zero.amplitude = 0.0;
    zero.custom = [](std::span<const double>) { return 0.0; };
    const double vol_a = volume(build_A_perturbed(1.0, zero, grid));

    for (const BumpSpec& f : {radial_cone_bump(1.0), offcenter_cone_bump(1.0)}) {
        const SectionSet pert = build_A_perturbed(1.0, f, grid);
        CHECK(volume(pert) == doctest::Approx(vol_a).epsilon(1e-12));  // same-grid Fubini
        CHECK(std::abs(diameter(pert).value - 1.0) <= 2e-3);
    }
}

TEST_CASE("pairs through the perturbed boundary region stay within the diameter") {
    for (const BumpSpec& f : {radial_cone_bump(1.0), offcenter_cone_bump(1.0)}) {
        const SectionSet pert = build_A_perturbed(1.0, f, 1500);
        // endpoints in the sheared region against every endpoint of the set
        std::vector<std::pair<std::size_t, double>> moved, all;
        for (std::size_t i = 0; i < pert.sample_count(); ++i) {
            for (const Interval& iv : pert.sections[i]) {
                all.push_back({i, iv.lo});
                all.push_back({i, iv.hi});
                if (pert.znorm(i) < f.support_radius + std::hypot(f.center[0], f.center[1])) {
                    moved.push_back({i, iv.lo});
                    moved.push_back({i, iv.hi});
                }
            }
        }
        REQUIRE(!moved.empty());
        double worst = 0.0;
        for (const auto& [i, ti] : moved)
            for (const auto& [j, tj] : all) {
                const double dx = pert.zsamples[j][0] - pert.zsamples[i][0];
                const double dy = pert.zsamples[j][1] - pert.zsamples[i][1];
                const double s = tj - ti -
                                 2.0 * (pert.zsamples[i][1] * pert.zsamples[j][0] -
                                        pert.zsamples[i][0] * pert.zsamples[j][1]);
                worst = std::max(worst, distance_reduced(std::hypot(dx, dy), s));
            }
        CHECK(worst <= 1.0 + 1e-6);
    }
}

TEST_CASE("inadmissible bumps are rejected with the violated constraint") {
    BumpSpec bad = radial_cone_bump(1.0);
    bad.lipschitz = kPi * 1.0 * admissibility(1.0).r_adm;  // 4x the budget
    bad.amplitude = bad.lipschitz * bad.support_radius;
    CHECK_THROWS_WITH_AS(build_A_perturbed(1.0, bad, 256),
                         doctest::Contains("Lipschitz"), std::invalid_argument);

    BumpSpec wide = radial_cone_bump(1.0);
    wide.support_radius = 2.0 * admissibility(1.0).r_adm;
    CHECK_THROWS_WITH_AS(build_A_perturbed(1.0, wide, 256),
                         doctest::Contains("support"), std::invalid_argument);
}

TEST_CASE("off-center perturbation breaks rotational symmetry") {
    const BumpSpec f = offcenter_cone_bump(1.0);
    const SectionSet pert = build_A_perturbed(1.0, f, 3000);
    // some sample inside the support must differ from its rotated mate
    double asym = 0.0;
    for (std::size_t i = 0; i < pert.sample_count(); ++i) {
        const double r = pert.znorm(i);
        if (r > 2.0 * f.support_radius) continue;
        for (std::size_t j = 0; j < pert.sample_count(); ++j) {
            if (std::abs(pert.znorm(j) - r) > 1e-12 || j == i) continue;
            asym = std::max(asym, std::abs(pert.sections[i][0].hi - pert.sections[j][0].hi));
        }
    }
    CHECK(asym > 1e-4);
}

TEST_SUITE_END();
