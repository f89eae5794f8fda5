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

TEST_SUITE_BEGIN("extremal");

TEST_CASE("ball diameter is twice the radius") {
    for (double rad : {0.5, 1.0}) {
        const auto ball = ProfileSet::ball(1, rad, 192);
        const DiameterReport rep = diameter(ball);
        CHECK(std::abs(rep.value - 2.0 * rad) <= 2e-3);
        CHECK(rep.lower_witness_gap >= 0.0);
        CHECK(distance(rep.witness_p, rep.witness_q) <= rep.value);
    }
}

TEST_CASE("two-coordinate ball diameter uses the inner-product disc reduction") {
    SearchConfig cfg;
    cfg.grid_r = 48;
    cfg.grid_theta = 24;
    cfg.grid_mu = 6;
    cfg.refine_starts = 8;
    const auto ball2 = ProfileSet::ball(2, 1.0, 96);
    const DiameterReport rep = diameter(ball2, cfg);
    CHECK(std::abs(rep.value - 2.0) <= 2e-3);
    CHECK(rep.witness_p.n() == 2);
}

TEST_CASE("vertical segment diameter follows the vertical formula") {
    const auto seg = ProfileSet::from_samples(1, {0.0}, {0.3});
    CHECK(diameter(seg).value == doctest::Approx(std::sqrt(2.0 * kPi * 0.3)).epsilon(1e-12));
}

TEST_CASE("canonical set has unit diameter with an exact vertical witness") {
    const auto A1 = build_A(1.0);
    const DiameterReport rep = diameter(A1);
    CHECK(std::abs(rep.value - 1.0) <= 2e-3);

    // the witness pair [z, 1/(2 pi)], [z, -1/(2 pi)] achieves 1 exactly
    const double zr = 0.2 / kPi;
    const double d = distance(Point{zr, 0.0, 0.5 / kPi}, Point{zr, 0.0, -0.5 / kPi});
    CHECK(std::abs(d - 1.0) <= 1e-12);
}

TEST_CASE("profile diameter dominates its closed-form witnesses") {
    Rng rng(47);
    for (int k = 0; k < 10; ++k) {
        const double R = rng.uniform(0.2, 1.0);
        const double base = rng.uniform(0.02, 0.3), wig = rng.uniform(0.0, 2.0);
        const auto s = ProfileSet::from_function(1, R, 48, [&](double r) {
            return base * (1.0 + 0.3 * std::sin(wig + 5.0 * r)) * (1.0 - 0.5 * r / R);
        });
        const double diam = diameter(s).value;
        CHECK(diam >= 2.0 * R - 1e-9);  // horizontal antipodal pair
        for (std::size_t i = 0; i < s.grid().size(); ++i)
            CHECK(diam >= std::sqrt(2.0 * kPi * s.values()[i]) - 1e-9);  // vertical pair
    }
}

TEST_CASE("max distance from distinguished points") {
    const auto ball = ProfileSet::ball(1, 1.0, 192);
    const auto [from_origin, w0] = max_dist_from_point(ball, origin(1));
    CHECK(std::abs(from_origin - 1.0) <= 1e-3);

    const auto [from_pole, wp] = max_dist_from_point(ball, Point{0.0, 0.0, 1.0 / kPi});
    CHECK(from_pole == doctest::Approx(std::sqrt(2.0)).epsilon(1e-4));

    const auto A1 = build_A(1.0);
    const auto [from_top, wt] = max_dist_from_point(A1, Point{0.2 / kPi, 0.0, 0.5 / kPi});
    CHECK(std::abs(from_top - 1.0) <= 2e-3);
}

TEST_CASE("necessary condition fails for the ball and holds for the canonical set") {
    SearchConfig cfg;
    cfg.grid_r = 96;
    cfg.grid_theta = 48;

    const NcReport ball_rep = nc_check(ProfileSet::ball(1, 1.0, 160), {}, cfg);
    CHECK(ball_rep.worst_slack >= 0.3);
    CHECK(ball_rep.worst_slack == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-3));
    CHECK(ball_rep.worst_point.znorm() <= 1e-9);  // failure is at the poles
    CHECK(ball_rep.min_slack >= -1e-6);

    // equator samples have antipodal partners at the full diameter
    for (const NcSample& sample : ball_rep.samples)
        if (std::abs(sample.p.znorm() - 1.0) < 1e-12) CHECK(sample.slack <= 2e-3);

    const NcReport a_rep = nc_check(build_A(1.0, 160), {}, cfg);
    CHECK(a_rep.worst_slack <= 2e-3);
    CHECK(a_rep.min_slack >= -1e-6);
}

TEST_CASE("section diameter agrees with the profile diameter") {
    const auto A1 = build_A(1.0);
    const SectionSet secs = profile_to_sections(A1, 3000);
    const DiameterReport rep = diameter(secs);
    CHECK(std::abs(rep.value - 1.0) <= 2e-3);
    CHECK(rep.lower_witness_gap == 0.0);
}

TEST_CASE("empty sets are rejected") {
    SectionSet empty;
    empty.n = 1;
    empty.zsamples = {{0.0, 0.0}};
    empty.sections = {{}};
    empty.cell_areas = {1.0};
    CHECK_THROWS_AS(diameter(empty), std::invalid_argument);
    CHECK_THROWS_AS(nc_check(empty), std::invalid_argument);
    CHECK_THROWS_AS(max_dist_from_point(empty, origin(1)), std::invalid_argument);
}

TEST_SUITE_END();
