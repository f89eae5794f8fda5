#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "heis/constants.hpp"
#include "heis/metric.hpp"
#include "heis/profile.hpp"
#include "heis/rng.hpp"

using namespace heis;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_SUITE_BEGIN("constants");

TEST_CASE("rbar is the root of the profile height on the decreasing branch") {
    const double rbar = rbar_fn(1.0, 1.0 / kPi);
    CHECK(std::abs(h_fn(rbar) - 1.0 / kPi) <= 1e-10);
    CHECK(rbar > 2.0 / kPi);
    CHECK(rbar < 1.0);
    CHECK(rbar == doctest::Approx(0.958493458944511).epsilon(1e-9));

    // scaling: rbar(d, delta) = d * rbar(1, delta/d^2)
    CHECK(rbar_fn(2.0, 4.0 / kPi) == doctest::Approx(2.0 * rbar).epsilon(1e-10));
    CHECK_THROWS_AS(rbar_fn(1.0, 0.7), std::invalid_argument);  // above the peak 2/pi
    CHECK_THROWS_AS(rbar_fn(1.0, -0.1), std::invalid_argument);
}

TEST_CASE("lemma constants bundle") {
    const LemmaConstants lc = lemma_constants(1.0, 1.0, 1.0 / kPi);
    // regression values frozen from the closed-form scan
    CHECK(lc.rbar == doctest::Approx(0.958493458944511).epsilon(1e-9));
    CHECK(lc.alpha == doctest::Approx(3.49078212102049).epsilon(1e-6));
    CHECK(lc.M == doctest::Approx(5.29972607826451).epsilon(1e-6));
    CHECK(lc.gamma == doctest::Approx(0.0207532705277443).epsilon(1e-6));
    CHECK(lc.beta == lc.alpha + 2.0 * lc.C);  // exact identity
    CHECK(lc.gamma > 0.0);
    CHECK(lc.gamma == std::min(0.5 * (lc.d - lc.rbar),
                               lc.delta / (2.0 * lc.C + 2.0 * lc.d + lc.M)));
    CHECK(lc.M >= lc.alpha);

    Rng rng(19);
    for (int k = 0; k < 50; ++k) {
        const double C = rng.uniform(0.0, 2.0), d = rng.uniform(0.3, 3.0);
        const double delta = rng.uniform(0.05, 0.95) * ball_profile(d, 2.0 * d / kPi);
        const LemmaConstants c = lemma_constants(C, d, delta);
        CHECK(c.gamma > 0.0);
        CHECK(c.beta == c.alpha + 2.0 * C);
        CHECK(c.rbar > 0.5 * d);
        CHECK(c.rbar < d);
    }
}

TEST_CASE("alpha decreases as the height threshold grows") {
    double prev = 1e300;
    for (int i = 1; i <= 24; ++i) {
        const double delta = 0.634 * i / 25.0;  // up to just below 2/pi
        const double a = cone_alpha(1.0, delta);
        CHECK(a <= prev * (1.0 + 1e-12));
        prev = a;
    }
}

TEST_CASE("outer cone excludes ball points") {
    Rng rng(23);
    for (int k = 0; k < 300; ++k) {
        const double d = rng.uniform(0.5, 2.0);
        const double delta = rng.uniform(0.1, 0.9) * ball_profile(d, 2.0 * d / kPi);
        const double alpha = cone_alpha(d, delta);
        const double rbar = rbar_fn(d, delta);

        double r_lo = 0.0;
        if (delta > ball_profile(d, 0.0)) {
            double lo = 0.0, hi = 2.0 * d / kPi;
            for (int i = 0; i < 100; ++i) {
                const double mid = 0.5 * (lo + hi);
                (ball_profile(d, mid) < delta ? lo : hi) = mid;
            }
            r_lo = hi;
        }
        const double rp = rng.uniform(r_lo, rbar);
        const double tp = ball_profile(d, rp);
        REQUIRE(tp >= delta * (1.0 - 1e-9));
        const double ang = rng.uniform(0.0, 2.0 * kPi);
        const Point p{rp * std::cos(ang), rp * std::sin(ang), tp};

        const double woff = rng.uniform(0.0, 1.2 * d);
        const double wang = rng.uniform(0.0, 2.0 * kPi);
        const Point w{p.x(0) + woff * std::cos(wang), p.y(0) + woff * std::sin(wang),
                      tp + alpha * woff + rng.uniform(1e-9, d * d)};
        CHECK_FALSE(ball_contains(origin(1), d, w, true));
    }
}

TEST_CASE("bicone membership and monotonicity") {
    const Point p1{0.3, -0.2, -1.0}, p2{0.3, -0.2, 1.0};
    // apex and generators
    CHECK(bicone_contains(p1, p2, 0.5, Point{0.3, -0.2, 0.0}));
    CHECK(bicone_contains(p1, p2, 0.5, p1));
    CHECK(bicone_contains(p1, p2, 0.5, p2));
    CHECK_FALSE(bicone_contains(p1, p2, 0.5, Point{0.9, -0.2, 0.0}));

    Rng rng(29);
    for (int k = 0; k < 500; ++k) {
        const Point q = rng.point(1, 1.5);
        const double r1 = rng.uniform(0.05, 1.0), r2 = r1 + rng.uniform(0.01, 1.0);
        if (bicone_contains(p1, p2, r1, q)) CHECK(bicone_contains(p1, p2, r2, q));
    }

    CHECK_THROWS_AS(bicone_contains(Point{0, 0, -1}, Point{0.1, 0, 1}, 0.5, origin(1)),
                    std::invalid_argument);  // not a vertical pair
    CHECK_THROWS_AS(bicone_contains(p2, p1, 0.5, origin(1)), std::invalid_argument);
}

TEST_CASE("bicone sits inside every common ball") {
    Rng rng(31);
    int instances = 0;
    for (int k = 0; k < 600 && instances < 200; ++k) {
        const double C = rng.uniform(0.1, 1.2);
        const double d = rng.uniform(0.8, 2.0);
        const double delta = rng.uniform(0.05, 0.5) * ball_profile(d, 2.0 * d / kPi);
        const LemmaConstants lc = lemma_constants(C, d, delta);

        const double zr = rng.uniform(0.0, C), za = rng.uniform(0.0, 2.0 * kPi);
        const double tmid = rng.uniform(-0.4, 0.4);
        const Point pa{zr * std::cos(za), zr * std::sin(za), tmid - delta};
        const Point pb{zr * std::cos(za), zr * std::sin(za), tmid + delta};

        Point center;
        bool ok = false;
        for (int tries = 0; tries < 200 && !ok; ++tries) {
            GeodesicParam gp;
            gp.chi = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
            const double norm = std::hypot(gp.chi[0], gp.chi[1]);
            if (norm < 1e-9) continue;
            const double scale = 0.99 * d * rng.uniform() / norm;
            gp.chi[0] *= scale;
            gp.chi[1] *= scale;
            gp.phi = rng.uniform(-kPi, kPi);
            center = mul(pa, inv(geodesic_point(gp)));
            ok = distance(center, pb) <= d;
        }
        if (!ok) continue;
        ++instances;

        for (int m = 0; m < 8; ++m) {
            const double ru = rng.uniform(0.0, 0.999 * lc.gamma);
            const double ua = rng.uniform(0.0, 2.0 * kPi);
            const double smax = delta * (1.0 - ru / lc.gamma);
            const Point q{pa.x(0) + ru * std::cos(ua), pa.y(0) + ru * std::sin(ua),
                          tmid + rng.uniform(-0.999, 0.999) * smax};
            REQUIRE(bicone_contains(pa, pb, lc.gamma, q));
            CHECK(ball_contains(center, d, q, true));
        }
    }
    CHECK(instances >= 150);
}

TEST_SUITE_END();
