#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "heis/metric.hpp"
#include "heis/point.hpp"
#include "heis/rng.hpp"

using namespace heis;

TEST_SUITE_BEGIN("point");

TEST_CASE("group law matches the defining formula") {
    // identity element
    const Point p{0.3, -0.7, 1.1};
    CHECK(mul(origin(1), p) == p);
    CHECK(mul(p, origin(1)) == p);

    // [i,0]*[1,0] = [1+i, 2]: Im(i * conj(1)) = 1
    const Point a{0.0, 1.0, 0.0}, b{1.0, 0.0, 0.0};
    const Point ab = mul(a, b);
    CHECK(ab.x(0) == doctest::Approx(1.0));
    CHECK(ab.y(0) == doctest::Approx(1.0));
    CHECK(ab.t() == doctest::Approx(2.0));

    // two-coordinate case: t picks up the sum of both symplectic areas
    const Point c{1.0, 0.0, 0.0, 1.0, 0.0}, d{0.0, 1.0, 1.0, 0.0, 0.0};
    const double im = c.y(0) * d.x(0) - c.x(0) * d.y(0) + c.y(1) * d.x(1) - c.x(1) * d.y(1);
    CHECK(mul(c, d).t() == doctest::Approx(2.0 * im));
}

TEST_CASE("inverse annihilates exactly") {
    CHECK(inv(origin(1)) == origin(1));
    const Point p{1.0, 1.0, 3.0};
    const Point q = inv(p);
    CHECK(q.x(0) == -1.0);
    CHECK(q.y(0) == -1.0);
    CHECK(q.t() == -3.0);

    Rng rng(7);
    for (int k = 0; k < 200; ++k) {
        const Point a = rng.point(2, 5.0);
        const Point e = mul(a, inv(a));
        for (double c : e.coords()) CHECK(std::abs(c) <= 1e-14);
        // group axiom: a^{-1} (a b) = b
        const Point b = rng.point(2, 5.0);
        const Point back = mul(inv(a), mul(a, b));
        for (std::size_t i = 0; i < back.coords().size(); ++i)
            CHECK(back.coords()[i] == doctest::Approx(b.coords()[i]).epsilon(1e-12));
    }
}

TEST_CASE("associativity on random triples") {
    Rng rng(11);
    for (int k = 0; k < 500; ++k) {
        const std::size_t n = 1 + k % 3;
        const Point a = rng.point(n, 3.0), b = rng.point(n, 3.0), c = rng.point(n, 3.0);
        const Point lhs = mul(mul(a, b), c), rhs = mul(a, mul(b, c));
        for (std::size_t i = 0; i < lhs.coords().size(); ++i)
            CHECK(std::abs(lhs.coords()[i] - rhs.coords()[i]) <= 1e-12);
    }
}

TEST_CASE("dilations form a semigroup") {
    const Point p{1.0, 0.0, 1.0};
    CHECK(dilate(1.0, p) == p);
    const Point d2 = dilate(2.0, p);
    CHECK(d2.x(0) == 2.0);
    CHECK(d2.t() == 4.0);
    Rng rng(3);
    for (int k = 0; k < 100; ++k) {
        const Point q = rng.point(1, 4.0);
        const double lam = rng.uniform(0.0, 2.0), mu = rng.uniform(0.0, 2.0);
        const Point a = dilate(lam, dilate(mu, q)), b = dilate(lam * mu, q);
        for (std::size_t i = 0; i < a.coords().size(); ++i)
            CHECK(a.coords()[i] == doctest::Approx(b.coords()[i]).epsilon(1e-13));
    }
    CHECK_THROWS_AS(dilate(-0.5, p), std::invalid_argument);
}

TEST_CASE("rotations compose additively and fix t") {
    const Point p{1.0, 0.0, 5.0};
    const Point half_turn = rotate(RotationAngles({M_PI}), p);
    CHECK(half_turn.x(0) == doctest::Approx(-1.0));
    CHECK(half_turn.y(0) == doctest::Approx(0.0));
    CHECK(half_turn.t() == 5.0);

    Rng rng(5);
    for (int k = 0; k < 100; ++k) {
        const Point q = rng.point(2, 3.0);
        const double a0 = rng.uniform(-3.0, 3.0), a1 = rng.uniform(-3.0, 3.0);
        const double b0 = rng.uniform(-3.0, 3.0), b1 = rng.uniform(-3.0, 3.0);
        const Point r1 = rotate(RotationAngles({a0, a1}), rotate(RotationAngles({b0, b1}), q));
        const Point r2 = rotate(RotationAngles({a0 + b0, a1 + b1}), q);
        for (std::size_t i = 0; i < r1.coords().size(); ++i)
            CHECK(r1.coords()[i] == doctest::Approx(r2.coords()[i]).epsilon(1e-12));
    }
}

TEST_CASE("reflections are involutions and iota is an isometry") {
    const Point p{0.0, 1.0, 2.0};  // [i, 2]
    const Point ip = reflect_iota(p);
    CHECK(ip.y(0) == -1.0);
    CHECK(ip.t() == -2.0);

    Rng rng(13);
    for (int k = 0; k < 100; ++k) {
        const Point q = rng.point(2, 4.0);
        CHECK(reflect_sigma(reflect_sigma(q)) == q);
        CHECK(reflect_iota(reflect_iota(q)) == q);
        const Point r = rng.point(2, 4.0);
        CHECK(distance(reflect_iota(q), reflect_iota(r)) ==
              doctest::Approx(distance(q, r)).epsilon(1e-10));
    }
}

TEST_CASE("projection returns the horizontal part") {
    Rng rng(17);
    const Point p = rng.point(2, 3.0), q = rng.point(2, 3.0);
    const auto z = project(mul(p, q));
    for (std::size_t j = 0; j < 2; ++j) {
        CHECK(z[j] == doctest::Approx(p.x(j) + q.x(j)));
        CHECK(z[2 + j] == doctest::Approx(p.y(j) + q.y(j)));
    }
    const auto zd = project(dilate(3.0, p));
    for (std::size_t j = 0; j < 4; ++j) CHECK(zd[j] == doctest::Approx(3.0 * p.z()[j]));
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(mul(origin(1), origin(2)), std::invalid_argument);
    CHECK_THROWS_AS(rotate(RotationAngles({0.1}), origin(2)), std::invalid_argument);
}

TEST_CASE("serialization round-trips") {
    const Point p{0.125, -3.5, 42.0};
    const Point back = point_from_json(to_json_array(p));
    CHECK(back == p);
    CHECK(to_csv_row(p) == "0.125,-3.5,42");
}

TEST_SUITE_END();
