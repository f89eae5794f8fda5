#pragma once

#include "heis/point.hpp"

namespace heis {

// Quantitative constants of the outer-cone and bicone containment lemmas for
// the ball B(0, d) and sets of max horizontal norm C, vertical half-gap delta.
struct LemmaConstants {
    double C = 0.0;
    double d = 0.0;
    double delta = 0.0;
    double alpha = 0.0;  // Lipschitz constant of h_d on [0, rbar]
    double rbar = 0.0;   // h_d < delta beyond rbar, root on the decreasing branch
    double M = 0.0;      // Lipschitz constant of h_d on [0, (d+rbar)/2]
    double gamma = 0.0;  // min((d-rbar)/2, delta/(2C+2d+M))
    double beta = 0.0;   // alpha + 2C
};

/// Root of h_d = delta on the decreasing branch [2d/pi, d]; requires
/// 0 < delta <= max h_d = 2 d^2 / pi.
double rbar_fn(double d, double delta);

/// sup |h_d'| over [0, rbar(d,delta)], evaluated from the closed form.
double cone_alpha(double d, double delta);

LemmaConstants lemma_constants(double C, double d, double delta);

/// Membership in the bicone F_{p1,p2}(r) spanned by a vertical pair
/// (z_{p1} = z_{p2}, t_{p2} > t_{p1}).
bool bicone_contains(const Point& p1, const Point& p2, double r, const Point& q);

}  // namespace heis
