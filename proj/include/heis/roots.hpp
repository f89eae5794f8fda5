#pragma once

#include <cmath>
#include <stdexcept>

namespace heis {

// Bracketing bisection: requires fn(lo) and fn(hi) of opposite sign (zero at
// an endpoint is returned directly). Drives the bracket width below tol_abs.
template <class F>
double bisect(F&& fn, double lo, double hi, double tol_abs = 1e-13, int max_iter = 200) {
    double flo = fn(lo), fhi = fn(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::invalid_argument("bisect: root not bracketed");
    for (int i = 0; i < max_iter && hi - lo > tol_abs; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at floating resolution
        const double fm = fn(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (fhi > 0.0)) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

// Bisection followed by safeguarded Newton polish; steps leaving the bracket
// fall back to plain bisection.
template <class F, class DF>
double bisect_newton(F&& fn, DF&& dfn, double lo, double hi, double tol_abs = 1e-13,
                     int polish = 4) {
    double x = bisect(fn, lo, hi, std::max(tol_abs, 1e-6 * (hi - lo)));
    double left = std::max(lo, x - 1e-5 * (hi - lo));
    double right = std::min(hi, x + 1e-5 * (hi - lo));
    for (int i = 0; i < polish; ++i) {
        const double f = fn(x), df = dfn(x);
        if (f == 0.0 || df == 0.0) break;
        const double step = f / df;
        const double xn = x - step;
        if (!(xn > left && xn < right)) break;
        x = xn;
        if (std::abs(step) < tol_abs * 1e-3) break;
    }
    return x;
}

// Golden-section maximizer of a unimodal-ish fn on [lo, hi].
template <class F>
double golden_max(F&& fn, double lo, double hi, double tol_abs = 1e-12, int max_iter = 120) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - invphi * (b - a), d = a + invphi * (b - a);
    double fc = fn(c), fd = fn(d);
    for (int i = 0; i < max_iter && b - a > tol_abs; ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = fn(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = fn(d);
        }
    }
    return fc > fd ? c : d;
}

}  // namespace heis
