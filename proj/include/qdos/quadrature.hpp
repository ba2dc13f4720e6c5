#pragma once

#include <cmath>
#include <functional>

namespace qdos {

struct QuadratureOptions {
    double rel_tol = 1e-6;
    int max_depth = 20;
};

namespace detail {

inline double simpson(double fa, double fm, double fb, double h) {
    return (fa + 4.0 * fm + fb) * (h / 6.0);
}

template <class F>
double adaptive_step(const F& f, double a, double m, double b, double fa, double fm,
                     double fb, double whole, double tol, int depth, int max_depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double err = left + right - whole;
    if (depth >= max_depth || std::abs(err) <= 15.0 * tol)
        return left + right + err / 15.0;
    return adaptive_step(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1, max_depth)
         + adaptive_step(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1, max_depth);
}

} // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] to the requested relative
/// tolerance. Intended for smooth integrands; the recursion depth is capped.
template <class F>
double adaptive_simpson(const F& f, double a, double b, QuadratureOptions opts = {}) {
    if (!(b > a))
        return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = detail::simpson(fa, fm, fb, b - a);
    const double scale = std::abs(whole) > 0.0 ? std::abs(whole) : 1.0;
    return detail::adaptive_step(f, a, m, b, fa, fm, fb, whole, opts.rel_tol * scale, 0,
                                 opts.max_depth);
}

} // namespace qdos
