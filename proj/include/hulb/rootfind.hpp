#pragma once

#include "common.hpp"

#include <functional>

namespace hulb {

// Bisection on [a,b] with f(a), f(b) of opposite sign (or zero at an end).
// Runs past the requested width down to machine resolution; the extra
// iterations are cheap and the downstream exactness checks want them.
inline double bisect(const std::function<double(double)>& f, double a, double b,
                     double tol = tol::root) {
    double fa = f(a);
    if (fa == 0.0) return a;
    double fb = f(b);
    if (fb == 0.0) return b;
    if ((fa > 0) == (fb > 0)) throw numeric_error("bisect: endpoints do not bracket a root");
    (void)tol;
    for (int it = 0; it < 200; ++it) {
        double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0) == (fa > 0)) { a = m; fa = fm; }
        else b = m;
    }
    return 0.5 * (a + b);
}

// All simple roots of f in (lo, hi], located by a sign scan of the given
// step followed by bisection.  `expected` is the root count known from
// theory; on a shortfall the scan retries once with a 10x finer step and
// then reports failure.
inline std::vector<double> isolate_roots(const std::function<double(double)>& f,
                                         double lo, double hi, int expected,
                                         double step) {
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<double> roots;
        double x0 = lo;
        double f0 = f(x0);
        while (x0 < hi && f0 == 0.0) {
            // lo itself is excluded; nudge off an exact zero at the left end
            x0 += step * 1e-3;
            f0 = f(x0);
        }
        double x = x0;
        while (x < hi) {
            double xn = std::min(x + step, hi);
            double fn = f(xn);
            if (fn == 0.0) {
                roots.push_back(xn);
                x = xn + step * 1e-3;
                f0 = f(x);
                continue;
            }
            if ((f0 > 0) != (fn > 0)) roots.push_back(bisect(f, x, xn));
            x = xn;
            f0 = fn;
        }
        if (static_cast<int>(roots.size()) >= expected) return roots;
        step *= 0.1;
    }
    throw numeric_error("isolate_roots: found fewer roots than expected");
}

} // namespace hulb
