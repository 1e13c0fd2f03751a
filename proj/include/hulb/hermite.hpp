#pragma once

#include "poly.hpp"
#include "potential.hpp"

#include <functional>

namespace hulb {

// Hermite interpolation via Newton divided differences with repeated
// abscissae: a node of multiplicity m consumes derivative orders 0..m-1.
struct HermiteCondition {
    double t = 0.0;
    int multiplicity = 1;
};

// derivs(t, m) must return the m-th derivative of the target function.
inline Poly hermite_interpolant(const std::function<double(double, int)>& derivs,
                                const std::vector<HermiteCondition>& conds) {
    std::vector<double> x; // abscissae, each condition repeated by multiplicity
    for (const auto& c : conds) {
        if (c.multiplicity < 1) throw domain_error("multiplicity must be positive");
        for (int j = 0; j < c.multiplicity; ++j) x.push_back(c.t);
    }
    const int m = static_cast<int>(x.size());
    if (m == 0) throw domain_error("no interpolation conditions");

    // dd holds the running column of divided differences
    std::vector<double> dd(m), coef(m);
    double fact = 1.0;
    for (int i = 0; i < m; ++i) dd[i] = derivs(x[i], 0);
    coef[0] = dd[0];
    for (int order = 1; order < m; ++order) {
        fact *= order;
        for (int i = m - 1; i >= order; --i) {
            if (x[i] == x[i - order]) {
                dd[i] = derivs(x[i], order) / fact;
            } else {
                dd[i] = (dd[i] - dd[i - 1]) / (x[i] - x[i - order]);
            }
        }
        coef[order] = dd[order];
    }

    // Newton form -> monomial coefficients
    Poly p({coef[m - 1]});
    for (int i = m - 2; i >= 0; --i) {
        p = p * Poly({-x[i], 1.0});
        p += Poly({coef[i]});
    }
    return p;
}

inline Poly hermite_interpolant(int n, const Potential& h,
                                const std::vector<HermiteCondition>& conds) {
    return hermite_interpolant([&](double t, int m) { return h.deriv(n, t, m); }, conds);
}

} // namespace hulb
