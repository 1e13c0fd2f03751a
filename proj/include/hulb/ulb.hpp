#pragma once

#include "hermite.hpp"
#include "potential.hpp"
#include "quadrature.hpp"
#include "report.hpp"

namespace hulb {

inline double potential_eval(const Potential& pot, const SpaceParams& sp, double t, int order = 0) {
    return pot.deriv(sp.n, t, order);
}

// f <= h on T_n, excluding t = 1 (energy sums never evaluate there, and the
// Riesz kernel has its pole at 1).
inline CheckFlag check_a1_grid(const SpaceParams& sp, const Potential& pot,
                               const std::function<double(double)>& f, double slack = tol::check) {
    auto grid = sp.grid();
    for (int j = 0; j < sp.n; ++j)
        if (f(grid[j]) > pot.deriv(sp.n, grid[j], 0) + slack) return CheckFlag::fail;
    return CheckFlag::pass;
}

// The same comparison on a 10n-point grid over [-1,1); informational.
inline bool check_a1_dense(const SpaceParams& sp, const Potential& pot,
                           const std::function<double(double)>& f, double slack = tol::check) {
    int m = 10 * sp.n;
    for (int j = 0; j < m; ++j) {
        double t = -1.0 + 2.0 * j / m;
        if (f(t) > pot.deriv(sp.n, t, 0) + slack) return false;
    }
    return true;
}

// Krawtchouk coefficients f_i >= 0 for i >= from (with roundoff slack).
inline CheckFlag check_a2(const KrawExpansion& ex, int from, double slack = tol::check) {
    for (size_t i = std::max(from, 1); i < ex.coeff.size(); ++i)
        if (ex.coeff[i] < -slack) return CheckFlag::fail;
    return CheckFlag::pass;
}

// Universal lower bound on energy: M * sum_i w_i h(node_i) over the
// Levenshtein rule for (n,q,M).
inline BoundReport ulb(const SpaceParams& sp, const Bigint& M, const Potential& pot,
                       const QuadratureRule* prebuilt = nullptr) {
    QuadratureRule r = prebuilt ? *prebuilt : levenshtein_rule(sp, M);
    double v = 0.0;
    for (size_t i = 0; i < r.nodes.size(); ++i) v += r.weights[i] * pot.deriv(sp.n, r.nodes[i], 0);
    BoundReport rep;
    rep.value = r.M * v;
    rep.method = Method::ulb;
    return rep;
}

// The degree-tau polynomial touching h at the quadrature nodes: double
// conditions (value and slope) at every node except the even branch's
// fixed node -1, which takes a value condition only.  Its linear-programming
// value f_0 M - f(1) reproduces the ULB by exactness of the rule.
inline BoundReport hermite_certificate(const SpaceParams& sp, const Bigint& M, const Potential& pot,
                                       const QuadratureRule* prebuilt = nullptr) {
    QuadratureRule r = prebuilt ? *prebuilt : levenshtein_rule(sp, M);
    std::vector<HermiteCondition> conds;
    for (size_t i = 0; i < r.nodes.size(); ++i) {
        bool simple = (r.branch == Branch::even && i == 0);
        conds.push_back({r.nodes[i], simple ? 1 : 2});
    }
    Poly f = hermite_interpolant(sp.n, pot, conds);

    BoundReport rep;
    rep.method = Method::ulb;
    rep.certificate = f;
    double f0 = grid_mean(sp, [&](double t) { return f(t); });
    rep.value = f0 * r.M - f(1.0);
    rep.a1_ok = check_a1_grid(sp, pot, [&](double t) { return f(t); });
    if (!check_a1_dense(sp, pot, [&](double t) { return f(t); }))
        rep.notes += "dense-grid A1 violation; ";
    if (f.degree() <= sp.n) {
        rep.kraw = expand(sp, f);
        rep.a2_ok = check_a2(*rep.kraw, 1);
    } else {
        rep.notes += "degree exceeds n, coefficient check skipped; ";
    }
    return rep;
}

// Value of an explicit lower-bound certificate f: f_0 M - f(1), with the
// positivity checks recorded.  Without design_tau the full condition (all
// coefficients from degree 1) applies; with it only degrees above tau.
inline BoundReport lp_lower_value(const Poly& f, const SpaceParams& sp, const Bigint& M,
                                  const Potential& pot, std::optional<int> design_tau = std::nullopt) {
    if (f.degree() > sp.n) throw domain_error("certificate degree exceeds n");
    BoundReport rep;
    rep.method = Method::lp_generic;
    rep.certificate = f;
    rep.kraw = expand(sp, f);
    rep.value = rep.kraw->coeff[0] * to_double(M) - f(1.0);
    rep.a1_ok = check_a1_grid(sp, pot, [&](double t) { return f(t); });
    if (!check_a1_dense(sp, pot, [&](double t) { return f(t); }))
        rep.notes += "dense-grid A1 violation; ";
    rep.a2_ok = check_a2(*rep.kraw, design_tau ? *design_tau + 1 : 1);
    return rep;
}

// Value of an explicit upper-bound certificate g for codes whose inner
// products lie in [ell, s]: g_0 M - g(1), with g >= h on T_n intersected
// with the window and g_i <= 0 above degree tau.
inline BoundReport lp_upper_value(const Poly& g, const SpaceParams& sp, const Bigint& M, int tau,
                                  const Potential& pot, double ell, double s) {
    if (g.degree() > sp.n) throw domain_error("certificate degree exceeds n");
    if (ell > s || ell < -1.0 || s >= 1.0) throw domain_error("window must satisfy -1 <= ell <= s < 1");
    BoundReport rep;
    rep.method = Method::lp_generic;
    rep.certificate = g;
    rep.kraw = expand(sp, g);
    rep.value = rep.kraw->coeff[0] * to_double(M) - g(1.0);
    rep.a1_ok = CheckFlag::pass;
    auto grid = sp.grid();
    for (int j = 0; j <= sp.n; ++j) {
        double t = grid[j];
        if (t < ell - 1e-12 || t > s + 1e-12) continue;
        if (g(t) < pot.deriv(sp.n, t, 0) - tol::check) { rep.a1_ok = CheckFlag::fail; break; }
    }
    CheckFlag b2 = CheckFlag::pass;
    for (size_t i = tau + 1; i < rep.kraw->coeff.size(); ++i)
        if (rep.kraw->coeff[i] > tol::check) { b2 = CheckFlag::fail; break; }
    rep.a2_ok = b2;
    return rep;
}

} // namespace hulb
