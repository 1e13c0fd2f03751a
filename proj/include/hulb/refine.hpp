#pragma once

#include "ulb.hpp"

#include <map>

namespace hulb {

// Test function P_j = 1/M + sum_i w_i Q_j(node_i).  Vanishes for
// 1 <= j <= tau by exactness; a negative value at some j > tau means the
// bound for this (n,q,M) can be improved by a degree-j polynomial.
inline double test_function_at(const QuadratureRule& r, int j) {
    if (j < 0 || j > r.space.n) throw domain_error("test function degree out of range");
    double v = 1.0 / r.M;
    for (size_t i = 0; i < r.nodes.size(); ++i)
        v += r.weights[i] * kraw_eval(r.space, j, r.nodes[i]);
    return v;
}

inline double test_function(const SpaceParams& sp, const Bigint& M, int j) {
    return test_function_at(levenshtein_rule(sp, M), j);
}

struct TestFunctionScan {
    std::vector<std::pair<int, double>> values; // (j, P_j) for tau+1 <= j <= j_max
    std::optional<int> first_negative;
};

inline TestFunctionScan scan_test_functions(const SpaceParams& sp, const Bigint& M, int j_max) {
    if (j_max > sp.n) throw domain_error("scan degree exceeds n");
    QuadratureRule r = levenshtein_rule(sp, M);
    TestFunctionScan scan;
    for (int j = r.tau + 1; j <= j_max; ++j) {
        double p = test_function_at(r, j);
        scan.values.emplace_back(j, p);
        if (p < -tol::check && !scan.first_negative) scan.first_negative = j;
    }
    return scan;
}

// Largest eps (geometric grid then bisection) such that h - eps*Q_j keeps
// nonnegative derivatives of all orders 0..j, sampled at 64 Chebyshev
// points per order on [-1, 1-1e-6].
inline double max_admissible_epsilon(const SpaceParams& sp, const Potential& pot, int j) {
    std::vector<Poly> qderiv;
    qderiv.push_back(kraw_poly(sp, j));
    for (int m = 1; m <= j; ++m) qderiv.push_back(qderiv.back().derivative());

    const double a = -1.0, b = 1.0 - 1e-6;
    std::vector<double> pts(64);
    for (int i = 0; i < 64; ++i)
        pts[i] = 0.5 * (a + b) + 0.5 * (b - a) * std::cos(M_PI * i / 63.0);

    auto admissible = [&](double eps) {
        for (int m = 0; m <= j; ++m)
            for (double t : pts)
                if (pot.deriv(sp.n, t, m) - eps * qderiv[m](t) < 0.0) return false;
        return true;
    };

    double eps = 1.0;
    int halvings = 0;
    while (!admissible(eps)) {
        eps *= 0.5;
        if (++halvings > 200) throw numeric_error("no admissible epsilon found");
    }
    double lo = eps, hi = 2.0 * eps;
    while (admissible(hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e18) return lo;
    }
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        if (admissible(mid)) lo = mid;
        else hi = mid;
    }
    return lo;
}

// Constructive improvement when P_j < 0: subtract the largest admissible
// multiple of Q_j from h, interpolate the remainder at the rule nodes, and
// add the multiple back.  The resulting f = eps*Q_j + g satisfies the
// lower-bound conditions and its value is ULB - M*eps*P_j > ULB.
inline BoundReport higher_degree_bound(const SpaceParams& sp, const Bigint& M,
                                       const Potential& pot, int j) {
    QuadratureRule r = levenshtein_rule(sp, M);
    double pj = test_function_at(r, j);
    if (pj >= 0.0) throw domain_error("test function is nonnegative; no improvement at this degree");

    double eps = max_admissible_epsilon(sp, pot, j);
    std::vector<Poly> qderiv;
    qderiv.push_back(kraw_poly(sp, j));
    for (int m = 1; m <= j; ++m) qderiv.push_back(qderiv.back().derivative());
    auto htilde = [&](double t, int m) { return pot.deriv(sp.n, t, m) - eps * qderiv[m](t); };

    std::vector<HermiteCondition> conds;
    for (size_t i = 0; i < r.nodes.size(); ++i) {
        bool simple = (r.branch == Branch::even && i == 0);
        conds.push_back({r.nodes[i], simple ? 1 : 2});
    }
    Poly f = hermite_interpolant(htilde, conds) + eps * qderiv[0];

    double base = ulb(sp, M, pot, &r).value;
    BoundReport rep;
    rep.method = Method::higher_degree;
    rep.certificate = f;
    rep.value = base - r.M * eps * pj;
    rep.a1_ok = check_a1_grid(sp, pot, [&](double t) { return f(t); });
    if (f.degree() <= sp.n) {
        rep.kraw = expand(sp, f);
        rep.a2_ok = check_a2(*rep.kraw, 1);
    }
    {
        std::ostringstream os;
        os.precision(12);
        os << "epsilon=" << eps << "; P_j=" << pj << "; ";
        rep.notes += os.str();
    }
    return rep;
}

// Pair-covering refinement: every quadrature node is replaced by
// interpolation data on the grid T_n.  A node lying on the grid keeps the
// Hermite double condition there; otherwise the two bracketing grid points
// take simple conditions, and a point shared by two brackets collects a
// double condition.  The even branch's fixed node -1 stays a simple
// condition.  All conditions land on T_n, so the certificate's restriction
// to T_n touches h only at grid points and the bound can only move up.
inline BoundReport pair_covering(const SpaceParams& sp, const Bigint& M, const Potential& pot,
                                 const QuadratureRule* prebuilt = nullptr) {
    QuadratureRule r = prebuilt ? *prebuilt : levenshtein_rule(sp, M);
    const int n = sp.n;
    std::map<int, int> mult; // grid index -> condition multiplicity
    size_t first = 0;
    if (r.branch == Branch::even) {
        mult[0] += 1; // node at t = -1, grid index 0
        first = 1;
    }
    const double snap = 1e-12;
    for (size_t i = first; i < r.nodes.size(); ++i) {
        double a = r.nodes[i];
        int lo = static_cast<int>(std::floor((a + 1.0) * n / 2.0));
        lo = std::max(0, std::min(lo, n - 1));
        double tlo = -1.0 + 2.0 * lo / n, thi = -1.0 + 2.0 * (lo + 1) / n;
        if (std::abs(a - tlo) < snap) mult[lo] += 2;
        else if (std::abs(a - thi) < snap) mult[lo + 1] += 2;
        else {
            mult[lo] += 1;
            mult[lo + 1] += 1;
        }
    }
    std::vector<HermiteCondition> conds;
    for (auto [idx, m] : mult) conds.push_back({-1.0 + 2.0 * idx / n, m});
    Poly f = hermite_interpolant(sp.n, pot, conds);

    BoundReport rep;
    rep.method = Method::pair_cover;
    rep.certificate = f;
    double f0 = grid_mean(sp, [&](double t) { return f(t); });
    rep.value = f0 * r.M - f(1.0);
    rep.a1_ok = check_a1_grid(sp, pot, [&](double t) { return f(t); });
    if (rep.a1_ok != CheckFlag::pass)
        throw numeric_error("pair covering certificate exceeds the potential on the grid");
    // no dense off-grid check here: exceeding h between grid points is the
    // whole idea, only the restriction to T_n matters
    if (f.degree() <= sp.n) {
        rep.kraw = expand(sp, f);
        rep.a2_ok = check_a2(*rep.kraw, 1);
    }
    return rep;
}

} // namespace hulb
