#pragma once

#include "refine.hpp"

namespace hulb {

enum class Parity { even, odd, conservative };

// Extreme-inner-product window estimates and the strict improvements they
// enable for 2-designs.  Everything here relies on the symmetry
// T_k(1,1) = T_k(-1,-1), T_k(1,-1) = T_k(-1,1) of the binary kernel, so
// q = 2 is hard-required throughout.
inline SpaceParams binary_space(int n) { return SpaceParams(n, 2); }

// gamma_0 * M for the even branch, computed from the rule weight and
// cross-checked against the kernel-ratio closed form
//   gamma_0 = T_k(s,1) / [T_k(-1,-1) T_k(s,1) - T_k(-1,1) T_k(s,-1)]
//   M = [T_k(1,1) T_k(s,-1) - T_k(1,-1) T_k(s,1)] / T_k(s,-1).
// Lies in (0,1) strictly inside the interval, hitting 0 and 1 at the ends.
inline double gamma0M(int n, const Bigint& M) {
    SpaceParams sp = binary_space(n);
    StrengthAssignment sa = tau_for(sp, M);
    if (sa.branch != Branch::even) throw domain_error("gamma0M needs an even-branch cardinality");
    if (M == rao_bound(sp, sa.tau + 1))
        throw domain_error("M at the interval endpoint; gamma0M is a limit value there");
    QuadratureRule r = levenshtein_rule(sp, M);
    double from_weight = r.weights[0] * r.M;

    int k = sa.k;
    double s = r.s;
    double ts1 = kernel_T(sp, k, s, 1.0), tsm1 = kernel_T(sp, k, s, -1.0);
    double t11 = kernel_T(sp, k, 1.0, 1.0), t1m1 = kernel_T(sp, k, 1.0, -1.0);
    double gamma0 = ts1 / (t11 * ts1 - t1m1 * tsm1);
    double Mform = (t11 * tsm1 - t1m1 * ts1) / tsm1;
    double from_kernel = gamma0 * Mform;

    if (std::abs(from_weight - from_kernel) > 1e-8)
        throw numeric_error("gamma0M: weight and kernel computations disagree");
    if (!(from_weight > 0.0 && from_weight < 1.0))
        throw numeric_error("gamma0M outside (0,1)");
    return from_weight;
}

// Smallest root xi in (-1, beta_1) of prod(t-beta_i)^2 = gamma0M * prod(-1-beta_i)^2;
// a lower estimate for the minimal inner product of any 2k-design of this size.
inline double xi_lower(int n, const Bigint& M) {
    SpaceParams sp = binary_space(n);
    double g0M = gamma0M(n, M);
    QuadratureRule r = levenshtein_rule(sp, M);
    auto fac = [&](double t) {
        double v = 1.0;
        for (size_t i = 1; i < r.nodes.size(); ++i) {
            double d = t - r.nodes[i];
            v *= d * d;
        }
        return v;
    };
    double target = g0M * fac(-1.0);
    auto g = [&](double t) { return fac(t) - target; };
    double beta1 = r.nodes[1];
    if (!(g(-1.0) > 0.0)) throw numeric_error("xi_lower: no sign change at -1");
    return bisect(g, -1.0, beta1);
}

namespace detail {
// The strip bounds need M in [n+1, 2n]; the raw estimate formulas stay
// real-valued (if vacuous) down to M = 2 and up to M = 2n.
inline void check_estimate_domain(int n, const Bigint& M) {
    if (M < 2 || M > 2 * n) throw domain_error("M must lie in [2, 2n]");
}
inline void check_strip_domain(int n, const Bigint& M) {
    if (M < n + 1 || M > 2 * n) throw domain_error("M must lie in [n+1, 2n]");
}
}

// Lower estimate for the minimal inner product ell(n,M,2) of a 2-design:
//   n - dmax even: 1 - sqrt(2M/n)
//   n - dmax odd:  1 - sqrt(2(nM-2))/n
// The conservative mode takes the smaller (weaker) value.
inline double ell_lower_2designs(int n, const Bigint& M, Parity parity) {
    detail::check_estimate_domain(n, M);
    double Md = to_double(M);
    double even_case = 1.0 - std::sqrt(2.0 * Md / n);
    double odd_case = 1.0 - std::sqrt(2.0 * (n * Md - 2.0)) / n;
    switch (parity) {
    case Parity::even: return even_case;
    case Parity::odd: return odd_case;
    case Parity::conservative: return std::min(even_case, odd_case);
    }
    throw domain_error("bad parity");
}

// Upper estimate for the maximal inner product s(n,M,2) of a 2-design:
//   dmin even: -1 + sqrt(2(M-2)/n)
//   dmin odd:  -1 + sqrt(2(M-2)(nM-2)/M)/n
// The conservative mode takes the larger (weaker) value.
inline double s_upper_2designs(int n, const Bigint& M, Parity parity) {
    detail::check_estimate_domain(n, M);
    double Md = to_double(M);
    double even_case = -1.0 + std::sqrt(2.0 * (Md - 2.0) / n);
    double odd_case = -1.0 + std::sqrt(2.0 * (Md - 2.0) * (n * Md - 2.0) / Md) / n;
    switch (parity) {
    case Parity::even: return even_case;
    case Parity::odd: return odd_case;
    case Parity::conservative: return std::max(even_case, odd_case);
    }
    throw domain_error("bad parity");
}

struct DesignWindow {
    int n = 0;
    Bigint M;
    double ell = 0.0;
    double s = 0.0;
    Parity ell_parity = Parity::conservative;
    Parity s_parity = Parity::conservative;
};

inline DesignWindow design_window(int n, const Bigint& M, Parity ell_parity = Parity::conservative,
                                  Parity s_parity = Parity::conservative) {
    DesignWindow w;
    w.n = n;
    w.M = M;
    w.ell = ell_lower_2designs(n, M, ell_parity);
    w.s = s_upper_2designs(n, M, s_parity);
    w.ell_parity = ell_parity;
    w.s_parity = s_parity;
    return w;
}

// Energy lower bound for 2-designs with M in [n+1, 2n]: the degree-2
// certificate through (ell, h(ell)) and tangent at a_0,
//   a_0 = [n(1-ell) - M] / [n(M ell + 1 - ell)],
// evaluating to
//   [n(M ell + 1 - ell)^2 h(a_0) + M(M-n-1) h(ell)] / [M(1 + n ell^2) - n(1-ell)^2].
inline BoundReport lower_2design(int n, const Bigint& M, const Potential& pot,
                                 std::optional<double> ell_override = std::nullopt) {
    detail::check_strip_domain(n, M);
    SpaceParams sp = binary_space(n);
    double Md = to_double(M);
    double ell = ell_override ? *ell_override
                              : ell_lower_2designs(n, M, Parity::conservative);
    double a0 = (n * (1.0 - ell) - Md) / (n * (Md * ell + 1.0 - ell));
    double den = Md * (1.0 + n * ell * ell) - n * (1.0 - ell) * (1.0 - ell);
    BoundReport rep;
    rep.method = Method::window_lower;
    if (std::abs(den) < 1e-14 * Md * n) {
        rep.notes = "degenerate denominator; ";
        rep.a1_ok = CheckFlag::fail;
        return rep;
    }
    double c = n * (Md * ell + 1.0 - ell) * (Md * ell + 1.0 - ell);
    rep.value = (c * pot.deriv(n, a0, 0) + Md * (Md - n - 1.0) * pot.deriv(n, ell, 0)) / den;

    Poly f = hermite_interpolant(n, pot, {{ell, 1}, {a0, 2}});
    rep.certificate = f;
    rep.kraw = expand(sp, f);
    rep.a1_ok = CheckFlag::pass;
    auto grid = sp.grid();
    for (int j = 0; j < n; ++j) {
        if (grid[j] < ell - 1e-12) continue;
        if (f(grid[j]) > pot.deriv(n, grid[j], 0) + tol::check) { rep.a1_ok = CheckFlag::fail; break; }
    }
    rep.a2_ok = check_a2(*rep.kraw, 3);
    return rep;
}

// Strict improvement of the even-branch ULB given a lower estimate
// ell > -1 for the minimal inner product: interpolate h at ell and
// doubly at beta_1..beta_k (dropping the condition at -1).
inline BoundReport strict_even_bound(int n, const Bigint& M, const Potential& pot, double ell) {
    if (!(ell > -1.0)) throw domain_error("ell must exceed -1 for a strict improvement");
    SpaceParams sp = binary_space(n);
    StrengthAssignment sa = tau_for(sp, M);
    if (sa.branch != Branch::even) throw domain_error("strict even bound needs an even-branch cardinality");
    QuadratureRule r = levenshtein_rule(sp, M);
    if (!(ell < r.nodes[1])) throw domain_error("ell must lie below beta_1");

    std::vector<HermiteCondition> conds{{ell, 1}};
    for (size_t i = 1; i < r.nodes.size(); ++i) conds.push_back({r.nodes[i], 2});
    Poly G = hermite_interpolant(n, pot, conds);

    BoundReport rep;
    rep.method = Method::window_lower;
    rep.certificate = G;
    double g0 = grid_mean(sp, [&](double t) { return G(t); });
    rep.value = g0 * r.M - G(1.0);
    rep.a1_ok = CheckFlag::pass;
    auto grid = sp.grid();
    for (int j = 0; j < n; ++j) {
        if (grid[j] < ell - 1e-12) continue;
        if (G(grid[j]) > pot.deriv(n, grid[j], 0) + tol::check) { rep.a1_ok = CheckFlag::fail; break; }
    }
    if (G.degree() <= n) {
        rep.kraw = expand(sp, G);
        rep.a2_ok = check_a2(*rep.kraw, r.tau + 1);
    }
    return rep;
}

// Energy upper bound for 2-designs: the chord of h over [ell, s],
//   [(M-1)(s h(ell) - ell h(s)) + h(ell) - h(s)] / (s - ell),
// validated as a generic upper certificate of degree 1.
inline BoundReport upper_2design(int n, const Bigint& M, const Potential& pot) {
    detail::check_strip_domain(n, M);
    SpaceParams sp = binary_space(n);
    double Md = to_double(M);
    double ell = ell_lower_2designs(n, M, Parity::conservative);
    double s = s_upper_2designs(n, M, Parity::conservative);
    if (!(s > ell)) throw domain_error("degenerate window: s must exceed ell");
    double hl = pot.deriv(n, ell, 0), hs = pot.deriv(n, s, 0);
    double value = ((Md - 1.0) * (s * hl - ell * hs) + hl - hs) / (s - ell);

    double slope = (hs - hl) / (s - ell);
    Poly chord({hl - slope * ell, slope});
    BoundReport rep = lp_upper_value(chord, sp, M, 2, pot, ell, s);
    rep.method = Method::window_upper;
    rep.value = value;
    return rep;
}

// n -> infinity constants of the 2-design strip at M = xi_hat * n:
// the lower bound grows like h(0)*xi_hat*n, the upper like c1*n + c2 with
// the window limits ell = 1 - sqrt(2 xi_hat), s = -ell.
struct StripAsymptotic {
    double lower_slope = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double ell_limit = 0.0;
    double s_limit = 0.0;
};

inline StripAsymptotic strip_asymptotic(double xi_hat, const Potential& pot) {
    if (!(xi_hat > 1.0 && xi_hat < 2.0)) throw domain_error("xi_hat must lie in (1,2)");
    if (pot.kind == Potential::Kind::riesz)
        throw domain_error("asymptotic constants need an n-free potential");
    double ell = 1.0 - std::sqrt(2.0 * xi_hat);
    double s = -ell;
    double h0 = pot.deriv(0, 0.0, 0), hl = pot.deriv(0, ell, 0), hs = pot.deriv(0, s, 0);
    StripAsymptotic out;
    out.ell_limit = ell;
    out.s_limit = s;
    out.lower_slope = h0 * xi_hat;
    out.c1 = xi_hat * (s * hl - ell * hs) / (s - ell);
    out.c2 = ((1.0 - s) * hl - (1.0 - ell) * hs) / (s - ell);
    return out;
}

} // namespace hulb
