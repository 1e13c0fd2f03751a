#pragma once

#include "krawtchouk.hpp"

namespace hulb {

// Minimum cardinality R(n,tau) of a tau-design in H(n,q):
//   tau = 2k-1:  q * sum_{i<=k-1} C(n-1,i)(q-1)^i
//   tau = 2k:        sum_{i<=k}   C(n,i)(q-1)^i
inline Bigint rao_bound(const SpaceParams& sp, int tau) {
    if (tau < 0) throw domain_error("tau must be nonnegative");
    Bigint qm1 = sp.q - 1;
    if (tau % 2 == 1) {
        int k = (tau + 1) / 2;
        Bigint s = 0;
        for (int i = 0; i <= k - 1; ++i) s += binomial(sp.n - 1, i) * ipow(qm1, static_cast<unsigned>(i));
        return sp.q * s;
    }
    int k = tau / 2;
    Bigint s = 0;
    for (int i = 0; i <= k; ++i) s += binomial(sp.n, i) * ipow(qm1, static_cast<unsigned>(i));
    return s;
}

enum class Branch { odd, even };

// The Levenshtein interval I_tau a cardinality falls in, with the branch
// data the quadrature needs.  I_{2k-1} = [t_{k-1}^{1,1}, t_k^{1,0}],
// I_{2k} = [t_k^{1,0}, t_k^{1,1}].
struct StrengthAssignment {
    int tau = 0;
    int k = 0;
    Branch branch = Branch::odd;
    double interval_lo = 0.0;
    double interval_hi = 0.0;
};

// Largest tau with M > R(n,tau); equivalently M lies in (R(n,tau), R(n,tau+1)].
// R(n,2n-1) = q^n, so tau never exceeds 2n-2.
inline StrengthAssignment tau_for(const SpaceParams& sp, const Bigint& M) {
    if (M <= sp.q) throw domain_error("M must exceed q");
    if (M > sp.cardinality()) throw domain_error("M exceeds the size of the space");
    int tau = 1;
    while (M > rao_bound(sp, tau + 1)) ++tau;
    StrengthAssignment sa;
    sa.tau = tau;
    if (tau % 2 == 1) {
        sa.k = (tau + 1) / 2;
        sa.branch = Branch::odd;
        sa.interval_lo = greatest_zero(sp, 1, 1, sa.k - 1);
        sa.interval_hi = greatest_zero(sp, 1, 0, sa.k);
    } else {
        sa.k = tau / 2;
        sa.branch = Branch::even;
        sa.interval_lo = greatest_zero(sp, 1, 0, sa.k);
        sa.interval_hi = greatest_zero(sp, 1, 1, sa.k);
    }
    return sa;
}

// Levenshtein cardinality bound L_tau(n,s) for s in I_tau:
//   L_{2k-1}(n,s) = [1 - Q_{k-1}^{(1,0)}(s) / Q_k(s)] * R(n,2k-2)
//   L_{2k}(n,s)   = q [1 - Q_{k-1}^{(1,1)}(s) / Q_k^{(0,1)}(s)] * R(n,2k-1)/q
inline double lev_bound(const SpaceParams& sp, int tau, double s, double interval_slack = 1e-9) {
    if (tau < 1 || tau > 2 * sp.n - 2) throw domain_error("tau out of range");
    int k;
    double lo, hi;
    if (tau % 2 == 1) {
        k = (tau + 1) / 2;
        lo = greatest_zero(sp, 1, 1, k - 1);
        hi = greatest_zero(sp, 1, 0, k);
    } else {
        k = tau / 2;
        lo = greatest_zero(sp, 1, 0, k);
        hi = greatest_zero(sp, 1, 1, k);
    }
    if (s < lo - interval_slack || s > hi + interval_slack)
        throw domain_error("s outside the interval for this tau");
    if (tau % 2 == 1) {
        double num = adjacent_eval(sp, 1, 0, k - 1, s);
        double den = kraw_eval(sp, k, s);
        return (1.0 - num / den) * to_double(rao_bound(sp, 2 * k - 2));
    }
    double num = adjacent_eval(sp, 1, 1, k - 1, s);
    double den = adjacent_eval(sp, 0, 1, k, s);
    return (1.0 - num / den) * to_double(rao_bound(sp, 2 * k - 1));
}

// The point s in I_tau with L_tau(n,s) = M.  L_tau is continuous and
// increasing across I_tau with endpoint values R(n,tau) and R(n,tau+1),
// so bisection applies.
inline double solve_s(const SpaceParams& sp, const StrengthAssignment& sa, double M) {
    double lo = sa.interval_lo, hi = sa.interval_hi;
    auto f = [&](double s) { return lev_bound(sp, sa.tau, s) - M; };
    double s;
    double flo = f(lo), fhi = f(hi);
    double slack = tol::check * std::max(1.0, M);
    if (std::abs(flo) <= slack && flo >= 0.0) s = lo;          // M at the left endpoint value
    else if (std::abs(fhi) <= slack && fhi <= 0.0) s = hi;     // M at the right endpoint value
    else s = bisect(f, lo, hi);
    double resid = std::abs(lev_bound(sp, sa.tau, s) - M);
    if (resid > tol::check * std::max(1.0, M))
        throw numeric_error("solve_s: residual exceeds tolerance");
    return s;
}

} // namespace hulb
