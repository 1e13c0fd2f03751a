#pragma once

#include "bounds.hpp"

namespace hulb {

// Solve A x = b by Gaussian elimination with partial pivoting.
inline std::vector<double> solve_linear(std::vector<std::vector<double>> A, std::vector<double> b) {
    const int m = static_cast<int>(b.size());
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        if (A[piv][col] == 0.0) throw numeric_error("singular linear system");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (int r = col + 1; r < m; ++r) {
            double f = A[r][col] / A[col][col];
            if (f == 0.0) continue;
            for (int c = col; c < m; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(m);
    for (int r = m - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < m; ++c) s -= A[r][c] * x[c];
        x[r] = s / A[r][r];
    }
    return x;
}

// Levenshtein quadrature: 1/M at t=1 plus weighted nodes in [-1,1),
// exact for polynomials of degree up to tau.
//   odd branch  (tau=2k-1): k nodes alpha_0 < ... < alpha_{k-1} = s
//   even branch (tau=2k):   k+1 nodes -1 = beta_0 < ... < beta_k = s
struct QuadratureRule {
    SpaceParams space;
    Branch branch = Branch::odd;
    int k = 0;
    int tau = 0;
    double s = 0.0;
    double M = 0.0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Rule from a prescribed endpoint s in the interval for (branch, k) and a
// cardinality value M (need not be an integer; M = L_tau(n,s) up to choice
// of rounding).  The interior nodes are the remaining roots of the bracket
//   F(t) = P_m(t) P_{m-1}(s) - P_m(s) P_{m-1}(t)
// where P is the (1,0) family for the odd branch and the (1,1) family for
// the even branch; s itself is always a root of F.
inline QuadratureRule rule_from_s(const SpaceParams& sp, Branch branch, int k, double s, double M) {
    if (k < 1) throw domain_error("k must be at least 1");
    QuadratureRule r;
    r.space = sp;
    r.branch = branch;
    r.k = k;
    r.tau = (branch == Branch::odd) ? 2 * k - 1 : 2 * k;
    r.s = s;
    r.M = M;

    int a = 1, b = (branch == Branch::even) ? 1 : 0;
    auto F = [&](double t) {
        return adjacent_eval(sp, a, b, k, t) * adjacent_eval(sp, a, b, k - 1, s)
             - adjacent_eval(sp, a, b, k, s) * adjacent_eval(sp, a, b, k - 1, t);
    };
    std::vector<double> interior;
    if (k > 1) {
        double step = std::min(2.0 / (20.0 * sp.n * k), 1e-3);
        interior = isolate_roots(F, -1.0, s - 1e-9, k - 1, step);
        if (static_cast<int>(interior.size()) != k - 1)
            throw numeric_error("unexpected interior node count");
    }
    if (branch == Branch::even) r.nodes.push_back(-1.0);
    r.nodes.insert(r.nodes.end(), interior.begin(), interior.end());
    r.nodes.push_back(s);

    const int m = static_cast<int>(r.nodes.size());
    std::vector<std::vector<double>> A(m, std::vector<double>(m));
    std::vector<double> rhs(m);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) A[j][i] = kraw_eval(sp, j, r.nodes[i]);
        rhs[j] = (j == 0 ? 1.0 : 0.0) - 1.0 / M;
    }
    r.weights = solve_linear(std::move(A), std::move(rhs));
    return r;
}

// The Levenshtein rule for integer cardinality M: locate the interval,
// solve L_tau(n,s) = M, build the rule.  Weights must come out strictly
// positive; anything else is a numerical failure.
inline QuadratureRule levenshtein_rule(const SpaceParams& sp, const Bigint& M) {
    StrengthAssignment sa = tau_for(sp, M);
    double Md = to_double(M);
    double s = solve_s(sp, sa, Md);
    QuadratureRule r = rule_from_s(sp, sa.branch, sa.k, s, Md);
    for (double w : r.weights)
        if (!(w > 0.0)) throw numeric_error("quadrature weight not positive");
    return r;
}

// Grid average of f against the counting measure; the degree-0 coefficient
// of f's expansion whenever that expansion exists.
inline double grid_mean(const SpaceParams& sp, const std::function<double(double)>& f) {
    Measure mu(sp);
    auto grid = sp.grid();
    double v = 0.0;
    for (int j = 0; j <= sp.n; ++j) v += f(grid[j]) * mu.mass(j);
    return v;
}

// Exactness residual |f_0 - f(1)/M - sum_i w_i f(node_i)| for a polynomial f.
inline double verify_rule(const QuadratureRule& r, const Poly& f) {
    double f0 = grid_mean(r.space, [&](double t) { return f(t); });
    double rhs = f(1.0) / r.M;
    for (size_t i = 0; i < r.nodes.size(); ++i) rhs += r.weights[i] * f(r.nodes[i]);
    return std::abs(f0 - rhs);
}

// Closed-form cross-check for the odd branch over a symmetric alphabet:
//   rho_0 M = - prod_{i>=1}(1-alpha_i^2) / [alpha_0 prod_{i>=1}(alpha_0^2-alpha_i^2)]
inline double rho0M_product(const QuadratureRule& r) {
    if (r.branch != Branch::odd) throw domain_error("product formula applies to the odd branch");
    if (r.space.q != 2) throw domain_error("product formula requires q = 2");
    double num = 1.0, den = r.nodes[0];
    for (size_t i = 1; i < r.nodes.size(); ++i) {
        num *= 1.0 - r.nodes[i] * r.nodes[i];
        den *= r.nodes[0] * r.nodes[0] - r.nodes[i] * r.nodes[i];
    }
    return -num / den;
}

} // namespace hulb
