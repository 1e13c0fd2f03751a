#pragma once

#include "poly.hpp"
#include "rootfind.hpp"
#include "space.hpp"

namespace hulb {

// K_i^{(n,q)}(z) by the three-term recurrence
//   (i+1) K_{i+1}(z) = [i + (q-1)(n-i) - qz] K_i(z) - (q-1)(n-i+1) K_{i-1}(z),
// K_0 = 1, K_1 = n(q-1) - qz.  The recurrence is a polynomial identity in z,
// so real z and degrees past the orthogonality range are fine.
inline double kraw_raw(int n, int q, int i, double z) {
    if (i < 0) throw domain_error("degree must be nonnegative");
    if (i == 0) return 1.0;
    double km1 = 1.0;
    double k0 = n * (q - 1.0) - q * z;
    for (int j = 1; j < i; ++j) {
        double k1 = ((j + (q - 1.0) * (n - j) - q * z) * k0 - (q - 1.0) * (n - j + 1.0) * km1) / (j + 1.0);
        km1 = k0;
        k0 = k1;
    }
    return k0;
}

inline double z_of_t(const SpaceParams& sp, double t) { return sp.n * (1.0 - t) / 2.0; }

// r_i = C(n,i)(q-1)^i, the weight appearing in <Q_i,Q_j> = delta_ij / r_i.
inline double r_coeff(const SpaceParams& sp, int i) {
    if (i < 0 || i > sp.n) throw domain_error("degree out of range");
    return to_double(binomial(sp.n, i) * ipow(Bigint(sp.q - 1), static_cast<unsigned>(i)));
}

// Q_i(t) = K_i^{(n,q)}(n(1-t)/2) / r_i, normalized so Q_i(1) = 1.
inline double kraw_eval(const SpaceParams& sp, int i, double t) {
    if (i < 0 || i > sp.n) throw domain_error("degree out of range");
    return kraw_raw(sp.n, sp.q, i, z_of_t(sp, t)) / r_coeff(sp, i);
}

inline void check_adjacent_pair(int a, int b) {
    if (!((a == 0 && b == 0) || (a == 1 && b == 0) || (a == 0 && b == 1) || (a == 1 && b == 1)))
        throw domain_error("adjacent family must be one of (0,0),(1,0),(0,1),(1,1)");
}

// Adjacent-family degree cap.  The (1,1) family admits one degree past its
// orthogonality range n-2: the top interval endpoint t_{n-1}^{1,1} needs it.
inline int adjacent_max_degree(const SpaceParams& sp, int a, int b) {
    if (a == 1 && b == 1) return sp.n - 1;
    return sp.n - a - b;
}

// Q_i^{(a,b)}(t), normalized so Q_i^{(a,b)}(1) = 1:
//   (1,0): K_i^{(n-1,q)}(z-1) / sum_{j<=i} C(n,j)(q-1)^j
//   (0,1): K_i^{(n-1,q)}(z)   / (C(n-1,i)(q-1)^i)
//   (1,1): K_i^{(n-2,q)}(z-1) / sum_{j<=i} C(n-1,j)(q-1)^j
inline double adjacent_eval(const SpaceParams& sp, int a, int b, int i, double t) {
    check_adjacent_pair(a, b);
    if (a == 0 && b == 0) return kraw_eval(sp, i, t);
    if (i < 0 || i > adjacent_max_degree(sp, a, b))
        throw domain_error("degree out of range for adjacent family");
    double z = z_of_t(sp, t);
    Bigint qm1 = sp.q - 1;
    if (a == 1 && b == 0) {
        Bigint norm = 0;
        for (int j = 0; j <= i; ++j) norm += binomial(sp.n, j) * ipow(qm1, static_cast<unsigned>(j));
        return kraw_raw(sp.n - 1, sp.q, i, z - 1.0) / to_double(norm);
    }
    if (a == 0 && b == 1) {
        Bigint norm = binomial(sp.n - 1, i) * ipow(qm1, static_cast<unsigned>(i));
        return kraw_raw(sp.n - 1, sp.q, i, z) / to_double(norm);
    }
    Bigint norm = 0;
    for (int j = 0; j <= i; ++j) norm += binomial(sp.n - 1, j) * ipow(qm1, static_cast<unsigned>(j));
    return kraw_raw(sp.n - 2, sp.q, i, z - 1.0) / to_double(norm);
}

// Greatest zero t_i^{a,b} of Q_i^{(a,b)} in (-1,1).  By convention
// t_0^{1,1} = -1 (the degenerate left end of the first interval).
inline double greatest_zero(const SpaceParams& sp, int a, int b, int i) {
    check_adjacent_pair(a, b);
    if (i == 0) {
        if (a == 1 && b == 1) return -1.0;
        throw domain_error("constant polynomial has no zero");
    }
    if (a == 0 && b == 0) {
        if (i > sp.n) throw domain_error("degree out of range");
    } else if (i > adjacent_max_degree(sp, a, b)) {
        throw domain_error("degree out of range for adjacent family");
    }
    auto f = [&](double t) { return adjacent_eval(sp, a, b, i, t); };
    double step = std::min(2.0 / (20.0 * sp.n * i), 1e-3);
    auto roots = isolate_roots(f, -1.0, 1.0, i, step);
    return roots.back();
}

// Expansion f = sum f_i Q_i in the normalized basis.
struct KrawExpansion {
    SpaceParams space;
    std::vector<double> coeff; // f_0 .. f_m

    double synth(double t) const {
        double v = 0.0;
        for (size_t i = 0; i < coeff.size(); ++i)
            v += coeff[i] * kraw_eval(space, static_cast<int>(i), t);
        return v;
    }
};

// Expansion coefficients from values on the grid T_n: f_i = r_i sum_j f(t_j) Q_i(t_j) mu_j.
inline KrawExpansion expand_values(const SpaceParams& sp, const std::vector<double>& values) {
    if (static_cast<int>(values.size()) != sp.n + 1)
        throw domain_error("need one value per grid point");
    Measure mu(sp);
    auto masses = mu.masses();
    auto grid = sp.grid();
    KrawExpansion ex{sp, std::vector<double>(sp.n + 1, 0.0)};
    for (int i = 0; i <= sp.n; ++i) {
        double s = 0.0;
        for (int j = 0; j <= sp.n; ++j) s += values[j] * kraw_eval(sp, i, grid[j]) * masses[j];
        ex.coeff[i] = s * r_coeff(sp, i);
    }
    return ex;
}

// Coefficients above p.degree() vanish, so only the leading block is computed.
inline KrawExpansion expand(const SpaceParams& sp, const Poly& p) {
    if (p.degree() > sp.n)
        throw domain_error("polynomial degree exceeds n; expansion is not faithful");
    Measure mu(sp);
    auto masses = mu.masses();
    auto grid = sp.grid();
    const int m = p.degree();
    KrawExpansion ex{sp, std::vector<double>(m + 1, 0.0)};
    std::vector<double> values(sp.n + 1);
    for (int j = 0; j <= sp.n; ++j) values[j] = p(grid[j]);
    for (int i = 0; i <= m; ++i) {
        double s = 0.0;
        for (int j = 0; j <= sp.n; ++j) s += values[j] * kraw_eval(sp, i, grid[j]) * masses[j];
        ex.coeff[i] = s * r_coeff(sp, i);
    }
    return ex;
}

// Reproducing kernel T_k(u,v) = sum_{i<=k} r_i Q_i(u) Q_i(v).
inline double kernel_T(const SpaceParams& sp, int k, double u, double v) {
    if (k < 0 || k > sp.n) throw domain_error("kernel order out of range");
    double s = 0.0;
    for (int i = 0; i <= k; ++i)
        s += r_coeff(sp, i) * kraw_eval(sp, i, u) * kraw_eval(sp, i, v);
    return s;
}

// Monomial coefficients of Q_i (ascending powers of t).
inline Poly kraw_poly(const SpaceParams& sp, int i) {
    if (i < 0 || i > sp.n) throw domain_error("degree out of range");
    int n = sp.n, q = sp.q;
    Poly km1({1.0});
    if (i == 0) return km1;
    Poly k0({n * (q - 1.0) - q * n / 2.0, q * n / 2.0});
    for (int j = 1; j < i; ++j) {
        Poly lin({j + (q - 1.0) * (n - j) - q * n / 2.0, q * n / 2.0});
        Poly k1 = (lin * k0 + (-(q - 1.0) * (n - j + 1.0)) * km1) * (1.0 / (j + 1.0));
        km1 = k0;
        k0 = k1;
    }
    return k0 * (1.0 / r_coeff(sp, i));
}

} // namespace hulb
