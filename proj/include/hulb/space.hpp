#pragma once

#include "common.hpp"

namespace hulb {

// Hamming space H(n,q) under the inner product t = 1 - 2d/n for Hamming
// distance d.  Admissible values of t form the grid T_n.
struct SpaceParams {
    int n = 0;
    int q = 0;

    SpaceParams() = default;
    SpaceParams(int n_, int q_) : n(n_), q(q_) {
        if (n < 1) throw domain_error("n must be at least 1");
        if (q < 2) throw domain_error("q must be at least 2");
    }

    // t_i = -1 + 2i/n, i = 0..n; t_n = 1 corresponds to distance 0.
    std::vector<double> grid() const {
        std::vector<double> t(n + 1);
        for (int i = 0; i <= n; ++i) t[i] = -1.0 + 2.0 * i / n;
        return t;
    }

    double t_of_distance(int d) const {
        if (d < 0 || d > n) throw domain_error("distance out of range");
        return 1.0 - 2.0 * d / n;
    }

    Bigint cardinality() const { return ipow(Bigint(q), static_cast<unsigned>(n)); }
};

// Weight of the counting measure on T_n: the point t = 1 - 2d/n carries the
// normalized number of words at Hamming distance d from a fixed center,
// C(n,d)(q-1)^d / q^n.  Total mass is exactly 1.
struct Measure {
    SpaceParams space;
    explicit Measure(const SpaceParams& sp) : space(sp) {}

    // mass at grid index i (t_i = -1 + 2i/n, distance d = n - i); converted
    // as one rational so large n cannot overflow the intermediate doubles
    double mass(int i) const {
        if (i < 0 || i > space.n) throw domain_error("grid index out of range");
        int d = space.n - i;
        Bigint num = binomial(space.n, d) * ipow(Bigint(space.q - 1), static_cast<unsigned>(d));
        boost::multiprecision::cpp_rational r(num, space.cardinality());
        return r.convert_to<double>();
    }

    std::vector<double> masses() const {
        std::vector<double> m(space.n + 1);
        for (int i = 0; i <= space.n; ++i) m[i] = mass(i);
        return m;
    }
};

} // namespace hulb
