#pragma once

#include "common.hpp"

#include <algorithm>

namespace hulb {

// Dense univariate polynomial, coefficients in ascending powers.
struct Poly {
    std::vector<double> c;

    Poly() : c{0.0} {}
    explicit Poly(std::vector<double> coeffs) : c(std::move(coeffs)) {
        if (c.empty()) c.push_back(0.0);
    }

    int degree() const {
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            if (c[i] != 0.0) return i;
        return 0;
    }

    double operator()(double t) const {
        double v = 0.0;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * t + c[i];
        return v;
    }

    Poly derivative() const {
        if (c.size() <= 1) return Poly();
        std::vector<double> d(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);
        return Poly(std::move(d));
    }

    Poly& operator+=(const Poly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), 0.0);
        for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        return *this;
    }

    Poly& operator*=(double s) {
        for (auto& x : c) x *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator*(Poly a, double s) { a *= s; return a; }
    friend Poly operator*(double s, Poly a) { a *= s; return a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        std::vector<double> r(a.c.size() + b.c.size() - 1, 0.0);
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return Poly(std::move(r));
    }
};

} // namespace hulb
