#pragma once

#include "poly.hpp"

#include <optional>
#include <sstream>

namespace hulb {

// Absolutely monotone potentials h(t) on [-1,1), with analytic derivatives
// of every order.  The Riesz kernel acts on the Hamming distance scale
// z = n(1-t)/2, so it needs the ambient n:
//   riesz:       h(t) = (n(1-t)/2)^(-alpha),  alpha > 0
//   exponential: h(t) = exp(alpha t),         alpha > 0
//   polynomial:  h(t) = sum c_i t^i
struct Potential {
    enum class Kind { riesz, exponential, polynomial };

    Kind kind = Kind::riesz;
    double alpha = 1.0;
    Poly poly;

    static Potential riesz(double alpha) {
        if (!(alpha > 0.0)) throw domain_error("riesz exponent must be positive");
        Potential p;
        p.kind = Kind::riesz;
        p.alpha = alpha;
        return p;
    }

    static Potential exponential(double alpha) {
        if (!(alpha > 0.0)) throw domain_error("exponential rate must be positive");
        Potential p;
        p.kind = Kind::exponential;
        p.alpha = alpha;
        return p;
    }

    static Potential polynomial(std::vector<double> coeffs) {
        Potential p;
        p.kind = Kind::polynomial;
        p.poly = Poly(std::move(coeffs));
        return p;
    }

    // m-th derivative at t; m = 0 is the value.
    double deriv(int n, double t, int m) const {
        if (m < 0) throw domain_error("derivative order must be nonnegative");
        switch (kind) {
        case Kind::riesz: {
            if (n < 1) throw domain_error("riesz potential needs the ambient n");
            if (t >= 1.0) throw domain_error("riesz potential is singular at t = 1");
            double z = n * (1.0 - t) / 2.0;
            // d/dt = (n/2) alpha (alpha+1) ... ladder on z^(-alpha-m)
            double c = 1.0;
            for (int j = 0; j < m; ++j) c *= (n / 2.0) * (alpha + j);
            return c * std::pow(z, -(alpha + m));
        }
        case Kind::exponential:
            return std::pow(alpha, m) * std::exp(alpha * t);
        case Kind::polynomial: {
            Poly d = poly;
            for (int j = 0; j < m; ++j) d = d.derivative();
            return d(t);
        }
        }
        throw domain_error("unknown potential kind");
    }

    double operator()(int n, double t) const { return deriv(n, t, 0); }

    // t = 1 is a pole of the Riesz kernel; everything else is finite there.
    bool finite_at_one() const { return kind != Kind::riesz; }

    std::string spec_string() const {
        std::ostringstream os;
        os.precision(12);
        switch (kind) {
        case Kind::riesz: os << "riesz:" << alpha; break;
        case Kind::exponential: os << "exp:" << alpha; break;
        case Kind::polynomial:
            os << "poly:";
            for (size_t i = 0; i < poly.c.size(); ++i) {
                if (i) os << ',';
                os << poly.c[i];
            }
            break;
        }
        return os.str();
    }
};

// Parse "riesz:<a>", "exp:<a>", "poly:<c0,c1,...>".
inline Potential parse_potential(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw domain_error("potential must look like kind:params");
    std::string kind = s.substr(0, colon), rest = s.substr(colon + 1);
    auto parse_num = [](const std::string& x) {
        size_t used = 0;
        double v;
        try { v = std::stod(x, &used); }
        catch (const std::exception&) { throw domain_error("bad number in potential: " + x); }
        if (used != x.size()) throw domain_error("bad number in potential: " + x);
        return v;
    };
    if (kind == "riesz") return Potential::riesz(parse_num(rest));
    if (kind == "exp") return Potential::exponential(parse_num(rest));
    if (kind == "poly") {
        std::vector<double> c;
        std::string item;
        std::istringstream is(rest);
        while (std::getline(is, item, ',')) c.push_back(parse_num(item));
        if (c.empty()) throw domain_error("polynomial potential needs coefficients");
        return Potential::polynomial(std::move(c));
    }
    throw domain_error("unknown potential kind: " + kind);
}

} // namespace hulb
