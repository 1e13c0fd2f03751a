#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hulb {

using Bigint = boost::multiprecision::cpp_int;

// Invalid input: parameters outside the mathematical domain of an operation.
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// A computation that started from valid inputs failed to converge or lost
// a required invariant (root count, exactness residual, weight sign).
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace tol {
inline constexpr double root = 1e-12;   // bisection width in t
inline constexpr double check = 1e-9;   // slack for sign/exactness checks
}

inline Bigint binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Bigint r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline Bigint ipow(Bigint base, unsigned exp) {
    Bigint r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline double to_double(const Bigint& v) { return v.convert_to<double>(); }

} // namespace hulb
