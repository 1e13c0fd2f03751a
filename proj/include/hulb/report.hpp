#pragma once

#include "krawtchouk.hpp"
#include "poly.hpp"

#include <optional>

namespace hulb {

enum class CheckFlag { pass, fail, not_checked };

inline const char* to_string(CheckFlag f) {
    switch (f) {
    case CheckFlag::pass: return "pass";
    case CheckFlag::fail: return "fail";
    case CheckFlag::not_checked: return "not_checked";
    }
    return "not_checked";
}

enum class Method { ulb, pair_cover, higher_degree, lp_generic, window_lower, window_upper };

inline const char* to_string(Method m) {
    switch (m) {
    case Method::ulb: return "ulb";
    case Method::pair_cover: return "pair_cover";
    case Method::higher_degree: return "higher_degree";
    case Method::lp_generic: return "lp_generic";
    case Method::window_lower: return "window_lower";
    case Method::window_upper: return "window_upper";
    }
    return "lp_generic";
}

// Outcome of one bound computation: the value, the certificate polynomial
// when one was built, its Krawtchouk coefficients, and the status of the
// positivity (A-type) or domination (B-type) condition checks.
struct BoundReport {
    double value = 0.0;
    Method method = Method::lp_generic;
    std::optional<Poly> certificate;
    std::optional<KrawExpansion> kraw;
    CheckFlag a1_ok = CheckFlag::not_checked;
    CheckFlag a2_ok = CheckFlag::not_checked;
    std::string notes;
};

} // namespace hulb
