#pragma once

#include "common.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <string>

namespace hulb {

using ojson = nlohmann::ordered_json;

// 12 significant digits, enough to round-trip every value we print while
// keeping output stable across platforms.
inline std::string format_double(double v) {
    if (v == 0.0) v = 0.0; // drop the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline void emit_json(const ojson& j, std::string& out) {
    switch (j.type()) {
    case ojson::value_t::object: {
        out += '{';
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ',';
            first = false;
            out += ojson(it.key()).dump();
            out += ':';
            emit_json(it.value(), out);
        }
        out += '}';
        break;
    }
    case ojson::value_t::array: {
        out += '[';
        for (size_t i = 0; i < j.size(); ++i) {
            if (i) out += ',';
            emit_json(j[i], out);
        }
        out += ']';
        break;
    }
    case ojson::value_t::number_float:
        out += format_double(j.get<double>());
        break;
    default:
        out += j.dump(); // strings, ints, bools, null
    }
}

inline std::string emit_json(const ojson& j) {
    std::string out;
    emit_json(j, out);
    out += '\n';
    return out;
}

// Table cells truncate (not round) to four decimals so a displayed bound
// never overstates the guaranteed value.
inline std::string table_cell(const ojson& v) {
    if (v.is_number_float()) {
        double x = v.get<double>();
        double t = std::trunc(x * 1e4) / 1e4;
        if (t == 0.0) t = 0.0;
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.4f", t);
        return buf;
    }
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    return v.dump();
}

inline std::string emit_table(const ojson& j, const std::string& prefix = "") {
    std::string out;
    auto is_scalar = [](const ojson& v) { return !v.is_object() && !v.is_array(); };
    auto row_array = [&](const ojson& v) {
        if (!v.is_array() || v.empty()) return false;
        for (const auto& e : v)
            if (!e.is_object()) return false;
        return true;
    };
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        const ojson& v = it.value();
        if (is_scalar(v)) {
            out += key + "\t" + table_cell(v) + "\n";
        } else if (row_array(v)) {
            // uniform record arrays print as CSV blocks
            out += key + ":\n";
            std::string hdr;
            for (auto f = v[0].begin(); f != v[0].end(); ++f) {
                if (!hdr.empty()) hdr += ',';
                hdr += f.key();
            }
            out += hdr + "\n";
            for (const auto& rec : v) {
                std::string line;
                for (auto f = rec.begin(); f != rec.end(); ++f) {
                    if (!line.empty()) line += ',';
                    line += table_cell(f.value());
                }
                out += line + "\n";
            }
        } else if (v.is_array()) {
            std::string line;
            for (const auto& e : v) {
                if (!line.empty()) line += ' ';
                line += table_cell(e);
            }
            out += key + "\t" + line + "\n";
        } else {
            out += emit_table(v, key);
        }
    }
    return out;
}

} // namespace hulb
