#pragma once

#include "potential.hpp"
#include "space.hpp"
#include "krawtchouk.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hulb {

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct Code {
    SpaceParams space;
    std::vector<std::vector<int>> rows;

    int M() const { return static_cast<int>(rows.size()); }
};

// File format: optional header "n q M", then one word per line; q <= 10
// words are contiguous digits, larger alphabets use whitespace-separated
// symbols.  '#' starts a comment line.
inline Code parse_code(const std::string& text, int q_hint = 0) {
    struct Line { int number; std::string body; };
    std::vector<Line> data;
    {
        std::istringstream is(text);
        std::string raw;
        int lineno = 0;
        while (std::getline(is, raw)) {
            ++lineno;
            size_t b = raw.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            if (raw[b] == '#') continue;
            size_t e = raw.find_last_not_of(" \t\r");
            data.push_back({lineno, raw.substr(b, e - b + 1)});
        }
    }
    if (data.empty()) throw parse_error("no code rows found");

    auto tokenize = [](const std::string& s) {
        std::vector<std::string> toks;
        std::istringstream is(s);
        std::string t;
        while (is >> t) toks.push_back(t);
        return toks;
    };
    auto is_integer = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    // Header detection: a 3-integer first line whose third value matches
    // the number of remaining lines.
    int n = 0, q = q_hint, declared_M = -1;
    size_t start = 0;
    {
        auto toks = tokenize(data[0].body);
        bool shape_ok = toks.size() == 3 && is_integer(toks[0]) && is_integer(toks[1])
                     && is_integer(toks[2]) && toks[0].size() <= 9 && toks[1].size() <= 9
                     && toks[2].size() <= 9 && std::stoull(toks[2]) == data.size() - 1;
        // A header must also be plausible as one (n >= 1, q >= 2); otherwise a
        // headerless 3-column file whose first symbol is 0 would be swallowed.
        if (shape_ok && std::stoi(toks[0]) >= 1 && std::stoi(toks[1]) >= 2) {
            n = std::stoi(toks[0]);
            int hq = std::stoi(toks[1]);
            if (q_hint && hq != q_hint)
                throw parse_error("line " + std::to_string(data[0].number) + ": header q=" +
                                  std::to_string(hq) + " conflicts with requested q=" + std::to_string(q_hint));
            q = hq;
            declared_M = std::stoi(toks[2]);
            start = 1;
        }
    }

    std::vector<std::vector<int>> rows;
    std::vector<int> row_lines;
    int max_symbol = 0;
    for (size_t i = start; i < data.size(); ++i) {
        const auto& ln = data[i];
        std::vector<int> row;
        if ((q == 0 || q <= 10) && ln.body.find_first_of(" \t") == std::string::npos) {
            for (size_t c = 0; c < ln.body.size(); ++c) {
                char ch = ln.body[c];
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw parse_error("line " + std::to_string(ln.number) + ": bad symbol '" +
                                      std::string(1, ch) + "' at column " + std::to_string(c + 1));
                row.push_back(ch - '0');
            }
        } else {
            for (const auto& tok : tokenize(ln.body)) {
                if (!is_integer(tok) || tok.size() > 9)
                    throw parse_error("line " + std::to_string(ln.number) + ": bad symbol '" + tok + "'");
                row.push_back(std::stoi(tok));
            }
        }
        if (row.empty()) throw parse_error("line " + std::to_string(ln.number) + ": empty row");
        if (n == 0) n = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != n)
            throw parse_error("line " + std::to_string(ln.number) + ": expected " + std::to_string(n) +
                              " symbols, found " + std::to_string(row.size()));
        for (int v : row) max_symbol = std::max(max_symbol, v);
        rows.push_back(std::move(row));
        row_lines.push_back(ln.number);
    }

    if (q == 0) q = std::max(2, max_symbol + 1);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t c = 0; c < rows[i].size(); ++c)
            if (rows[i][c] >= q)
                throw parse_error("line " + std::to_string(row_lines[i]) + ": symbol '" +
                                  std::to_string(rows[i][c]) + "' out of range for q=" + std::to_string(q));
    if (declared_M >= 0 && declared_M != static_cast<int>(rows.size()))
        throw parse_error("header declares M=" + std::to_string(declared_M) + " but found " +
                          std::to_string(rows.size()) + " rows");

    std::map<std::vector<int>, int> seen;
    for (size_t i = 0; i < rows.size(); ++i) {
        auto [it, fresh] = seen.emplace(rows[i], row_lines[i]);
        if (!fresh)
            throw parse_error("duplicate row at lines " + std::to_string(it->second) + " and " +
                              std::to_string(row_lines[i]));
    }

    Code code{SpaceParams(n, q), std::move(rows)};
    return code;
}

inline int hamming_distance(const std::vector<int>& a, const std::vector<int>& b) {
    int d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

// A_d = (1/M) #{ordered pairs (x,y) at distance d}; A_0 = 1, sum = M.
struct DistanceDistribution {
    std::vector<double> A;
};

inline DistanceDistribution distance_distribution(const Code& code) {
    int n = code.space.n;
    std::vector<long long> cnt(n + 1, 0);
    const int M = code.M();
    cnt[0] = M;
    for (int i = 0; i < M; ++i)
        for (int j = i + 1; j < M; ++j)
            cnt[hamming_distance(code.rows[i], code.rows[j])] += 2;
    DistanceDistribution dd;
    dd.A.resize(n + 1);
    for (int d = 0; d <= n; ++d) dd.A[d] = static_cast<double>(cnt[d]) / M;
    return dd;
}

// (1/M) sum over ordered distinct pairs of h(1 - 2 d(x,y)/n).
inline double energy(const Code& code, const Potential& pot) {
    auto dd = distance_distribution(code);
    int n = code.space.n;
    double e = 0.0;
    for (int d = 1; d <= n; ++d)
        if (dd.A[d] > 0.0) e += dd.A[d] * pot.deriv(n, 1.0 - 2.0 * d / n, 0);
    return e;
}

struct CodeStats {
    DistanceDistribution dist;
    double s = 0.0;    // max inner product over distinct pairs
    double ell = 0.0;  // min inner product
    int dmin = 0;
    int dmax = 0;
};

inline CodeStats inner_product_stats(const Code& code) {
    if (code.M() < 2) throw domain_error("need at least two codewords");
    CodeStats st;
    st.dist = distance_distribution(code);
    int n = code.space.n;
    st.dmin = 0;
    for (int d = 1; d <= n; ++d)
        if (st.dist.A[d] > 0.0) { st.dmin = d; break; }
    st.dmax = 0;
    for (int d = n; d >= 1; --d)
        if (st.dist.A[d] > 0.0) { st.dmax = d; break; }
    st.s = 1.0 - 2.0 * st.dmin / n;
    st.ell = 1.0 - 2.0 * st.dmax / n;
    return st;
}

// Design strength via the Krawtchouk transform of the distance
// distribution: tau is the largest prefix 1..tau with
// sum_d A_d K_i(d) = 0, capped at n.  The transform values are integers
// for exact counts, so the tolerance absorbs float accumulation only.
inline int strength(const Code& code) {
    auto dd = distance_distribution(code);
    int n = code.space.n, q = code.space.q;
    double M = code.M();
    int tau = 0;
    for (int i = 1; i <= n; ++i) {
        double s = 0.0;
        for (int d = 0; d <= n; ++d)
            if (dd.A[d] != 0.0) s += dd.A[d] * kraw_raw(n, q, i, d);
        if (std::abs(s) <= 1e-8 * M) tau = i;
        else break;
    }
    return tau;
}

// Exhaustive oracle for small spaces: C has strength >= r iff
// sum_{y in C} Q_r(<x,y>) = 0 for every word x of H(n,q).
inline int strength_exhaustive(const Code& code) {
    int n = code.space.n, q = code.space.q;
    Bigint total = code.space.cardinality();
    if (total > 4096) throw domain_error("space too large for the exhaustive strength test");
    const long long N = total.convert_to<long long>();
    const double M = code.M();
    int tau = 0;
    for (int r = 1; r <= n; ++r) {
        bool all_zero = true;
        std::vector<int> x(n, 0);
        for (long long w = 0; w < N && all_zero; ++w) {
            long long v = w;
            for (int i = 0; i < n; ++i) { x[i] = static_cast<int>(v % q); v /= q; }
            double s = 0.0;
            for (const auto& y : code.rows)
                s += kraw_raw(n, q, r, hamming_distance(x, y));
            if (std::abs(s) > 1e-8 * M) all_zero = false;
        }
        if (all_zero) tau = r;
        else break;
    }
    return tau;
}

} // namespace hulb
