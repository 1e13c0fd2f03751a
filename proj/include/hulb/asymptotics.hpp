#pragma once

#include "quadrature.hpp"
#include "ulb.hpp"

namespace hulb {

// Binary large-n regime M_n = round((c + delta) n^p) with
//   odd  (tau = 2k-1): c = 2/(k-1)!, p = k-1
//   even (tau = 2k):   c = 1/k!,     p = k
struct AsymptoticRegime {
    int k = 1;
    Branch parity = Branch::odd;
    double delta = 0.0;

    AsymptoticRegime(int k_, Branch parity_, double delta_)
        : k(k_), parity(parity_), delta(delta_) {
        if (k < 1) throw domain_error("k must be at least 1");
        if (delta < 0.0) throw domain_error("delta must be nonnegative");
    }

    int tau() const { return parity == Branch::odd ? 2 * k - 1 : 2 * k; }

    double scaling_constant() const {
        double f = 1.0;
        if (parity == Branch::odd) {
            for (int i = 2; i <= k - 1; ++i) f *= i;
            return 2.0 / f;
        }
        for (int i = 2; i <= k; ++i) f *= i;
        return 1.0 / f;
    }

    // round-half-up of (c + delta) n^floor(tau/2)
    Bigint cardinality_at(int n) const {
        int p = (parity == Branch::odd) ? k - 1 : k;
        double x = (scaling_constant() + delta) * std::pow(static_cast<double>(n), p);
        return Bigint(static_cast<long long>(std::floor(x + 0.5)));
    }
};

// Limits of the quadrature nodes: the odd branch's lowest node tends to
// -1/(1 + delta (k-1)!) and every other node to 0; the even branch keeps
// -1 fixed and sends the rest to 0.
inline std::vector<double> node_limits(const AsymptoticRegime& reg) {
    double f = 1.0;
    for (int i = 2; i <= reg.k - 1; ++i) f *= i;
    if (reg.parity == Branch::odd) {
        std::vector<double> v(reg.k, 0.0);
        v[0] = -1.0 / (1.0 + reg.delta * f);
        return v;
    }
    std::vector<double> v(reg.k + 1, 0.0);
    v[0] = -1.0;
    return v;
}

inline double rho0M_limit(const AsymptoticRegime& reg) {
    if (reg.parity != Branch::odd)
        throw domain_error("rho0M limit is available for the odd branch only");
    double f = 1.0;
    for (int i = 2; i <= reg.k - 1; ++i) f *= i;
    return std::pow(1.0 + reg.delta * f, 2 * reg.k - 1);
}

// Asymptotic energy floor: E(n, M_n; h) >= M_n (h(0) + c/M_n + o(1)), i.e.
// slope h(0) per point with an additive constant.  The odd constant c_3 is
// closed-form; the even constant c_4 = gamma_0 M_n (h(-1)-h(0)) - h(0)
// depends on the finite-n weight and is only bracketed by gamma_0 M in (0,1).
struct EnergyFloor {
    double slope = 0.0;
    bool closed_form = false;
    double constant = 0.0;       // c_3 when closed_form
    double constant_lo = 0.0;    // even-branch bracket endpoints
    double constant_hi = 0.0;
    std::string note;
};

inline EnergyFloor energy_floor(const AsymptoticRegime& reg, const Potential& pot) {
    if (pot.kind == Potential::Kind::riesz)
        throw domain_error("asymptotic constants need an n-free potential");
    EnergyFloor out;
    double h0 = pot.deriv(0, 0.0, 0);
    double hm1 = pot.deriv(0, -1.0, 0);
    out.slope = h0;
    if (reg.parity == Branch::odd) {
        out.closed_form = true;
        double rho = rho0M_limit(reg);
        double a0 = node_limits(reg)[0];
        out.constant = rho * (pot.deriv(0, a0, 0) - h0) - h0;
    } else {
        out.closed_form = false;
        double at0 = -h0;              // gamma_0 M -> 0
        double at1 = hm1 - 2.0 * h0;   // gamma_0 M -> 1
        out.constant_lo = std::min(at0, at1);
        out.constant_hi = std::max(at0, at1);
        out.note = "even constant depends on gamma_0 M_n in (0,1); bracket reported";
    }
    return out;
}

struct ProbeRow {
    int n = 0;
    Bigint M;
    bool ok = false;
    std::string note;
    double s = 0.0;
    std::vector<double> nodes;
    double mass0M = 0.0;       // rho_0 M (odd) or gamma_0 M (even)
    double ulb_over_M = 0.0;
    double err_node0 = 0.0;    // |node_0 - limit|
    double err_nodes = 0.0;    // max over interior nodes |node_i - 0|
    double err_mass = 0.0;     // |rho_0 M - limit| (odd branch)
    double err_energy = 0.0;   // |ULB/M - h(0)| / h(0)
};

// One rule per n: build, compare against the limits.  Rows whose rounded
// cardinality falls outside the regime's interval are kept with a note.
inline std::vector<ProbeRow> convergence_probe(const AsymptoticRegime& reg,
                                               const std::vector<int>& n_list,
                                               const Potential& pot) {
    std::vector<double> limits = node_limits(reg);
    std::vector<ProbeRow> rows;
    for (int n : n_list) {
        ProbeRow row;
        row.n = n;
        try {
            SpaceParams sp(n, 2);
            row.M = reg.cardinality_at(n);
            StrengthAssignment sa = tau_for(sp, row.M);
            if (sa.tau != reg.tau()) {
                row.note = "cardinality falls in a different interval (tau=" + std::to_string(sa.tau) + ")";
                rows.push_back(row);
                continue;
            }
            QuadratureRule r = levenshtein_rule(sp, row.M);
            row.s = r.s;
            row.nodes = r.nodes;
            row.mass0M = r.weights[0] * r.M;
            row.ulb_over_M = ulb(sp, row.M, pot, &r).value / r.M;
            row.err_node0 = std::abs(r.nodes[0] - limits[0]);
            for (size_t i = 1; i < r.nodes.size(); ++i)
                row.err_nodes = std::max(row.err_nodes, std::abs(r.nodes[i]));
            if (reg.parity == Branch::odd)
                row.err_mass = std::abs(row.mass0M - rho0M_limit(reg));
            double h0 = pot.deriv(n, 0.0, 0);
            row.err_energy = std::abs(row.ulb_over_M - h0) / h0;
            row.ok = true;
        } catch (const std::exception& e) {
            row.note = e.what();
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace hulb
