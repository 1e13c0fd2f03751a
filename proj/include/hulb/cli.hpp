#pragma once

#include "hulb.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace hulb::cli {

inline ojson bigint_json(const Bigint& v) {
    static const Bigint lim = Bigint(1) << 53;
    if (v <= lim && v >= -lim) return ojson(v.convert_to<long long>());
    return ojson(v.str());
}

inline Bigint parse_bigint(const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw domain_error("bad integer '" + s + "'");
    for (size_t p = i; p < s.size(); ++p)
        if (!std::isdigit(static_cast<unsigned char>(s[p])))
            throw domain_error("bad integer '" + s + "'");
    return Bigint(s);
}

inline const char* branch_name(Branch b) { return b == Branch::odd ? "odd" : "even"; }

inline void put_report(ojson& o, const BoundReport& rep, bool with_certificate) {
    o["value"] = rep.value;
    o["method"] = to_string(rep.method);
    o["a1_ok"] = to_string(rep.a1_ok);
    o["a2_ok"] = to_string(rep.a2_ok);
    if (!rep.notes.empty()) o["notes"] = rep.notes;
    if (with_certificate && rep.certificate) o["certificate"] = rep.certificate->c;
    if (with_certificate && rep.kraw) o["kraw"] = rep.kraw->coeff;
}

inline void put_rule(ojson& o, const QuadratureRule& r) {
    o["tau"] = r.tau;
    o["branch"] = branch_name(r.branch);
    o["k"] = r.k;
    o["s"] = r.s;
    o["nodes"] = r.nodes;
    o["weights"] = r.weights;
}

// Exit codes: 0 success, 1 usage, 2 domain error, 3 numeric failure.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err,
               std::istream* in = nullptr) {
    CLI::App app{"universal energy bounds for codes and designs in Hamming space"};
    app.name("hulb");
    app.require_subcommand(1);
    // let global options (--format, --tol-check, ...) appear after the subcommand
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    double tol_check = tol::check;
    if (const char* env = std::getenv("HULB_TOL")) {
        try {
            tol_check = std::stod(env);
        } catch (...) {
            // ignore unparsable env values, the flag still works
        }
    }
    app.add_option("--tol-check", tol_check,
                   "slack for certificate and exactness checks (env HULB_TOL sets the default)");
    double tol_root = tol::root;
    app.add_option("--tol-root", tol_root,
                   "requested width for root brackets; bisection continues to machine "
                   "precision regardless, so loosening this cannot change a reported bound");
    bool parallel = false;
    app.add_flag("--parallel", parallel, "evaluate asymptotic probe rows concurrently");

    int n = 0, q = 2, tau = 0, j = 0, jmax = -1, k = 1;
    std::string M_str, pot_str = "riesz:1", branch_str = "odd", file;
    double s = 0.0, delta = 0.0;
    bool with_certificate = false;
    std::vector<int> probe_n;

    ojson payload;

    auto add_space = [&](CLI::App* c, bool with_q = true) {
        c->add_option("-n,--n", n, "word length")->required();
        if (with_q) c->add_option("-q,--q", q, "alphabet size");
    };
    auto add_M = [&](CLI::App* c) {
        c->add_option("-M,--M", M_str, "cardinality")->required();
    };
    auto add_pot = [&](CLI::App* c) {
        c->add_option("--pot", pot_str, "potential: riesz:<a>, exp:<a>, poly:<c0,c1,...>");
    };

    auto* c_rao = app.add_subcommand("rao", "design bound R(n, tau)");
    add_space(c_rao);
    c_rao->add_option("--tau", tau, "design strength")->required();
    c_rao->callback([&] {
        SpaceParams sp(n, q);
        payload = ojson{{"op", "rao"}, {"n", n}, {"q", q}, {"tau", tau}};
        payload["value"] = bigint_json(rao_bound(sp, tau));
    });

    auto* c_lev = app.add_subcommand("lev", "cardinality bound L_tau(n, s)");
    add_space(c_lev);
    c_lev->add_option("--tau", tau, "branch index")->required();
    c_lev->add_option("-s,--s", s, "largest inner product")->required();
    c_lev->callback([&] {
        SpaceParams sp(n, q);
        payload = ojson{{"op", "lev"}, {"n", n}, {"q", q}, {"tau", tau}, {"s", s}};
        payload["value"] = lev_bound(sp, tau, s);
        payload["k"] = (tau + 1) / 2;
        payload["branch"] = branch_name(tau % 2 ? Branch::odd : Branch::even);
    });

    auto* c_tau = app.add_subcommand("tau", "strength interval containing M");
    add_space(c_tau);
    add_M(c_tau);
    c_tau->callback([&] {
        SpaceParams sp(n, q);
        Bigint M = parse_bigint(M_str);
        StrengthAssignment sa = tau_for(sp, M);
        payload = ojson{{"op", "tau"}, {"n", n}, {"q", q}, {"M", bigint_json(M)}};
        payload["tau"] = sa.tau;
        payload["k"] = sa.k;
        payload["branch"] = branch_name(sa.branch);
        payload["interval"] = ojson::array({sa.interval_lo, sa.interval_hi});
        payload["R"] = ojson::array(
            {bigint_json(rao_bound(sp, sa.tau)), bigint_json(rao_bound(sp, sa.tau + 1))});
    });

    auto* c_quad = app.add_subcommand("quad", "Levenshtein quadrature rule for (n, q, M)");
    add_space(c_quad);
    add_M(c_quad);
    c_quad->callback([&] {
        SpaceParams sp(n, q);
        Bigint M = parse_bigint(M_str);
        QuadratureRule r = levenshtein_rule(sp, M);
        for (int d = 0; d <= r.tau; ++d) {
            Poly mono;
            mono.c.assign(d + 1, 0.0);
            mono.c[d] = 1.0;
            if (std::abs(verify_rule(r, mono)) > tol_check)
                throw numeric_error("rule fails exactness at degree " + std::to_string(d));
        }
        payload = ojson{{"op", "quad"}, {"n", n}, {"q", q}, {"M", bigint_json(M)}};
        put_rule(payload, r);
    });

    auto* c_ulb = app.add_subcommand("ulb", "universal lower bound on potential energy");
    add_space(c_ulb);
    add_M(c_ulb);
    add_pot(c_ulb);
    c_ulb->add_flag("--certificate", with_certificate, "include the certificate polynomial");
    c_ulb->callback([&] {
        SpaceParams sp(n, q);
        Bigint M = parse_bigint(M_str);
        Potential pot = parse_potential(pot_str);
        QuadratureRule r = levenshtein_rule(sp, M);
        BoundReport rep = hermite_certificate(sp, M, pot, &r);
        payload = ojson{{"op", "ulb"}, {"n", n}, {"q", q}, {"M", bigint_json(M)},
                        {"pot", pot.spec_string()}};
        put_rule(payload, r);
        put_report(payload, rep, with_certificate);
    });

    auto* c_testfn = app.add_subcommand("testfn", "test functions P_j beyond the design strength");
    add_space(c_testfn);
    add_M(c_testfn);
    c_testfn->add_option("--jmax", jmax, "largest degree to scan (default n)");
    c_testfn->callback([&] {
        SpaceParams sp(n, q);
        Bigint M = parse_bigint(M_str);
        QuadratureRule r = levenshtein_rule(sp, M);
        int hi = jmax < 0 ? n : jmax;
        TestFunctionScan scan = scan_test_functions(sp, M, hi);
        payload = ojson{{"op", "testfn"}, {"n", n}, {"q", q}, {"M", bigint_json(M)},
                        {"tau", r.tau}};
        ojson rows = ojson::array();
        ojson first = nullptr;
        for (auto [jj, v] : scan.values) {
            rows.push_back(ojson{{"j", jj}, {"P", v}});
            if (first.is_null() && v < -tol_check) first = jj;
        }
        payload["values"] = rows;
        payload["first_negative"] = first;
    });

    auto* c_pair = app.add_subcommand("paircover", "lower bound from pairwise bracket covering");
    add_space(c_pair);
    add_M(c_pair);
    add_pot(c_pair);
    c_pair->add_flag("--certificate", with_certificate, "include the certificate polynomial");
    c_pair->callback([&] {
        SpaceParams sp(n, q);
        Bigint M = parse_bigint(M_str);
        Potential pot = parse_potential(pot_str);
        QuadratureRule r = levenshtein_rule(sp, M);
        BoundReport base = hermite_certificate(sp, M, pot, &r);
        BoundReport rep = pair_covering(sp, M, pot, &r);
        payload = ojson{{"op", "paircover"}, {"n", n}, {"q", q}, {"M", bigint_json(M)},
                        {"pot", pot.spec_string()}, {"ulb", base.value}};
        put_report(payload, rep, with_certificate);
    });

    auto* c_improve = app.add_subcommand("improve", "degree-raised bound when P_j < 0");
    add_space(c_improve);
    add_M(c_improve);
    add_pot(c_improve);
    c_improve->add_option("-j,--j", j, "degree of the added term")->required();
    c_improve->add_flag("--certificate", with_certificate, "include the certificate polynomial");
    c_improve->callback([&] {
        SpaceParams sp(n, q);
        Bigint M = parse_bigint(M_str);
        Potential pot = parse_potential(pot_str);
        QuadratureRule r = levenshtein_rule(sp, M);
        BoundReport base = hermite_certificate(sp, M, pot, &r);
        double pj = test_function_at(r, j);
        BoundReport rep = higher_degree_bound(sp, M, pot, j);
        double eps = (rep.value - base.value) / (-pj * to_double(M));
        payload = ojson{{"op", "improve"}, {"n", n}, {"q", q}, {"M", bigint_json(M)},
                        {"pot", pot.spec_string()}, {"j", j}, {"P_j", pj},
                        {"epsilon", eps}, {"ulb", base.value}};
        put_report(payload, rep, with_certificate);
    });

    auto* c_window = app.add_subcommand("window", "binary 2-design strip: estimates and both bounds");
    add_space(c_window, false);
    add_M(c_window);
    add_pot(c_window);
    c_window->callback([&] {
        Bigint M = parse_bigint(M_str);
        Potential pot = parse_potential(pot_str);
        DesignWindow w = design_window(n, M);
        BoundReport lo = lower_2design(n, M, pot);
        BoundReport hi = upper_2design(n, M, pot);
        payload = ojson{{"op", "window"}, {"n", n}, {"M", bigint_json(M)},
                        {"pot", pot.spec_string()}};
        payload["ell"] = w.ell;
        payload["s"] = w.s;
        payload["lower"] = lo.value;
        payload["upper"] = hi.value;
        try {
            payload["gamma0M"] = gamma0M(n, M);
            payload["xi"] = xi_lower(n, M);
        } catch (const std::exception&) {
            payload["gamma0M"] = nullptr;
            payload["xi"] = nullptr;
        }
        payload["checks"] = ojson{{"lower_a1", to_string(lo.a1_ok)},
                                  {"lower_a2", to_string(lo.a2_ok)},
                                  {"upper_b1", to_string(hi.a1_ok)},
                                  {"upper_b2", to_string(hi.a2_ok)}};
        std::string notes = lo.notes + hi.notes;
        if (!notes.empty()) payload["notes"] = notes;
    });

    auto* c_asymp = app.add_subcommand("asymp", "large-n limits for binary regimes M ~ c n^p");
    c_asymp->add_option("-k,--k", k, "branch index")->required();
    c_asymp->add_option("--branch", branch_str, "odd or even")
        ->check(CLI::IsMember({"odd", "even"}));
    c_asymp->add_option("--delta", delta, "offset above the scaling constant");
    auto* popt = c_asymp->add_option("--pot", pot_str, "n-free potential for the energy floor");
    c_asymp->add_option("--probe", probe_n, "dimensions to probe against the limits");
    c_asymp->callback([&] {
        AsymptoticRegime reg(k, branch_str == "odd" ? Branch::odd : Branch::even, delta);
        payload = ojson{{"op", "asymp"}, {"k", k}, {"branch", branch_str}, {"delta", delta}};
        payload["tau"] = reg.tau();
        payload["scaling_constant"] = reg.scaling_constant();
        payload["node_limits"] = node_limits(reg);
        payload["rho0M_limit"] =
            reg.parity == Branch::odd ? ojson(rho0M_limit(reg)) : ojson(nullptr);
        Potential pot = parse_potential(pot_str);
        if (popt->count() > 0) {
            EnergyFloor fl = energy_floor(reg, pot);
            ojson f{{"slope", fl.slope}, {"closed_form", fl.closed_form}};
            if (fl.closed_form) {
                f["constant"] = fl.constant;
            } else {
                f["constant_lo"] = fl.constant_lo;
                f["constant_hi"] = fl.constant_hi;
                f["note"] = fl.note;
            }
            payload["floor"] = f;
        }
        if (!probe_n.empty()) {
            std::vector<ProbeRow> rows;
            if (parallel) {
                std::vector<std::future<std::vector<ProbeRow>>> futs;
                for (int nn : probe_n)
                    futs.push_back(std::async(std::launch::async, [&reg, nn, &pot] {
                        return convergence_probe(reg, {nn}, pot);
                    }));
                for (auto& f : futs)
                    for (auto& row : f.get()) rows.push_back(std::move(row));
            } else {
                rows = convergence_probe(reg, probe_n, pot);
            }
            ojson arr = ojson::array();
            for (const auto& row : rows) {
                ojson o{{"n", row.n}, {"M", bigint_json(row.M)}, {"ok", row.ok}};
                if (row.ok) {
                    o["s"] = row.s;
                    o["mass0M"] = row.mass0M;
                    o["ulb_over_M"] = row.ulb_over_M;
                    o["err_node0"] = row.err_node0;
                    o["err_nodes"] = row.err_nodes;
                    if (reg.parity == Branch::odd) o["err_mass"] = row.err_mass;
                    o["err_energy"] = row.err_energy;
                } else {
                    o["note"] = row.note;
                }
                arr.push_back(o);
            }
            payload["probe"] = arr;
        }
    });

    auto* c_energy = app.add_subcommand("energy", "energy and structure of a code file");
    c_energy->add_option("--file", file, "code file, '-' or absent reads stdin");
    c_energy->add_option("-q,--q", q, "alphabet size override");
    add_pot(c_energy);
    c_energy->callback([&] {
        std::string text;
        if (file.empty() || file == "-") {
            std::istream& src = in ? *in : std::cin;
            std::ostringstream ss;
            ss << src.rdbuf();
            text = ss.str();
        } else {
            std::ifstream f(file);
            if (!f) throw domain_error("cannot open '" + file + "'");
            std::ostringstream ss;
            ss << f.rdbuf();
            text = ss.str();
        }
        Code code = parse_code(text, c_energy->count("-q") ? q : 0);
        Potential pot = parse_potential(pot_str);
        payload = ojson{{"op", "energy"}, {"n", code.space.n}, {"q", code.space.q},
                        {"M", code.M()}, {"pot", pot.spec_string()}};
        payload["energy"] = energy(code, pot);
        if (code.M() >= 2) {
            CodeStats st = inner_product_stats(code);
            payload["dmin"] = st.dmin;
            payload["dmax"] = st.dmax;
            payload["s"] = st.s;
            payload["ell"] = st.ell;
            payload["distribution"] = st.dist.A;
        } else {
            payload["dmin"] = nullptr;
            payload["dmax"] = nullptr;
            payload["s"] = nullptr;
            payload["ell"] = nullptr;
            payload["distribution"] = distance_distribution(code).A;
        }
        payload["strength"] = strength(code);
        try {
            BoundReport rep = ulb(code.space, Bigint(code.M()), pot);
            payload["ulb"] = rep.value;
        } catch (const std::exception&) {
            payload["ulb"] = nullptr;
        }
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    } catch (const domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const numeric_error& e) {
        err << "numeric error: " << e.what() << "\n";
        return 3;
    }

    if (format == "table")
        out << emit_table(payload);
    else
        out << emit_json(payload);
    return 0;
}

} // namespace hulb::cli
