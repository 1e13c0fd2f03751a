#include <catch2/catch_amalgamated.hpp>
#include <hulb/cli.hpp>

#include <cstdlib>
#include <sstream>

using Catch::Matchers::ContainsSubstring;

namespace {

struct RunResult {
    int rc;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args, const std::string& input = "") {
    std::ostringstream out, err;
    std::istringstream in(input);
    int rc = hulb::cli::run(std::move(args), out, err, &in);
    return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes", "[cli]") {
    CHECK(run_cli({"--help"}).rc == 0);
    CHECK_THAT(run_cli({"--help"}).out, ContainsSubstring("universal energy bounds"));

    CHECK(run_cli({}).rc == 1);                       // a subcommand is required
    CHECK(run_cli({"rao", "--bogus"}).rc == 1);       // unknown option
    CHECK(run_cli({"--format", "xml", "rao", "-n", "10", "--tau", "3"}).rc == 1);

    RunResult dom = run_cli({"ulb", "-n", "9", "-q", "2", "-M", "2"});
    CHECK(dom.rc == 2);
    CHECK_THAT(dom.err, ContainsSubstring("M must exceed q"));

    CHECK(run_cli({"ulb", "-n", "9", "-M", "128", "--pot", "riesz:-1"}).rc == 2);

    RunResult num = run_cli({"quad", "-n", "10", "-M", "40", "--tol-check", "1e-18"});
    CHECK(num.rc == 3);
    CHECK_THAT(num.err, ContainsSubstring("numeric error"));
}

TEST_CASE("bound queries emit compact json", "[cli]") {
    RunResult rao = run_cli({"rao", "-n", "10", "-q", "2", "--tau", "3"});
    REQUIRE(rao.rc == 0);
    CHECK(rao.out == "{\"op\":\"rao\",\"n\":10,\"q\":2,\"tau\":3,\"value\":20}\n");

    // values beyond 2^53 switch to decimal strings
    RunResult big = run_cli({"rao", "-n", "200", "-q", "2", "--tau", "61"});
    REQUIRE(big.rc == 0);
    CHECK_THAT(big.out,
               ContainsSubstring("\"value\":\"844221752081825547691077111030923952\""));

    RunResult lev = run_cli({"lev", "-n", "10", "-q", "2", "--tau", "3", "-s", "0.1"});
    REQUIRE(lev.rc == 0);
    CHECK_THAT(lev.out, ContainsSubstring("\"value\":31"));
    CHECK_THAT(lev.out, ContainsSubstring("\"branch\":\"odd\""));

    RunResult tau = run_cli({"tau", "-n", "9", "-q", "2", "-M", "128"});
    REQUIRE(tau.rc == 0);
    CHECK_THAT(tau.out, ContainsSubstring("\"tau\":5"));
    CHECK_THAT(tau.out, ContainsSubstring("\"k\":3"));
    CHECK_THAT(tau.out, ContainsSubstring("\"R\":[74,130]"));
}

TEST_CASE("ulb and quad output", "[cli]") {
    RunResult ulb = run_cli({"ulb", "-n", "10", "-q", "2", "-M", "40", "--pot", "riesz:1"});
    REQUIRE(ulb.rc == 0);
    CHECK_THAT(ulb.out, ContainsSubstring("\"value\":8.07222222222"));
    CHECK_THAT(ulb.out, ContainsSubstring("\"a1_ok\":\"pass\""));
    CHECK_THAT(ulb.out, ContainsSubstring("\"a2_ok\":\"pass\""));
    CHECK(ulb.out.find("\"certificate\"") == std::string::npos);

    RunResult cert = run_cli({"ulb", "-n", "10", "-M", "40", "--certificate"});
    REQUIRE(cert.rc == 0);
    CHECK_THAT(cert.out, ContainsSubstring("\"certificate\":["));
    CHECK_THAT(cert.out, ContainsSubstring("\"kraw\":["));

    // json output reparses and re-emits to the identical bytes
    hulb::ojson parsed = hulb::ojson::parse(ulb.out);
    CHECK(hulb::emit_json(parsed) == ulb.out);

    RunResult quad = run_cli({"--format", "table", "quad", "-n", "10", "-M", "40"});
    REQUIRE(quad.rc == 0);
    CHECK_THAT(quad.out, ContainsSubstring("branch\todd\n"));
    CHECK_THAT(quad.out, ContainsSubstring("nodes\t-0.4602 0.1498\n"));
    CHECK_THAT(quad.out, ContainsSubstring("s\t0.1498\n"));

    RunResult tbl = run_cli({"ulb", "-n", "10", "-M", "40", "--format", "table"});
    REQUIRE(tbl.rc == 0);  // global flags work after the subcommand too
    CHECK_THAT(tbl.out, ContainsSubstring("value\t8.0722\n"));
}

TEST_CASE("refinement subcommands", "[cli]") {
    RunResult tf = run_cli({"testfn", "-n", "9", "-M", "128", "--jmax", "9"});
    REQUIRE(tf.rc == 0);
    CHECK_THAT(tf.out, ContainsSubstring("\"first_negative\":9"));
    CHECK_THAT(tf.out, ContainsSubstring("{\"j\":6,\"P\":0.00121951219512"));

    RunResult imp = run_cli({"improve", "-n", "9", "-M", "128", "--pot", "riesz:1", "-j", "9"});
    REQUIRE(imp.rc == 0);
    CHECK_THAT(imp.out, ContainsSubstring("\"value\":31.440356"));
    CHECK_THAT(imp.out, ContainsSubstring("\"epsilon\":2.38"));
    CHECK_THAT(imp.out, ContainsSubstring("\"ulb\":31.4403521825"));

    RunResult pc = run_cli({"paircover", "-n", "10", "-M", "40"});
    REQUIRE(pc.rc == 0);
    CHECK_THAT(pc.out, ContainsSubstring("\"method\":\"pair_cover\""));
    CHECK_THAT(pc.out, ContainsSubstring("\"value\":8.08571428571"));
    CHECK_THAT(pc.out, ContainsSubstring("\"ulb\":8.07222222222"));
}

TEST_CASE("window and asymp subcommands", "[cli]") {
    RunResult w = run_cli({"window", "-n", "9", "-M", "16", "--pot", "exp:1"});
    REQUIRE(w.rc == 0);
    CHECK_THAT(w.out, ContainsSubstring("\"lower\":14.2957190673"));
    CHECK_THAT(w.out, ContainsSubstring("\"upper\":19.1010602475"));
    CHECK_THAT(w.out, ContainsSubstring("\"gamma0M\":0.774193548387"));

    RunResult a = run_cli({"asymp", "-k", "2", "--branch", "odd", "--delta", "1",
                           "--pot", "exp:1"});
    REQUIRE(a.rc == 0);
    CHECK_THAT(a.out, ContainsSubstring("\"rho0M_limit\":8"));
    CHECK_THAT(a.out, ContainsSubstring("\"node_limits\":[-0.5,0"));
    CHECK_THAT(a.out, ContainsSubstring("\"constant\":-4.1477547223"));

    RunResult p1 = run_cli({"asymp", "-k", "2", "--branch", "odd", "--delta", "1",
                            "--probe", "50", "100"});
    RunResult p2 = run_cli({"asymp", "-k", "2", "--branch", "odd", "--delta", "1",
                            "--probe", "50", "100", "--parallel"});
    REQUIRE(p1.rc == 0);
    REQUIRE(p2.rc == 0);
    CHECK(p1.out == p2.out);
    CHECK_THAT(p1.out, ContainsSubstring("\"err_mass\":"));
}

TEST_CASE("energy subcommand", "[cli]") {
    RunResult e = run_cli({"energy", "--pot", "riesz:1"}, "000\n011\n101\n110\n");
    REQUIRE(e.rc == 0);
    CHECK_THAT(e.out, ContainsSubstring("\"energy\":1.5"));
    CHECK_THAT(e.out, ContainsSubstring("\"strength\":2"));
    CHECK_THAT(e.out, ContainsSubstring("\"ulb\":1.5"));
    CHECK_THAT(e.out, ContainsSubstring("\"dmin\":2"));

    RunResult bad = run_cli({"energy"}, "000\n0a0\n");
    CHECK(bad.rc == 2);
    CHECK_THAT(bad.err, ContainsSubstring("parse error"));

    CHECK(run_cli({"energy", "--file", "/nonexistent/path"}).rc == 2);
}

TEST_CASE("tolerance default from the environment", "[cli]") {
    setenv("HULB_TOL", "1e-18", 1);
    CHECK(run_cli({"quad", "-n", "10", "-M", "40"}).rc == 3);
    unsetenv("HULB_TOL");
    CHECK(run_cli({"quad", "-n", "10", "-M", "40"}).rc == 0);
}
