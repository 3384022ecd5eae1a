#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "weyl/expr.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(WEYL_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

std::string strip_timing(const std::string& doc) {
    std::string out;
    std::istringstream is(doc);
    std::string line;
    while (std::getline(is, line))
        if (line.find("timing_us") == std::string::npos) out += line + "\n";
    return out;
}

std::string field(const std::string& doc, const std::string& key) {
    std::string tag = key + ": ";
    auto pos = doc.find(tag);
    REQUIRE(pos != std::string::npos);
    auto end = doc.find('\n', pos);
    return doc.substr(pos + tag.size(), end - pos - tag.size());
}

} // namespace

TEST_CASE("basic commands and exit codes") {
    RunResult r = run("commutator --L \"D\" --M \"x\"");
    CHECK(r.exit_code == 0);
    CHECK(field(r.out, "output.result") == "1");

    CHECK(run("gcd-at-point --L \"D^2\" --M \"D^3\" --lambda 0 --mu 0").exit_code == 1);
    CHECK(run("spectral-curve --L \"D^2 + x\" --M \"D^3\"").exit_code == 1);
    CHECK(run("resultant --L \"D^\" --M \"x\"").exit_code == 2);
    CHECK(run("resultant --L \"D^3/2\" --M \"x\"").exit_code == 2);
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("mul --L \"D\"").exit_code == 2);
}

TEST_CASE("emitted operator strings re-parse to the same value") {
    RunResult r = run("mul --L \"(D^2 + x^4 + 1)^2 + 8*i*D + 16*x^2\" --M \"D^2 + x\"");
    REQUIRE(r.exit_code == 0);
    std::string printed = field(r.out, "output.result");
    weyl::PolyDiffOp direct =
        weyl::parse_operator("(D^2 + x^4 + 1)^2 + 8*i*D + 16*x^2") * weyl::parse_operator("D^2 + x");
    CHECK(weyl::parse_operator(printed) == direct);
}

TEST_CASE("json and text documents carry the same content") {
    std::string argstr = "spectral-curve --L \"D^2\" --M \"D^3\"";
    RunResult text = run(argstr);
    RunResult js = run(argstr + " --json");
    REQUIRE(text.exit_code == 0);
    REQUIRE(js.exit_code == 0);
    json j = json::parse(js.out);
    CHECK(j["command"] == "spectral-curve");
    CHECK(field(text.out, "output.f") == j["outputs"]["f"]);
    CHECK(field(text.out, "output.h") == j["outputs"]["h"]);
    CHECK(field(text.out, "output.r") == j["outputs"]["r"]);
    CHECK(weyl::parse_poly(j["outputs"]["h"], {"lambda", "mu"}) ==
          weyl::parse_poly("mu^2 - lambda^3", {"lambda", "mu"}));
}

TEST_CASE("deterministic output modulo timings") {
    std::string argstr = "spectral-curve --L \"D^2 + 5\" --M \"D^3\"";
    RunResult a = run(argstr);
    RunResult b = run(argstr);
    REQUIRE(a.exit_code == 0);
    CHECK(strip_timing(a.out) == strip_timing(b.out));
}

TEST_CASE("operator file indirection with comments") {
    std::string path = "./cli_test_op.op";
    {
        std::ofstream f(path);
        f << "# quartic with a nontrivial commutant\n";
        f << "(D^2 + x^4 + 1)^2 # square part\n";
        f << " + 8*i*D + 16*x^2\n";
    }
    RunResult r = run("newton --L @" + path);
    CHECK(r.exit_code == 0);
    CHECK(field(r.out, "output.points").find("(0, 4)") != std::string::npos);
    CHECK(run("newton --L @missing-file.op").exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("spectral curve cache round-trips") {
    std::string dir = "./cli_test_cache";
    std::string env = "WEYL_CACHE_DIR=" + dir;
    if (std::system(("mkdir -p " + dir).c_str()) != 0) FAIL("mkdir failed");
    std::string argstr = "spectral-curve --L \"D^2 + 1\" --M \"D^3\"";
    RunResult first = run(argstr, env);
    RunResult second = run(argstr, env);
    REQUIRE(first.exit_code == 0);
    REQUIRE(second.exit_code == 0);
    CHECK(field(first.out, "provenance.det_path") == "interpolated");
    CHECK(field(second.out, "provenance.det_path") == "cache");
    CHECK(field(first.out, "output.h") == field(second.out, "output.h"));
    CHECK(field(first.out, "output.f") == field(second.out, "output.f"));
    if (std::system(("rm -rf " + dir).c_str()) != 0) FAIL("cleanup failed");
}

TEST_CASE("subcommand coverage") {
    CHECK(field(run("order-constraints --L \"(D^3 + x^2 + 5)^2 + 2*D\"").out, "output.residues") ==
          "{0, 3}");
    CHECK(field(run("order-constraints --L \"D^4 + x*D\"").out, "output.residues") == "{0}");
    CHECK(field(run("dixmier-test --L \"D^2 + x^3\" --M \"D^2 + x^3\"").out, "output.verdict") ==
          "candidate admitted");
    CHECK(field(run("triviality-test --L \"D^2 + x^3\" --M \"(D^2 + x^3)^2\"").out,
                "output.trivial") == "true");
    CHECK(field(run("verify-relation --L \"D\" --M \"D^2\" --curve \"mu - lambda^2\"").out,
                "output.holds") == "true");
    CHECK(field(run("subresultant --L \"D^2 - 1\" --M \"D^3 - 1\" --k 1").out, "output.operator") ==
          "D - 1");
    RunResult cs = run("centralizer-search --L \"D^2\" --order 3 --degbound 0 --degbound 0 "
                       "--degbound 0");
    CHECK(field(cs.out, "output.found") == "true");

    // non-commuting input surfaces as a domain error
    CHECK(run("bc-pair --L \"(D^2 + x^3)^2 + 2*x\" --M \"D\"").exit_code == 1);
}

TEST_CASE("bc-pair document for a small true pair") {
    // L = H^2 + 2x and B = H^3 + (3/2)(xH + Hx) with H = D^2 + x^3
    std::string l = "\"(D^2 + x^3)*(D^2 + x^3) + 2*x\"";
    std::string b = "\"(D^2 + x^3)*(D^2 + x^3)*(D^2 + x^3) + 3/2*(x*(D^2 + x^3) + (D^2 + x^3)*x)\"";
    RunResult r = run("bc-pair --L " + l + " --M " + b);
    REQUIRE(r.exit_code == 0);
    CHECK(field(r.out, "output.verdict") == "already-bc-pair");
    CHECK(field(r.out, "output.g") == "1");
    CHECK(field(r.out, "output.order") == "6");
    CHECK(field(r.out, "output.h") == "-lambda^3 + mu^2");
}
