#include "doctest.h"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(HEIGHTLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json result_of(const RunResult& r) {
    json j = json::parse(r.out);
    REQUIRE(j.at("status") == "ok");
    return j.at("result");
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("tame worked example") {
    RunResult r = run_cli("tame --f t --g 1-t --at t");
    CHECK(r.exit_code == 0);
    json res = result_of(r);
    CHECK(res.at("symbol") == "1");
    CHECK(res.at("norm") == "1");
}

TEST_CASE("weil worked example") {
    RunResult r = run_cli("weil --f t --g t-2");
    CHECK(r.exit_code == 0);
    json res = result_of(r);
    CHECK(res.at("product") == "1");
    CHECK(res.at("factors").size() == 3);
}

TEST_CASE("pair0 and recip0 with inline JSON") {
    RunResult r = run_cli(
        R"x(pair0 --xi1 '{"terms":[{"f":"t","support":"P1"}]}' --xi2 '{"div":"(t-2)/(t-3)"}')x");
    CHECK(r.exit_code == 0);
    CHECK(result_of(r).at("ratio") == "2/3");

    RunResult r2 = run_cli(
        R"x(recip0 --xi1 '{"terms":[{"f":"t^2+1","support":"P1"}]}' --xi2 '{"terms":[{"f":"(t-1)/(t-2)","support":"P1"}]}')x");
    CHECK(r2.exit_code == 0);
    CHECK(result_of(r2).at("equal") == true);
}

TEST_CASE("pair1 preset hits the derived closed form") {
    RunResult r = run_cli("pair1 --example paper --f1 2");
    CHECK(r.exit_code == 0);
    double v = result_of(r).at("value").get<double>();
    CHECK(v == doctest::Approx(-39.47841760435743 * std::log(2.0)).epsilon(1e-8));
}

TEST_CASE("pair1 general JSON input reproduces the preset") {
    std::string input =
        R"x({"xi1":{"terms":[)x"
        R"x({"num":[0,-1,0],"den":[0,0,1],"line":[1,0,0]},)x"
        R"x({"num":[0,0,-1],"den":[1,0,0],"line":[0,1,0]},)x"
        R"x({"num":[-1,0,0],"den":[0,1,0],"line":[0,0,1]}]},)x"
        R"x("f1":{"scalar":2},)x"
        R"x("f2":{"factors":[{"form":["7/10-3/10i","-3/10+7/10i","-3/10-3/10i"],"exp":1},)x"
        R"x({"form":[1,1,1],"exp":-1}]}})x";
    RunResult r = run_cli("pair1 --input '" + input + "'");
    CHECK(r.exit_code == 0);
    double v = result_of(r).at("value").get<double>();
    CHECK(v == doctest::Approx(-39.47841760435743 * std::log(2.0)).epsilon(1e-8));
}

TEST_CASE("winding preset") {
    RunResult r = run_cli("winding --example paper --p 3/10+3/10i --power 2");
    CHECK(r.exit_code == 0);
    CHECK(result_of(r).at("winding") == 2);
    RunResult r2 = run_cli("winding --example paper --orientation cw");
    CHECK(result_of(r2).at("winding") == -1);
}

TEST_CASE("ntheight regression through the CLI") {
    RunResult r = run_cli("ntheight --curve 0,0,1,-1,0 --point 0,0 --tol 1e-5");
    CHECK(r.exit_code == 0);
    CHECK(result_of(r).at("canonical_height").get<double>() ==
          doctest::Approx(0.0511114082).epsilon(1e-3));
    // bracketed spellings are accepted too
    RunResult rb = run_cli("ntheight --curve [0,0,1,-1,0] --point [0,0] --tol 1e-5");
    CHECK(rb.exit_code == 0);
    CHECK(result_of(rb).at("canonical_height") == result_of(r).at("canonical_height"));
}

TEST_CASE("ex5 composite factor") {
    RunResult r = run_cli(
        "ex5 --curve 0,0,1,-1,0 --p1 0,0 --q1 1,0 --p2 -1,-1 --q2 2,-3 --genera 1 --tol 1e-5");
    CHECK(r.exit_code == 0);
    CHECK(result_of(r).at("chow_kunneth_factor") == -2);
}

TEST_CASE("arakelov report") {
    RunResult r = run_cli("arakelov --d -1 --alpha 1,1");
    CHECK(r.exit_code == 0);
    json res = result_of(r);
    CHECK(res.at("degree").get<double>() == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(res.at("finite").size() == 1);
    CHECK(res.at("norm") == "2");
}

TEST_CASE("spread presets") {
    RunResult r = run_cli("spread --example affine");
    CHECK(r.exit_code == 0);
    json res = result_of(r);
    CHECK(res.at("verified") == true);
    CHECK(res.at("relations").size() == 1);

    RunResult r2 = run_cli("spread --example projective");
    json res2 = result_of(r2);
    CHECK(res2.at("relations").size() == 3);
    CHECK(res2.at("verified") == true);

    RunResult r3 = run_cli("spread --expr x^2-2");
    CHECK(result_of(r3).at("relations").empty());
}

TEST_CASE("deterministic byte-identical reports") {
    RunResult a = run_cli("pair1 --example paper --f1 2");
    RunResult b = run_cli("pair1 --example paper --f1 2");
    CHECK(a.out == b.out);
    RunResult c = run_cli("weil --f 't^2+1' --g '(t-1)/(t-2)'");
    RunResult d = run_cli("weil --f 't^2+1' --g '(t-1)/(t-2)'");
    CHECK(c.out == d.out);
}

TEST_CASE("typed domain errors exit 1") {
    RunResult r = run_cli("tame --f t --g t --at 't^3-2'");
    CHECK(r.exit_code == 1);
    json j = json::parse(r.out);
    CHECK(j.at("status") == "error");
    CHECK(j.at("error").contains("type"));

    RunResult r2 = run_cli("pair1 --example paper --f1 2 --p 1/2");
    CHECK(r2.exit_code == 1);
    CHECK(json::parse(r2.out).at("error").at("type") == "SingularityOnPath");

    RunResult r3 = run_cli("ntheight --curve 0,0,0,0,0 --point 0,0");
    CHECK(r3.exit_code == 1);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("tame --f t").exit_code == 2);
}

TEST_CASE("HEIGHTLAB_TOL is honored") {
    RunResult r = run_cli("pair1 --example paper --f1 2"); // env default 1e-9
    CHECK(json::parse(r.out).at("inputs").at("tol").get<double>() ==
          doctest::Approx(1e-9));
    std::string cmd = "HEIGHTLAB_TOL=1e-7 " + std::string(HEIGHTLAB_CLI_PATH) +
                      " pair1 --example paper --f1 2";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    pclose(p);
    CHECK(json::parse(out).at("inputs").at("tol").get<double>() == doctest::Approx(1e-7));
}

} // TEST_SUITE
