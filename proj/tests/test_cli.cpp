#include "pellkit/cli.hpp"

#include "pellkit/applications.hpp"
#include "pellkit/lehmer.hpp"

#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace pellkit;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("pell verb emits the fundamental solution") {
    auto r = run_cli({"pell", "--d", "3", "--rhs", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"x\":\"2\",\"y\":\"1\"}\n");
}

TEST_CASE("classify verb") {
    auto r = run_cli({"classify", "--x", "26", "--y", "15", "--d", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"m\":3}\n");

    auto r5 = run_cli({"classify", "--x", "123", "--y", "55", "--d", "5"});
    CHECK(r5.code == 0);
    CHECK(r5.out == "{\"m\":5}\n");
}

TEST_CASE("unsolvable equations are values, not errors") {
    auto r = run_cli({"pell", "--d", "3", "--rhs", "-1"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"solvable\":false}\n");
}

TEST_CASE("exit codes distinguish domain and usage errors") {
    auto usage = run_cli({"pell"});
    CHECK(usage.code == 2);
    CHECK(!usage.err.empty());

    auto unknown = run_cli({"frobnicate", "--d", "3"});
    CHECK(unknown.code == 2);

    auto domain = run_cli({"pell", "--d", "4", "--rhs", "1"});
    CHECK(domain.code == 1);
    CHECK(domain.err.find("domain error") != std::string::npos);

    auto bad_theorem = run_cli({"verify", "--theorem", "9.9"});
    CHECK(bad_theorem.code == 2);
}

TEST_CASE("verify verb reports the theorem 3.9 exception") {
    auto r = run_cli({"verify", "--theorem", "3.9", "--dmax", "50", "--mmax", "9"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["theorem"] == "3.9");
    CHECK(j["unexplained"] == false);
    REQUIRE(j["exceptions"].size() == 1);
    CHECK(j["exceptions"][0]["witness"] ==
          nlohmann::json::array({"123", "55", "5"}));
    CHECK(j["exceptions"][0]["known"] == true);
}

TEST_CASE("empty exception lists serialize as empty arrays") {
    auto r = run_cli({"verify", "--theorem", "3.1", "--dmax", "20", "--mmax", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"exceptions\":[]") != std::string::npos);
}

TEST_CASE("output is deterministic across invocations") {
    std::vector<std::string> args{"verify", "--theorem", "3.4", "--dmax", "30", "--mmax", "7"};
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("json output parses back to the originating values") {
    auto r = run_cli({"minimal", "--k", "5", "--l", "1", "--c", "4", "--count", "3"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["solutions"].size() == 3);
    CHECK(Int(j["solutions"][2]["x"].get<std::string>()) == 5);
    CHECK(Int(j["solutions"][2]["y"].get<std::string>()) == 11);
}

TEST_CASE("split and lehmer verbs") {
    auto s = run_cli({"split", "--d", "6"});
    CHECK(s.code == 0);
    auto js = nlohmann::json::parse(s.out);
    CHECK(js["k"] == "3");
    CHECK(js["l"] == "2");
    CHECK(js["c"] == 1);
    CHECK(js["unique"] == "yes");

    auto l = run_cli({"lehmer", "--n", "25", "--r", "1", "--q", "-1"});
    CHECK(l.code == 0);
    auto jl = nlohmann::json::parse(l.out);
    CHECK(jl["p"] == "75025");
    CHECK(jl["q"] == "167761");
}

TEST_CASE("gp and ma verbs") {
    auto g = run_cli({"gp", "--construct", "1"});
    CHECK(g.code == 0);
    auto jg = nlohmann::json::parse(g.out);
    CHECK(jg["values"] == nlohmann::json::array({"1", "6", "36"}));

    auto m = run_cli({"ma", "--p", "11", "--a", "1", "--b", "1", "--k", "5", "--t", "2",
                      "--r", "1", "--delta", "4", "--rhs-const", "4", "--bruteforce", "200"});
    CHECK(m.code == 0);
    auto jm = nlohmann::json::parse(m.out);
    CHECK(jm["solutions"] == nlohmann::json::parse("[[\"123\",\"1\"]]"));
}

TEST_CASE("ljunggren output round trips against the library") {
    auto r = run_cli({"ljunggren", "--family", "quotient", "--c", "-2", "--amax", "8",
                      "--xmax", "8", "--nmax", "9"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    LjQuery q;
    q.family = LjFamily::power_over_linear;
    q.c = -2;
    q.bounds.a_max = 8;
    q.bounds.x_max = 8;
    q.bounds.n_max = 9;
    auto sols = ljunggren_solve(q);
    REQUIRE(j["solutions"].size() == sols.size());
    for (std::size_t i = 0; i < sols.size(); ++i) {
        CHECK(Int(j["solutions"][i]["a"].get<std::string>()) == sols[i].a);
        CHECK(Int(j["solutions"][i]["y"].get<std::string>()) == sols[i].y);
        CHECK(j["solutions"][i]["n"].get<unsigned long>() == sols[i].n);
    }
}

TEST_CASE("scan output round trips against the library") {
    auto r = run_cli({"lehmer", "--r", "1", "--q", "-1", "--scan", "50"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    auto scan = lemma23_scan(LehmerParams(Int(1), Int(-1)), 50);
    REQUIRE(j["hits"].size() == scan.hits.size());
    CHECK(j["outside"].empty());
}

TEST_CASE("table mode is plain aligned text") {
    auto r = run_cli({"--table", "verify", "--theorem", "3.1", "--dmax", "10", "--mmax", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("theorem       3.1") != std::string::npos);
    CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("--out writes the document verbatim to a file") {
    std::string path = "cli_out_test.json";
    auto r = run_cli({"--out", path, "pell", "--d", "3", "--rhs", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == "{\"x\":\"2\",\"y\":\"1\"}\n");
    std::remove(path.c_str());
}

TEST_SUITE_END();
