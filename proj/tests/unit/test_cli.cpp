#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "superalg/cli.hpp"
#include "superalg/field.hpp"

using namespace sa;

namespace {

int call(std::vector<std::string> args) {
    args.insert(args.begin(), "superalg");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    return cli::main_entry(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string tmp(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST_CASE("cli: config validation") {
    cli::RunConfig c;
    CHECK_NOTHROW(cli::validate(c));
    c.p = 4;
    CHECK_THROWS_WITH_AS(cli::validate(c), "p must be prime", usage_error);
    c.p = 2;
    CHECK_THROWS_AS(cli::validate(c), usage_error);
    c.p = 17;
    CHECK_THROWS_AS(cli::validate(c), usage_error);
    c.p = 3;
    c.depth = 13;
    CHECK_THROWS_AS(cli::validate(c), usage_error);
    c.depth = 6;
    c.suites = {"blocks", "nope"};
    CHECK_THROWS_AS(cli::validate(c), usage_error);
    c.suites = {"blocks"};
    c.format = "xml";
    CHECK_THROWS_AS(cli::validate(c), usage_error);

    setenv("SUPERALG_MAX_P", "19", 1);
    CHECK(cli::max_prime() == 19);
    c.format = "json";
    c.p = 17;
    CHECK_NOTHROW(cli::validate(c));
    unsetenv("SUPERALG_MAX_P");
    CHECK(cli::max_prime() == 13);
}

TEST_CASE("cli: blocks suite and report formats") {
    cli::RunConfig c;
    c.suites = {"blocks"};
    auto r = cli::run(c);
    REQUIRE(r.suites.size() == 1);
    CHECK(r.suites[0].summary == "blocks: 2, pairing {0,2},{1}");
    CHECK(r.pass());
    CHECK(r.first_failure().empty());
    CHECK(cli::render(r, "markdown").find("blocks: 2, pairing {0,2},{1}") != std::string::npos);
    auto j = nlohmann::json::parse(cli::render(r, "json"));
    CHECK(j["suites"][0]["claims"][0]["verdict"] == "pass");
    CHECK(cli::render(r, "csv").rfind("suite,claim,verdict,detail\n", 0) == 0);

    c.p = 5;
    CHECK(cli::run(c).suites[0].summary == "blocks: 3, pairing {0,4},{1,3},{2}");
}

TEST_CASE("cli: iso sweep matrix") {
    cli::RunConfig c;
    c.suites = {"iso-sweep"};
    c.seed = 7;
    auto r = cli::run(c);
    REQUIRE(r.suites.size() == 1);
    CHECK(r.suites[0].summary == "iso-sweep: 16 pairs");
    CHECK(r.pass());
    REQUIRE(r.suites[0].table.size() == 5);
    CHECK(r.suites[0].table[1] == "(1,1)        Y     N     N     Y");
}

TEST_CASE("cli: suites run in order and failures are reported") {
    cli::RunConfig c;
    c.suites = {"endrings", "pbw"};
    auto r = cli::run(c);
    REQUIRE(r.suites.size() == 2);
    CHECK(r.suites[0].name == "pbw");
    CHECK(r.suites[0].pass());
    CHECK_FALSE(r.suites[1].pass());
    CHECK(r.first_failure().rfind("endrings: ", 0) == 0);
}

TEST_CASE("cli: exit codes and determinism") {
    const std::string a = tmp("superalg_a.json"), b = tmp("superalg_b.json");
    CHECK(call({"run", "--p", "3", "--suites", "blocks,iso-sweep", "--seed", "7", "--format", "json", "--out", a}) == 0);
    CHECK(call({"run", "--p", "3", "--suites", "blocks,iso-sweep", "--seed", "7", "--format", "json", "--out", b}) == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(call({"run", "--p", "4", "--suites", "blocks"}) == 2);
    CHECK(call({"run", "--p", "3", "--suites", "bogus"}) == 2);
    CHECK(call({"run", "--p", "3", "--depth", "x"}) == 2);
    CHECK(call({"run", "--p", "3", "--suites", "endrings", "--out", a}) == 1);
    CHECK(call({"catalogue", "--p", "3", "--n-max", "0", "--format", "csv", "--out", a}) == 0);
    CHECK(slurp(a).rfind("family,lambda,n,c,dim,parity_shifted\nP,0,0,0,12,0\nP,0,0,0,12,1\n", 0) == 0);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST_CASE("cli: catalogue") {
    auto r0 = cli::report_catalogue(3, 0);
    CHECK(r0.size() == 12);  // P and V for each lambda, each with its parity shift
    for (auto& row : r0) CHECK((row.family == "P" || row.family == "V"));

    auto r5 = cli::report_catalogue(5, 0);
    std::vector<int> vd, pd;
    for (auto& row : r5)
        if (!row.parity_shifted) (row.family == "V" ? vd : pd).push_back(row.dim);
    CHECK(vd == std::vector<int>{1, 3, 5, 7, 9});
    CHECK(pd == std::vector<int>(5, 20));

    auto r1 = cli::report_catalogue(3, 1);
    std::map<std::string, int> count;
    for (auto& row : r1) count[row.family]++;
    CHECK(count["P"] == 6);
    CHECK(count["V"] == 12);
    CHECK(count["Vt"] == 6);
    CHECK(count["W"] == 6);
    CHECK(count["Wt"] == 6);
    CHECK(count["T"] == 12);  // 3 lambdas, 2 values of c
    for (auto& row : r1) {
        if (row.family == "T") CHECK(row.dim == 12);
        if (row.family == "W" || row.family == "Wt") CHECK(row.dim == 6);
    }
    CHECK(cli::render_catalogue(r0, "markdown").find("| P | 0 | 0 | 0 | 12 | no |") != std::string::npos);
    CHECK_THROWS_AS(cli::report_catalogue(4, 1), usage_error);
}
