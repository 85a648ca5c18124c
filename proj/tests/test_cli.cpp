#include <doctest.h>

#include "rankdens/cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

using namespace rankdens;
using namespace rankdens::cli;

namespace {

struct Out {
    int code;
    std::string out, err;
};

Out run_cli(const std::string& cmd, const std::string& name, std::map<std::string, std::string> params,
            Format fmt = Format::text, unsigned jobs = 1) {
    RunConfig cfg;
    cfg.command = cmd;
    cfg.name = name;
    cfg.params = std::move(params);
    cfg.format = fmt;
    cfg.jobs = jobs;
    std::ostringstream o, e;
    int c = run(cfg, o, e);
    return {c, o.str(), e.str()};
}

} // namespace

TEST_CASE("formula output") {
    auto r = run_cli("formula", "density3x3", {{"q", "2"}});
    CHECK(r.code == 0);
    CHECK(r.out.find("192/788035") != std::string::npos);
    r = run_cli("formula", "qbinom", {{"i", "4"}, {"j", "2"}, {"q", "2"}});
    CHECK(r.out.rfind("qbinom = 35", 0) == 0);
    r = run_cli("formula", "avg-rank", {{"q", "2"}, {"N", "10"}, {"k", "6"}, {"l", "31"}, {"rho", "10"}}, Format::json);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["float"].get<double>() > 0.1352);
    CHECK(j["float"].get<double>() < 0.1353);
    r = run_cli("formula", "rank-count", {{"kind", "hermitian"}, {"n", "1"}, {"i", "1"}, {"q", "2"}}, Format::json);
    j = nlohmann::json::parse(r.out);
    CHECK(j["exact"] == "1");
    CHECK(j["printed_variant"] == "3");
    // every registered formula rejects a call with no parameters as a usage error
    for (const auto& name : formula_names()) {
        if (name == "kantor") continue; // needs --n, checked below
        CHECK(run_cli("formula", name, {}).code == 2);
    }
    CHECK(run_cli("formula", "kantor", {}).code == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("formula", "nope", {}).code == 2);
    CHECK(run_cli("formula", "qbinom", {{"i", "4"}, {"j", "2"}, {"q", "2"}, {"n", "3"}}).code == 2);
    CHECK(run_cli("formula", "qbinom", {{"i", "x"}, {"j", "2"}, {"q", "2"}}).code == 2);
    CHECK(run_cli("formula", "density-2dim", {{"n", "2"}, {"q", "6"}}).code == 2);
    CHECK(run_cli("verify", "nope", {}).code == 2);
    CHECK(run_cli("table", "nope", {}).code == 2);
    CHECK(run_cli("nope", "", {}).code == 2);
    CHECK_THROWS_AS(parse_format("xml"), usage_error);
    CHECK(parse_count("1e9") == 1000000000ull);
    CHECK(parse_count("250") == 250);
    CHECK_THROWS_AS(parse_count("1.5"), usage_error);
    CHECK_THROWS_AS(parse_count("abc"), usage_error);
}

TEST_CASE("verify reports") {
    auto r = run_cli("verify", "mrd192", {}, Format::json);
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["check"].size() == 3);
    for (const auto& c : j["check"]) CHECK(c["status"] == "PASS");
    CHECK(j["check"][0]["detail"] == "192 = 192");

    RunConfig cfg;
    cfg.command = "verify";
    cfg.name = "mrd192";
    cfg.budget.limit = 100;
    std::ostringstream o, e;
    CHECK(run(cfg, o, e) == 0);
    CHECK(o.str().find("SKIPPED") != std::string::npos);
    CHECK(o.str().find("FAIL") == std::string::npos);

    r = run_cli("verify", "carlitz", {});
    CHECK(r.code == 0);
    CHECK(r.out.find("printed variant differs") != std::string::npos);
}

TEST_CASE("tables are byte-stable CSV") {
    auto r = run_cli("table", "critical-example", {});
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "rho,density_num,density_den,density_float_4dp");
    std::vector<std::string> last;
    while (std::getline(in, line)) last.push_back(line.substr(line.rfind(',') + 1));
    CHECK(last == std::vector<std::string>{"0.1352", "0.1333", "0.1295", "0.1211", "0.1003", "0.0000"});
    CHECK(run_cli("table", "critical-example", {}).out == r.out);

    r = run_cli("table", "rank-strata", {{"kind", "hermitian"}, {"n", "2"}, {"q", "2"}});
    CHECK(r.out == "i,printed_formula,validated_formula,enumerated\n0,1,1,1\n1,15,5,5\n2,18,10,10\n");

    r = run_cli("table", "mrd-bounds", {{"n", "3..7"}, {"q", "2"}});
    CHECK(r.code == 0);
    CHECK(r.out.find("\n3,2,192,") != std::string::npos);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
    CHECK(run_cli("table", "mrd-bounds", {{"n", "7..3"}, {"q", "2"}}).code == 2);
}

TEST_CASE("density subcommand") {
    auto r = run_cli("density", "", {{"n", "3"}, {"m", "3"}, {"k", "3"}, {"d", "3"}, {"q", "2"}}, Format::json, 4);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == "192");
    CHECK(j["total"] == "788035");
    r = run_cli("density", "", {{"n", "2"}, {"k", "1"}, {"d", "2"}, {"q", "3"}, {"kind", "symmetric"}}, Format::json);
    j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "symmetric");
}
