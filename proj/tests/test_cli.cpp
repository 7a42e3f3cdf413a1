#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string out_path =
        (std::filesystem::temp_directory_path() / "sxq_cli_test.out").string();
    const std::string cmd = std::string(SXQ_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return {WEXITSTATUS(rc), buf.str()};
}

}  // namespace

TEST_CASE("bounds on a builtin state, json format") {
    const auto r = run("bounds --state appendix-c.sx --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["bounds"]["u1"].get<double>() == doctest::Approx(-2.0 / 3.0).epsilon(1e-9));
    CHECK(j["bounds"]["exact_cost"].get<double>() == doctest::Approx(-2.0 / 3.0).epsilon(1e-9));
    CHECK(j["conditions"]["certificate"] == "Cor3i_1");
}

TEST_CASE("csv and json agree to 12 significant digits") {
    const auto rj = run("bounds --state eq5.sx --format json");
    const auto rc = run("bounds --state eq5.sx --format csv");
    REQUIRE(rj.exit_code == 0);
    REQUIRE(rc.exit_code == 0);
    const auto j = nlohmann::json::parse(rj.out);
    // csv row: u1,u2,l1,l2,...
    const auto header_end = rc.out.find('\n');
    const auto row = rc.out.substr(header_end + 1);
    std::istringstream ss(row);
    std::string cell;
    std::getline(ss, cell, ',');
    CHECK(std::stod(cell) == j["bounds"]["u1"].get<double>());
    std::getline(ss, cell, ',');
    CHECK(std::stod(cell) == j["bounds"]["u2"].get<double>());
}

TEST_CASE("parameter overrides via --set") {
    const auto r = run("bounds --state eq8.sx --set lambda=1 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["bounds"]["u1"].get<double>() == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("parse echoes a state that parses again") {
    const auto r = run("parse --state eq2.sx");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("systems") != std::string::npos);
    CHECK(r.out.find("ket") != std::string::npos);

    const std::string path =
        (std::filesystem::temp_directory_path() / "sxq_roundtrip.sx").string();
    std::ofstream(path) << r.out;
    const auto r2 = run("bounds --state " + path + " --format json");
    CHECK(r2.exit_code == 0);
}

TEST_CASE("sweep writes csv and svg files") {
    const auto dir = std::filesystem::temp_directory_path() / "sxq_sweep_out";
    std::filesystem::create_directories(dir);
    const std::string base = (dir / "fig").string();
    const auto r = run("sweep --state eq8.sx --param lambda --from 0 --to 1 --step 0.1 "
                       "--emit csv,svg --out " + base);
    REQUIRE(r.exit_code == 0);
    CHECK(std::filesystem::exists(base + ".csv"));
    CHECK(std::filesystem::exists(base + ".svg"));
    std::ifstream csv(base + ".csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "param,u1,u2,l1,l2");
}

TEST_CASE("converse splits-only finds the gap") {
    const auto r = run("converse --state eq5.sx --splits-only --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));
    bool found = false;
    for (const auto& c : j["candidates"])
        if (c["channel"] == "split{ra,rca}") {
            found = true;
            CHECK(c["value"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));
        }
    CHECK(found);
}

TEST_CASE("conditions subcommand") {
    const auto r = run("conditions --state appendix-c.sx --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["conditions"]["holds"]["(R;C_A|A)"].get<bool>());
    CHECK_FALSE(j["conditions"]["holds"]["(R;C_B|B)"].get<bool>());
}

TEST_CASE("exit code 1 on input errors") {
    CHECK(run("bounds --state /nonexistent/file.sx").exit_code == 1);

    const std::string bad = (std::filesystem::temp_directory_path() / "sxq_bad.sx").string();
    std::ofstream(bad) << "systems x:2, y:2\nroles C_A=x; C_B=y\nket 1 |0,0>\nket 1 |1,1>\n";
    const auto r = run("bounds --state " + bad);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("error") != std::string::npos);
}

TEST_CASE("unknown flags are an input error") {
    CHECK(run("bounds --state eq5.sx --frobnicate").exit_code != 0);
}
