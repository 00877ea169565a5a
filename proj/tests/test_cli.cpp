#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "l2lab/suites.hpp"

using namespace l2lab;
using nlohmann::ordered_json;

TEST_CASE("suite runs are deterministic for a fixed seed") {
    ordered_json cfg = {{"battery", 5}, {"homogeneous", false}};
    auto a = run_suite("sharpness", cfg);
    auto b = run_suite("sharpness", cfg);
    CHECK(report_json(a, false).dump() == report_json(b, false).dump());
    ordered_json cfg2 = {{"battery", 5}, {"homogeneous", false}, {"seed", 99}};
    auto c = run_suite("sharpness", cfg2);
    CHECK(c.seed == 99);
    CHECK(c.pass);
}

TEST_CASE("unknown suites and unknown keys are configuration errors") {
    CHECK_THROWS_AS((void)run_suite("nonsense", ordered_json::object()), Error);
    try {
        run_suite("sharpness", ordered_json{{"batttery", 1}});
        FAIL("expected ConfigError");
    } catch (const Error& e) {
        CHECK(e.tag() == "ConfigError");
    }
    try {
        run_suite("suita", ordered_json{{"truncation", 0}});
        FAIL("expected ConfigError");
    } catch (const Error& e) {
        CHECK(e.tag() == "ConfigError");
    }
}

TEST_CASE("empty part selections produce a valid passing report") {
    auto rep = run_suite("suita", ordered_json{{"parts", ordered_json::array()}});
    CHECK(rep.checks.empty());
    CHECK(rep.pass);
    auto j = report_json(rep, false);
    CHECK(j["suite"] == "suita");
    CHECK(j["checks"].is_array());
    CHECK(j["checks"].empty());
    CHECK(j["pass"] == true);
}

TEST_CASE("report schema carries all check fields") {
    auto rep = run_suite("sharpness", ordered_json{{"battery", 5}, {"homogeneous", false}});
    auto j = report_json(rep, true);
    REQUIRE(!j["checks"].empty());
    for (auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("computed"));
        CHECK(c.contains("reference"));
        CHECK(c.contains("tol"));
        CHECK(c.contains("pass"));
        CHECK(c.contains("provenance"));
    }
    CHECK(j["meta"].contains("seed"));
    CHECK(j["meta"].contains("truncation"));
    CHECK(j["meta"].contains("version"));
    CHECK(j["meta"].contains("timestamp"));
    CHECK(!report_json(rep, false)["meta"].contains("timestamp"));
}

TEST_CASE("outputs land on disk as report.json plus curve CSVs") {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "l2lab_test_out";
    fs::remove_all(dir);
    auto rep = run_suite("concavity", ordered_json{{"battery", 0}, {"linearity", false}});
    write_outputs(rep, dir.string());

    std::ifstream in(dir / "report.json");
    REQUIRE(in.good());
    ordered_json j = ordered_json::parse(in);
    CHECK(j["suite"] == "concavity");
    CHECK(j["pass"].is_boolean());

    REQUIRE(!rep.curves.empty());
    for (const auto& c : rep.curves) {
        auto p = dir / "curves" / (c.name + ".csv");
        std::ifstream csv(p);
        REQUIRE(csv.good());
        std::string header;
        std::getline(csv, header);
        std::string want;
        for (std::size_t i = 0; i < c.header.size(); ++i)
            want += (i ? "," : "") + c.header[i];
        CHECK(header == want);
        std::size_t lines = 0;
        for (std::string line; std::getline(csv, line);) ++lines;
        CHECK(lines == c.rows.size());
    }
    fs::remove_all(dir);
}
