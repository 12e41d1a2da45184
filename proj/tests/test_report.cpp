#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "primeflow/density.hpp"
#include "primeflow/errors.hpp"
#include "primeflow/mertens.hpp"
#include "primeflow/report.hpp"

using namespace primeflow;

namespace {

RunConfig base_config(Subcommand sub) {
    RunConfig c;
    c.subcommand = sub;
    return c;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("format_double prints shortest 15-digit form") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.078498) == "0.078498");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333333");
    CHECK(format_double(std::log(1e8) - std::log(1e6)) == "4.60517018598809");
    CHECK(format_double(-2.0) == "-2");
    CHECK(format_double(1e6) == "1000000");   // exponent below the precision
    CHECK(format_double(1e16) == "1e+16");    // exponent at the precision
}

TEST_CASE("expand_grid is log spaced, rounded, deduplicated") {
    CHECK(expand_grid(10'000, 100'000'000, 1) ==
          std::vector<uint64_t>{10'000, 100'000, 1'000'000, 10'000'000,
                                100'000'000});
    CHECK(expand_grid(10'000, 100'000, 2) ==
          std::vector<uint64_t>{10'000, 31'623, 100'000});
    CHECK(expand_grid(100, 100, 5) == std::vector<uint64_t>{100});
    // Dense expansion at small start collides after rounding; the result
    // must still be strictly increasing.
    const auto dense = expand_grid(2, 30, 40);
    for (size_t i = 1; i < dense.size(); ++i) CHECK(dense[i] > dense[i - 1]);
    CHECK_THROWS_AS(expand_grid(10, 100, 0), ConfigError);
    CHECK_THROWS_AS(expand_grid(100, 10, 1), ConfigError);
    CHECK_THROWS_AS(expand_grid(1, 10, 1), ConfigError);
}

TEST_CASE("emit_report assembles consistent rows") {
    const std::vector<uint64_t> grid{10'000, 100'000, 1'000'000};
    const auto rows = emit_report(grid);
    REQUIRE(rows.size() == 3);

    CHECK(rows[0].n == 10'000);
    CHECK(rows[0].pi == 1'229);
    CHECK(rows[1].pi == 9'592);
    CHECK(rows[2].pi == 78'498);

    CHECK_FALSE(rows[0].scale_lhs.has_value());
    CHECK_FALSE(rows[0].scale_rhs.has_value());
    CHECK_FALSE(rows[0].scale_rel_err.has_value());
    REQUIRE(rows[1].scale_lhs.has_value());
    CHECK(*rows[1].scale_rhs == std::log(1e5) - std::log(1e4));

    const auto curve = mertens_residual_curve(grid);
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].fbar == curve[i].fbar);
        CHECK(rows[i].residual == curve[i].residual);
        CHECK(rows[i].inv_log ==
              1.0 / std::log(static_cast<double>(grid[i])));
    }
    // Anchor row prediction reproduces the anchor density itself.
    CHECK(rows[0].rg_pred ==
          doctest::Approx(rows[0].density).epsilon(1e-15));

    CHECK_THROWS_AS(emit_report({}), ConfigError);
    CHECK_THROWS_AS(emit_report({10, 10}), ConfigError);
}

TEST_CASE("run pi emits the pinned artifacts") {
    RunConfig c = base_config(Subcommand::Pi);
    c.n = 1'000'000;
    CHECK(run(c) == "n,pi\n1000000,78498\n");
    c.format = OutputFormat::Json;
    CHECK(run(c) == "{\"n\":1000000,\"pi\":78498}\n");
}

TEST_CASE("run flow emits the bare value in csv") {
    RunConfig c = base_config(Subcommand::Flow);
    c.t = 0.0;
    c.d0 = 0.5;
    CHECK(run(c) == "0.5\n");
    c.t = 2.0;
    CHECK(run(c) == "0.25\n");
    c.t = 1.0;
    c.order = 3u;  // series: 0.5 * (1 - 0.5 + 0.25 - 0.125)
    CHECK(run(c) == "0.3125\n");
    c.format = OutputFormat::Json;
    const auto doc = nlohmann::json::parse(run(c));
    CHECK(doc["order"] == 3);
    CHECK(doc["flow"] == 0.3125);
}

TEST_CASE("run scale-check emits one csv row") {
    RunConfig c = base_config(Subcommand::ScaleCheck);
    c.n1 = 100'000'000;
    c.n2 = 1'000'000;
    const auto lines = lines_of(run(c));
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "n1,n2,lhs,rhs,abs_err,rel_err");
    CHECK(lines[1].rfind("100000000,1000000,", 0) == 0);
    CHECK(lines[1].find("4.60517018598809") != std::string::npos);
}

TEST_CASE("run report emits the pinned csv schema") {
    RunConfig c = base_config(Subcommand::Report);
    c.grid = {10'000, 100'000};
    const auto lines = lines_of(run(c));
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == kReportCsvHeader);
    // First row has no previous pair: three trailing empty fields.
    CHECK(lines[1].substr(lines[1].size() - 3) == ",,,");
    CHECK(std::count(lines[1].begin(), lines[1].end(), ',') == 10);
    CHECK(std::count(lines[2].begin(), lines[2].end(), ',') == 10);
}

TEST_CASE("single-point report keeps the pair columns empty") {
    RunConfig c = base_config(Subcommand::Report);
    c.grid = {10'000};
    const auto lines = lines_of(run(c));
    REQUIRE(lines.size() == 2);
    CHECK(lines[1].substr(lines[1].size() - 3) == ",,,");
}

TEST_CASE("report json carries nulls for the first pair") {
    RunConfig c = base_config(Subcommand::Report);
    c.grid = {10'000, 100'000};
    c.format = OutputFormat::Json;
    const auto doc = nlohmann::json::parse(run(c));
    REQUIRE(doc["rows"].size() == 2);
    CHECK(doc["rows"][0]["scale_lhs"].is_null());
    CHECK(doc["rows"][1]["scale_lhs"].is_number());
    CHECK(doc["rows"][0]["pi"] == 1'229);
}

TEST_CASE("identical config gives byte-identical artifacts") {
    RunConfig c = base_config(Subcommand::Report);
    c.grid = expand_grid(10'000, 1'000'000, 2);
    const std::string first = run(c);
    const std::string second = run(c);
    CHECK(first == second);
    c.format = OutputFormat::Json;
    CHECK(run(c) == run(c));
}

TEST_CASE("out path receives exactly the returned artifact") {
    RunConfig c = base_config(Subcommand::Pi);
    c.n = 1'000;
    c.out_path = "test_report_out.tmp";
    const std::string artifact = run(c);
    std::ifstream in(*c.out_path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == artifact);
    std::remove(c.out_path->c_str());
}

TEST_CASE("missing scalars are config errors") {
    CHECK_THROWS_AS(run(base_config(Subcommand::Pi)), ConfigError);
    CHECK_THROWS_AS(run(base_config(Subcommand::Density)), ConfigError);
    CHECK_THROWS_AS(run(base_config(Subcommand::Flow)), ConfigError);
    CHECK_THROWS_AS(run(base_config(Subcommand::ScaleCheck)), ConfigError);
    CHECK_THROWS_AS(run(base_config(Subcommand::Mertens)), ConfigError);
    CHECK_THROWS_AS(run(base_config(Subcommand::Report)), ConfigError);
    RunConfig c = base_config(Subcommand::ScaleCheck);
    c.n1 = 1'000;
    c.n2 = 1'000;
    CHECK_THROWS_AS(run(c), ConfigError);
}

TEST_CASE("exit codes follow the error taxonomy") {
    const auto code_for = [](auto&& thrower) {
        try {
            thrower();
        } catch (...) {
            return exit_code_for_current_exception();
        }
        return 0;
    };
    CHECK(code_for([] { throw ConfigError("x"); }) == 1);
    CHECK(code_for([] { throw DomainError("x"); }) == 1);
    CHECK(code_for([] { throw SeriesRadiusError("x"); }) == 1);
    CHECK(code_for([] { throw LimitError("x"); }) == 2);
    CHECK(code_for([] { throw VerificationError("x"); }) == 3);
    CHECK(code_for([] { throw std::runtime_error("x"); }) == 1);
}

TEST_CASE("shipped schema declares all six artifact shapes") {
    std::ifstream in(PRIMEFLOW_SCHEMA);
    REQUIRE(in.good());
    const auto schema = nlohmann::json::parse(in);
    REQUIRE(schema.contains("oneOf"));
    CHECK(schema["oneOf"].size() == 6);
    for (const char* shape :
         {"pi", "mertens", "density", "flow", "scale_check", "report"})
        CHECK(schema["definitions"].contains(shape));
}

}  // TEST_SUITE
