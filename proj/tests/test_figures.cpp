#include "entb/figures.hpp"

#include "entb/errors.hpp"
#include "entb/suite.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace entb;

namespace {

std::vector<std::vector<double>> rows_of(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::vector<std::vector<double>> rows;
    bool first = true;
    while (std::getline(in, line)) {
        if (first || line.empty()) {
            first = false;
            continue;
        }
        std::istringstream ls(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

TEST_CASE("fig1 rows vanish at both ends and keep orientation") {
    std::string csv = emit_fig1({3, 5, 7}, 101);
    auto rows = rows_of(csv);
    REQUIRE(rows.size() == 101);
    for (double v : rows.front()) CHECK(std::fabs(v) <= 1e-15);
    for (std::size_t c = 1; c < rows.back().size(); ++c)
        CHECK(std::fabs(rows.back()[c]) <= 1e-13);
    for (const auto& r : rows) {
        double y = r[1];
        for (int c = 2; c <= 4; ++c) CHECK(r[c] >= y - 1e-12);  // -f_n columns
        for (int c = 5; c <= 7; ++c) CHECK(r[c] >= y - 1e-12);  // g_n columns
    }
}

TEST_CASE("entropy figures collapse at the maximally mixed end") {
    for (const char* id : {"fig2", "fig3"}) {
        std::string csv = emit_entropy_figure({id, 51});
        auto rows = rows_of(csv);
        REQUIRE(rows.size() == 51);
        double lnl = std::log(id == std::string("fig3") ? 2.0 : 6.0);
        for (std::size_t c = 1; c < rows.back().size(); ++c)
            CHECK(rows.back()[c] == doctest::Approx(lnl).epsilon(1e-9));
        for (const auto& r : rows) {
            CHECK(r[2] <= r[1] + 1e-10);  // LT <= H
            CHECK(r[1] <= r[3] + 1e-10);  // H <= UT
            CHECK(r[4] <= r[1] + 1e-10);  // LCh <= H
            CHECK(r[1] <= r[5] + 1e-10);  // H <= UCh
        }
    }
}

TEST_CASE("figure emission is deterministic") {
    CHECK(emit_fig1({3, 5, 7}, 64) == emit_fig1({3, 5, 7}, 64));
    CHECK(emit_entropy_figure({"fig4", 21}) == emit_entropy_figure({"fig4", 21}));
    CHECK_THROWS_AS(figure_csv({"fig9", 11}), InvalidTag);
}

TEST_CASE("svg rendering produces polylines for each column") {
    std::string csv = emit_entropy_figure({"fig3", 21});
    std::string svg = svg_from_csv(csv);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("ID") != std::string::npos);
}

TEST_CASE("quick suite passes end to end") {
    SuiteConfig cfg = SuiteConfig::quick_config();
    auto results = run_suite(cfg, nullptr);
    for (const auto& r : results) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
    CHECK(suite_exit_code(results) == 0);
}

TEST_CASE("fault injection trips the reference-table check") {
    SuiteConfig cfg = SuiteConfig::quick_config();
    cfg.fault = "table1";
    CheckResult r = check_table1(cfg);
    CHECK_FALSE(r.pass);
    CHECK(r.name == "table1_equality");
}
