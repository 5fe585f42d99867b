// Acceptance runner: one pass/fail line per criterion, each pinned to its
// stated grid size, sample count, tolerance, and runtime budget. Run a single
// criterion by name, or everything with no argument / "all".

#include "entb/poly_estimators.hpp"
#include "entb/suite.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace entb;

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    std::string name;
    double time_budget_s;  // 0 = no budget
    std::function<Outcome()> run;
};

SuiteConfig full_config() {
    SuiteConfig cfg;  // defaults are the full acceptance sizes
    return cfg;
}

Outcome from_checks(const std::vector<CheckResult>& results) {
    bool pass = true;
    std::ostringstream detail;
    for (std::size_t i = 0; i < results.size(); ++i) {
        pass = pass && results[i].pass;
        if (i) detail << "; ";
        detail << results[i].name << (results[i].pass ? " ok" : " FAILED") << " ("
               << results[i].detail << ")";
    }
    return {pass, detail.str()};
}

std::vector<Criterion> criteria() {
    return {
        {"table1", 1.0,
         [] { return from_checks({check_table1(full_config())}); }},

        {"envelope-min-slack", 60.0,
         [] {
             SuiteConfig cfg = full_config();
             return from_checks({check_envelope(cfg, "taylor-lower"),
                                 check_envelope(cfg, "taylor-upper"),
                                 check_envelope(cfg, "cheb-lower"),
                                 check_envelope(cfg, "cheb-upper")});
         }},

        {"g15-accuracy", 60.0,
         [] { return from_checks({check_g15_accuracy(full_config())}); }},

        {"second-derivative-identities", 1.0,
         [] {
             SuiteConfig cfg = full_config();
             return from_checks({check_second_derivative_closed_forms(cfg),
                                 check_gegenbauer_consistency(cfg),
                                 check_endpoint_derivatives(cfg)});
         }},

        {"upsilon-solver", 0.0,
         [] {
             SuiteConfig cfg = full_config();
             return from_checks({check_upsilon_closed_form(cfg), check_upsilon_shape(cfg),
                                 check_upsilon_oracle(cfg), check_upsilon_dominance(cfg)});
         }},

        {"prop1-sandwich", 0.0,
         [] {
             SuiteConfig cfg = full_config();
             cfg.sandwich_high_degrees = false;  // stated population: n in 2..7
             return from_checks({check_prop1_sandwich(cfg), check_prop1_uniform(cfg)});
         }},

        {"design-verification", 30.0,
         [] {
             SuiteConfig cfg = full_config();
             return from_checks({check_designs_builtin(cfg), check_snub_cube_search(cfg)});
         }},

        {"figure-reproduction", 30.0,
         [] {
             SuiteConfig cfg = full_config();
             return from_checks({check_figures_sandwich(cfg), check_figures_ratios(cfg)});
         }},

        {"conjecture", 0.0,
         [] { return from_checks({check_tsan1_conjecture(full_config())}); }},

        {"steering-pure-state", 0.0,
         [] {
             SuiteConfig cfg = full_config();
             return from_checks({check_pure_state_bounds(cfg), check_state_independent(cfg)});
         }},

        {"von-neumann", 0.0,
         [] { return from_checks({check_von_neumann(full_config())}); }},
    };
}

}  // namespace

int main(int argc, char** argv) {
    const std::string which = argc > 1 ? argv[1] : "all";
    int failures = 0, matched = 0;
    for (const Criterion& c : criteria()) {
        if (which != "all" && which != c.name) continue;
        ++matched;
        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = c.time_budget_s <= 0.0 || elapsed <= c.time_budget_s;
        bool pass = outcome.pass && in_budget;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.name << "  (" << elapsed << " s";
        if (c.time_budget_s > 0) std::cout << ", budget " << c.time_budget_s << " s";
        std::cout << ")\n       " << outcome.detail;
        if (!in_budget) std::cout << " [over time budget]";
        std::cout << "\n";
        failures += pass ? 0 : 1;
    }
    if (matched == 0) {
        std::cerr << "unknown criterion '" << which << "'\n";
        return 2;
    }
    if (which == "all")
        std::cout << (failures == 0 ? "all criteria passed\n"
                                    : std::to_string(failures) + " criteria failed\n");
    return failures == 0 ? 0 : 1;
}
