#pragma once

// Self-verification suite: every module invariant as a named check with a
// worst-margin report. The CLI `suite` subcommand and the acceptance runner
// both drive these entry points.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace entb {

struct SuiteConfig {
    bool quick = false;
    std::uint64_t seed = 20240901ULL;
    std::size_t envelope_uniform = 1'000'000;
    std::size_t envelope_cluster = 10'000;
    std::size_t mc_samples = 100'000;  // sandwich / conjecture Monte Carlo
    std::size_t si_samples = 10'000;   // state-independence samples per design/method
    std::size_t vn_samples = 10'000;
    std::size_t prop2_samples = 1'000;
    std::size_t oracle_steps = 2'000;  // simplex discretization for L = 4
    std::size_t figure_points = 501;
    bool sandwich_high_degrees = true;  // also sample degrees 8..15 in the sandwich MC
    std::string fault;  // fault-injection hook for harness tests

    // Scaled-down grid for the < 10 s smoke run.
    static SuiteConfig quick_config();
};

struct CheckResult {
    std::string name;
    bool pass = false;
    double worst = 0.0;  // worst margin seen (sign convention per check)
    std::string detail;
};

// Individual checks (grouped by module).
CheckResult check_table1(const SuiteConfig& cfg);
CheckResult check_cheb_cos_identity(const SuiteConfig& cfg);
CheckResult check_coeff_sum_rules(const SuiteConfig& cfg);
CheckResult check_coeff_magnitude(const SuiteConfig& cfg);
CheckResult check_envelope(const SuiteConfig& cfg, const std::string& tag);
CheckResult check_g15_accuracy(const SuiteConfig& cfg);
CheckResult check_monotone_improvement(const SuiteConfig& cfg);
CheckResult check_second_derivative_closed_forms(const SuiteConfig& cfg);
CheckResult check_gegenbauer_consistency(const SuiteConfig& cfg);
CheckResult check_endpoint_derivatives(const SuiteConfig& cfg);
CheckResult check_convexity(const SuiteConfig& cfg);
CheckResult check_upsilon_closed_form(const SuiteConfig& cfg);
CheckResult check_upsilon_shape(const SuiteConfig& cfg);
CheckResult check_upsilon_oracle(const SuiteConfig& cfg);
CheckResult check_upsilon_dominance(const SuiteConfig& cfg);
CheckResult check_prop1_sandwich(const SuiteConfig& cfg);
CheckResult check_prop1_uniform(const SuiteConfig& cfg);
CheckResult check_tsan1_conjecture(const SuiteConfig& cfg);
CheckResult check_designs_builtin(const SuiteConfig& cfg);
CheckResult check_design_moment_identity(const SuiteConfig& cfg);
CheckResult check_snub_cube_search(const SuiteConfig& cfg);
CheckResult check_prop2_sandwich(const SuiteConfig& cfg);
CheckResult check_pure_state_bounds(const SuiteConfig& cfg);
CheckResult check_state_independent(const SuiteConfig& cfg);
CheckResult check_average_maxprob(const SuiteConfig& cfg);
CheckResult check_von_neumann(const SuiteConfig& cfg);
CheckResult check_figures_sandwich(const SuiteConfig& cfg);
CheckResult check_figures_ratios(const SuiteConfig& cfg);
CheckResult check_figure_determinism(const SuiteConfig& cfg);

// Runs every registered check (excluding the acceptance-only g15 accuracy
// probe), streaming one line per check when progress is non-null.
std::vector<CheckResult> run_suite(const SuiteConfig& cfg, std::ostream* progress = nullptr);

int suite_exit_code(const std::vector<CheckResult>& results);

}  // namespace entb
