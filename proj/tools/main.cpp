// Command-line front end: exposes the coefficient tables, envelope
// verification, entropy bounds, design tools, figure emission, and the
// self-check suite. Exit codes: 0 success, 1 check failure, 2 usage error.

#include "entb/coefficients.hpp"
#include "entb/errors.hpp"
#include "entb/figures.hpp"
#include "entb/poly_estimators.hpp"
#include "entb/relations.hpp"
#include "entb/rng.hpp"
#include "entb/suite.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>

namespace {

using namespace entb;

CoefficientTable table_for(const std::string& family, int n) {
    if (family == "c") return cheb_shifted_coeffs(n);
    if (family == "a") return taylor_lower_coeffs(n);
    if (family == "b") return taylor_upper_coeffs(n);
    if (family == "wa") return cheb_lower_coeffs(n);
    if (family == "wb") return cheb_upper_coeffs(n);
    throw InvalidTag("unknown family '" + family + "'");
}

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> out;
    std::istringstream in(csv);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        if (cell.empty()) throw DomainError("empty entry in list '" + csv + "'");
        out.push_back(std::stod(cell));
    }
    if (out.empty()) throw DomainError("empty list");
    return out;
}

Vec3 parse_bloch(const std::string& spec) {
    const std::string prefix = "bloch:";
    if (spec.rfind(prefix, 0) != 0)
        throw DomainError("state must be given as bloch:nx,ny,nz");
    auto v = parse_list(spec.substr(prefix.size()));
    if (v.size() != 3) throw DomainError("Bloch vector needs three components");
    return {v[0], v[1], v[2]};
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot open output file '" + path + "'");
    out << content;
}

int run(int argc, char** argv) {
    CLI::App app{"Two-sided Shannon entropy estimates from power sums, with "
                 "uncertainty/certainty relations for design-structured POVMs"};
    app.set_config("--config", "", "key=value file overriding grid sizes and tolerances; "
                                   "subcommand options live in [subcommand] sections");
    app.fallthrough();
    app.require_subcommand(1);

    // coeffs
    auto* coeffs = app.add_subcommand("coeffs", "print one coefficient family as CSV");
    std::string family = "c";
    int coeff_n = 2;
    bool exact = false;
    coeffs->add_option("--family", family, "family: c, a, b, wa, wb")->required();
    coeffs->add_option("--n", coeff_n, "degree")->required();
    coeffs->add_flag("--exact", exact, "print exact numerator/denominator columns");
    coeffs->callback([&] {
        if ((family == "a" || family == "b") && coeff_n > 64)
            throw DomainError("Taylor degrees above 64 are not exposed");
        CoefficientTable t = table_for(family, coeff_n);
        if (exact) {
            std::cout << "s,numerator,denominator\n";
            for (const auto& [s, v] : t.entries)
                std::cout << s << "," << numerator(v).str() << "," << denominator(v).str() << "\n";
        } else {
            std::cout << "s,value\n";
            for (const auto& [s, v] : t.float_entries)
                std::cout << s << "," << csv_num(v) << "\n";
        }
    });

    // verify
    auto* verify = app.add_subcommand("verify", "grid-verify one envelope inequality");
    int verify_n = 5;
    std::string ineq = "cheb-lower";
    std::size_t grid_points = 1'000'000;
    std::size_t cluster_points = 10'000;
    double slack_allowance = 1e-13;
    verify->add_option("--n", verify_n, "degree")->required();
    verify->add_option("--ineq", ineq, "taylor-lower, taylor-upper, cheb-lower, cheb-upper")
        ->required();
    verify->add_option("--grid", grid_points, "uniform grid size");
    verify->add_option("--cluster", cluster_points, "points clustered near each endpoint");
    verify->add_option("--slack-allowance", slack_allowance, "rounding allowance for min slack");
    verify->callback([&] {
        EnvelopeReport r = verify_envelope(verify_n, envelope_tag_from_string(ineq),
                                           {grid_points, cluster_points, 1e-2});
        std::cout << "n,tag,grid,min_slack,argmin_x\n";
        std::cout << r.degree << "," << to_string(r.tag) << "," << r.grid_size << ","
                  << csv_num(r.min_slack) << "," << csv_num(r.argmin_x) << "\n";
        if (r.min_slack < -slack_allowance)
            throw CheckFailure("envelope violated: min slack " + std::to_string(r.min_slack));
    });

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "two-sided entropy bounds from power sums");
    int bounds_l = 2;
    std::string indices_csv, bounds_method = "both";
    bounds_cmd->add_option("--L", bounds_l, "outcome count")->required();
    bounds_cmd->add_option("--indices", indices_csv, "I2,I3,...,In")->required();
    bounds_cmd->add_option("--method", bounds_method, "taylor, cheb, or both");
    bounds_cmd->callback([&] {
        auto values = parse_list(indices_csv);
        const int n = static_cast<int>(values.size()) + 1;
        if (n > 64) throw DomainError("degrees above 64 are not exposed");
        IndexVector idx(n, values);
        std::cout << "method,n,upsilon,lower,upper\n";
        auto print = [&](const TwoSidedBound& b) {
            std::cout << to_string(b.method) << "," << b.degree << "," << csv_num(b.upsilon) << ","
                      << csv_num(b.lower) << "," << csv_num(b.upper) << "\n";
        };
        if (bounds_method == "taylor" || bounds_method == "both") print(prop1_taylor(idx, bounds_l));
        if (bounds_method == "cheb" || bounds_method == "both")
            print(prop1_chebyshev(idx, bounds_l));
        if (bounds_method != "taylor" && bounds_method != "cheb" && bounds_method != "both")
            throw InvalidTag("unknown method '" + bounds_method + "'");
    });

    // conjecture
    auto* conj = app.add_subcommand("conjecture", "Monte Carlo margin of the Tsallis-combination bound");
    int conj_n = 15;
    std::size_t conj_samples = 100'000;
    std::uint64_t conj_seed = 20240901ULL;
    int conj_lmax = 64;
    conj->add_option("--n", conj_n, "degree (2..15)")->required();
    conj->add_option("--samples", conj_samples, "number of random distributions");
    conj->add_option("--seed", conj_seed, "RNG seed");
    conj->add_option("--Lmax", conj_lmax, "largest outcome count sampled");
    conj->callback([&] {
        std::mt19937_64 rng = stream_rng(conj_seed, 1);
        std::uniform_int_distribution<int> l_dist(2, conj_lmax);
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < conj_samples; ++i) {
            ProbabilityVector p(random_distribution(rng, l_dist(rng)));
            ConjectureCheck c = tsan1_check(p, conj_n);
            worst = std::min(worst, c.lhs - c.rhs);
        }
        std::cout << "n,samples,seed,worst_margin,holds\n";
        std::cout << conj_n << "," << conj_samples << "," << conj_seed << "," << csv_num(worst)
                  << "," << (worst >= -1e-12 ? 1 : 0) << "\n";
        if (worst < -1e-12) throw CheckFailure("conjectured inequality violated");
    });

    // design
    auto* design_cmd = app.add_subcommand("design", "inspect, verify, or export a built-in design");
    std::string design_name, export_path;
    bool do_verify = false;
    design_cmd->add_option("--name", design_name, "octahedron, icosahedron, icosidodecahedron, "
                                                  "mclaren_snub_cube, mub3")
        ->required();
    design_cmd->add_flag("--verify", do_verify, "check the frame potential at the declared strength");
    design_cmd->add_option("--export", export_path, "write Bloch components as CSV");
    design_cmd->callback([&] {
        QuantumDesign d = builtin_design(design_name);
        std::cout << "name,d,t,K,M,ell\n";
        std::cout << d.name << "," << d.dim << "," << d.strength << "," << d.K() << ","
                  << d.groups() << "," << d.group_size() << "\n";
        if (do_verify) {
            DesignCheck c = verify_design(d);
            std::cout << "strength,frame_potential,target,defect,is_design\n";
            std::cout << d.strength << "," << csv_num(frame_potential(d, d.strength)) << ","
                      << csv_num(haar_moment_d(d.strength, d.dim)) << "," << csv_num(c.defect)
                      << "," << (c.is_design ? 1 : 0) << "\n";
            if (!c.is_design) throw CheckFailure("frame potential defect beyond tolerance");
        }
        if (!export_path.empty()) {
            std::ostringstream out;
            out << "k,nx,ny,nz\n";
            for (int k = 0; k < d.K(); ++k)
                out << k << "," << csv_num(d.vectors[k][0]) << "," << csv_num(d.vectors[k][1])
                    << "," << csv_num(d.vectors[k][2]) << "\n";
            write_output(export_path, out.str());
        }
    });

    // relate
    auto* relate = app.add_subcommand("relate", "entropy bounds for a design POVM and a state");
    std::string relate_design, relate_method = "taylor", state_spec = "bloch:0,0,1";
    relate->add_option("--design", relate_design, "built-in design name")->required();
    relate->add_option("--method", relate_method, "taylor or cheb")->required();
    relate->add_option("--state", state_spec, "state as bloch:nx,ny,nz");
    relate->callback([&] {
        QuantumDesign d = builtin_design(relate_design);
        QuantumState rho = QuantumState::from_bloch(parse_bloch(state_spec));
        RelationResult r = prop2_bounds(d, rho, method_from_string(relate_method));
        std::cout << "design,method,t,ell,M,upsilon,clipped,lower,upper,average_entropy\n";
        std::cout << d.name << "," << to_string(r.method) << "," << d.strength << ","
                  << d.group_size() << "," << d.groups() << "," << csv_num(r.upsilon) << ","
                  << (r.clipped ? 1 : 0) << "," << csv_num(r.lower) << "," << csv_num(r.upper)
                  << "," << csv_num(r.average_entropy) << "\n";
    });

    // vn
    auto* vn = app.add_subcommand("vn", "von Neumann entropy bounds from state moments");
    int vn_d = 2;
    std::string vn_moments, vn_method = "both";
    vn->add_option("--d", vn_d, "Hilbert space dimension")->required();
    vn->add_option("--moments", vn_moments, "m2,...,mt")->required();
    vn->add_option("--method", vn_method, "taylor, cheb, or both");
    vn->callback([&] {
        auto tail = parse_list(vn_moments);
        std::vector<double> values = {1.0};
        values.insert(values.end(), tail.begin(), tail.end());
        MomentVector m(vn_d, static_cast<int>(values.size()), values);
        std::cout << "method,d,t,Lambda,lower,upper\n";
        auto print = [&](Method method) {
            TwoSidedBound b = von_neumann_bounds(m, method);
            std::cout << to_string(method) << "," << vn_d << "," << m.t << ","
                      << csv_num(b.upsilon) << "," << csv_num(b.lower) << "," << csv_num(b.upper)
                      << "\n";
        };
        if (vn_method == "taylor" || vn_method == "both") print(Method::Taylor);
        if (vn_method == "cheb" || vn_method == "both") print(Method::Chebyshev);
        if (vn_method != "taylor" && vn_method != "cheb" && vn_method != "both")
            throw InvalidTag("unknown method '" + vn_method + "'");
    });

    // steer
    auto* steer = app.add_subcommand("steer", "state-independent steering bound");
    std::string steer_design, steer_method = "taylor";
    int steer_samples = 10'000;
    std::uint64_t steer_seed = 20240901ULL;
    steer->add_option("--design", steer_design, "built-in design name")->required();
    steer->add_option("--method", steer_method, "taylor or cheb")->required();
    steer->add_option("--samples", steer_samples, "certification sample count (0 skips)");
    steer->add_option("--seed", steer_seed, "RNG seed");
    steer->callback([&] {
        QuantumDesign d = builtin_design(steer_design);
        SteeringBound b =
            steering_bounds(d, method_from_string(steer_method), steer_samples, steer_seed);
        std::cout << "design,method,bound,certified,samples,seed\n";
        std::cout << d.name << "," << steer_method << "," << csv_num(b.value) << ","
                  << (b.certified ? 1 : 0) << "," << steer_samples << "," << steer_seed << "\n";
        if (!b.certified)
            std::cerr << "warning: bound not certified state-independent for this run\n";
    });

    // figure
    auto* figure = app.add_subcommand("figure", "emit a figure dataset as CSV (optionally SVG)");
    std::string fig_id, fig_out;
    bool fig_svg = false;
    std::size_t fig_points = 501;
    figure->add_option("--id", fig_id, "fig1..fig6")->required();
    figure->add_option("--out", fig_out, "output CSV path ('-' for stdout)")->required();
    figure->add_flag("--svg", fig_svg, "also render an SVG next to the CSV");
    figure->add_option("--points", fig_points, "abscissa grid size");
    figure->callback([&] {
        std::string csv = figure_csv({fig_id, fig_points});
        write_output(fig_out, csv);
        if (fig_svg) {
            std::string svg_path = fig_out == "-" ? "-" : fig_out + ".svg";
            write_output(svg_path, svg_from_csv(csv));
        }
    });

    // suite
    auto* suite = app.add_subcommand("suite", "run every self-check and report margins");
    SuiteConfig cfg;
    bool quick = false;
    std::string fault;
    suite->add_flag("--quick", quick, "scaled-down grids, finishes in a few seconds");
    suite->add_option("--seed", cfg.seed, "RNG seed for the Monte Carlo checks");
    suite->add_option("--envelope-grid", cfg.envelope_uniform, "uniform envelope grid size");
    suite->add_option("--mc-samples", cfg.mc_samples, "Monte Carlo sample count");
    suite->add_option("--si-samples", cfg.si_samples, "state-independence samples");
    suite->add_option("--fault", fault, "inject a fault into a named check (harness testing)")
        ->group("");
    suite->callback([&] {
        SuiteConfig run_cfg = quick ? SuiteConfig::quick_config() : cfg;
        run_cfg.seed = cfg.seed;
        if (quick) {
            // explicit size overrides still win over the quick presets
            if (cfg.envelope_uniform != SuiteConfig{}.envelope_uniform)
                run_cfg.envelope_uniform = cfg.envelope_uniform;
            if (cfg.mc_samples != SuiteConfig{}.mc_samples) run_cfg.mc_samples = cfg.mc_samples;
            if (cfg.si_samples != SuiteConfig{}.si_samples) run_cfg.si_samples = cfg.si_samples;
        }
        run_cfg.fault = fault;
        auto results = run_suite(run_cfg, &std::cout);
        int failures = 0;
        for (const auto& r : results) failures += r.pass ? 0 : 1;
        std::cout << results.size() << " checks, " << failures << " failures\n";
        if (failures > 0) throw CheckFailure(std::to_string(failures) + " checks failed");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const CheckFailure& e) {
        std::cerr << "check failure: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
