// npath — command-line front-end: regenerate the figure-family sweeps, check
// scenario files, run seeded random property sweeps, and run the structural
// checks on the distinguishability measure.
//
// Exit codes: 0 success/pass, 1 check failed (or I/O failure), 2 scenario
// parse error, 3 state-invariant violation, 64 usage error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "npath/duality.hpp"
#include "npath/errors.hpp"
#include "npath/io.hpp"
#include "npath/scenarios.hpp"

namespace {

int write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << path << "\n";
        return 1;
    }
    out << content;
    out.close();
    if (!out) {
        std::cerr << "error: failed writing output file: " << path << "\n";
        return 1;
    }
    return 0;
}

int run_figure(int id, double theta_start, double theta_end, int steps,
               const std::string& out_path) {
    const npath::ScenarioFamily family =
        id == 1 ? npath::ScenarioFamily::figure1 : npath::ScenarioFamily::figure2;
    const std::vector<npath::SweepRow> rows =
        npath::sweep(family, theta_start, theta_end, steps);
    const int rc = write_file(out_path, npath::sweep_csv(rows));
    if (rc != 0) {
        return rc;
    }
    double worst = 0.0;
    for (const npath::SweepRow& r : rows) {
        worst = std::max(worst, std::abs(r.sum_dc - 1.0));
    }
    std::cout << "max |sum_DC - 1| = " << npath::format_double(worst) << "\n";
    return 0;
}

int run_check(const std::string& path, const std::string& format) {
    const npath::Scenario sc = npath::load_scenario_file(path);
    std::cout << npath::scenario_report(sc, format == "json");
    return npath::scenario_passes(sc) ? 0 : 1;
}

int run_random_sweep(int n, int m, int count, std::uint64_t seed,
                     const std::string& out_path) {
    npath::GaussianSampler rng(seed);
    std::vector<npath::MeasureReport> reports;
    reports.reserve(static_cast<std::size_t>(count));
    bool pass = true;
    for (int k = 0; k < count; ++k) {
        const npath::MeasureReport r =
            npath::full_report(npath::random_pure_state(n, m, rng));
        const double identity_gap =
            std::abs(r.dist_d * r.dist_d - r.dist_dq * (2.0 - r.dist_dq));
        pass = pass && std::abs(r.duality_sum - 1.0) <= npath::kDualityTol &&
               identity_gap <= npath::kDualityTol;
        reports.push_back(r);
    }
    const std::string csv = npath::random_sweep_csv(reports);
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        const int rc = write_file(out_path, csv);
        if (rc != 0) {
            return rc;
        }
    }
    return pass ? 0 : 1;
}

int run_durr(int n, int probes, std::uint64_t seed) {
    const npath::DurrReport rep = npath::durr_criteria(n, probes, seed);
    std::cout << npath::durr_text(rep);
    return rep.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "npath — coherence and path-distinguishability quantifiers for N-path\n"
        "interference with a quantum path-detector"};
    app.require_subcommand(1);

    // figure
    int fig_id = 1;
    double theta_start = 0.0;
    double theta_end = std::numbers::pi;
    int steps = 181;
    std::string fig_out;
    bool degrees = false;
    CLI::App* figure = app.add_subcommand(
        "figure", "Write the D2/C2/bound2 sweep for one detector family as CSV");
    figure->add_option("--id", fig_id, "Detector family: 1 or 2")
        ->required()
        ->check(CLI::Range(1, 2));
    CLI::Option* opt_start =
        figure->add_option("--theta-start", theta_start, "Grid start (default 0)");
    CLI::Option* opt_end =
        figure->add_option("--theta-end", theta_end, "Grid end (default pi)");
    figure->add_option("--steps", steps, "Grid points (default 181)")
        ->check(CLI::Range(2, 1000000));
    figure->add_option("--out", fig_out, "Output CSV path (default figure<id>.csv)");
    figure->add_flag("--degrees", degrees,
                     "Interpret --theta-start/--theta-end as degrees");

    // check
    std::string scenario_path;
    std::string format = "json";
    CLI::App* check = app.add_subcommand(
        "check", "Evaluate a scenario file and report measures and duality verdict");
    check->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    check->add_option("--format", format, "Report format (default json)")
        ->check(CLI::IsMember({"json", "text"}));

    // random-sweep
    int rs_n = 0;
    int rs_m = 0;
    int rs_count = 0;
    std::uint64_t rs_seed = 1;
    std::string rs_out;
    CLI::App* random_sweep = app.add_subcommand(
        "random-sweep", "Seeded random pure states: per-sample quantifier CSV");
    random_sweep->add_option("--n", rs_n, "Number of paths (>= 2)")
        ->required()
        ->check(CLI::Range(2, 1000));
    random_sweep->add_option("--m", rs_m, "Detector dimension (>= 1)")
        ->required()
        ->check(CLI::Range(1, 1000));
    random_sweep->add_option("--count", rs_count, "Number of samples (>= 1)")
        ->required()
        ->check(CLI::Range(1, 100000000));
    random_sweep->add_option("--seed", rs_seed, "PRNG seed (default 1)");
    random_sweep->add_option("--out", rs_out, "Output CSV path (default stdout)");

    // durr
    int durr_n = 0;
    int durr_probes = 1000;
    std::uint64_t durr_seed = 1;
    CLI::App* durr = app.add_subcommand(
        "durr", "Structural checks on the distinguishability measure");
    durr->add_option("--n", durr_n, "Number of paths (>= 2)")
        ->required()
        ->check(CLI::Range(2, 1000));
    durr->add_option("--probes", durr_probes, "Random probe points (>= 100)")
        ->check(CLI::Range(100, 100000000));
    durr->add_option("--seed", durr_seed, "PRNG seed (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (app.got_subcommand(figure)) {
            constexpr double deg = std::numbers::pi / 180.0;
            if (degrees && opt_start->count() > 0) {
                theta_start *= deg;
            }
            if (degrees && opt_end->count() > 0) {
                theta_end *= deg;
            }
            if (fig_out.empty()) {
                fig_out = "figure" + std::to_string(fig_id) + ".csv";
            }
            return run_figure(fig_id, theta_start, theta_end, steps, fig_out);
        }
        if (app.got_subcommand(check)) {
            return run_check(scenario_path, format);
        }
        if (app.got_subcommand(random_sweep)) {
            return run_random_sweep(rs_n, rs_m, rs_count, rs_seed, rs_out);
        }
        if (app.got_subcommand(durr)) {
            return run_durr(durr_n, durr_probes, durr_seed);
        }
    } catch (const npath::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const npath::invariant_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 64;
}
