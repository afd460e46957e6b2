#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "soesim/config.hpp"
#include "soesim/engine.hpp"
#include "soesim/params.hpp"
#include "soesim/report.hpp"
#include "soesim/scenario.hpp"
#include "soesim/stats.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 3;

struct CommonOptions {
    std::string params_file;
    std::vector<std::string> scenario_files;
    std::string scenario_set;
};

std::vector<soesim::Scenario> load_scenarios(const CommonOptions& opt) {
    std::vector<soesim::Scenario> scenarios;
    if (!opt.scenario_set.empty())
        scenarios = soesim::load_scenario_set(opt.scenario_set);
    for (const auto& f : opt.scenario_files)
        scenarios.push_back(soesim::load_scenario(f));
    return scenarios;
}

// Prints violations, returns false if any.
bool report_violations(const std::string& what, const std::vector<std::string>& violations) {
    for (const auto& v : violations)
        std::cerr << what << ": " << v << "\n";
    return violations.empty();
}

int cmd_validate(const CommonOptions& opt, int horizon) {
    const soesim::Params params = soesim::load_params(opt.params_file);
    bool ok = report_violations(opt.params_file, soesim::validate_params(params));

    const int h = horizon > 0 ? horizon : params.engine.horizon;
    for (const auto& sc : load_scenarios(opt))
        ok = report_violations("scenario '" + sc.name + "'", sc.validate(h)) && ok;

    if (ok) std::cout << "ok\n";
    return ok ? kExitOk : kExitValidation;
}

int cmd_run(const CommonOptions& opt, int paths, int horizon, std::uint64_t seed,
            const std::string& out_dir, std::vector<double> qs, int threads,
            bool serial) {
    soesim::Params params = soesim::load_params(opt.params_file);
    if (!report_violations(opt.params_file, soesim::validate_params(params)))
        return kExitValidation;

    const int n_paths = paths > 0 ? paths : params.engine.n_paths;
    const int h = horizon > 0 ? horizon : params.engine.horizon;

    const auto scenarios = load_scenarios(opt);
    if (scenarios.empty()) {
        std::cerr << "no scenarios given (use --scenario or --scenario-set)\n";
        return kExitUsage;
    }
    bool ok = true;
    for (const auto& sc : scenarios)
        ok = report_violations("scenario '" + sc.name + "'", sc.validate(h)) && ok;
    if (!ok) return kExitValidation;

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif

    // Run the whole grid first; files are only written once every scenario
    // has a usable ensemble.
    std::vector<soesim::EnsembleStats> stats;
    stats.reserve(scenarios.size());
    for (const auto& sc : scenarios) {
        const auto ensemble =
            serial ? soesim::run_ensemble_serial(sc, params, seed, n_paths, h)
                   : soesim::run_ensemble(sc, params, seed, n_paths, h);
        stats.push_back(soesim::summarize(sc.name, ensemble, qs));
        const auto& st = stats.back();
        std::cout << sc.name << ": " << st.paths_used() << " paths";
        if (st.paths_aborted > 0) std::cout << " (" << st.paths_aborted << " aborted)";
        std::cout << ", debt_med " << soesim::format_value(st.debt_med)
                  << ", welfare_med " << soesim::format_value(st.welfare_med) << "\n";
    }

    soesim::emit_tables(stats, out_dir);
    soesim::emit_plot_data(stats, out_dir);
    std::cout << "wrote tables and plot data to " << out_dir << "\n";
    return kExitOk;
}

// Deterministic single path: every shock scale, the multiplier noise and the
// realignment hazard are forced to zero, then the trajectory is printed for
// cross-checking against an independent implementation of the equations.
int cmd_oracle(const CommonOptions& opt, const std::string& scenario_file, int horizon,
               std::ostream& out) {
    soesim::Params params = soesim::load_params(opt.params_file);
    if (!report_violations(opt.params_file, soesim::validate_params(params)))
        return kExitValidation;

    params.multipliers.noise_scale = 0.0;
    params.external.p_realign = 0.0;
    for (soesim::ShockDist* d :
         {&params.shocks.demand, &params.shocks.inflation, &params.shocks.current_account,
          &params.shocks.capital_account, &params.shocks.fx_gap, &params.shocks.employment,
          &params.shocks.gini, &params.shocks.global})
        d->scale = 0.0;

    const soesim::Scenario sc = soesim::load_scenario(scenario_file);
    const int h = horizon > 0 ? horizon : params.engine.horizon;
    if (!report_violations("scenario '" + sc.name + "'", sc.validate(h)))
        return kExitValidation;

    const auto path = soesim::simulate_path(sc, params, soesim::SeedSpec{0, 0}, h);
    if (path.aborted) {
        std::cerr << "path aborted: " << path.abort_reason << "\n";
        return kExitRuntime;
    }

    out << "quarter,regime";
    for (const auto& var : soesim::trajectory_variables()) out << ',' << var;
    out << '\n';
    for (const auto& q : path.quarters) {
        out << q.state.t << ',' << soesim::regime_name(q.state.regime);
        for (const auto& var : soesim::trajectory_variables())
            out << ',' << soesim::format_value(soesim::extract_variable(q.state, var));
        out << '\n';
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quarterly stochastic policy simulator for a small open economy"};
    app.require_subcommand(1);

    CommonOptions opt;
    int paths = 0;
    int horizon = 0;
    std::uint64_t seed = 42;
    std::string out_dir = "out";
    std::vector<double> qs = {0.05, 0.25, 0.5, 0.75, 0.95};
    int threads = 0;
    bool serial = false;
    std::string oracle_scenario;

    auto* run = app.add_subcommand("run", "Run Monte Carlo ensembles and emit tables");
    run->add_option("--params", opt.params_file, "calibration file")->required();
    run->add_option("--scenario", opt.scenario_files, "scenario file (repeatable)");
    run->add_option("--scenario-set", opt.scenario_set, "scenario-set file");
    run->add_option("--paths", paths, "paths per scenario (default from calibration)");
    run->add_option("--horizon", horizon, "quarters to simulate (default from calibration)");
    run->add_option("--seed", seed, "master seed");
    run->add_option("--out", out_dir, "output directory");
    run->add_option("--quantiles", qs, "quantile probabilities")->delimiter(',');
    run->add_option("--threads", threads, "worker threads (default: runtime choice)");
    run->add_flag("--serial", serial, "use the serial reference runner");

    auto* validate = app.add_subcommand("validate", "Check calibration and scenario files");
    validate->add_option("--params", opt.params_file, "calibration file")->required();
    validate->add_option("--scenario", opt.scenario_files, "scenario file (repeatable)");
    validate->add_option("--scenario-set", opt.scenario_set, "scenario-set file");
    validate->add_option("--horizon", horizon, "horizon used for quarter bounds");

    auto* oracle = app.add_subcommand("oracle", "Print the zero-shock deterministic path");
    oracle->add_option("--params", opt.params_file, "calibration file")->required();
    oracle->add_option("--scenario", oracle_scenario, "scenario file")->required();
    oracle->add_option("--horizon", horizon, "quarters to simulate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run->parsed())
            return cmd_run(opt, paths, horizon, seed, out_dir, qs, threads, serial);
        if (validate->parsed())
            return cmd_validate(opt, horizon);
        return cmd_oracle(opt, oracle_scenario, horizon, std::cout);
    } catch (const soesim::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
