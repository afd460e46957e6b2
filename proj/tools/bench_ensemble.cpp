// Benchmark: serial reference runner vs the OpenMP path loop, with a
// bit-equality check between the two.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstring>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "soesim/engine.hpp"
#include "soesim/params.hpp"
#include "soesim/scenario.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool bit_equal(const std::vector<soesim::PathResult>& a,
               const std::vector<soesim::PathResult>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].aborted != b[i].aborted) return false;
        if (a[i].quarters.size() != b[i].quarters.size()) return false;
        for (size_t t = 0; t < a[i].quarters.size(); ++t) {
            const auto& x = a[i].quarters[t].state;
            const auto& y = b[i].quarters[t].state;
            const double xs[] = {x.Y, x.Y_pot, x.pi, x.b, x.R, x.S_par, x.rp,
                                 x.E, x.Gini, x.Unrest, x.Cred, x.W};
            const double ys[] = {y.Y, y.Y_pot, y.pi, y.b, y.R, y.S_par, y.rp,
                                 y.E, y.Gini, y.Unrest, y.Cred, y.W};
            for (size_t k = 0; k < std::size(xs); ++k)
                if (std::memcmp(&xs[k], &ys[k], sizeof(double)) != 0) return false;
        }
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ensemble throughput: serial reference vs OpenMP runner"};
    std::string params_file, scenario_file;
    int paths = 2000;
    int horizon = 0;
    std::uint64_t seed = 42;
    int repeats = 3;
    app.add_option("--params", params_file, "calibration file")->required();
    app.add_option("--scenario", scenario_file, "scenario file")->required();
    app.add_option("--paths", paths, "paths per run");
    app.add_option("--horizon", horizon, "quarters");
    app.add_option("--seed", seed, "master seed");
    app.add_option("--repeats", repeats, "timed repetitions");
    CLI11_PARSE(app, argc, argv);

    const auto params = soesim::load_params(params_file);
    const auto scenario = soesim::load_scenario(scenario_file);
    const int h = horizon > 0 ? horizon : params.engine.horizon;

    // Warm-up + correctness: the parallel runner must reproduce the serial
    // reference bit for bit.
    const auto ref = soesim::run_ensemble_serial(scenario, params, seed, paths, h);
    const auto par = soesim::run_ensemble(scenario, params, seed, paths, h);
    if (!bit_equal(ref, par)) {
        std::cerr << "FAIL: parallel ensemble differs from serial reference\n";
        return 1;
    }

    double t_serial = 1e300, t_parallel = 1e300;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        (void)soesim::run_ensemble_serial(scenario, params, seed, paths, h);
        t_serial = std::min(t_serial, seconds_since(t0));

        t0 = std::chrono::steady_clock::now();
        (void)soesim::run_ensemble(scenario, params, seed, paths, h);
        t_parallel = std::min(t_parallel, seconds_since(t0));
    }

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    const double steps = static_cast<double>(paths) * h;
    std::cout << "scenario " << scenario.name << ", " << paths << " paths x " << h
              << " quarters\n";
    std::cout << "serial:   " << t_serial << " s  (" << steps / t_serial / 1e6
              << " Msteps/s)\n";
    std::cout << "openmp:   " << t_parallel << " s  (" << steps / t_parallel / 1e6
              << " Msteps/s, " << threads << " threads)\n";
    std::cout << "speedup:  " << t_serial / t_parallel << "x\n";
    std::cout << "bitwise identical: yes\n";
    return 0;
}
