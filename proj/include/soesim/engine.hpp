#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "soesim/params.hpp"
#include "soesim/rng.hpp"
#include "soesim/scenario.hpp"
#include "soesim/social.hpp"
#include "soesim/state.hpp"

namespace soesim {

// Raised when a path cannot continue (non-finite state, nominal growth at or
// below -100%). Carries the quarter where the problem surfaced.
class PathAbort : public std::runtime_error {
public:
    PathAbort(int quarter, const std::string& reason)
        : std::runtime_error("quarter " + std::to_string(quarter) + ": " + reason),
          quarter(quarter) {}
    int quarter;
};

// Per-path mutable context: stream identity, clamp log, FX cooldown, the
// current FX debt share, and the event-application guard. Never shared
// between paths.
struct PathContext {
    SeedSpec seed;
    ClampLog clamps;
    int fx_cooldown = 0;
    double lambda_fx = 0.0;
    int last_event_quarter = -1;
    Multipliers path_mu_noise{}; // per-path multiplier noise, if configured
};

struct QuarterRecord {
    StateVector state;
    Multipliers mu{};          // multipliers drawn in the step leaving this quarter
    std::uint16_t events = 0;  // events fired in that step
    BoPFlows flows{};          // balance-of-payments flows of that step
    double ifi_injection = 0;  // reserve injection received in that step
};

struct HorizonSummary {
    int quarter = 0;
    double gdp = 0.0;
    double debt = 0.0;
    double welfare = 0.0;
    double reserves = 0.0;
    double gini = 0.0;
};

struct PathResult {
    int path_index = 0;
    std::vector<QuarterRecord> quarters; // length horizon+1 when not aborted
    bool aborted = false;
    int abort_quarter = -1;
    std::string abort_reason;
    ClampLog clamps;
    std::array<HorizonSummary, 3> summaries{}; // quarters {0, 16, horizon}
};

// Applies scenario events dated at quarter t to the working state: haircuts,
// rate relief, IFI/LVT/CFM start markers, FX-share shifts. Returns the fired
// event flags. Throws std::logic_error if invoked twice for the same quarter
// of one path (events are applied exactly once per quarter).
std::uint16_t apply_events(StateVector& s, const Scenario& sc, int t, PathContext& ctx);

// Executes one quarter in the fixed block order:
//   (1) regime classification, (2) multiplier draw, (3) scenario events,
//   (4) real/fiscal, (5) monetary, (6) external (BoP, official FX, gap),
//   (7) prices, (8) debt and risk, (9) social, (10) welfare.
// The ordering is part of the engine contract. Throws PathAbort (internal)
// wrapped into the PathResult by simulate_path.
StateVector step(const StateVector& s, const Scenario& sc, const Params& p,
                 PathContext& ctx, Multipliers* out_mu, std::uint16_t* out_events);
StateVector step(const StateVector& s, const Scenario& sc, const Params& p,
                 PathContext& ctx, Multipliers* out_mu, std::uint16_t* out_events,
                 BoPFlows* out_flows, double* out_injection);

// Runs one path for `horizon` quarters. Deterministic given the seed spec.
PathResult simulate_path(const Scenario& sc, const Params& p, const SeedSpec& seed,
                         int horizon);

// Monte Carlo ensemble. Paths are embarrassingly parallel; results are
// ordered by path index regardless of the execution schedule and are
// bit-identical for any worker count.
std::vector<PathResult> run_ensemble(const Scenario& sc, const Params& p,
                                     std::uint64_t master_seed, int n_paths,
                                     int horizon);

// Serial reference implementation of run_ensemble, kept for determinism
// tests and benchmarking against the parallel runner.
std::vector<PathResult> run_ensemble_serial(const Scenario& sc, const Params& p,
                                            std::uint64_t master_seed, int n_paths,
                                            int horizon);

} // namespace soesim
