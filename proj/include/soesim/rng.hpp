#pragma once

#include <cstdint>
#include <string_view>

namespace soesim {

struct Params;
struct ShockDist;

// Identifies one simulation path within an ensemble. Combined with a stream
// label and quarter index it names a unique, reproducible random stream.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t path_index = 0;
};

// One quarter's worth of shocks, one per family.
struct ShockDraws {
    double demand = 0.0;
    double inflation = 0.0;
    double current_account = 0.0;
    double capital_account = 0.0;
    double fx_gap = 0.0;
    double employment = 0.0;
    double gini = 0.0;
    double global = 0.0;
};

struct Multipliers {
    double gc = 0.0;
    double tr = 0.0;
    double gi = 0.0;
};

// splitmix64 finalizer. This is the stream-derivation mixing function; it is
// part of the reproducibility contract and must stay stable across releases.
std::uint64_t mix64(std::uint64_t x);

// Counter-based random stream. The key is derived by hashing
// (master_seed, path_index, label, quarter); draws are indexed by an internal
// counter, so a stream is a pure function of its identity. Streams for
// different labels or quarters never share state, which makes path execution
// order and thread count irrelevant to the drawn values.
class RngStream {
public:
    RngStream(const SeedSpec& seed, std::string_view label, int quarter);

    std::uint64_t next_u64();
    double next_unit();   // uniform [0, 1)
    double next_normal(); // standard normal, Box-Muller

    // Zero-mean Student-t with `dof` degrees of freedom scaled by `scale`
    // (Bailey's polar method). dof == 0 selects a plain Gaussian. Requires
    // dof == 0 or dof > 2; throws ConfigError otherwise.
    double student_t(double dof, double scale);

    double draw(const ShockDist& dist);

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

// dof > 2 Student-t (or dof == 0 Gaussian) draw from the given stream.
double student_t_draw(RngStream& stream, double dof, double scale);

// One AR(1) step of the global shock state: z' = rho_z * z + eps_z.
double global_shock_step(double z, RngStream& stream, const Params& p);

// Regime-conditional multiplier draw: mean(instrument, regime) plus t-noise,
// floored at zero. `floor_hits` (optional) counts how often the floor binds.
Multipliers draw_multipliers(int regime_index, RngStream& stream, const Params& p,
                             int* floor_hits = nullptr);

// All shock families for quarter t, each from its own labeled stream.
ShockDraws quarter_shocks(const SeedSpec& seed, int t, const Params& p);

} // namespace soesim
