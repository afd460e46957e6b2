#pragma once

#include <optional>
#include <string>
#include <vector>

#include "soesim/nominal_external.hpp"
#include "soesim/state.hpp"

namespace soesim {

class Config;

// One debt-restructuring event. Haircuts cut the debt stock multiplicatively,
// rate relief cuts the effective rate additively (floored at zero).
struct DebtEvent {
    enum class Flavor { PSI, OSI, MKT };
    int quarter = 0;
    double haircut = 0.0;     // fraction of b, [0, 1)
    double rate_relief = 0.0; // subtracted from r_eff
    Flavor flavor = Flavor::MKT;
};

struct IfiProgram {
    int start = 0;
    int duration = 1;        // quarters
    double injection = 0.0;  // reserves/GDP added per active quarter
    double cred_gain = 0.0;  // one-off at start
};

struct LvtReform {
    int start = 0;
    double d_tau = 0.0;     // permanent increase in the structural revenue ratio
    double cred_gain = 0.0; // one-off at start
};

struct CfmWindow {
    int start = 0;
    int duration = 1;
    double damping = 1.0; // multiplies capital-account sensitivities, (0,1)
};

struct MonetaryOverride {
    std::optional<double> a_pi;
    std::optional<double> a_g;
    std::optional<double> smoothing;
};

// One-off shift of the FX-denominated debt share (liability management).
struct LambdaFxShift {
    int quarter = 0;
    double value = 0.0;
};

// A declarative policy strategy: per-quarter fiscal impulses plus dated
// events and regime switches. Scenarios are data; the engine applies them.
struct Scenario {
    std::string name;
    std::vector<FiscalImpulse> impulses; // sparse tail of zeros implied
    FxConfig fx;
    std::vector<DebtEvent> debt_events;
    std::optional<IfiProgram> ifi;
    std::optional<LvtReform> lvt;
    std::optional<CfmWindow> cfm;
    MonetaryOverride monetary;
    std::optional<LambdaFxShift> lambda_fx_shift;

    FiscalImpulse impulse_at(int t) const {
        if (t >= 0 && t < static_cast<int>(impulses.size())) return impulses[t];
        return {};
    }

    bool ifi_active(int t) const {
        return ifi && t >= ifi->start && t < ifi->start + ifi->duration;
    }
    bool cfm_active(int t) const {
        return cfm && t >= cfm->start && t < cfm->start + cfm->duration;
    }
    bool lvt_active(int t) const { return lvt && t >= lvt->start; }

    // Quarter bounds, haircut range, durations, impulse sanity bound.
    std::vector<std::string> validate(int horizon) const;
};

Scenario load_scenario(const std::string& path);
Scenario load_scenario(const Config& cfg);

// A scenario-set file lists scenario files (relative paths resolve against
// the set file's directory) for grid runs.
std::vector<Scenario> load_scenario_set(const std::string& path);

} // namespace soesim
