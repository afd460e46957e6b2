#pragma once

#include <cmath>
#include <string>

#include "soesim/engine.hpp"
#include "soesim/params.hpp"
#include "soesim/scenario.hpp"

namespace testsup {

inline std::string source_dir() { return SOESIM_SOURCE_DIR; }

inline std::string calibration_path() {
    return source_dir() + "/calibration/reference.cfg";
}

inline std::string scenario_path(const std::string& name) {
    return source_dir() + "/scenarios/" + name + ".cfg";
}

inline soesim::Params reference_params() {
    return soesim::load_params(calibration_path());
}

// Reference calibration with every stochastic element switched off:
// shock scales, multiplier noise, realignment hazard.
inline soesim::Params deterministic_params() {
    soesim::Params p = reference_params();
    p.multipliers.noise_scale = 0.0;
    p.external.p_realign = 0.0;
    for (soesim::ShockDist* d :
         {&p.shocks.demand, &p.shocks.inflation, &p.shocks.current_account,
          &p.shocks.capital_account, &p.shocks.fx_gap, &p.shocks.employment,
          &p.shocks.gini, &p.shocks.global})
        d->scale = 0.0;
    return p;
}

// A calibration whose deterministic baseline is an exact fixed point of the
// quarterly recursion: inflation at target, debt at r_eff == g_hat with a
// zero primary balance, balanced external flows, employment at its anchor,
// and the risk premium solved to sit at its own bracket.
inline soesim::Params fixed_point_params() {
    soesim::Params p = deterministic_params();

    p.growth.g_pot = 0.0;
    p.inflation.pi_star = 0.0175;
    p.fiscal.beta_pi = 0.0;
    p.fiscal.pd0 = 0.0;
    p.fiscal.pd_target = 0.0;
    p.social.beta_gini_e = 0.0;
    p.external.ca_bar = 0.0;
    p.external.eta_ka_rp = 0.0;
    p.external.eta_ka_unrest = -0.001; // unused at unrest 0
    p.gap.alpha_rp = 0.0;
    p.gap.alpha_cred = 0.0;

    soesim::StateVector& s = p.initial;
    s.pi = s.pi_prev = p.inflation.pi_star;
    s.g_hat = p.inflation.pi_star;                 // dlnY 0 + pi at target
    s.rp = 0.0075;
    s.r_eff = p.debt.r_f + s.rp;                   // 0.0175 == g_hat
    s.i_pol = p.debt.r_f + p.inflation.pi_star;    // neutral
    s.R = 0.12;
    s.E = p.social.e_bar;
    s.Gini = p.growth.gini_bar;
    s.Cred = p.social.cred_bar;
    s.Unrest = 0.0;
    s.K_pub = p.fiscal.gi_share * s.Y / p.growth.delta_p;

    // Solve the institutional constant so the risk-premium bracket equals rp.
    const double fb = p.debt.f_max / (1.0 + std::exp(-p.debt.f_slope * (s.b - p.debt.f_mid)));
    p.debt.inst_quality = s.rp - fb - p.debt.beta_reserves * s.R;

    return p;
}

inline soesim::Scenario empty_scenario(const std::string& name = "test") {
    soesim::Scenario sc;
    sc.name = name;
    return sc;
}

} // namespace testsup
