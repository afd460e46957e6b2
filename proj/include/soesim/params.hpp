#pragma once

#include <array>
#include <string>
#include <vector>

#include "soesim/state.hpp"

namespace soesim {

class Config;

// Fiscal instruments, indexing the multiplier table rows.
enum class Instrument { GC = 0, TR = 1, GI = 2 };

struct RegimeParams {
    double r_crit = 0.08;     // reserves/GDP threshold for Crisis
    double gap_crisis = 1.5;  // parallel/official ratio threshold for Crisis
};

struct GrowthParams {
    double g_pot = 0.005;    // quarterly potential growth
    double delta_p = 0.0125; // public-capital depreciation per quarter
    double alpha_p = 0.10;   // marginal productivity of public capital
    double beta_gini = -0.02;
    double gini_bar = 0.45;
};

// Mean quarterly output effect of a 1%-of-GDP impulse, by instrument and
// regime, plus the Student-t noise around the mean.
struct MultiplierParams {
    // mean[instrument][regime], instruments GC/TR/GI, regimes Boom/Recession/Crisis
    std::array<std::array<double, 3>, 3> mean = {{
        {0.045, 0.125, 0.213},
        {0.075, 0.200, 0.263},
        {0.175, 0.388, 0.525},
    }};
    double noise_scale = 0.01;
    double noise_dof = 5.0;
    bool draw_per_path = false; // default: fresh draw every quarter
};

struct InflationParams {
    double rho_pi = 0.6;   // inertia
    double kappa = 0.1;    // Phillips slope
    double pi_star = 0.0125;
    double phi_bar = 0.20; // maximum pass-through
    double k_phi = 4.0;    // pass-through sensitivity to reserve scarcity
};

struct FiscalParams {
    double tau_bar = 0.18;
    double beta_g = 0.10;
    double beta_pi = 0.05;
    double beta_cred = 0.02;
    double pd0 = 0.01;
    double pd_target = -0.0025;
    double gamma_boom = 0.06; // debt-stabilization strength by regime
    double gamma_recession = 0.03;
    double gamma_crisis = 0.01;
    double a_mid = 8.0;   // convergence-factor midpoint (quarters)
    double a_slope = 0.5; // convergence-factor slope
    double gc_share = 0.15; // baseline spending levels, fractions of GDP
    double gi_share = 0.05;
    double tr_share = 0.04;

    double gamma(Regime r) const {
        switch (r) {
            case Regime::Boom: return gamma_boom;
            case Regime::Recession: return gamma_recession;
            default: return gamma_crisis;
        }
    }
};

struct DebtRiskParams {
    double lambda_fx = 0.5;  // FX-denominated share of debt
    double r_f = 0.01;       // quarterly risk-free rate
    double rho_rp = 0.8;     // risk-premium inertia
    double f_max = 0.05;     // debt-level logistic: ceiling
    double f_slope = 4.0;    //   slope
    double f_mid = 1.6;      //   midpoint (debt/GDP)
    double beta_reserves = -0.05;
    double beta_gap = 0.02;
    double beta_unrest = 0.005;
    double beta_ifi = -0.004;    // active IFI program lowers perceived risk
    double inst_quality = 0.004; // institutional composite, constant
    double lambda_mat = 0.08;    // share of debt refinanced per quarter
};

struct ExternalParams {
    double ca_bar = -0.002;
    double eta_ca_s = 0.05;  // real depreciation improves CA
    double eta_ca_g = -0.10; // booms import
    double eta_ca_gc = -0.02;
    double eta_ca_gi = -0.05;
    double eta_ca_tr = -0.03;
    double eta_ka_rp = -0.5;
    double eta_ka_unrest = -0.002;
    double flight_quad = 0.5; // coefficient on max(0, gap-1)^2
    double p_realign = 0.25;  // per-quarter realignment hazard while R <= R_crit
    double dev_size = 0.30;   // realignment devaluation size
    int realign_cooldown = 4; // quarters without repeat realignment
};

struct GapParams {
    double alpha_reserves = 0.06;
    double alpha_rp = 0.5;
    double alpha_unrest = 0.01;
    double alpha_cred = 0.01;
    double scarcity_cap = 5.0; // reserve-scarcity term capped at alpha_reserves * cap
};

struct SocialParams {
    double omega_e = 0.2;   // employment adjustment weight
    double phi_demand = 0.5;
    double phi_rate = 0.3;
    double eta_supply = 0.1;
    double e_bar = 0.92;
    double cred_bar = 0.5;
    double chi_w = 0.5; // wage response to inflation surprises
    double chi_e = 0.3; // wage response to employment pressure
    double beta_gini_tr = -0.05;
    double beta_gini_e = 0.02;
    double lambda_he = 0.05;
    double lambda_htr = 0.2;
    double lambda_hg = 0.05;
    double rho_unrest = 0.9;
    double lambda_ug = 0.5;
    double lambda_upi = 2.0;
    double lambda_uaust = 2.0;
    double rho_cred = 0.95;
    double gain_ifi = 0.05;
    double gain_lvt = 0.03;
    double loss_realign = 0.10;
    double loss_psi = 0.08;
    double loss_osi = 0.04;
    double loss_mkt = 0.02;
};

struct MonetaryParams {
    double a_pi = 1.5;
    double a_g = 0.5;
    double smoothing = 0.7;
    double theta_m = 0.0625; // output semi-elasticity of the policy-rate gap
};

// Welfare components, in the order weights are defined.
enum class WelfareComponent {
    GdpLog = 0, Employment, Health, Inflation, Debt, FxGap, Unrest, Gini,
};
inline constexpr int kWelfareComponents = 8;
const char* welfare_component_name(WelfareComponent c);

struct WelfareParams {
    // weights: +0.30 gdp, +0.15 employment, +0.10 health, -0.15 inflation,
    // -0.10 debt, -0.08 fx gap, -0.07 unrest, -0.05 gini
    std::array<double, kWelfareComponents> weight = {
        0.30, 0.15, 0.10, -0.15, -0.10, -0.08, -0.07, -0.05};
    std::array<double, kWelfareComponents> center{};
    std::array<double, kWelfareComponents> scale = {1, 1, 1, 1, 1, 1, 1, 1};
};

// One shock family: Student-t when dof > 2, Gaussian when dof == 0.
struct ShockDist {
    double scale = 0.0;
    double dof = 0.0;
};

struct ShockParams {
    ShockDist demand{0.008, 5.0};
    ShockDist inflation{0.003, 0.0};
    ShockDist current_account{0.004, 0.0};
    ShockDist capital_account{0.006, 5.0};
    ShockDist fx_gap{0.015, 0.0};
    ShockDist employment{0.002, 0.0};
    ShockDist gini{0.0015, 0.0};
    ShockDist global{0.004, 0.0};
    double rho_z = 0.7;
};

struct EngineParams {
    int horizon = 40;
    int n_paths = 300;
};

struct Params {
    RegimeParams regime;
    GrowthParams growth;
    MultiplierParams multipliers;
    InflationParams inflation;
    FiscalParams fiscal;
    DebtRiskParams debt;
    ExternalParams external;
    GapParams gap;
    SocialParams social;
    MonetaryParams monetary;
    WelfareParams welfare;
    ShockParams shocks;
    EngineParams engine;
    StateVector initial;

    double i_neutral() const { return debt.r_f + inflation.pi_star; }
};

// Loads a full parameter set from a calibration file. Throws ConfigError on
// grammar or type problems; call validate_params afterwards for semantic checks.
Params load_params(const std::string& path);
Params load_params(const Config& cfg);

// Semantic checks: multiplier hierarchy, AR coefficients in [0,1), scales >= 0,
// logistic slopes > 0, welfare weight signs and sum, initial-state validity.
// Returns every violation found.
std::vector<std::string> validate_params(const Params& p);

} // namespace soesim
