#pragma once

#include "soesim/params.hpp"
#include "soesim/rng.hpp"
#include "soesim/state.hpp"

namespace soesim {

// Prices, monetary policy, sovereign risk, debt dynamics, balance of
// payments, and the dual exchange-rate system.

struct BoPFlows {
    double ca = 0.0; // current account / GDP per quarter
    double ka = 0.0; // capital account / GDP per quarter
};

// Exchange-rate arrangement for the official rate, set per scenario.
struct FxConfig {
    enum class Mode { Fixed, Crawl };
    Mode mode = Mode::Fixed;
    double crawl_rate_q = 0.0; // quarterly crawl, >= 0
    int deval_quarter = -1;    // scheduled devaluation (-1 = none)
    double deval_size = 0.0;
};

// Dynamic phase of the official rate; PostRealignment suppresses the
// realignment hazard for a cooldown window.
enum class FxPhase { Fixed, Crawl, PostRealignment };

// phi(R) = phi_bar / (1 + exp(k_phi * (R/R_crit - 1))). Strictly decreasing
// in R, phi(R_crit) = phi_bar/2 exactly.
double pass_through(double reserves, const InflationParams& infl, double r_crit);

// pi' = rho_pi*pi + kappa*gap + phi*dlnS_par + (1-rho_pi)*pi_star + eps.
double inflation_next(const InflationParams& infl, double pi, double gap,
                      double phi, double dln_s_par, double eps);

// Taylor rule with smoothing, floored at zero.
double taylor_rate(const MonetaryParams& m, double r_f, double pi_star,
                   double i_pol, double pi, double gap, bool* floored = nullptr);

// m = -theta_m * (i_pol - i_neutral): deliberately weak rate channel.
double monetary_impulse(const MonetaryParams& m, double i_pol, double i_neutral);

// Debt-level component of the risk premium: f_max / (1 + exp(-f_slope*(b - f_mid))).
double debt_risk_logistic(const DebtRiskParams& d, double b);

// rp' = rho_rp*rp + (1-rho_rp) * [f(b) + beta_R*R + beta_B*(gap-1)
//        + beta_U*unrest + beta_IFI*ifi + inst_quality], floored at 0.
double risk_premium_next(const DebtRiskParams& d, double rp, double b,
                         double reserves, double gap_ratio, double unrest,
                         bool ifi_active, bool* floored = nullptr);

// r_eff' = (1 - lambda_mat)*r_eff + lambda_mat*(r_f + rp).
double effective_rate_next(const DebtRiskParams& d, double r_eff, double rp);

// b' = b*(1+r_eff)/(1+g_hat) + pd + lambda_fx*b*(s_off_ratio - 1).
// Requires 1 + g_hat > 0; the engine aborts the path otherwise.
double debt_next(double b, double r_eff, double g_hat, double pd,
                 double lambda_fx, double s_off_ratio);

double current_account(const ExternalParams& x, double dln_s_par, double gap,
                       const FiscalImpulse& impulse, double eps);

// KA = eta_rp*rp + eta_U*unrest - c_B*max(0, gap-1)^2 + eps. When capital
// flow management is active the whole flow (sensitivities and shock alike)
// is scaled by the damping factor.
double capital_account(const ExternalParams& x, double rp, double unrest,
                       double gap_ratio, bool cfm_active, double cfm_damping,
                       double eps);

// R' = R + CA + KA + injection (exact conservation).
double reserves_next(double reserves, const BoPFlows& flows, double injection);

struct FxResult {
    double s_off = 1.0;
    bool realigned = false;
    int cooldown = 0; // quarters of hazard suppression remaining
};

// Advances the official rate one quarter: crawl drift, a scheduled
// devaluation at its quarter, or a hazard-triggered realignment while
// reserves sit at or below R_crit (suppressed during the cooldown).
// The hazard draw is consumed only when the hazard is actually tested.
FxResult official_fx_next(double s_off, const FxConfig& fx, const ExternalParams& x,
                          double reserves_next, double r_crit, int cooldown,
                          int t, RngStream& hazard);

FxPhase fx_phase(const FxConfig& fx, int cooldown);

// dlnB = alpha_R * scarcity(R') + alpha_rp*rp + alpha_U*unrest
//        - alpha_cred*cred + eps, with scarcity = max(0, R_crit/R' - 1)
// capped at scarcity_cap (and pinned to the cap when R' <= 0).
double gap_log_change(const GapParams& g, double reserves_next, double r_crit,
                      double rp, double unrest, double cred, double eps,
                      bool* capped = nullptr);

} // namespace soesim
