#pragma once

#include "soesim/params.hpp"
#include "soesim/rng.hpp"
#include "soesim/state.hpp"

namespace soesim {

// Real-sector and fiscal equations. All functions are pure; the engine wires
// them together in the documented quarter order.

// dlnY = mu_gc*dgc + mu_gi*dgi + mu_tr*dtr + z + m + eps_d.
// All three multipliers enter with a positive sign.
double growth_log_change(const FiscalImpulse& impulse, const Multipliers& mu,
                         double z, double m, double eps_d);

// K' = (1 - delta_p) * K + invest, where invest is the investment spending
// level this quarter in GDP-index units (share * GDP).
double public_capital_next(double k_pub, double delta_p, double invest);

// dlnY_pot = g_pot + alpha_p * dK/Y + beta_gini * (gini - gini_bar),
// with dK the net public-capital change this quarter.
double potential_log_change(const GrowthParams& g, double dk, double y, double gini);

// tau = tau_bar_eff + beta_g*gap + beta_pi*pi + beta_cred*(cred - cred_bar).
// tau_bar_eff includes any active land-value-tax increment.
double revenue_ratio(const FiscalParams& f, double tau_bar_eff, double gap,
                     double pi, double cred, double cred_bar);

// Logistic convergence factor a_t in the primary-balance rule.
double convergence_factor(double t, const FiscalParams& f);

// pd* = (1-a_t)*pd0 + a_t*pd_target - gamma(regime)*(r_eff - g_hat)*b.
double primary_balance_target(const FiscalParams& f, Regime regime, double t,
                              double r_eff, double g_hat, double b);

// pd = pd* + (dgc + dgi + dtr) - (tau - tau_bar). tau_bar here is the
// structural baseline *without* the LVT increment, so a land-value tax
// lowers the observed deficit one-for-one.
double observed_deficit(double pd_star, const FiscalImpulse& impulse,
                        double tau, double tau_bar);

} // namespace soesim
