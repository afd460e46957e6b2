#include "soesim/real_fiscal.hpp"

#include <cmath>

namespace soesim {

double growth_log_change(const FiscalImpulse& impulse, const Multipliers& mu,
                         double z, double m, double eps_d) {
    return mu.gc * impulse.dgc + mu.gi * impulse.dgi + mu.tr * impulse.dtr + z + m + eps_d;
}

double public_capital_next(double k_pub, double delta_p, double invest) {
    return (1.0 - delta_p) * k_pub + invest;
}

double potential_log_change(const GrowthParams& g, double dk, double y, double gini) {
    return g.g_pot + g.alpha_p * dk / y + g.beta_gini * (gini - g.gini_bar);
}

double revenue_ratio(const FiscalParams& f, double tau_bar_eff, double gap,
                     double pi, double cred, double cred_bar) {
    return tau_bar_eff + f.beta_g * gap + f.beta_pi * pi + f.beta_cred * (cred - cred_bar);
}

double convergence_factor(double t, const FiscalParams& f) {
    return 1.0 / (1.0 + std::exp(-f.a_slope * (t - f.a_mid)));
}

double primary_balance_target(const FiscalParams& f, Regime regime, double t,
                              double r_eff, double g_hat, double b) {
    const double a = convergence_factor(t, f);
    return (1.0 - a) * f.pd0 + a * f.pd_target - f.gamma(regime) * (r_eff - g_hat) * b;
}

double observed_deficit(double pd_star, const FiscalImpulse& impulse,
                        double tau, double tau_bar) {
    return pd_star + impulse.sum() - (tau - tau_bar);
}

} // namespace soesim
