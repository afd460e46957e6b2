#include "soesim/social.hpp"

#include <algorithm>
#include <cmath>

namespace soesim {

namespace {

double clamp01(double v, std::uint32_t* counter) {
    if (v < 0.0 || v > 1.0) {
        if (counter) ++*counter;
        return std::clamp(v, 0.0, 1.0);
    }
    return v;
}

} // namespace

double wage_log_change(const SocialParams& s, double pi, double pi_star, double e) {
    return s.chi_w * (pi - pi_star) + s.chi_e * (e - s.e_bar);
}

double employment_next(const SocialParams& s, double e, double gap, double r_eff,
                       double g_hat, double dln_w, double eps, ClampLog* log) {
    const double target = s.e_bar + s.phi_demand * gap - s.phi_rate * (r_eff - g_hat);
    const double raw = (1.0 - s.omega_e) * e + s.omega_e * target +
                       (1.0 - s.omega_e) * s.eta_supply * dln_w + eps;
    return clamp01(raw, log ? &log->employment : nullptr);
}

double gini_next(const SocialParams& s, double gini, double dtr, double e_next,
                 double eps, ClampLog* log) {
    const double raw = gini + s.beta_gini_tr * dtr + s.beta_gini_e * (1.0 - e_next) + eps;
    return clamp01(raw, log ? &log->gini : nullptr);
}

double health_next(const SocialParams& s, double health, double e, double dtr,
                   double gini, double gini_bar, ClampLog* log) {
    const double raw = health + s.lambda_he * (e - s.e_bar) +
                       s.lambda_htr * std::max(0.0, dtr) -
                       s.lambda_hg * (gini - gini_bar);
    return clamp01(raw, log ? &log->health : nullptr);
}

double unrest_next(const SocialParams& s, double unrest, double gini,
                   double gini_bar, double pi, double pi_star,
                   double dgc, double dtr) {
    const double austerity = std::max(0.0, -(dgc + dtr));
    const double raw = s.rho_unrest * unrest + s.lambda_ug * (gini - gini_bar) +
                       s.lambda_upi * std::max(0.0, pi - pi_star) +
                       s.lambda_uaust * austerity;
    return std::max(0.0, raw);
}

double credibility_next(const SocialParams& s, double cred, std::uint16_t events,
                        ClampLog* log) {
    double v = s.rho_cred * cred + (1.0 - s.rho_cred) * s.cred_bar;
    if (events & kEventIfiStart) v += s.gain_ifi;
    if (events & kEventLvtStart) v += s.gain_lvt;
    if (events & kEventRealigned) v -= s.loss_realign;
    if (events & kEventPsi) v -= s.loss_psi;
    if (events & kEventOsi) v -= s.loss_osi;
    if (events & kEventMkt) v -= s.loss_mkt;
    return clamp01(v, log ? &log->credibility : nullptr);
}

double welfare_index(const WelfareParams& w, double ln_y, double e, double health,
                     double pi, double b, double gap_ratio, double unrest,
                     double gini) {
    const double x[kWelfareComponents] = {ln_y, e, health, pi, b, gap_ratio, unrest, gini};
    double total = 0.0;
    for (int i = 0; i < kWelfareComponents; ++i)
        total += w.weight[i] * (x[i] - w.center[i]) / w.scale[i];
    return total;
}

double welfare_index(const WelfareParams& w, const StateVector& s) {
    return welfare_index(w, std::log(s.Y), s.E, s.Health, s.pi, s.b, s.gap_ratio(),
                         s.Unrest, s.Gini);
}

} // namespace soesim
