#include "soesim/nominal_external.hpp"

#include <algorithm>
#include <cmath>

namespace soesim {

double pass_through(double reserves, const InflationParams& infl, double r_crit) {
    return infl.phi_bar / (1.0 + std::exp(infl.k_phi * (reserves / r_crit - 1.0)));
}

double inflation_next(const InflationParams& infl, double pi, double gap,
                      double phi, double dln_s_par, double eps) {
    return infl.rho_pi * pi + infl.kappa * gap + phi * dln_s_par +
           (1.0 - infl.rho_pi) * infl.pi_star + eps;
}

double taylor_rate(const MonetaryParams& m, double r_f, double pi_star,
                   double i_pol, double pi, double gap, bool* floored) {
    const double target = r_f + pi_star + m.a_pi * (pi - pi_star) + m.a_g * gap;
    const double raw = m.smoothing * i_pol + (1.0 - m.smoothing) * target;
    if (floored) *floored = raw < 0.0;
    return std::max(0.0, raw);
}

double monetary_impulse(const MonetaryParams& m, double i_pol, double i_neutral) {
    return -m.theta_m * (i_pol - i_neutral);
}

double debt_risk_logistic(const DebtRiskParams& d, double b) {
    return d.f_max / (1.0 + std::exp(-d.f_slope * (b - d.f_mid)));
}

double risk_premium_next(const DebtRiskParams& d, double rp, double b,
                         double reserves, double gap_ratio, double unrest,
                         bool ifi_active, bool* floored) {
    const double bracket = debt_risk_logistic(d, b) + d.beta_reserves * reserves +
                           d.beta_gap * (gap_ratio - 1.0) + d.beta_unrest * unrest +
                           (ifi_active ? d.beta_ifi : 0.0) + d.inst_quality;
    const double raw = d.rho_rp * rp + (1.0 - d.rho_rp) * bracket;
    if (floored) *floored = raw < 0.0;
    return std::max(0.0, raw);
}

double effective_rate_next(const DebtRiskParams& d, double r_eff, double rp) {
    return (1.0 - d.lambda_mat) * r_eff + d.lambda_mat * (d.r_f + rp);
}

double debt_next(double b, double r_eff, double g_hat, double pd,
                 double lambda_fx, double s_off_ratio) {
    return b * (1.0 + r_eff) / (1.0 + g_hat) + pd + lambda_fx * b * (s_off_ratio - 1.0);
}

double current_account(const ExternalParams& x, double dln_s_par, double gap,
                       const FiscalImpulse& impulse, double eps) {
    return x.ca_bar + x.eta_ca_s * dln_s_par + x.eta_ca_g * gap +
           x.eta_ca_gc * impulse.dgc + x.eta_ca_gi * impulse.dgi +
           x.eta_ca_tr * impulse.dtr + eps;
}

double capital_account(const ExternalParams& x, double rp, double unrest,
                       double gap_ratio, bool cfm_active, double cfm_damping,
                       double eps) {
    const double excess = std::max(0.0, gap_ratio - 1.0);
    const double flow = x.eta_ka_rp * rp + x.eta_ka_unrest * unrest -
                        x.flight_quad * excess * excess + eps;
    return cfm_active ? cfm_damping * flow : flow;
}

double reserves_next(double reserves, const BoPFlows& flows, double injection) {
    return reserves + flows.ca + flows.ka + injection;
}

FxResult official_fx_next(double s_off, const FxConfig& fx, const ExternalParams& x,
                          double reserves_next, double r_crit, int cooldown,
                          int t, RngStream& hazard) {
    FxResult out;
    out.s_off = s_off;
    if (fx.mode == FxConfig::Mode::Crawl) out.s_off *= 1.0 + fx.crawl_rate_q;

    if (t == fx.deval_quarter) {
        // Scheduled devaluation fires unconditionally.
        out.s_off *= 1.0 + fx.deval_size;
        out.realigned = true;
    } else if (reserves_next <= r_crit && cooldown == 0) {
        if (hazard.next_unit() < x.p_realign) {
            out.s_off *= 1.0 + x.dev_size;
            out.realigned = true;
        }
    }

    out.cooldown = out.realigned ? x.realign_cooldown : std::max(0, cooldown - 1);
    return out;
}

FxPhase fx_phase(const FxConfig& fx, int cooldown) {
    if (cooldown > 0) return FxPhase::PostRealignment;
    return fx.mode == FxConfig::Mode::Crawl ? FxPhase::Crawl : FxPhase::Fixed;
}

double gap_log_change(const GapParams& g, double reserves_next, double r_crit,
                      double rp, double unrest, double cred, double eps,
                      bool* capped) {
    double scarcity;
    if (reserves_next <= 0.0) {
        scarcity = g.scarcity_cap; // depleted reserves pin the term at the cap
        if (capped) *capped = true;
    } else {
        scarcity = std::max(0.0, r_crit / reserves_next - 1.0);
        if (capped) *capped = scarcity > g.scarcity_cap;
        scarcity = std::min(scarcity, g.scarcity_cap);
    }
    return g.alpha_reserves * scarcity + g.alpha_rp * rp + g.alpha_unrest * unrest -
           g.alpha_cred * cred + eps;
}

} // namespace soesim
