#pragma once

#include <cstdint>

#include "soesim/params.hpp"
#include "soesim/state.hpp"

namespace soesim {

// Events fired while stepping one quarter, as a bitmask. Used for recording
// and for the credibility update.
enum EventFlag : std::uint16_t {
    kEventHaircut    = 1u << 0,
    kEventRateRelief = 1u << 1,
    kEventPsi        = 1u << 2,
    kEventOsi        = 1u << 3,
    kEventMkt        = 1u << 4,
    kEventIfiStart   = 1u << 5,
    kEventLvtStart   = 1u << 6,
    kEventCfmStart   = 1u << 7,
    kEventRealigned  = 1u << 8,
    kEventLambdaShift = 1u << 9,
};

// Counts of binding clamps and floors along one path. Clamping is explicit
// in every update; these counters are how a binding clamp is surfaced.
struct ClampLog {
    std::uint32_t employment = 0;
    std::uint32_t gini = 0;
    std::uint32_t health = 0;
    std::uint32_t credibility = 0;
    std::uint32_t gap_floor = 0;
    std::uint32_t rp_floor = 0;
    std::uint32_t rate_floor = 0;
    std::uint32_t mu_floor = 0;
    std::uint32_t scarcity_cap = 0;
    std::uint32_t spend_floor = 0;

    std::uint64_t total() const {
        return std::uint64_t(employment) + gini + health + credibility + gap_floor +
               rp_floor + rate_floor + mu_floor + scarcity_cap + spend_floor;
    }
};

// dln w = chi_w*(pi - pi_star) + chi_e*(E - e_bar).
double wage_log_change(const SocialParams& s, double pi, double pi_star, double e);

// E' = clamp01[(1-omega)*E + omega*(e_bar + phi_d*gap - phi_r*(r_eff - g_hat))
//              + (1-omega)*eta_s*dln_w + eps].
double employment_next(const SocialParams& s, double e, double gap, double r_eff,
                       double g_hat, double dln_w, double eps, ClampLog* log = nullptr);

// Gini' = clamp01[gini + beta_tr*dtr + beta_e*(1 - E') + eps].
double gini_next(const SocialParams& s, double gini, double dtr, double e_next,
                 double eps, ClampLog* log = nullptr);

// Health' = clamp01[health + l_he*(E - e_bar) + l_htr*max(0,dtr)
//                   - l_hg*(gini - gini_bar)]. No stochastic term.
double health_next(const SocialParams& s, double health, double e, double dtr,
                   double gini, double gini_bar, ClampLog* log = nullptr);

// Unrest' = max(0, rho*U + l_ug*(gini - gini_bar) + l_upi*max(0, pi - pi_star)
//               + l_aust*max(0, -(dgc + dtr))). Only spending cuts count as
// the austerity driver.
double unrest_next(const SocialParams& s, double unrest, double gini,
                   double gini_bar, double pi, double pi_star,
                   double dgc, double dtr);

// Cred' = clamp01[rho_c*cred + (1-rho_c)*cred_bar + event gains - event losses].
// Gains fire on IFI/LVT starts, losses on realignments and restructurings.
double credibility_next(const SocialParams& s, double cred, std::uint16_t events,
                        ClampLog* log = nullptr);

// W = sum_i w_i * (x_i - center_i) / scale_i over the eight components
// {ln Y, E, Health, pi, b, gap ratio, Unrest, Gini}. Ordinal: used only for
// ranking scenarios.
double welfare_index(const WelfareParams& w, double ln_y, double e, double health,
                     double pi, double b, double gap_ratio, double unrest,
                     double gini);
double welfare_index(const WelfareParams& w, const StateVector& s);

} // namespace soesim
