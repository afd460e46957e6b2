#pragma once

#include <string>
#include <vector>

namespace soesim {

// Business-cycle regime for quarter t. Crisis is triggered by reserve
// depletion or a wide parallel-market gap and takes precedence over the
// output-gap split.
enum class Regime { Boom, Recession, Crisis };

const char* regime_name(Regime r);

// Per-quarter change in spending levels, each as a fraction of GDP.
struct FiscalImpulse {
    double dgc = 0.0; // current spending
    double dgi = 0.0; // public investment
    double dtr = 0.0; // transfers

    double sum() const { return dgc + dgi + dtr; }
};

// Full economy state for one quarter. GDP is an index (100 at t=0), all
// rates are quarterly decimals, ratios are decimals of GDP.
struct StateVector {
    int t = 0;

    double Y = 100.0;      // real GDP index
    double Y_pot = 100.0;  // potential GDP index
    double K_pub = 0.0;    // public capital stock, GDP-index units

    double pi = 0.0;       // quarterly inflation
    double pi_prev = 0.0;  // lagged inflation

    double b = 0.0;        // public debt / GDP
    double pd = 0.0;       // primary deficit / GDP (+ = deficit)
    double r_eff = 0.0;    // effective interest rate on debt
    double rp = 0.0;       // sovereign risk premium
    double i_pol = 0.0;    // policy rate

    double R = 0.0;        // net international reserves / GDP
    double S_off = 1.0;    // official exchange rate index
    double S_par = 1.0;    // parallel exchange rate index

    double tau = 0.0;      // revenue / GDP

    double E = 0.0;        // employment rate, [0,1]
    double w = 1.0;        // real wage index

    double Gini = 0.0;     // [0,1]
    double Health = 0.0;   // [0,1]
    double Unrest = 0.0;   // >= 0
    double Cred = 0.0;     // [0,1]

    double z = 0.0;        // AR(1) global shock state
    Regime regime = Regime::Boom;

    // Recursion carriers (recorded alongside the variables above).
    double g_hat = 0.0;     // last realized nominal growth (dlnY + pi)
    double dlnS_par = 0.0;  // ln change of S_par realized into this quarter
    double gc_level = 0.0;  // current spending level shares (baseline +
    double gi_level = 0.0;  //   cumulated impulses), floored at 0
    double tr_level = 0.0;
    double W = 0.0;         // synthetic welfare index at t
    bool reserves_depleted = false; // reporting flag, raised at R <= 0

    double gap_ratio() const { return S_par / S_off; }
};

struct Params; // params.hpp

// (Y - Y_pot) / Y_pot. Throws std::invalid_argument on non-finite inputs.
double output_gap(const StateVector& s);

// Crisis if R <= R_crit or S_par/S_off > gap_crisis; else by output gap.
// Total: every finite state maps to exactly one regime.
Regime classify_regime(const StateVector& s, const Params& p);

// Checks every state-level invariant; returns all violations, not just the
// first. Empty result means the state is valid.
std::vector<std::string> validate_state(const StateVector& s);

} // namespace soesim
