#include "soesim/state.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "soesim/params.hpp"

namespace soesim {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Boom: return "Boom";
        case Regime::Recession: return "Recession";
        default: return "Crisis";
    }
}

double output_gap(const StateVector& s) {
    if (!std::isfinite(s.Y) || !std::isfinite(s.Y_pot) || s.Y_pot <= 0.0)
        throw std::invalid_argument("output_gap: non-finite or non-positive GDP inputs");
    return (s.Y - s.Y_pot) / s.Y_pot;
}

Regime classify_regime(const StateVector& s, const Params& p) {
    // Crisis test first; the boundary g == 0 counts as Boom.
    if (s.R <= p.regime.r_crit || s.gap_ratio() > p.regime.gap_crisis)
        return Regime::Crisis;
    return output_gap(s) < 0.0 ? Regime::Recession : Regime::Boom;
}

namespace {

void check_finite(std::vector<std::string>& out, double v, const char* name) {
    if (!std::isfinite(v)) out.push_back(std::string(name) + " is not finite");
}

void check_unit(std::vector<std::string>& out, double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        std::ostringstream os;
        os << name << " out of [0,1]: " << v;
        out.push_back(os.str());
    }
}

} // namespace

std::vector<std::string> validate_state(const StateVector& s) {
    std::vector<std::string> out;

    check_finite(out, s.Y, "Y");
    check_finite(out, s.Y_pot, "Y_pot");
    check_finite(out, s.K_pub, "K_pub");
    check_finite(out, s.pi, "pi");
    check_finite(out, s.b, "b");
    check_finite(out, s.pd, "pd");
    check_finite(out, s.r_eff, "r_eff");
    check_finite(out, s.rp, "rp");
    check_finite(out, s.i_pol, "i_pol");
    check_finite(out, s.R, "R");
    check_finite(out, s.S_off, "S_off");
    check_finite(out, s.S_par, "S_par");
    check_finite(out, s.tau, "tau");
    check_finite(out, s.E, "E");
    check_finite(out, s.w, "w");
    check_finite(out, s.Gini, "Gini");
    check_finite(out, s.Health, "Health");
    check_finite(out, s.Unrest, "Unrest");
    check_finite(out, s.Cred, "Cred");
    check_finite(out, s.z, "z");
    if (!out.empty()) return out; // bound checks below assume finite values

    if (s.Y <= 0.0) out.push_back("Y must be > 0");
    if (s.Y_pot <= 0.0) out.push_back("Y_pot must be > 0");
    if (s.S_off <= 0.0) out.push_back("S_off must be > 0");
    if (s.S_par <= 0.0) out.push_back("S_par must be > 0");

    constexpr double eps_num = 1e-12;
    if (s.S_off > 0.0 && s.S_par > 0.0 && s.gap_ratio() < 1.0 - eps_num)
        out.push_back("gap ratio S_par/S_off below 1");

    check_unit(out, s.E, "E");
    check_unit(out, s.Gini, "Gini");
    check_unit(out, s.Health, "Health");
    check_unit(out, s.Cred, "Cred");
    if (s.Unrest < 0.0) out.push_back("Unrest must be >= 0");
    if (s.b < 0.0) out.push_back("b must be >= 0");

    return out;
}

} // namespace soesim
