#include "soesim/params.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "soesim/config.hpp"

namespace soesim {

const char* welfare_component_name(WelfareComponent c) {
    switch (c) {
        case WelfareComponent::GdpLog: return "gdp";
        case WelfareComponent::Employment: return "employment";
        case WelfareComponent::Health: return "health";
        case WelfareComponent::Inflation: return "inflation";
        case WelfareComponent::Debt: return "debt";
        case WelfareComponent::FxGap: return "fx_gap";
        case WelfareComponent::Unrest: return "unrest";
        default: return "gini";
    }
}

namespace {

// Tracks which keys a loader touched so typos in calibration files fail
// loudly instead of silently falling back to defaults.
class SectionReader {
public:
    SectionReader(const Config& cfg, const std::string& name)
        : section_(cfg.find(name)), name_(name) {}

    bool present() const { return section_ != nullptr; }

    double num(const std::string& key, double fallback) {
        used_.insert(key);
        return section_ ? section_->get_double(key, fallback) : fallback;
    }
    int integer(const std::string& key, int fallback) {
        used_.insert(key);
        return section_ ? section_->get_int(key, fallback) : fallback;
    }
    bool flag(const std::string& key, bool fallback) {
        used_.insert(key);
        return section_ ? section_->get_bool(key, fallback) : fallback;
    }

    void finish() const {
        if (!section_) return;
        for (const auto& e : section_->entries) {
            if (!used_.count(e.key))
                throw ConfigError(section_->origin + ":" + std::to_string(e.line) +
                                  ": unknown key '" + e.key + "' in section [" + name_ + "]");
        }
    }

private:
    const Config::Section* section_;
    std::string name_;
    std::set<std::string> used_;
};

const char* kRegimeSuffix[3] = {"boom", "recession", "crisis"};
const char* kInstrumentPrefix[3] = {"mu_gc_", "mu_tr_", "mu_gi_"};

} // namespace

Params load_params(const std::string& path) {
    return load_params(Config::parse_file(path));
}

Params load_params(const Config& cfg) {
    Params p;

    {
        SectionReader r(cfg, "regime");
        p.regime.r_crit = r.num("r_crit", p.regime.r_crit);
        p.regime.gap_crisis = r.num("gap_crisis", p.regime.gap_crisis);
        r.finish();
    }
    {
        SectionReader r(cfg, "growth");
        p.growth.g_pot = r.num("g_pot", p.growth.g_pot);
        p.growth.delta_p = r.num("delta_p", p.growth.delta_p);
        p.growth.alpha_p = r.num("alpha_p", p.growth.alpha_p);
        p.growth.beta_gini = r.num("beta_gini", p.growth.beta_gini);
        p.growth.gini_bar = r.num("gini_bar", p.growth.gini_bar);
        r.finish();
    }
    {
        SectionReader r(cfg, "multipliers");
        for (int i = 0; i < 3; ++i)
            for (int g = 0; g < 3; ++g)
                p.multipliers.mean[i][g] =
                    r.num(std::string(kInstrumentPrefix[i]) + kRegimeSuffix[g],
                          p.multipliers.mean[i][g]);
        p.multipliers.noise_scale = r.num("noise_scale", p.multipliers.noise_scale);
        p.multipliers.noise_dof = r.num("noise_dof", p.multipliers.noise_dof);
        p.multipliers.draw_per_path = r.flag("draw_per_path", p.multipliers.draw_per_path);
        r.finish();
    }
    {
        SectionReader r(cfg, "inflation");
        p.inflation.rho_pi = r.num("rho_pi", p.inflation.rho_pi);
        p.inflation.kappa = r.num("kappa", p.inflation.kappa);
        p.inflation.pi_star = r.num("pi_star", p.inflation.pi_star);
        p.inflation.phi_bar = r.num("phi_bar", p.inflation.phi_bar);
        p.inflation.k_phi = r.num("k_phi", p.inflation.k_phi);
        r.finish();
    }
    {
        SectionReader r(cfg, "fiscal");
        p.fiscal.tau_bar = r.num("tau_bar", p.fiscal.tau_bar);
        p.fiscal.beta_g = r.num("beta_g", p.fiscal.beta_g);
        p.fiscal.beta_pi = r.num("beta_pi", p.fiscal.beta_pi);
        p.fiscal.beta_cred = r.num("beta_cred", p.fiscal.beta_cred);
        p.fiscal.pd0 = r.num("pd0", p.fiscal.pd0);
        p.fiscal.pd_target = r.num("pd_target", p.fiscal.pd_target);
        p.fiscal.gamma_boom = r.num("gamma_boom", p.fiscal.gamma_boom);
        p.fiscal.gamma_recession = r.num("gamma_recession", p.fiscal.gamma_recession);
        p.fiscal.gamma_crisis = r.num("gamma_crisis", p.fiscal.gamma_crisis);
        p.fiscal.a_mid = r.num("a_mid", p.fiscal.a_mid);
        p.fiscal.a_slope = r.num("a_slope", p.fiscal.a_slope);
        p.fiscal.gc_share = r.num("gc_share", p.fiscal.gc_share);
        p.fiscal.gi_share = r.num("gi_share", p.fiscal.gi_share);
        p.fiscal.tr_share = r.num("tr_share", p.fiscal.tr_share);
        r.finish();
    }
    {
        SectionReader r(cfg, "debt_risk");
        p.debt.lambda_fx = r.num("lambda_fx", p.debt.lambda_fx);
        p.debt.r_f = r.num("r_f", p.debt.r_f);
        p.debt.rho_rp = r.num("rho_rp", p.debt.rho_rp);
        p.debt.f_max = r.num("f_max", p.debt.f_max);
        p.debt.f_slope = r.num("f_slope", p.debt.f_slope);
        p.debt.f_mid = r.num("f_mid", p.debt.f_mid);
        p.debt.beta_reserves = r.num("beta_reserves", p.debt.beta_reserves);
        p.debt.beta_gap = r.num("beta_gap", p.debt.beta_gap);
        p.debt.beta_unrest = r.num("beta_unrest", p.debt.beta_unrest);
        p.debt.beta_ifi = r.num("beta_ifi", p.debt.beta_ifi);
        p.debt.inst_quality = r.num("inst_quality", p.debt.inst_quality);
        p.debt.lambda_mat = r.num("lambda_mat", p.debt.lambda_mat);
        r.finish();
    }
    {
        SectionReader r(cfg, "external");
        p.external.ca_bar = r.num("ca_bar", p.external.ca_bar);
        p.external.eta_ca_s = r.num("eta_ca_s", p.external.eta_ca_s);
        p.external.eta_ca_g = r.num("eta_ca_g", p.external.eta_ca_g);
        p.external.eta_ca_gc = r.num("eta_ca_gc", p.external.eta_ca_gc);
        p.external.eta_ca_gi = r.num("eta_ca_gi", p.external.eta_ca_gi);
        p.external.eta_ca_tr = r.num("eta_ca_tr", p.external.eta_ca_tr);
        p.external.eta_ka_rp = r.num("eta_ka_rp", p.external.eta_ka_rp);
        p.external.eta_ka_unrest = r.num("eta_ka_unrest", p.external.eta_ka_unrest);
        p.external.flight_quad = r.num("flight_quad", p.external.flight_quad);
        p.external.p_realign = r.num("p_realign", p.external.p_realign);
        p.external.dev_size = r.num("dev_size", p.external.dev_size);
        p.external.realign_cooldown = r.integer("realign_cooldown", p.external.realign_cooldown);
        r.finish();
    }
    {
        SectionReader r(cfg, "gap");
        p.gap.alpha_reserves = r.num("alpha_reserves", p.gap.alpha_reserves);
        p.gap.alpha_rp = r.num("alpha_rp", p.gap.alpha_rp);
        p.gap.alpha_unrest = r.num("alpha_unrest", p.gap.alpha_unrest);
        p.gap.alpha_cred = r.num("alpha_cred", p.gap.alpha_cred);
        p.gap.scarcity_cap = r.num("scarcity_cap", p.gap.scarcity_cap);
        r.finish();
    }
    {
        SectionReader r(cfg, "social");
        p.social.omega_e = r.num("omega_e", p.social.omega_e);
        p.social.phi_demand = r.num("phi_demand", p.social.phi_demand);
        p.social.phi_rate = r.num("phi_rate", p.social.phi_rate);
        p.social.eta_supply = r.num("eta_supply", p.social.eta_supply);
        p.social.e_bar = r.num("e_bar", p.social.e_bar);
        p.social.cred_bar = r.num("cred_bar", p.social.cred_bar);
        p.social.chi_w = r.num("chi_w", p.social.chi_w);
        p.social.chi_e = r.num("chi_e", p.social.chi_e);
        p.social.beta_gini_tr = r.num("beta_gini_tr", p.social.beta_gini_tr);
        p.social.beta_gini_e = r.num("beta_gini_e", p.social.beta_gini_e);
        p.social.lambda_he = r.num("lambda_he", p.social.lambda_he);
        p.social.lambda_htr = r.num("lambda_htr", p.social.lambda_htr);
        p.social.lambda_hg = r.num("lambda_hg", p.social.lambda_hg);
        p.social.rho_unrest = r.num("rho_unrest", p.social.rho_unrest);
        p.social.lambda_ug = r.num("lambda_ug", p.social.lambda_ug);
        p.social.lambda_upi = r.num("lambda_upi", p.social.lambda_upi);
        p.social.lambda_uaust = r.num("lambda_uaust", p.social.lambda_uaust);
        p.social.rho_cred = r.num("rho_cred", p.social.rho_cred);
        p.social.gain_ifi = r.num("gain_ifi", p.social.gain_ifi);
        p.social.gain_lvt = r.num("gain_lvt", p.social.gain_lvt);
        p.social.loss_realign = r.num("loss_realign", p.social.loss_realign);
        p.social.loss_psi = r.num("loss_psi", p.social.loss_psi);
        p.social.loss_osi = r.num("loss_osi", p.social.loss_osi);
        p.social.loss_mkt = r.num("loss_mkt", p.social.loss_mkt);
        r.finish();
    }
    {
        SectionReader r(cfg, "monetary");
        p.monetary.a_pi = r.num("a_pi", p.monetary.a_pi);
        p.monetary.a_g = r.num("a_g", p.monetary.a_g);
        p.monetary.smoothing = r.num("smoothing", p.monetary.smoothing);
        p.monetary.theta_m = r.num("theta_m", p.monetary.theta_m);
        r.finish();
    }
    {
        SectionReader r(cfg, "welfare");
        for (int i = 0; i < kWelfareComponents; ++i) {
            const std::string name = welfare_component_name(static_cast<WelfareComponent>(i));
            p.welfare.weight[i] = r.num("w_" + name, p.welfare.weight[i]);
            p.welfare.center[i] = r.num("center_" + name, p.welfare.center[i]);
            p.welfare.scale[i] = r.num("scale_" + name, p.welfare.scale[i]);
        }
        r.finish();
    }
    {
        SectionReader r(cfg, "shocks");
        auto dist = [&r](const char* name, ShockDist& d) {
            d.scale = r.num(std::string(name) + "_scale", d.scale);
            d.dof = r.num(std::string(name) + "_dof", d.dof);
        };
        dist("demand", p.shocks.demand);
        dist("inflation", p.shocks.inflation);
        dist("current_account", p.shocks.current_account);
        dist("capital_account", p.shocks.capital_account);
        dist("fx_gap", p.shocks.fx_gap);
        dist("employment", p.shocks.employment);
        dist("gini", p.shocks.gini);
        dist("global", p.shocks.global);
        p.shocks.rho_z = r.num("rho_z", p.shocks.rho_z);
        r.finish();
    }
    {
        SectionReader r(cfg, "engine");
        p.engine.horizon = r.integer("horizon", p.engine.horizon);
        p.engine.n_paths = r.integer("n_paths", p.engine.n_paths);
        r.finish();
    }
    {
        SectionReader r(cfg, "initial");
        StateVector& s = p.initial;
        s.Y = r.num("gdp", s.Y);
        s.Y_pot = r.num("gdp_potential", s.Y_pot);
        s.K_pub = r.num("public_capital", s.K_pub);
        s.pi = r.num("inflation", s.pi);
        s.pi_prev = s.pi;
        s.b = r.num("debt", s.b);
        s.pd = r.num("primary_deficit", s.pd);
        s.r_eff = r.num("effective_rate", s.r_eff);
        s.rp = r.num("risk_premium", s.rp);
        s.i_pol = r.num("policy_rate", s.i_pol);
        s.R = r.num("reserves", s.R);
        s.S_off = r.num("fx_official", s.S_off);
        s.S_par = r.num("fx_parallel", s.S_par);
        s.tau = r.num("revenue_ratio", s.tau);
        s.E = r.num("employment", s.E);
        s.w = r.num("wage", s.w);
        s.Gini = r.num("gini", s.Gini);
        s.Health = r.num("health", s.Health);
        s.Unrest = r.num("unrest", s.Unrest);
        s.Cred = r.num("credibility", s.Cred);
        s.z = r.num("global_shock", s.z);
        s.g_hat = r.num("nominal_growth", s.g_hat);
        r.finish();

        s.gc_level = p.fiscal.gc_share;
        s.gi_level = p.fiscal.gi_share;
        s.tr_level = p.fiscal.tr_share;
    }

    return p;
}

namespace {

void check(std::vector<std::string>& out, bool ok, const std::string& msg) {
    if (!ok) out.push_back(msg);
}

void check_ar(std::vector<std::string>& out, double v, const char* name) {
    std::ostringstream os;
    os << name << " must be in [0,1), got " << v;
    check(out, v >= 0.0 && v < 1.0, os.str());
}

void check_dof(std::vector<std::string>& out, double dof, const char* name) {
    std::ostringstream os;
    os << name << " degrees of freedom must be 0 (gaussian) or > 2, got " << dof;
    check(out, dof == 0.0 || dof > 2.0, os.str());
}

void check_nonneg(std::vector<std::string>& out, double v, const char* name) {
    std::ostringstream os;
    os << name << " must be >= 0, got " << v;
    check(out, v >= 0.0, os.str());
}

} // namespace

std::vector<std::string> validate_params(const Params& p) {
    std::vector<std::string> out;
    const auto& m = p.multipliers.mean;

    // Multiplier hierarchy: GI > TR > GC within each regime,
    // Crisis > Recession > Boom within each instrument.
    for (int g = 0; g < 3; ++g) {
        std::ostringstream os;
        os << "multiplier hierarchy GI > TR > GC violated in regime " << kRegimeSuffix[g];
        check(out, m[2][g] > m[1][g] && m[1][g] > m[0][g], os.str());
    }
    for (int i = 0; i < 3; ++i) {
        std::ostringstream os;
        os << "multiplier hierarchy Crisis > Recession > Boom violated for "
           << (i == 0 ? "GC" : i == 1 ? "TR" : "GI");
        check(out, m[i][2] > m[i][1] && m[i][1] > m[i][0], os.str());
    }
    check_nonneg(out, p.multipliers.noise_scale, "multiplier noise_scale");
    check_dof(out, p.multipliers.noise_dof, "multiplier noise");

    check_ar(out, p.inflation.rho_pi, "rho_pi");
    check_ar(out, p.debt.rho_rp, "rho_rp");
    check_ar(out, p.social.rho_unrest, "rho_unrest");
    check_ar(out, p.social.rho_cred, "rho_cred");
    check_ar(out, p.shocks.rho_z, "rho_z");
    check(out, p.monetary.smoothing >= 0.0 && p.monetary.smoothing <= 1.0,
          "monetary smoothing must be in [0,1]");

    check(out, p.inflation.k_phi > 0.0, "k_phi must be > 0");
    check(out, p.debt.f_slope > 0.0, "risk logistic f_slope must be > 0");
    check(out, p.fiscal.a_slope > 0.0, "convergence a_slope must be > 0");
    check(out, p.regime.r_crit > 0.0, "r_crit must be > 0");
    check(out, p.regime.gap_crisis >= 1.0, "gap_crisis must be >= 1");
    check(out, p.inflation.phi_bar >= 0.0, "phi_bar must be >= 0");
    check(out, p.debt.lambda_mat > 0.0 && p.debt.lambda_mat <= 1.0,
          "lambda_mat must be in (0,1]");
    check(out, p.debt.lambda_fx >= 0.0 && p.debt.lambda_fx <= 1.0,
          "lambda_fx must be in [0,1]");
    check(out, p.growth.delta_p >= 0.0 && p.growth.delta_p < 1.0,
          "delta_p must be in [0,1)");
    check(out, p.external.p_realign >= 0.0 && p.external.p_realign <= 1.0,
          "p_realign must be in [0,1]");
    check_nonneg(out, p.external.dev_size, "dev_size");
    check(out, p.external.realign_cooldown >= 0, "realign_cooldown must be >= 0");
    check_nonneg(out, p.gap.scarcity_cap, "scarcity_cap");
    check(out, p.social.omega_e >= 0.0 && p.social.omega_e <= 1.0,
          "omega_e must be in [0,1]");
    check(out, p.social.e_bar >= 0.0 && p.social.e_bar <= 1.0, "e_bar must be in [0,1]");
    check(out, p.social.cred_bar >= 0.0 && p.social.cred_bar <= 1.0,
          "cred_bar must be in [0,1]");

    // Documented sign conventions.
    check(out, p.growth.beta_gini <= 0.0, "beta_gini must be <= 0");
    check(out, p.social.beta_gini_tr < 0.0, "beta_gini_tr must be < 0");
    check(out, p.social.beta_gini_e > 0.0, "beta_gini_e must be > 0");
    check(out, p.external.eta_ca_s > 0.0, "eta_ca_s must be > 0");
    check(out, p.external.eta_ca_g < 0.0, "eta_ca_g must be < 0");
    check(out, p.external.eta_ka_rp < 0.0, "eta_ka_rp must be < 0");
    check(out, p.external.eta_ka_unrest < 0.0, "eta_ka_unrest must be < 0");
    check_nonneg(out, p.external.flight_quad, "flight_quad");
    check(out, p.debt.beta_reserves < 0.0, "beta_reserves must be < 0");
    check(out, p.debt.beta_ifi <= 0.0, "beta_ifi must be <= 0");
    check(out, p.fiscal.gamma_crisis < p.fiscal.gamma_recession &&
                   p.fiscal.gamma_recession < p.fiscal.gamma_boom,
          "fiscal gamma must satisfy crisis < recession < boom");

    // Welfare weights: fixed signs and total.
    static const double kSign[kWelfareComponents] = {1, 1, 1, -1, -1, -1, -1, -1};
    double sum = 0.0;
    for (int i = 0; i < kWelfareComponents; ++i) {
        const std::string name = welfare_component_name(static_cast<WelfareComponent>(i));
        check(out, p.welfare.weight[i] * kSign[i] > 0.0,
              "welfare weight w_" + name + " has the wrong sign");
        check(out, p.welfare.scale[i] > 0.0,
              "welfare scale_" + name + " must be > 0");
        sum += p.welfare.weight[i];
    }
    check(out, std::fabs(sum - 0.10) <= 1e-12, "welfare weights must sum to +0.10");

    for (const ShockDist* d : {&p.shocks.demand, &p.shocks.inflation,
                               &p.shocks.current_account, &p.shocks.capital_account,
                               &p.shocks.fx_gap, &p.shocks.employment,
                               &p.shocks.gini, &p.shocks.global}) {
        check_nonneg(out, d->scale, "shock scale");
        check_dof(out, d->dof, "shock");
    }

    check(out, p.engine.horizon >= 1, "horizon must be >= 1");
    check(out, p.engine.n_paths >= 1, "n_paths must be >= 1");

    for (const auto& v : validate_state(p.initial)) out.push_back("initial state: " + v);

    return out;
}

} // namespace soesim
