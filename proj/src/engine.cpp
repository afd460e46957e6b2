#include "soesim/engine.hpp"

#include <cmath>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "soesim/nominal_external.hpp"
#include "soesim/real_fiscal.hpp"
#include "soesim/social.hpp"

namespace soesim {

namespace {

void require_finite(double v, const char* what, int quarter) {
    if (!std::isfinite(v))
        throw PathAbort(quarter, std::string(what) + " became non-finite");
}

MonetaryParams effective_monetary(const Params& p, const Scenario& sc) {
    MonetaryParams m = p.monetary;
    if (sc.monetary.a_pi) m.a_pi = *sc.monetary.a_pi;
    if (sc.monetary.a_g) m.a_g = *sc.monetary.a_g;
    if (sc.monetary.smoothing) m.smoothing = *sc.monetary.smoothing;
    return m;
}

double spend_level_next(double level, double change, ClampLog& log) {
    double v = level + change;
    if (v < 0.0) {
        ++log.spend_floor;
        v = 0.0;
    }
    return v;
}

} // namespace

std::uint16_t apply_events(StateVector& s, const Scenario& sc, int t, PathContext& ctx) {
    if (ctx.last_event_quarter == t)
        throw std::logic_error("apply_events invoked twice for quarter " + std::to_string(t));
    ctx.last_event_quarter = t;

    std::uint16_t flags = 0;

    for (const auto& ev : sc.debt_events) {
        if (ev.quarter != t) continue;
        if (ev.haircut > 0.0) {
            s.b *= 1.0 - ev.haircut;
            flags |= kEventHaircut;
        }
        if (ev.rate_relief > 0.0) {
            s.r_eff = std::max(0.0, s.r_eff - ev.rate_relief);
            flags |= kEventRateRelief;
        }
        switch (ev.flavor) {
            case DebtEvent::Flavor::PSI: flags |= kEventPsi; break;
            case DebtEvent::Flavor::OSI: flags |= kEventOsi; break;
            case DebtEvent::Flavor::MKT: flags |= kEventMkt; break;
        }
    }

    if (sc.ifi && sc.ifi->start == t) flags |= kEventIfiStart;
    if (sc.lvt && sc.lvt->start == t) flags |= kEventLvtStart;
    if (sc.cfm && sc.cfm->start == t) flags |= kEventCfmStart;

    if (sc.lambda_fx_shift && sc.lambda_fx_shift->quarter == t) {
        ctx.lambda_fx = sc.lambda_fx_shift->value;
        flags |= kEventLambdaShift;
    }

    return flags;
}

// One quarter, t -> t+1, in the fixed block order documented in the header.
// Blocks read beginning-of-quarter (event-adjusted) values unless a value
// dated t+1 has already been produced earlier in the same step: the external
// block hands R', S_off' and the gap to prices, prices hand pi' to the social
// block, and the debt block sees the post-devaluation FX ratio. The policy
// rule, the Taylor rule and the employment equation use only time-t
// regressors; g_hat is always the previous quarter's realized nominal growth.
StateVector step(const StateVector& s, const Scenario& sc, const Params& p,
                 PathContext& ctx, Multipliers* out_mu, std::uint16_t* out_events) {
    return step(s, sc, p, ctx, out_mu, out_events, nullptr, nullptr);
}

StateVector step(const StateVector& s, const Scenario& sc, const Params& p,
                 PathContext& ctx, Multipliers* out_mu, std::uint16_t* out_events,
                 BoPFlows* out_flows, double* out_injection) {
    const int t = s.t;

    // (1) regime classification for the quarter being left
    const Regime regime = classify_regime(s, p);
    const int regime_idx = static_cast<int>(regime);
    const double gap_t = output_gap(s);

    // (2) regime-conditional multiplier draw
    Multipliers mu;
    if (p.multipliers.draw_per_path) {
        const auto& mm = p.multipliers.mean;
        auto floored = [&](double v) {
            if (v >= 0.0) return v;
            ++ctx.clamps.mu_floor;
            return 0.0;
        };
        mu.gc = floored(mm[0][regime_idx] + ctx.path_mu_noise.gc);
        mu.tr = floored(mm[1][regime_idx] + ctx.path_mu_noise.tr);
        mu.gi = floored(mm[2][regime_idx] + ctx.path_mu_noise.gi);
    } else {
        int floor_hits = 0;
        RngStream mu_stream(ctx.seed, "mu", t);
        mu = draw_multipliers(regime_idx, mu_stream, p, &floor_hits);
        ctx.clamps.mu_floor += floor_hits;
    }

    // (3) scenario events dated this quarter
    StateVector cur = s;
    const std::uint16_t base_events = apply_events(cur, sc, t, ctx);
    std::uint16_t events = base_events;

    const ShockDraws eps = quarter_shocks(ctx.seed, t, p);
    const FiscalImpulse impulse = sc.impulse_at(t);
    StateVector next = cur;
    next.t = t + 1;

    // (4) real and fiscal block
    const double m_t = monetary_impulse(p.monetary, cur.i_pol, p.i_neutral());
    const double dln_y = growth_log_change(impulse, mu, cur.z, m_t, eps.demand);
    require_finite(dln_y, "output growth", t);
    next.Y = cur.Y * std::exp(dln_y);

    next.gc_level = spend_level_next(cur.gc_level, impulse.dgc, ctx.clamps);
    next.gi_level = spend_level_next(cur.gi_level, impulse.dgi, ctx.clamps);
    next.tr_level = spend_level_next(cur.tr_level, impulse.dtr, ctx.clamps);

    next.K_pub = public_capital_next(cur.K_pub, p.growth.delta_p, next.gi_level * cur.Y);
    const double dk = next.K_pub - cur.K_pub;
    next.Y_pot = cur.Y_pot * std::exp(potential_log_change(p.growth, dk, cur.Y, cur.Gini));

    next.z = p.shocks.rho_z * cur.z + eps.global;

    const double tau_bar_eff =
        p.fiscal.tau_bar + (sc.lvt_active(t) ? sc.lvt->d_tau : 0.0);
    next.tau = revenue_ratio(p.fiscal, tau_bar_eff, gap_t, cur.pi, cur.Cred,
                             p.social.cred_bar);
    const double pd_star = primary_balance_target(p.fiscal, regime, t, cur.r_eff,
                                                  cur.g_hat, cur.b);
    next.pd = observed_deficit(pd_star, impulse, next.tau, p.fiscal.tau_bar);

    // (5) monetary block (time-t inflation and gap; no forecast)
    const MonetaryParams mon = effective_monetary(p, sc);
    bool rate_floored = false;
    next.i_pol = taylor_rate(mon, p.debt.r_f, p.inflation.pi_star, cur.i_pol, cur.pi,
                             gap_t, &rate_floored);
    if (rate_floored) ++ctx.clamps.rate_floor;

    // (6) external block: balance of payments, official rate, parallel gap
    BoPFlows flows;
    flows.ca = current_account(p.external, cur.dlnS_par, gap_t, impulse,
                               eps.current_account);
    const bool cfm_on = sc.cfm_active(t);
    flows.ka = capital_account(p.external, cur.rp, cur.Unrest, cur.gap_ratio(),
                               cfm_on, cfm_on ? sc.cfm->damping : 1.0,
                               eps.capital_account);
    const double injection = sc.ifi_active(t) ? sc.ifi->injection : 0.0;
    if (out_flows) *out_flows = flows;
    if (out_injection) *out_injection = injection;
    next.R = reserves_next(cur.R, flows, injection);
    next.reserves_depleted = next.R <= 0.0;

    RngStream fx_stream(ctx.seed, "fx", t);
    const FxResult fx = official_fx_next(cur.S_off, sc.fx, p.external, next.R,
                                         p.regime.r_crit, ctx.fx_cooldown, t, fx_stream);
    ctx.fx_cooldown = fx.cooldown;
    if (fx.realigned) events |= kEventRealigned;
    next.S_off = fx.s_off;

    bool scarcity_capped = false;
    const double dln_gap = gap_log_change(p.gap, next.R, p.regime.r_crit, cur.rp,
                                          cur.Unrest, cur.Cred, eps.fx_gap,
                                          &scarcity_capped);
    if (scarcity_capped) ++ctx.clamps.scarcity_cap;
    double gap_ratio = cur.gap_ratio() * std::exp(dln_gap);
    if (gap_ratio < 1.0) {
        ++ctx.clamps.gap_floor;
        gap_ratio = 1.0;
    }
    next.S_par = gap_ratio * next.S_off;
    next.dlnS_par = std::log(next.S_par / cur.S_par);

    // (7) prices: the gap of the quarter being formed, pass-through at the
    // updated reserves, the realized parallel-rate move
    const double gap_next = (next.Y - next.Y_pot) / next.Y_pot;
    const double phi = pass_through(next.R, p.inflation, p.regime.r_crit);
    next.pi = inflation_next(p.inflation, cur.pi, gap_next, phi, next.dlnS_par,
                             eps.inflation);
    next.pi_prev = cur.pi;

    // (8) debt and sovereign risk
    if (1.0 + cur.g_hat <= 0.0)
        throw PathAbort(t, "nominal growth at or below -100%");
    next.b = debt_next(cur.b, cur.r_eff, cur.g_hat, next.pd, ctx.lambda_fx,
                       next.S_off / cur.S_off);
    bool rp_floored = false;
    next.rp = risk_premium_next(p.debt, cur.rp, next.b, next.R, gap_ratio,
                                cur.Unrest, sc.ifi_active(t), &rp_floored);
    if (rp_floored) ++ctx.clamps.rp_floor;
    next.r_eff = effective_rate_next(p.debt, cur.r_eff, next.rp);

    // (9) social block
    const double dln_w = wage_log_change(p.social, next.pi, p.inflation.pi_star, cur.E);
    next.w = cur.w * std::exp(dln_w);
    next.E = employment_next(p.social, cur.E, gap_t, cur.r_eff, cur.g_hat, dln_w,
                             eps.employment, &ctx.clamps);
    next.Gini = gini_next(p.social, cur.Gini, impulse.dtr, next.E, eps.gini,
                          &ctx.clamps);
    next.Health = health_next(p.social, cur.Health, cur.E, impulse.dtr, cur.Gini,
                              p.growth.gini_bar, &ctx.clamps);
    next.Unrest = unrest_next(p.social, cur.Unrest, cur.Gini, p.growth.gini_bar,
                              next.pi, p.inflation.pi_star, impulse.dgc, impulse.dtr);
    next.Cred = credibility_next(p.social, cur.Cred, events, &ctx.clamps);

    // (10) welfare and carriers
    next.g_hat = dln_y + next.pi;
    next.W = welfare_index(p.welfare, std::log(next.Y), next.E, next.Health, next.pi,
                           next.b, gap_ratio, next.Unrest, next.Gini);

    const std::pair<double, const char*> finals[] = {
        {next.Y, "Y"},     {next.Y_pot, "Y_pot"}, {next.K_pub, "K_pub"},
        {next.pi, "pi"},   {next.b, "b"},         {next.R, "R"},
        {next.S_par, "S_par"}, {next.rp, "rp"},   {next.W, "W"}};
    for (const auto& [v, name] : finals) require_finite(v, name, t);

    next.regime = classify_regime(next, p);

    if (out_mu) *out_mu = mu;
    if (out_events) *out_events = events;
    return next;
}

PathResult simulate_path(const Scenario& sc, const Params& p, const SeedSpec& seed,
                         int horizon) {
    PathResult res;
    res.path_index = static_cast<int>(seed.path_index);

    PathContext ctx;
    ctx.seed = seed;
    ctx.lambda_fx = p.debt.lambda_fx;

    if (p.multipliers.draw_per_path) {
        RngStream noise(seed, "mu", 0);
        ctx.path_mu_noise.gc = noise.student_t(p.multipliers.noise_dof, p.multipliers.noise_scale);
        ctx.path_mu_noise.tr = noise.student_t(p.multipliers.noise_dof, p.multipliers.noise_scale);
        ctx.path_mu_noise.gi = noise.student_t(p.multipliers.noise_dof, p.multipliers.noise_scale);
    }

    StateVector state = p.initial;
    state.t = 0;
    state.regime = classify_regime(state, p);
    state.W = welfare_index(p.welfare, state);
    state.reserves_depleted = state.R <= 0.0;

    res.quarters.reserve(horizon + 1);
    res.quarters.push_back(QuarterRecord{state, {}, 0});

    for (int t = 0; t < horizon; ++t) {
        Multipliers mu;
        std::uint16_t events = 0;
        BoPFlows flows;
        double injection = 0.0;
        try {
            StateVector next = step(state, sc, p, ctx, &mu, &events, &flows, &injection);
            res.quarters[t].mu = mu;
            res.quarters[t].events = events;
            res.quarters[t].flows = flows;
            res.quarters[t].ifi_injection = injection;
            res.quarters.push_back(QuarterRecord{next, {}, 0});
            state = next;
        } catch (const PathAbort& abort) {
            res.aborted = true;
            res.abort_quarter = abort.quarter;
            res.abort_reason = abort.what();
            break;
        }
    }

    res.clamps = ctx.clamps;

    if (!res.aborted) {
        const int last = static_cast<int>(res.quarters.size()) - 1;
        const int marks[3] = {0, std::min(16, last), last};
        for (int i = 0; i < 3; ++i) {
            const StateVector& s = res.quarters[marks[i]].state;
            res.summaries[i] = HorizonSummary{marks[i], s.Y, s.b, s.W, s.R, s.Gini};
        }
    }
    return res;
}

namespace {

std::vector<PathResult> run_paths(const Scenario& sc, const Params& p,
                                  std::uint64_t master_seed, int n_paths,
                                  int horizon, bool parallel) {
    std::vector<PathResult> results(n_paths);

    // Paths share nothing mutable; results merge by index, so the schedule
    // and worker count cannot affect the output.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int i = 0; i < n_paths; ++i) {
        try {
            results[i] = simulate_path(sc, p, SeedSpec{master_seed,
                                       static_cast<std::uint64_t>(i)}, horizon);
        } catch (const std::exception& e) {
            results[i].path_index = i;
            results[i].aborted = true;
            results[i].abort_reason = e.what();
        }
    }
    (void)parallel;
    return results;
}

} // namespace

std::vector<PathResult> run_ensemble(const Scenario& sc, const Params& p,
                                     std::uint64_t master_seed, int n_paths,
                                     int horizon) {
    return run_paths(sc, p, master_seed, n_paths, horizon, true);
}

std::vector<PathResult> run_ensemble_serial(const Scenario& sc, const Params& p,
                                            std::uint64_t master_seed, int n_paths,
                                            int horizon) {
    return run_paths(sc, p, master_seed, n_paths, horizon, false);
}

} // namespace soesim
