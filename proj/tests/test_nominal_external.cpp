#include <doctest.h>

#include <cmath>

#include "soesim/nominal_external.hpp"
#include "soesim/rng.hpp"
#include "test_support.hpp"

using namespace soesim;

TEST_CASE("pass-through") {
    InflationParams infl;
    infl.phi_bar = 0.2;
    infl.k_phi = 4.0;
    const double r_crit = 0.08;

    SUBCASE("logistic midpoint is exactly phi_bar/2") {
        CHECK(std::fabs(pass_through(r_crit, infl, r_crit) - 0.1) <= 1e-14);
    }
    SUBCASE("tails") {
        CHECK(pass_through(2 * r_crit, infl, r_crit) ==
              doctest::Approx(0.2 / (1.0 + std::exp(4.0))).epsilon(1e-12));
        CHECK(pass_through(1e-12, infl, r_crit) ==
              doctest::Approx(0.2 / (1.0 + std::exp(-4.0))).epsilon(1e-9));
    }
    SUBCASE("strictly decreasing, range (0, phi_bar)") {
        double prev = infl.phi_bar;
        for (double r = -0.5; r <= 1.0; r += 0.01) {
            const double phi = pass_through(r, infl, r_crit);
            CHECK(phi > 0.0);
            CHECK(phi < infl.phi_bar);
            CHECK(phi < prev);
            prev = phi;
        }
    }
}

TEST_CASE("inflation update") {
    InflationParams infl;
    infl.rho_pi = 0.5;
    infl.kappa = 0.1;
    infl.pi_star = 0.01;

    SUBCASE("fixed point at target") {
        const double pi = inflation_next(infl, 0.01, 0, 0, 0, 0);
        CHECK(std::fabs(pi - 0.01) <= 1e-14);
    }
    SUBCASE("inertia halfway") {
        CHECK(inflation_next(infl, 0.02, 0, 0, 0, 0) ==
              doctest::Approx(0.015).epsilon(1e-14));
    }
    SUBCASE("phillips term") {
        const double base = inflation_next(infl, 0.02, 0, 0, 0, 0);
        CHECK(inflation_next(infl, 0.02, 0.02, 0, 0, 0) - base ==
              doctest::Approx(0.002).epsilon(1e-12));
    }
}

TEST_CASE("taylor rule") {
    MonetaryParams m;
    m.a_pi = 1.5;
    m.a_g = 0.5;
    m.smoothing = 0.0;
    const double r_f = 0.01, pi_star = 0.01;

    CHECK(taylor_rate(m, r_f, pi_star, 0.0, pi_star, 0.0) ==
          doctest::Approx(0.02).epsilon(1e-14));
    CHECK(taylor_rate(m, r_f, pi_star, 0.0, 0.02, 0.0) ==
          doctest::Approx(0.035).epsilon(1e-14));

    bool floored = false;
    CHECK(taylor_rate(m, r_f, pi_star, 0.0, -0.05, -0.05, &floored) == 0.0);
    CHECK(floored);
}

TEST_CASE("monetary impulse is weak and symmetric") {
    MonetaryParams m;
    m.theta_m = 0.0625;
    CHECK(monetary_impulse(m, 0.02, 0.02) == 0.0);
    CHECK(monetary_impulse(m, 0.0225, 0.02) ==
          doctest::Approx(-0.0625 * 0.0025).epsilon(1e-14));
    CHECK(monetary_impulse(m, 0.01, 0.02) > 0.0);
}

TEST_CASE("risk premium update") {
    DebtRiskParams d;
    d.rho_rp = 0.8;
    d.f_max = 0.05;
    d.f_slope = 4.0;
    d.f_mid = 1.6;
    d.beta_reserves = -0.05;
    d.beta_gap = 0.02;
    d.beta_unrest = 0.005;
    d.beta_ifi = -0.004;
    d.inst_quality = 0.004;

    SUBCASE("fixed point when the bracket equals the current premium") {
        // Solve inst_quality so the bracket is exactly rp.
        const double rp = 0.02, b = 1.1, r = 0.1;
        DebtRiskParams d2 = d;
        d2.inst_quality =
            rp - debt_risk_logistic(d, b) - d.beta_reserves * r;
        CHECK(risk_premium_next(d2, rp, b, r, 1.0, 0.0, false) ==
              doctest::Approx(rp).epsilon(1e-14));
    }
    SUBCASE("partial adjustment arithmetic") {
        // rho*rp + (1-rho)*bracket with rp 0.02, bracket 0.03 -> 0.022.
        DebtRiskParams d3 = d;
        d3.beta_reserves = -0.05;
        const double b = 1.1, r = 0.1;
        d3.inst_quality = 0.03 - debt_risk_logistic(d3, b) - d3.beta_reserves * r;
        CHECK(risk_premium_next(d3, 0.02, b, r, 1.0, 0.0, false) ==
              doctest::Approx(0.022).epsilon(1e-12));
    }
    SUBCASE("debt term saturates at f_max") {
        CHECK(debt_risk_logistic(d, 1e9) == doctest::Approx(d.f_max).epsilon(1e-12));
    }
    SUBCASE("monotone in debt and unrest, decreasing in reserves") {
        const double base = risk_premium_next(d, 0.02, 1.2, 0.1, 1.0, 0.5, false);
        CHECK(risk_premium_next(d, 0.02, 1.5, 0.1, 1.0, 0.5, false) > base);
        CHECK(risk_premium_next(d, 0.02, 1.2, 0.1, 1.0, 1.5, false) > base);
        CHECK(risk_premium_next(d, 0.02, 1.2, 0.2, 1.0, 0.5, false) < base);
        CHECK(risk_premium_next(d, 0.02, 1.2, 0.1, 1.0, 0.5, true) < base);
    }
}

TEST_CASE("effective rate adjustment") {
    DebtRiskParams d;
    d.r_f = 0.01;
    d.lambda_mat = 0.1;

    CHECK(effective_rate_next(d, 0.03, 0.02) == doctest::Approx(0.03).epsilon(1e-14));
    CHECK(effective_rate_next(d, 0.01, 0.02) == doctest::Approx(0.012).epsilon(1e-14));
    d.lambda_mat = 1.0;
    CHECK(effective_rate_next(d, 0.5, 0.02) == doctest::Approx(0.03).epsilon(1e-14));
}

TEST_CASE("debt law of motion") {
    SUBCASE("identity at r_eff == g_hat, zero deficit, stable official rate") {
        CHECK(std::fabs(debt_next(1.37, 0.015, 0.015, 0.0, 0.5, 1.0) - 1.37) <= 1e-14);
    }
    SUBCASE("worked example with a devaluation") {
        const double expected = 1.10 * 1.02 / 1.01 + 0.01 + 0.5 * 1.10 * 0.10;
        CHECK(debt_next(1.10, 0.02, 0.01, 0.01, 0.5, 1.10) ==
              doctest::Approx(expected).epsilon(1e-14));
        CHECK(expected == doctest::Approx(1.17589).epsilon(1e-5));
    }
    SUBCASE("a realignment of size d adds exactly lambda*b*d") {
        RngStream g({11, 0}, "fx", 0);
        for (int i = 0; i < 100; ++i) {
            const double b = 0.5 + 2 * g.next_unit();
            const double lam = g.next_unit();
            const double dev = 0.5 * g.next_unit();
            const double with = debt_next(b, 0.02, 0.01, 0.003, lam, 1.0 + dev);
            const double without = debt_next(b, 0.02, 0.01, 0.003, lam, 1.0);
            CHECK(with - without == doctest::Approx(lam * b * dev).epsilon(1e-12));
        }
    }
}

TEST_CASE("current account") {
    ExternalParams x;
    x.ca_bar = 0.001;
    x.eta_ca_s = 0.05;
    x.eta_ca_g = -0.1;
    x.eta_ca_gc = x.eta_ca_gi = x.eta_ca_tr = 0.0;

    CHECK(current_account(x, 0, 0, {}, 0) == 0.001);
    CHECK(current_account(x, 0, 0.02, {}, 0) - 0.001 ==
          doctest::Approx(-0.002).epsilon(1e-14));
    CHECK(current_account(x, 0.10, 0, {}, 0) - 0.001 ==
          doctest::Approx(0.005).epsilon(1e-14));
}

TEST_CASE("capital account and flow management") {
    ExternalParams x;
    x.eta_ka_rp = -0.5;
    x.eta_ka_unrest = -0.002;
    x.flight_quad = 0.5;

    SUBCASE("pure shock when all drivers rest") {
        CHECK(capital_account(x, 0, 0, 1.0, false, 1.0, 0.0042) == 0.0042);
    }
    SUBCASE("quadratic flight") {
        CHECK(capital_account(x, 0, 0, 1.2, false, 1.0, 0) ==
              doctest::Approx(-0.02).epsilon(1e-12));
        CHECK(capital_account(x, 0, 0, 1.2, true, 0.5, 0) ==
              doctest::Approx(-0.01).epsilon(1e-12));
    }
    SUBCASE("with damping, |KA| never exceeds the undamped flow draw-by-draw") {
        RngStream g({12, 0}, "ka", 0);
        for (int i = 0; i < 300; ++i) {
            const double rp = 0.05 * g.next_unit();
            const double u = 2 * g.next_unit();
            const double gap = 1.0 + g.next_unit();
            const double eps = 0.02 * (g.next_unit() - 0.5);
            const double off = capital_account(x, rp, u, gap, false, 1.0, eps);
            const double on = capital_account(x, rp, u, gap, true, 0.5, eps);
            CHECK(std::fabs(on) <= std::fabs(off) + 1e-15);
        }
    }
}

TEST_CASE("reserves accounting is exact") {
    RngStream g({13, 0}, "res", 0);
    for (int i = 0; i < 200; ++i) {
        const double r = g.next_unit() - 0.5;
        BoPFlows f{0.02 * (g.next_unit() - 0.5), 0.02 * (g.next_unit() - 0.5)};
        const double inj = 0.01 * g.next_unit();
        CHECK(reserves_next(r, f, inj) - r == doctest::Approx(f.ca + f.ka + inj).epsilon(1e-15));
    }
    CHECK(reserves_next(0.1, {0.01, -0.005}, 0.0) - 0.1 ==
          doctest::Approx(0.005).epsilon(1e-15));
}

TEST_CASE("official exchange rate") {
    ExternalParams x;
    x.p_realign = 0.25;
    x.dev_size = 0.30;
    x.realign_cooldown = 4;
    const double r_crit = 0.08;

    SUBCASE("fixed regime, comfortable reserves") {
        FxConfig fx;
        RngStream g({1, 0}, "fx", 0);
        const auto out = official_fx_next(1.0, fx, x, 0.15, r_crit, 0, 0, g);
        CHECK(out.s_off == 1.0);
        CHECK(!out.realigned);
    }
    SUBCASE("crawl at 15% per year") {
        FxConfig fx;
        fx.mode = FxConfig::Mode::Crawl;
        fx.crawl_rate_q = std::pow(1.15, 0.25) - 1.0;
        CHECK(fx.crawl_rate_q == doctest::Approx(0.035558).epsilon(1e-4));
        RngStream g({1, 0}, "fx", 0);
        const auto out = official_fx_next(1.0, fx, x, 0.15, r_crit, 0, 0, g);
        CHECK(out.s_off == doctest::Approx(1.0 + fx.crawl_rate_q).epsilon(1e-14));
    }
    SUBCASE("scheduled devaluation fires at its quarter") {
        FxConfig fx;
        fx.deval_quarter = 3;
        fx.deval_size = 0.25;
        RngStream g({1, 0}, "fx", 3);
        const auto out = official_fx_next(1.0, fx, x, 0.15, r_crit, 0, 3, g);
        CHECK(out.s_off == doctest::Approx(1.25).epsilon(1e-14));
        CHECK(out.realigned);
        CHECK(out.cooldown == 4);
    }
    SUBCASE("hazard fires under depleted reserves, suppressed by cooldown") {
        FxConfig fx;
        x.p_realign = 1.0; // force the draw to land below the hazard
        RngStream g({1, 0}, "fx", 5);
        auto out = official_fx_next(1.0, fx, x, 0.05, r_crit, 0, 5, g);
        CHECK(out.realigned);
        CHECK(out.s_off == doctest::Approx(1.30).epsilon(1e-14));

        RngStream g2({1, 0}, "fx", 6);
        out = official_fx_next(out.s_off, fx, x, 0.05, r_crit, out.cooldown, 6, g2);
        CHECK(!out.realigned);
        CHECK(out.cooldown == 3);
    }
}

TEST_CASE("parallel gap dynamics") {
    GapParams g;
    g.alpha_reserves = 0.06;
    g.alpha_rp = 0.5;
    g.alpha_unrest = 0.01;
    g.alpha_cred = 0.01;
    g.scarcity_cap = 5.0;
    const double r_crit = 0.08;

    SUBCASE("no scarcity above the threshold") {
        CHECK(gap_log_change(g, 0.10, r_crit, 0, 0, 0, 0) == 0.0);
    }
    SUBCASE("reserves at half the threshold") {
        CHECK(gap_log_change(g, 0.04, r_crit, 0, 0, 0, 0) ==
              doctest::Approx(0.06).epsilon(1e-12));
    }
    SUBCASE("all drivers at rest leave the gap unchanged") {
        CHECK(gap_log_change(g, 0.2, r_crit, 0, 0, 0, 0) == 0.0);
    }
    SUBCASE("cap binds near and below depletion") {
        bool capped = false;
        CHECK(gap_log_change(g, 1e-9, r_crit, 0, 0, 0, 0, &capped) ==
              doctest::Approx(0.06 * 5.0).epsilon(1e-12));
        CHECK(capped);
        capped = false;
        CHECK(gap_log_change(g, -0.3, r_crit, 0, 0, 0, 0, &capped) ==
              doctest::Approx(0.06 * 5.0).epsilon(1e-12));
        CHECK(capped);
    }
}
