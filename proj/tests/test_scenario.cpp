#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "soesim/config.hpp"
#include "soesim/engine.hpp"
#include "soesim/scenario.hpp"
#include "test_support.hpp"

using namespace soesim;

TEST_CASE("impulse schedules parse and accumulate") {
    const auto cfg = Config::parse_string(
        "[scenario]\n"
        "name = t\n"
        "[impulse]\n"
        "dgc = -0.01 @ 0..3\n"
        "dgc = -0.005 @ 2\n"
        "dgi = 0.004 @ 5..6\n",
        "mem");
    const Scenario sc = load_scenario(cfg);

    CHECK(sc.impulse_at(0).dgc == -0.01);
    CHECK(sc.impulse_at(2).dgc == doctest::Approx(-0.015).epsilon(1e-14));
    CHECK(sc.impulse_at(4).dgc == 0.0);
    CHECK(sc.impulse_at(5).dgi == 0.004);
    CHECK(sc.impulse_at(40).dgi == 0.0); // beyond the schedule
}

TEST_CASE("scenario loader rejects malformed schedules and unknown keys") {
    CHECK_THROWS_AS(load_scenario(Config::parse_string(
                        "[scenario]\nname = t\n[impulse]\ndgc = -0.01\n", "m")),
                    ConfigError);
    CHECK_THROWS_AS(load_scenario(Config::parse_string(
                        "[scenario]\nname = t\n[impulse]\ndgc = -0.01 @ 5..2\n", "m")),
                    ConfigError);
    CHECK_THROWS_AS(load_scenario(Config::parse_string(
                        "[scenario]\nname = t\n[impulse]\ndgx = -0.01 @ 0\n", "m")),
                    ConfigError);
    CHECK_THROWS_AS(load_scenario(Config::parse_string(
                        "[scenario]\nname = t\n[fx]\nmode = pegged\n", "m")),
                    ConfigError);
    CHECK_THROWS_AS(load_scenario(Config::parse_string(
                        "[scenario]\nname = t\n[debt_event]\nquarter = 1\nflavor = XXX\n", "m")),
                    ConfigError);
}

TEST_CASE("scenario validation finds out-of-range quarters and bounds") {
    Scenario sc = testsup::empty_scenario();
    sc.debt_events.push_back({45, 0.3, 0.0, DebtEvent::Flavor::PSI});
    sc.debt_events.push_back({2, 1.0, 0.0, DebtEvent::Flavor::PSI});
    sc.cfm = CfmWindow{0, 8, 1.5};
    sc.impulses.resize(3);
    sc.impulses[1].dgc = -0.3;

    const auto v = sc.validate(40);
    CHECK(v.size() == 4);

    CHECK(testsup::empty_scenario().validate(40).empty());
}

TEST_CASE("every shipped strategy file loads, validates, and keeps its name") {
    const auto scenarios =
        load_scenario_set(testsup::source_dir() + "/scenarios/strategies29.cfg");
    REQUIRE(scenarios.size() == 29);
    for (const auto& sc : scenarios) {
        CAPTURE(sc.name);
        CHECK(sc.validate(40).empty());
    }
    CHECK(scenarios.front().name == "AggRecomp_GI+TR_modDebt_MKT_LVT");
    CHECK(scenarios.back().name == "Shock-6+Deval+DebtMKT");

    // Strategy ingredients named by the files are wired through.
    const auto& psi30 = scenarios[6];
    CHECK(psi30.name == "PSI30+IFI1.5");
    REQUIRE(psi30.debt_events.size() == 1);
    CHECK(psi30.debt_events[0].haircut == 0.30);
    CHECK(psi30.ifi.has_value());
    CHECK(psi30.ifi->injection == doctest::Approx(0.01875));

    const auto& crawl = scenarios[22];
    CHECK(crawl.name == "Crawl15%+CFM8q");
    CHECK(crawl.fx.mode == FxConfig::Mode::Crawl);
    CHECK(crawl.fx.crawl_rate_q == doctest::Approx(std::pow(1.15, 0.25) - 1.0).epsilon(1e-12));
    CHECK(crawl.cfm.has_value());
}

TEST_CASE("event application") {
    const auto p = testsup::reference_params();
    PathContext ctx;
    ctx.seed = {1, 0};
    ctx.lambda_fx = p.debt.lambda_fx;

    SUBCASE("haircut cuts the stock multiplicatively") {
        Scenario sc = testsup::empty_scenario();
        sc.debt_events.push_back({2, 0.30, 0.0, DebtEvent::Flavor::PSI});
        StateVector s = p.initial;
        s.b = 1.50;
        const auto flags = apply_events(s, sc, 2, ctx);
        CHECK(s.b == doctest::Approx(1.05).epsilon(1e-14));
        CHECK((flags & kEventHaircut) != 0);
        CHECK((flags & kEventPsi) != 0);
    }
    SUBCASE("rate relief is additive and floored") {
        Scenario sc = testsup::empty_scenario();
        sc.debt_events.push_back({1, 0.0, 0.005, DebtEvent::Flavor::OSI});
        StateVector s = p.initial;
        s.r_eff = 0.03;
        apply_events(s, sc, 1, ctx);
        CHECK(s.r_eff == doctest::Approx(0.025).epsilon(1e-14));

        PathContext ctx2;
        ctx2.seed = {1, 1};
        StateVector s2 = p.initial;
        s2.r_eff = 0.002;
        apply_events(s2, sc, 1, ctx2);
        CHECK(s2.r_eff == 0.0);
    }
    SUBCASE("quarters without events change nothing") {
        Scenario sc = testsup::empty_scenario();
        sc.debt_events.push_back({5, 0.30, 0.0, DebtEvent::Flavor::PSI});
        StateVector s = p.initial;
        const StateVector before = s;
        const auto flags = apply_events(s, sc, 3, ctx);
        CHECK(flags == 0);
        CHECK(s.b == before.b);
        CHECK(s.r_eff == before.r_eff);
    }
    SUBCASE("double application within one quarter is an error") {
        Scenario sc = testsup::empty_scenario();
        StateVector s = p.initial;
        PathContext ctx3;
        ctx3.seed = {1, 2};
        apply_events(s, sc, 4, ctx3);
        CHECK_THROWS_AS(apply_events(s, sc, 4, ctx3), std::logic_error);
    }
    SUBCASE("liability management shifts the FX share") {
        Scenario sc = testsup::empty_scenario();
        sc.lambda_fx_shift = LambdaFxShift{3, 0.30};
        StateVector s = p.initial;
        PathContext ctx4;
        ctx4.seed = {1, 3};
        ctx4.lambda_fx = 0.5;
        const auto flags = apply_events(s, sc, 3, ctx4);
        CHECK(ctx4.lambda_fx == 0.30);
        CHECK((flags & kEventLambdaShift) != 0);
    }
}

TEST_CASE("scenario set loader resolves relative paths") {
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "soesim_set_test";
    fs::create_directories(dir);
    {
        std::ofstream a(dir / "a.cfg");
        a << "[scenario]\nname = A\n";
        std::ofstream set(dir / "set.cfg");
        set << "[scenario_set]\nscenario = a.cfg\n";
    }
    const auto scenarios = load_scenario_set((dir / "set.cfg").string());
    REQUIRE(scenarios.size() == 1);
    CHECK(scenarios[0].name == "A");
    fs::remove_all(dir);
}
