#include <doctest.h>

#include <limits>

#include "soesim/rng.hpp"
#include "soesim/state.hpp"
#include "test_support.hpp"

using namespace soesim;

namespace {

StateVector baseline() { return testsup::reference_params().initial; }

} // namespace

TEST_CASE("output gap") {
    StateVector s = baseline();
    s.Y = 100; s.Y_pot = 100;
    CHECK(output_gap(s) == 0.0);
    s.Y = 102;
    CHECK(output_gap(s) == doctest::Approx(0.02).epsilon(1e-14));
    s.Y = 95;
    CHECK(output_gap(s) == doctest::Approx(-0.05).epsilon(1e-14));

    s.Y = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(output_gap(s), std::invalid_argument);
}

TEST_CASE("regime classification") {
    const auto p = testsup::reference_params(); // r_crit 0.08, gap_crisis 1.5
    StateVector s = baseline();

    SUBCASE("reserve depletion dominates any gap") {
        s.R = 0.05;
        s.Y = 110; // strong boom
        CHECK(classify_regime(s, p) == Regime::Crisis);
    }
    SUBCASE("wide parallel premium is crisis") {
        s.R = 0.15;
        s.S_par = 1.6;
        CHECK(classify_regime(s, p) == Regime::Crisis);
    }
    SUBCASE("negative gap without crisis trigger is recession") {
        s.R = 0.15;
        s.Y = 99;
        CHECK(classify_regime(s, p) == Regime::Recession);
    }
    SUBCASE("zero gap boundary counts as boom") {
        s.R = 0.15;
        s.Y = s.Y_pot = 100;
        CHECK(classify_regime(s, p) == Regime::Boom);
    }
}

TEST_CASE("classification is total and monotone in reserves") {
    const auto p = testsup::reference_params();
    RngStream g({123, 0}, "state-gen", 0);

    for (int i = 0; i < 500; ++i) {
        StateVector s = baseline();
        s.Y = 80 + 40 * g.next_unit();
        s.Y_pot = 100;
        s.R = -0.1 + 0.4 * g.next_unit();
        s.S_par = 1.0 + g.next_unit();
        const Regime r1 = classify_regime(s, p);
        const Regime r2 = classify_regime(s, p);
        CHECK(r1 == r2); // deterministic, always one of the three
    }

    // Lowering R through r_crit switches to Crisis and never back.
    StateVector s = baseline();
    s.Y = 101;
    bool in_crisis = false;
    for (double r = 0.2; r > -0.05; r -= 0.001) {
        s.R = r;
        const bool crisis = classify_regime(s, p) == Regime::Crisis;
        CHECK(crisis == (r <= p.regime.r_crit));
        if (in_crisis) CHECK(crisis);
        in_crisis = crisis;
    }
}

TEST_CASE("state validation collects every violation") {
    StateVector s = baseline();
    CHECK(validate_state(s).empty());

    s.E = 1.2;
    auto v = validate_state(s);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("E out of [0,1]") != std::string::npos);

    s.Gini = -0.1;
    s.S_par = 0.5; // also puts the gap ratio below 1
    v = validate_state(s);
    CHECK(v.size() == 3);
}

TEST_CASE("parameter validation enforces the multiplier hierarchy") {
    auto p = testsup::reference_params();

    // GC above GI in crisis breaks both orderings.
    p.multipliers.mean[0][2] = 0.5;
    p.multipliers.mean[2][2] = 0.4;
    const auto v = validate_params(p);
    CHECK(!v.empty());
    bool found = false;
    for (const auto& msg : v)
        if (msg.find("hierarchy") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("parameter validation checks ranges and signs") {
    auto p = testsup::reference_params();
    p.inflation.rho_pi = 1.0;
    p.debt.lambda_mat = 0.0;
    p.welfare.scale[0] = 0.0;
    p.shocks.demand.dof = 1.5;
    const auto v = validate_params(p);
    CHECK(v.size() >= 4);
}
