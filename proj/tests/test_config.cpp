#include <doctest.h>

#include "soesim/config.hpp"
#include "test_support.hpp"

using soesim::Config;
using soesim::ConfigError;

TEST_CASE("config parses sections, keys, comments") {
    const auto cfg = Config::parse_string(
        "# leading comment\n"
        "[alpha]\n"
        "x = 1.5   # inline comment\n"
        "name = Shock-6+Deval\n"
        "flag = true\n"
        "\n"
        "[beta]\n"
        "x = 2\n",
        "mem");

    REQUIRE(cfg.sections().size() == 2);
    const auto& a = cfg.require("alpha");
    CHECK(a.get_double("x") == 1.5);
    CHECK(a.get_string("name") == "Shock-6+Deval");
    CHECK(a.get_bool("flag"));
    CHECK(cfg.require("beta").get_int("x") == 2);
}

TEST_CASE("config keeps repeated keys and repeated sections in order") {
    const auto cfg = Config::parse_string(
        "[impulse]\n"
        "dgc = -0.01 @ 0..3\n"
        "dgc = -0.02 @ 4\n"
        "[debt_event]\n"
        "quarter = 2\n"
        "[debt_event]\n"
        "quarter = 5\n",
        "mem");

    CHECK(cfg.require("impulse").find_all("dgc").size() == 2);
    const auto events = cfg.find_all("debt_event");
    REQUIRE(events.size() == 2);
    CHECK(events[0]->get_int("quarter") == 2);
    CHECK(events[1]->get_int("quarter") == 5);
}

TEST_CASE("config rejects malformed input with file:line context") {
    CHECK_THROWS_AS(Config::parse_string("[open\n", "m"), ConfigError);
    CHECK_THROWS_AS(Config::parse_string("[s]\nno equals sign\n", "m"), ConfigError);
    CHECK_THROWS_AS(Config::parse_string("orphan = 1\n", "m"), ConfigError);

    try {
        Config::parse_string("[s]\n\nbad line\n", "file.cfg");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("file.cfg:3") != std::string::npos);
    }
}

TEST_CASE("typed getters reject junk and report missing keys") {
    const auto cfg = Config::parse_string("[s]\nx = 1.5oops\nb = maybe\n", "m");
    const auto& s = cfg.require("s");
    CHECK_THROWS_AS(s.get_double("x"), ConfigError);
    CHECK_THROWS_AS(s.get_bool("b"), ConfigError);
    CHECK_THROWS_AS(s.get_double("absent"), ConfigError);
    CHECK(s.get_double("absent", 7.0) == 7.0);
    CHECK_THROWS_AS(cfg.require("nope"), ConfigError);
}

TEST_CASE("calibration loader rejects unknown keys") {
    auto text = std::string("[growth]\ng_pot = 0.002\ngpot_typo = 1\n");
    CHECK_THROWS_AS(soesim::load_params(Config::parse_string(text, "m")), ConfigError);
}

TEST_CASE("reference calibration loads and validates clean") {
    const auto p = testsup::reference_params();
    CHECK(soesim::validate_params(p).empty());
    CHECK(p.initial.b == 1.10);
    CHECK(p.initial.Y == 100.0);
    CHECK(p.engine.horizon == 40);
    CHECK(p.engine.n_paths == 300);
}
