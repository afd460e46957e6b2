#include "soesim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <initializer_list>
#include <sstream>
#include <string>

#include "soesim/config.hpp"

namespace soesim {

namespace {

void check_keys(const Config::Section& s, std::initializer_list<const char*> allowed) {
    for (const auto& e : s.entries) {
        bool ok = false;
        for (const char* k : allowed)
            if (e.key == k) { ok = true; break; }
        if (!ok)
            throw ConfigError(s.origin + ":" + std::to_string(e.line) + ": unknown key '" +
                              e.key + "' in section [" + s.name + "]");
    }
}

// Schedule entry: "<value> @ <quarter>" or "<value> @ <first>..<last>".
// Repeated entries for the same instrument accumulate.
void apply_schedule(std::vector<FiscalImpulse>& impulses, const Config::Entry& e,
                    double FiscalImpulse::* field, const std::string& origin) {
    const std::string ctx = origin + ":" + std::to_string(e.line) + " key '" + e.key + "'";
    auto at = e.value.find('@');
    if (at == std::string::npos)
        throw ConfigError(ctx + ": expected '<value> @ <quarter|first..last>'");

    const double value = parse_double(e.value.substr(0, at), ctx);
    std::string range = e.value.substr(at + 1);
    range.erase(std::remove_if(range.begin(), range.end(), ::isspace), range.end());

    int first, last;
    auto dots = range.find("..");
    if (dots == std::string::npos) {
        first = last = parse_int(range, ctx);
    } else {
        first = parse_int(range.substr(0, dots), ctx);
        last = parse_int(range.substr(dots + 2), ctx);
    }
    if (first < 0 || last < first)
        throw ConfigError(ctx + ": bad quarter range " + range);

    if (static_cast<int>(impulses.size()) <= last) impulses.resize(last + 1);
    for (int t = first; t <= last; ++t) impulses[t].*field += value;
}

DebtEvent::Flavor parse_flavor(const std::string& v, const std::string& ctx) {
    if (v == "PSI" || v == "psi") return DebtEvent::Flavor::PSI;
    if (v == "OSI" || v == "osi") return DebtEvent::Flavor::OSI;
    if (v == "MKT" || v == "mkt") return DebtEvent::Flavor::MKT;
    throw ConfigError(ctx + ": unknown debt-event flavor '" + v + "' (expected PSI/OSI/MKT)");
}

} // namespace

Scenario load_scenario(const std::string& path) {
    return load_scenario(Config::parse_file(path));
}

Scenario load_scenario(const Config& cfg) {
    Scenario sc;
    const std::string& origin = cfg.origin();

    const auto& meta = cfg.require("scenario");
    check_keys(meta, {"name"});
    sc.name = meta.get_string("name");

    if (const auto* s = cfg.find("impulse")) {
        check_keys(*s, {"dgc", "dgi", "dtr"});
        for (const auto& e : s->entries) {
            if (e.key == "dgc") apply_schedule(sc.impulses, e, &FiscalImpulse::dgc, origin);
            else if (e.key == "dgi") apply_schedule(sc.impulses, e, &FiscalImpulse::dgi, origin);
            else apply_schedule(sc.impulses, e, &FiscalImpulse::dtr, origin);
        }
    }

    if (const auto* s = cfg.find("fx")) {
        check_keys(*s, {"mode", "crawl_rate_annual", "crawl_rate_q", "deval_quarter",
                        "deval_size"});
        const std::string mode = s->get_string("mode", "fixed");
        if (mode == "fixed") {
            sc.fx.mode = FxConfig::Mode::Fixed;
        } else if (mode == "crawl") {
            sc.fx.mode = FxConfig::Mode::Crawl;
            if (s->has("crawl_rate_q"))
                sc.fx.crawl_rate_q = s->get_double("crawl_rate_q");
            else
                sc.fx.crawl_rate_q =
                    std::pow(1.0 + s->get_double("crawl_rate_annual"), 0.25) - 1.0;
        } else {
            throw ConfigError(origin + ": fx mode must be 'fixed' or 'crawl', got '" +
                              mode + "'");
        }
        sc.fx.deval_quarter = s->get_int("deval_quarter", -1);
        sc.fx.deval_size = s->get_double("deval_size", 0.0);
    }

    for (const auto* s : cfg.find_all("debt_event")) {
        check_keys(*s, {"quarter", "haircut", "rate_relief", "flavor"});
        DebtEvent ev;
        ev.quarter = s->get_int("quarter");
        ev.haircut = s->get_double("haircut", 0.0);
        ev.rate_relief = s->get_double("rate_relief", 0.0);
        ev.flavor = parse_flavor(s->get_string("flavor"), origin);
        sc.debt_events.push_back(ev);
    }

    if (const auto* s = cfg.find("ifi")) {
        check_keys(*s, {"start", "duration", "injection", "cred_gain"});
        IfiProgram ifi;
        ifi.start = s->get_int("start");
        ifi.duration = s->get_int("duration");
        ifi.injection = s->get_double("injection");
        ifi.cred_gain = s->get_double("cred_gain", 0.0);
        sc.ifi = ifi;
    }

    if (const auto* s = cfg.find("lvt")) {
        check_keys(*s, {"start", "d_tau", "cred_gain"});
        LvtReform lvt;
        lvt.start = s->get_int("start");
        lvt.d_tau = s->get_double("d_tau");
        lvt.cred_gain = s->get_double("cred_gain", 0.0);
        sc.lvt = lvt;
    }

    if (const auto* s = cfg.find("cfm")) {
        check_keys(*s, {"start", "duration", "damping"});
        CfmWindow cfm;
        cfm.start = s->get_int("start");
        cfm.duration = s->get_int("duration");
        cfm.damping = s->get_double("damping");
        sc.cfm = cfm;
    }

    if (const auto* s = cfg.find("monetary")) {
        check_keys(*s, {"a_pi", "a_g", "smoothing"});
        if (s->has("a_pi")) sc.monetary.a_pi = s->get_double("a_pi");
        if (s->has("a_g")) sc.monetary.a_g = s->get_double("a_g");
        if (s->has("smoothing")) sc.monetary.smoothing = s->get_double("smoothing");
    }

    if (const auto* s = cfg.find("lambda_fx_shift")) {
        check_keys(*s, {"quarter", "value"});
        LambdaFxShift shift;
        shift.quarter = s->get_int("quarter");
        shift.value = s->get_double("value");
        sc.lambda_fx_shift = shift;
    }

    return sc;
}

std::vector<std::string> Scenario::validate(int horizon) const {
    std::vector<std::string> out;
    auto bad = [&out](const std::string& msg) { out.push_back(msg); };
    auto in_horizon = [&](int q, const std::string& what) {
        if (q < 0 || q >= horizon) {
            std::ostringstream os;
            os << what << " quarter " << q << " outside [0," << horizon << ")";
            bad(os.str());
        }
    };

    if (name.empty()) bad("scenario name is empty");

    if (static_cast<int>(impulses.size()) > horizon) {
        std::ostringstream os;
        os << "impulse schedule extends to quarter " << impulses.size() - 1
           << ", beyond horizon " << horizon;
        bad(os.str());
    }
    for (size_t t = 0; t < impulses.size(); ++t) {
        const auto& im = impulses[t];
        for (double v : {im.dgc, im.dgi, im.dtr}) {
            if (!std::isfinite(v) || std::fabs(v) > 0.25) {
                std::ostringstream os;
                os << "impulse at quarter " << t << " outside sanity bound |x| <= 0.25";
                bad(os.str());
                break;
            }
        }
    }

    if (fx.crawl_rate_q < 0.0) bad("crawl rate must be >= 0");
    if (fx.deval_quarter >= 0) {
        in_horizon(fx.deval_quarter, "devaluation");
        if (fx.deval_size <= 0.0) bad("scheduled devaluation must have size > 0");
    }

    for (const auto& ev : debt_events) {
        in_horizon(ev.quarter, "debt event");
        if (!(ev.haircut >= 0.0 && ev.haircut < 1.0)) bad("haircut must be in [0,1)");
        if (ev.rate_relief < 0.0) bad("rate relief must be >= 0");
    }

    if (ifi) {
        in_horizon(ifi->start, "IFI start");
        if (ifi->duration <= 0) bad("IFI duration must be > 0");
        if (ifi->injection < 0.0) bad("IFI injection must be >= 0");
    }
    if (lvt) {
        in_horizon(lvt->start, "LVT start");
        if (lvt->d_tau < 0.0) bad("LVT d_tau must be >= 0");
    }
    if (cfm) {
        in_horizon(cfm->start, "CFM start");
        if (cfm->duration <= 0) bad("CFM duration must be > 0");
        if (!(cfm->damping > 0.0 && cfm->damping < 1.0)) bad("CFM damping must be in (0,1)");
    }
    if (lambda_fx_shift) {
        in_horizon(lambda_fx_shift->quarter, "lambda_fx shift");
        if (!(lambda_fx_shift->value >= 0.0 && lambda_fx_shift->value <= 1.0))
            bad("lambda_fx shift value must be in [0,1]");
    }

    return out;
}

std::vector<Scenario> load_scenario_set(const std::string& path) {
    const Config cfg = Config::parse_file(path);
    const auto& sec = cfg.require("scenario_set");
    check_keys(sec, {"scenario"});

    const auto base = std::filesystem::path(path).parent_path();
    std::vector<Scenario> out;
    for (const auto* e : sec.find_all("scenario")) {
        std::filesystem::path p(e->value);
        if (p.is_relative()) p = base / p;
        out.push_back(load_scenario(p.string()));
    }
    if (out.empty())
        throw ConfigError(path + ": scenario set lists no scenarios");
    return out;
}

} // namespace soesim
