#include "soesim/rng.hpp"

#include <cmath>
#include <numbers>

#include "soesim/config.hpp"
#include "soesim/params.hpp"

namespace soesim {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// FNV-1a over the label bytes; keeps stream identities stable across builds.
std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

} // namespace

std::uint64_t mix64(std::uint64_t x) {
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

RngStream::RngStream(const SeedSpec& seed, std::string_view label, int quarter) {
    std::uint64_t k = mix64(seed.master_seed ^ fnv1a(label));
    k = mix64(k + seed.path_index * kGolden);
    k = mix64(k ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(quarter)) + 1) * kGolden);
    key_ = k;
}

std::uint64_t RngStream::next_u64() {
    return mix64(key_ + (counter_++) * kGolden);
}

double RngStream::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_normal() {
    // Box-Muller; u1 shifted into (0,1] so the log is always finite.
    double u1 = 1.0 - next_unit();
    double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double RngStream::student_t(double dof, double scale) {
    if (dof == 0.0) return scale * next_normal();
    if (!(dof > 2.0))
        throw ConfigError("student_t: degrees of freedom must be 0 (gaussian) or > 2");
    if (scale == 0.0) return 0.0;

    // Bailey's polar method: exact Student-t from a rejection-sampled point
    // in the unit disc.
    double u, v, w;
    do {
        u = 2.0 * next_unit() - 1.0;
        v = 2.0 * next_unit() - 1.0;
        w = u * u + v * v;
    } while (w >= 1.0 || w == 0.0);
    const double t = u * std::sqrt(dof * (std::pow(w, -2.0 / dof) - 1.0) / w);
    return scale * t;
}

double RngStream::draw(const ShockDist& dist) {
    return student_t(dist.dof, dist.scale);
}

double student_t_draw(RngStream& stream, double dof, double scale) {
    return stream.student_t(dof, scale);
}

double global_shock_step(double z, RngStream& stream, const Params& p) {
    return p.shocks.rho_z * z + stream.draw(p.shocks.global);
}

Multipliers draw_multipliers(int regime_index, RngStream& stream, const Params& p,
                             int* floor_hits) {
    const auto& mp = p.multipliers;
    auto one = [&](Instrument inst) {
        const double mean = mp.mean[static_cast<int>(inst)][regime_index];
        const double v = mean + stream.student_t(mp.noise_dof, mp.noise_scale);
        if (v < 0.0) {
            if (floor_hits) ++*floor_hits;
            return 0.0;
        }
        return v;
    };
    Multipliers mu;
    mu.gc = one(Instrument::GC);
    mu.tr = one(Instrument::TR);
    mu.gi = one(Instrument::GI);
    return mu;
}

ShockDraws quarter_shocks(const SeedSpec& seed, int t, const Params& p) {
    // One labeled stream per family per quarter: adding a family can never
    // perturb the sequences of the existing ones.
    ShockDraws d;
    d.demand = RngStream(seed, "demand", t).draw(p.shocks.demand);
    d.inflation = RngStream(seed, "inflation", t).draw(p.shocks.inflation);
    d.current_account = RngStream(seed, "current_account", t).draw(p.shocks.current_account);
    d.capital_account = RngStream(seed, "capital_account", t).draw(p.shocks.capital_account);
    d.fx_gap = RngStream(seed, "fx_gap", t).draw(p.shocks.fx_gap);
    d.employment = RngStream(seed, "employment", t).draw(p.shocks.employment);
    d.gini = RngStream(seed, "gini", t).draw(p.shocks.gini);
    d.global = RngStream(seed, "global", t).draw(p.shocks.global);
    return d;
}

} // namespace soesim
