#include "soesim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace soesim {

std::vector<double> quantiles(std::vector<double> values, const std::vector<double>& qs) {
    if (values.empty())
        throw std::invalid_argument("quantiles: empty input");
    for (double q : qs)
        if (!(q >= 0.0 && q <= 1.0))
            throw std::invalid_argument("quantiles: probability outside [0,1]");

    std::sort(values.begin(), values.end());
    const size_t n = values.size();

    std::vector<double> out;
    out.reserve(qs.size());
    for (double q : qs) {
        const double h = static_cast<double>(n - 1) * q;
        const size_t lo = static_cast<size_t>(h);
        const size_t hi = std::min(lo + 1, n - 1);
        const double frac = h - static_cast<double>(lo);
        out.push_back(values[lo] + frac * (values[hi] - values[lo]));
    }
    return out;
}

double median(std::vector<double> values) {
    return quantiles(std::move(values), {0.5})[0];
}

const std::vector<std::string>& trajectory_variables() {
    static const std::vector<std::string> vars = {
        "gdp", "debt", "welfare", "reserves", "inflation", "fx_gap",
        "employment", "gini", "unrest", "risk_premium", "effective_rate",
        "primary_deficit"};
    return vars;
}

double extract_variable(const StateVector& s, const std::string& variable) {
    if (variable == "gdp") return s.Y;
    if (variable == "debt") return s.b;
    if (variable == "welfare") return s.W;
    if (variable == "reserves") return s.R;
    if (variable == "inflation") return s.pi;
    if (variable == "fx_gap") return s.gap_ratio();
    if (variable == "employment") return s.E;
    if (variable == "gini") return s.Gini;
    if (variable == "unrest") return s.Unrest;
    if (variable == "risk_premium") return s.rp;
    if (variable == "effective_rate") return s.r_eff;
    if (variable == "primary_deficit") return s.pd;
    throw std::invalid_argument("unknown trajectory variable: " + variable);
}

EnsembleStats summarize(const std::string& scenario_name,
                        const std::vector<PathResult>& paths,
                        const std::vector<double>& qs) {
    EnsembleStats st;
    st.scenario = scenario_name;
    st.paths_total = static_cast<int>(paths.size());
    st.qs = qs;
    if (!std::is_sorted(st.qs.begin(), st.qs.end()))
        std::sort(st.qs.begin(), st.qs.end());

    std::vector<const PathResult*> used;
    for (const auto& p : paths) {
        if (p.aborted) ++st.paths_aborted;
        else used.push_back(&p);
    }
    if (used.empty())
        throw std::invalid_argument("summarize: every path of scenario '" +
                                    scenario_name + "' aborted");

    st.horizon = static_cast<int>(used.front()->quarters.size()) - 1;

    std::vector<double> column;
    column.reserve(used.size());
    for (const auto& var : trajectory_variables()) {
        auto& grid = st.series[var];
        grid.resize(st.horizon + 1);
        for (int t = 0; t <= st.horizon; ++t) {
            column.clear();
            for (const PathResult* p : used)
                column.push_back(extract_variable(p->quarters[t].state, var));
            grid[t] = quantiles(column, st.qs);
        }
    }

    auto final_median = [&](const std::string& var) {
        std::vector<double> v;
        v.reserve(used.size());
        for (const PathResult* p : used)
            v.push_back(extract_variable(p->quarters[st.horizon].state, var));
        return median(std::move(v));
    };
    st.gdp_med = final_median("gdp");
    st.debt_med = 100.0 * final_median("debt");
    st.welfare_med = final_median("welfare");
    st.reserves_med = 100.0 * final_median("reserves");

    return st;
}

std::vector<EnsembleStats> rank_strategies(std::vector<EnsembleStats> stats, RankKey key) {
    auto by_name = [](const EnsembleStats& a, const EnsembleStats& b) {
        return a.scenario < b.scenario;
    };
    std::stable_sort(stats.begin(), stats.end(), by_name);
    std::stable_sort(stats.begin(), stats.end(),
                     [key](const EnsembleStats& a, const EnsembleStats& b) {
                         if (key == RankKey::DebtAscending) return a.debt_med < b.debt_med;
                         return a.welfare_med > b.welfare_med;
                     });
    return stats;
}

} // namespace soesim
