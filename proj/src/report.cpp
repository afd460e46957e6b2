#include "soesim/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace soesim {

namespace {

void ensure_valid(const std::vector<EnsembleStats>& stats) {
    if (stats.empty())
        throw std::invalid_argument("no ensemble statistics to emit");
    for (const auto& s : stats) {
        if (s.paths_used() < 1)
            throw std::invalid_argument("scenario '" + s.scenario + "' has no usable paths");
    }
}

std::ofstream open_out(const std::string& dir, const std::string& name) {
    std::filesystem::create_directories(dir);
    const std::string path = (std::filesystem::path(dir) / name).string();
    std::ofstream out(path, std::ios::binary); // '\n' endings on every platform
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

std::string quantile_label(double q) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "p%g", 100.0 * q);
    return buf;
}

} // namespace

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void emit_tables(const std::vector<EnsembleStats>& stats, const std::string& out_dir) {
    ensure_valid(stats);

    const auto by_debt = rank_strategies(stats, RankKey::DebtAscending);
    {
        auto out = open_out(out_dir, "summary_T40.csv");
        out << "scenario,gdp_med,debt_med,welfare_med,reserves_med,paths_used,paths_aborted\n";
        for (const auto& s : by_debt) {
            out << s.scenario << ',' << format_value(s.gdp_med) << ','
                << format_value(s.debt_med) << ',' << format_value(s.welfare_med) << ','
                << format_value(s.reserves_med) << ',' << s.paths_used() << ','
                << s.paths_aborted << '\n';
        }
        if (!out) throw std::runtime_error("write failed: " + out_dir + "/summary_T40.csv");
    }

    {
        auto out = open_out(out_dir, "trajectories.csv");
        out << "scenario,variable,quarter,quantile,value\n";
        for (const auto& s : by_debt) {
            for (const auto& var : trajectory_variables()) {
                const auto& grid = s.series.at(var);
                for (int t = 0; t <= s.horizon; ++t) {
                    for (size_t qi = 0; qi < s.qs.size(); ++qi) {
                        out << s.scenario << ',' << var << ',' << t << ','
                            << quantile_label(s.qs[qi]) << ','
                            << format_value(grid[t][qi]) << '\n';
                    }
                }
            }
        }
        if (!out) throw std::runtime_error("write failed: " + out_dir + "/trajectories.csv");
    }

    {
        const auto by_welfare = rank_strategies(stats, RankKey::WelfareDescending);
        auto out = open_out(out_dir, "ranking_welfare.csv");
        out << "rank,scenario,welfare_med,gdp_med,debt_med,reserves_med\n";
        int rank = 1;
        for (const auto& s : by_welfare) {
            out << rank++ << ',' << s.scenario << ',' << format_value(s.welfare_med) << ','
                << format_value(s.gdp_med) << ',' << format_value(s.debt_med) << ','
                << format_value(s.reserves_med) << '\n';
        }
        if (!out) throw std::runtime_error("write failed: " + out_dir + "/ranking_welfare.csv");
    }
}

void emit_plot_data(const std::vector<EnsembleStats>& stats, const std::string& out_dir) {
    ensure_valid(stats);
    const auto by_debt = rank_strategies(stats, RankKey::DebtAscending);

    {
        auto out = open_out(out_dir, "fig1_gdp_vs_debt.csv");
        out << "scenario,debt_med,gdp_med\n";
        for (const auto& s : by_debt)
            out << s.scenario << ',' << format_value(s.debt_med) << ','
                << format_value(s.gdp_med) << '\n';
        if (!out) throw std::runtime_error("write failed: " + out_dir + "/fig1_gdp_vs_debt.csv");
    }
    {
        auto out = open_out(out_dir, "fig2_welfare_vs_debt.csv");
        out << "scenario,debt_med,welfare_med\n";
        for (const auto& s : by_debt)
            out << s.scenario << ',' << format_value(s.debt_med) << ','
                << format_value(s.welfare_med) << '\n';
        if (!out) throw std::runtime_error("write failed: " + out_dir + "/fig2_welfare_vs_debt.csv");
    }
    {
        auto out = open_out(out_dir, "fig3_debt_ranking.csv");
        out << "scenario,debt_med\n";
        for (const auto& s : by_debt)
            out << s.scenario << ',' << format_value(s.debt_med) << '\n';
        if (!out) throw std::runtime_error("write failed: " + out_dir + "/fig3_debt_ranking.csv");
    }
}

} // namespace soesim
