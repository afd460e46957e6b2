#pragma once

#include <map>
#include <string>
#include <vector>

#include "soesim/engine.hpp"

namespace soesim {

// Order statistics with linear interpolation between closest ranks:
// h = (n-1)*q, result = x[floor(h)] + frac(h) * (x[floor(h)+1] - x[floor(h)]).
// Throws std::invalid_argument on empty input or q outside [0,1].
std::vector<double> quantiles(std::vector<double> values, const std::vector<double>& qs);

double median(std::vector<double> values);

// Variables recorded per quarter in trajectory statistics, keyed by the
// column name used in emitted files.
const std::vector<std::string>& trajectory_variables();

double extract_variable(const StateVector& s, const std::string& variable);

// Cross-path quantile summary of one scenario's ensemble. Aborted paths are
// excluded from every statistic; their count is carried alongside.
struct EnsembleStats {
    std::string scenario;
    int paths_total = 0;
    int paths_aborted = 0;
    int horizon = 0;
    std::vector<double> qs; // quantile probabilities, ascending

    // variable -> [quarter][quantile index]
    std::map<std::string, std::vector<std::vector<double>>> series;

    // Medians at the final quarter, scaled for reporting: GDP index, debt and
    // reserves in percent of GDP, welfare raw.
    double gdp_med = 0.0;
    double debt_med = 0.0;
    double welfare_med = 0.0;
    double reserves_med = 0.0;

    int paths_used() const { return paths_total - paths_aborted; }
};

// Builds the quantile summary from an ensemble. Throws std::invalid_argument
// if no path survives.
EnsembleStats summarize(const std::string& scenario_name,
                        const std::vector<PathResult>& paths,
                        const std::vector<double>& qs = {0.05, 0.25, 0.5, 0.75, 0.95});

enum class RankKey { DebtAscending, WelfareDescending };

// Sorted copy of the stats (a permutation: nothing dropped or duplicated).
// Ties break by scenario name for determinism.
std::vector<EnsembleStats> rank_strategies(std::vector<EnsembleStats> stats, RankKey key);

} // namespace soesim
