#pragma once

#include <string>
#include <vector>

#include "soesim/stats.hpp"

namespace soesim {

// CSV emitters. Schemas are documented in docs/formats.md; re-running with
// identical inputs produces byte-identical files. All emitters validate the
// stats list up front and write no partial files on invalid input; I/O
// failures surface as std::runtime_error carrying the path.

// summary_T40.csv, trajectories.csv, ranking_welfare.csv.
void emit_tables(const std::vector<EnsembleStats>& stats, const std::string& out_dir);

// fig1_gdp_vs_debt.csv, fig2_welfare_vs_debt.csv, fig3_debt_ranking.csv.
// Values are identical to the summary table (single source of truth).
void emit_plot_data(const std::vector<EnsembleStats>& stats, const std::string& out_dir);

// Fixed numeric formatting shared by all emitters.
std::string format_value(double v);

} // namespace soesim
