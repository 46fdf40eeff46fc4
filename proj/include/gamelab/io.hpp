#pragma once

#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>

#include "gamelab/brd.hpp"
#include "gamelab/equilibrium.hpp"
#include "gamelab/game.hpp"
#include "gamelab/harness.hpp"

namespace gamelab {

using nlohmann::json;

// GameParams <-> JSON {k_a, k_b, p, seed}.
void to_json(json& j, const GameParams& params);
void from_json(const json& j, GameParams& params);

// Dense games travel as a CSV/JSON pair: params in JSON, payoffs in CSV with
// header "a,b,u_a,u_b", row-major, %.17g so values round-trip exactly.
void write_dense_csv(std::ostream& os, const DenseGame& game);
DenseGame read_dense_csv(std::istream& is, const GameParams& params);
void save_dense(const std::string& stem, const DenseGame& game);
DenseGame load_dense(const std::string& stem);

// {count, equilibria: [[a,b],...]}
json pne_report_json(const PneReport& report);

// One step per line: {t, a, b, mover, moved}.
void write_trace_jsonl(std::ostream& os, const BrdTrace& trace);
// {outcome, tau_ne, tau_r, tau_cycle, reveals_total}; infinite times are null.
json outcome_json(const BrdTrace& trace);

// {grid: [{k_a,k_b,p},...], trials, base_seed, metrics: [...], retain_traces}
ExperimentSpec spec_from_json(const json& j);
json spec_to_json(const ExperimentSpec& spec);

json summary_json(const SummaryStats& stats);
// One row per grid point per metric: k_a,k_b,p,metric,value,ci_radius.
void write_summary_csv(std::ostream& os, const SummaryStats& stats);

}  // namespace gamelab
