#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gamelab/brd.hpp"
#include "gamelab/game.hpp"
#include "gamelab/stats.hpp"

namespace gamelab {

struct GridPoint {
  int k_a = 1;
  int k_b = 1;
  double p = 0.0;
};

struct Metrics {
  bool pne_count = false;
  bool tau_ne = false;
  bool converged = false;
  bool tau_cycle = false;
  bool reveals_total = false;

  bool wants_brd() const {
    return tau_ne || converged || tau_cycle || reveals_total;
  }
  bool any() const { return pne_count || wants_brd(); }
};

// Monte Carlo sweep description. Trial j of grid point i always runs the game
// seeded derive_seed(base_seed, i, j), so results are bit-reproducible and
// independent of worker scheduling.
struct ExperimentSpec {
  std::vector<GridPoint> grid;
  long long trials = 0;
  std::uint64_t base_seed = 0;
  Metrics metrics;
  bool retain_traces = false;

  void validate() const;
};

// Per-grid-point aggregates. Only integer accumulators are merged across
// workers, so the merge is exact and order-insensitive; every derived
// statistic is computed from the merged integers.
struct PointStats {
  GridPoint point;
  long long n_trials = 0;

  long long converged_count = 0;
  std::vector<long long> tau_hist;  // tau_ne of converged trials
  long long tau_sum = 0;
  long long tau_sum_sq = 0;
  long long tau_cycle_sum = 0;  // over trapped trials
  unsigned long long reveals_sum = 0;

  std::vector<long long> w_hist;  // PNE count, support 0..min(k_a,k_b)
  long long w_sum = 0;
  long long w_sum_sq = 0;

  double runtime_s = 0.0;  // wall clock; excluded from reproducibility

  void merge(const PointStats& other);

  double converged_fraction() const;
  double converged_ci_radius() const;  // 3 sigma
  double tau_mean() const;             // over converged trials
  double tau_variance() const;
  double w_mean() const;
  double w_variance() const;
  double w_median() const;  // from the histogram, lower median
};

struct SummaryStats {
  ExperimentSpec spec;
  std::vector<PointStats> points;
};

// threads = 0 selects hardware_concurrency().
SummaryStats run_experiment(const ExperimentSpec& spec, int threads = 0);

// Empirical P(tau_ne > ell) for ell in {ceil(ln K), ceil(sqrt K), 2K-1},
// per p; non-convergence counts as exceeding every ell.
struct PhaseRow {
  double p = 0.0;
  std::string ell_name;
  long long ell = 0;
  double estimate = 0.0;
  double ci_radius = 0.0;
};

std::vector<PhaseRow> phase_sweep(int k, const std::vector<double>& p_values,
                                  long long trials, std::uint64_t base_seed,
                                  int threads = 0);

// Chi-square between the empirical tau_ne histogram at p=1 and the exact
// survival-product pmf, cells pooled to expected count >= 5.
GofResult compare_empirical_exact(int k, long long trials,
                                  std::uint64_t base_seed, int threads = 0);

}  // namespace gamelab
