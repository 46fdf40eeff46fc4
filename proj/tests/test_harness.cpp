#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gamelab/exact.hpp"
#include "gamelab/harness.hpp"

using namespace gamelab;

namespace {

bool same_integers(const PointStats& x, const PointStats& y) {
  return x.n_trials == y.n_trials && x.converged_count == y.converged_count &&
         x.tau_hist == y.tau_hist && x.tau_sum == y.tau_sum &&
         x.tau_sum_sq == y.tau_sum_sq && x.tau_cycle_sum == y.tau_cycle_sum &&
         x.reveals_sum == y.reveals_sum && x.w_hist == y.w_hist &&
         x.w_sum == y.w_sum && x.w_sum_sq == y.w_sum_sq;
}

}  // namespace

TEST_CASE("spec validation") {
  ExperimentSpec spec;
  spec.trials = 10;
  spec.metrics.converged = true;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);  // empty grid
  spec.grid.push_back({3, 3, 0.5});
  CHECK_NOTHROW(spec.validate());
  spec.trials = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.trials = 10;
  spec.metrics = {};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);  // no metrics
  spec.metrics.pne_count = true;
  spec.grid.push_back({100000, 100000, 0.0});
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);  // over budget
}

TEST_CASE("worker count never changes the integer accumulators") {
  ExperimentSpec spec;
  spec.grid = {{3, 3, 0.5}, {4, 2, 1.0}};
  spec.trials = 500;
  spec.base_seed = 99;
  spec.metrics.pne_count = spec.metrics.tau_ne = spec.metrics.converged =
      spec.metrics.tau_cycle = spec.metrics.reveals_total = true;
  const SummaryStats one = run_experiment(spec, 1);
  const SummaryStats four = run_experiment(spec, 4);
  REQUIRE(one.points.size() == 2);
  REQUIRE(four.points.size() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    CHECK(same_integers(one.points[i], four.points[i]));
}

TEST_CASE("converged and trapped fractions are complementary") {
  ExperimentSpec spec;
  spec.grid = {{8, 8, 0.0}};
  spec.trials = 5000;
  spec.base_seed = 5;
  spec.metrics.tau_ne = true;
  const SummaryStats stats = run_experiment(spec, 1);
  const PointStats& pt = stats.points.front();
  CHECK(pt.n_trials == 5000);
  long long tau_mass = 0;
  for (long long c : pt.tau_hist) tau_mass += c;
  CHECK(tau_mass == pt.converged_count);
  CHECK(pt.converged_fraction() >= 0.0);
  CHECK(pt.converged_fraction() <= 1.0);
}

TEST_CASE("mean W over (2,2,1) matches 4/3 within 3 sigma") {
  ExperimentSpec spec;
  spec.grid = {{2, 2, 1.0}};
  spec.trials = 100000;
  spec.base_seed = 41;
  spec.metrics.pne_count = true;
  const SummaryStats stats = run_experiment(spec);
  const PointStats& pt = stats.points.front();
  const double se = std::sqrt(pt.w_variance() / pt.n_trials);
  CHECK(std::abs(pt.w_mean() - 4.0 / 3.0) <= 3.0 * se);
}

TEST_CASE("phase sweep identities and monotonicity") {
  const auto rows = phase_sweep(16, {0.0, 0.5, 1.0}, 4000, 7, 0);
  REQUIRE(rows.size() == 9);
  double prev_full = 2.0;
  for (const PhaseRow& row : rows) {
    if (row.ell_name == "full") {
      if (row.p == 1.0) CHECK(row.estimate == 0.0);  // tau <= 2K-1 always
      CHECK(row.estimate <= prev_full + 3.0 * row.ci_radius + 0.02);
      prev_full = row.estimate;
    }
    CHECK(row.estimate >= 0.0);
    CHECK(row.estimate <= 1.0);
  }
}

TEST_CASE("empirical tau distribution matches the exact pmf at p=1") {
  const GofResult res = compare_empirical_exact(16, 20000, 2718);
  CHECK(res.p_value > 0.01);
}

TEST_CASE("point hazards at K=2: P(tau=0)=1/3 and q1=1/2") {
  ExperimentSpec spec;
  spec.grid = {{2, 2, 1.0}};
  spec.trials = 100000;
  spec.base_seed = 314;
  spec.metrics.tau_ne = true;
  const SummaryStats stats = run_experiment(spec);
  const PointStats& pt = stats.points.front();
  REQUIRE(pt.converged_count == pt.n_trials);  // p=1 always converges
  const double n = static_cast<double>(pt.n_trials);
  const double p0 = pt.tau_hist[0] / n;
  CHECK(std::abs(p0 - 1.0 / 3.0) <= binomial_ci_radius(1.0 / 3.0, pt.n_trials));
  const long long later = pt.n_trials - pt.tau_hist[0];
  const double q1 = static_cast<double>(pt.tau_hist[1]) / later;
  CHECK(std::abs(q1 - 0.5) <= binomial_ci_radius(0.5, later));
}

TEST_CASE("W is Poisson(1)-like at p=0, K=64") {
  ExperimentSpec spec;
  spec.grid = {{64, 64, 0.0}};
  spec.trials = 20000;
  spec.base_seed = 1729;
  spec.metrics.pne_count = true;
  const SummaryStats stats = run_experiment(spec);
  const PointStats& pt = stats.points.front();
  std::vector<double> pmf(pt.w_hist.size(), 0.0);
  double fact = 1.0, mass = 0.0;
  for (std::size_t k = 0; k + 1 < pmf.size(); ++k) {
    if (k > 0) fact *= static_cast<double>(k);
    pmf[k] = std::exp(-1.0) / fact;
    mass += pmf[k];
  }
  pmf.back() = 1.0 - mass;  // tail lump
  const GofResult res = chi_square_gof(pt.w_hist, pmf);
  CHECK(res.p_value > 0.01);
}
