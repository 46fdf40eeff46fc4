#include "gamelab/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "gamelab/equilibrium.hpp"
#include "gamelab/exact.hpp"
#include "gamelab/rng.hpp"

namespace gamelab {

void ExperimentSpec::validate() const {
  if (grid.empty()) throw std::invalid_argument("empty grid");
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  if (!metrics.any()) throw std::invalid_argument("no metrics requested");
  for (const GridPoint& g : grid) {
    GameParams prm{g.k_a, g.k_b, g.p, 0};
    prm.validate();
    if (metrics.pne_count &&
        static_cast<long long>(g.k_a) * g.k_b > kDenseCellBudget)
      throw std::invalid_argument("pne_count requires a dense game over budget");
  }
}

void PointStats::merge(const PointStats& other) {
  n_trials += other.n_trials;
  converged_count += other.converged_count;
  if (tau_hist.size() < other.tau_hist.size())
    tau_hist.resize(other.tau_hist.size(), 0);
  for (std::size_t i = 0; i < other.tau_hist.size(); ++i)
    tau_hist[i] += other.tau_hist[i];
  tau_sum += other.tau_sum;
  tau_sum_sq += other.tau_sum_sq;
  tau_cycle_sum += other.tau_cycle_sum;
  reveals_sum += other.reveals_sum;
  if (w_hist.size() < other.w_hist.size())
    w_hist.resize(other.w_hist.size(), 0);
  for (std::size_t i = 0; i < other.w_hist.size(); ++i)
    w_hist[i] += other.w_hist[i];
  w_sum += other.w_sum;
  w_sum_sq += other.w_sum_sq;
  runtime_s += other.runtime_s;
}

double PointStats::converged_fraction() const {
  return n_trials ? static_cast<double>(converged_count) / n_trials : 0.0;
}

double PointStats::converged_ci_radius() const {
  return binomial_ci_radius(converged_fraction(), n_trials);
}

double PointStats::tau_mean() const {
  return converged_count ? static_cast<double>(tau_sum) / converged_count : 0.0;
}

double PointStats::tau_variance() const {
  if (!converged_count) return 0.0;
  const double m = tau_mean();
  return static_cast<double>(tau_sum_sq) / converged_count - m * m;
}

double PointStats::w_mean() const {
  return n_trials ? static_cast<double>(w_sum) / n_trials : 0.0;
}

double PointStats::w_variance() const {
  if (!n_trials) return 0.0;
  const double m = w_mean();
  return static_cast<double>(w_sum_sq) / n_trials - m * m;
}

double PointStats::w_median() const {
  long long seen = 0;
  const long long half = (n_trials + 1) / 2;
  for (std::size_t w = 0; w < w_hist.size(); ++w) {
    seen += w_hist[w];
    if (seen >= half) return static_cast<double>(w);
  }
  return 0.0;
}

namespace {

void accumulate_trial(PointStats& acc, const GridPoint& g,
                      const Metrics& metrics, std::uint64_t seed) {
  const GameParams params{g.k_a, g.k_b, g.p, seed};
  ++acc.n_trials;
  if (metrics.pne_count) {
    const DenseGame game = generate_dense(params);
    const long long w = count_pne(game);
    ++acc.w_hist[static_cast<std::size_t>(w)];
    acc.w_sum += w;
    acc.w_sum_sq += w * w;
  }
  if (metrics.wants_brd()) {
    const BrdTrace tr = run_brd(params);
    if (tr.result == BrdResult::ConvergedToPne) {
      ++acc.converged_count;
      ++acc.tau_hist[static_cast<std::size_t>(tr.tau_ne)];
      acc.tau_sum += tr.tau_ne;
      acc.tau_sum_sq += static_cast<long long>(tr.tau_ne) * tr.tau_ne;
    } else {
      acc.tau_cycle_sum += tr.tau_cycle;
    }
    acc.reveals_sum += tr.reveals_total;
  }
}

PointStats fresh_point(const GridPoint& g, const Metrics& metrics) {
  PointStats acc;
  acc.point = g;
  const int k_min = std::min(g.k_a, g.k_b);
  if (metrics.wants_brd())
    acc.tau_hist.assign(static_cast<std::size_t>(2) * k_min, 0);
  if (metrics.pne_count)
    acc.w_hist.assign(static_cast<std::size_t>(k_min) + 1, 0);
  return acc;
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

SummaryStats run_experiment(const ExperimentSpec& spec, int threads) {
  spec.validate();
  const int n_workers = resolve_threads(threads);
  SummaryStats out;
  out.spec = spec;
  out.points.reserve(spec.grid.size());

  for (std::size_t gi = 0; gi < spec.grid.size(); ++gi) {
    const GridPoint& g = spec.grid[gi];
    const auto start = std::chrono::steady_clock::now();
    PointStats total = fresh_point(g, spec.metrics);

    std::atomic<long long> next{0};
    std::vector<PointStats> partial(static_cast<std::size_t>(n_workers));
    std::vector<std::thread> pool;
    auto work = [&](int w) {
      PointStats acc = fresh_point(g, spec.metrics);
      constexpr long long kChunk = 64;
      for (;;) {
        const long long lo = next.fetch_add(kChunk);
        if (lo >= spec.trials) break;
        const long long hi = std::min(lo + kChunk, spec.trials);
        for (long long tj = lo; tj < hi; ++tj)
          accumulate_trial(acc, g, spec.metrics,
                           derive_seed(spec.base_seed, gi,
                                       static_cast<std::uint64_t>(tj)));
      }
      partial[static_cast<std::size_t>(w)] = std::move(acc);
    };
    if (n_workers == 1) {
      work(0);
    } else {
      pool.reserve(static_cast<std::size_t>(n_workers));
      for (int w = 0; w < n_workers; ++w) pool.emplace_back(work, w);
      for (std::thread& th : pool) th.join();
    }
    for (const PointStats& part : partial) total.merge(part);
    total.runtime_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    out.points.push_back(std::move(total));
  }
  return out;
}

std::vector<PhaseRow> phase_sweep(int k, const std::vector<double>& p_values,
                                  long long trials, std::uint64_t base_seed,
                                  int threads) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  ExperimentSpec spec;
  spec.trials = trials;
  spec.base_seed = base_seed;
  spec.metrics.tau_ne = spec.metrics.converged = true;
  for (double p : p_values) spec.grid.push_back({k, k, p});
  const SummaryStats stats = run_experiment(spec, threads);

  const std::pair<std::string, long long> ells[] = {
      {"log", static_cast<long long>(std::ceil(std::log(k)))},
      {"sqrt", static_cast<long long>(std::ceil(std::sqrt(k)))},
      {"full", 2LL * k - 1}};
  std::vector<PhaseRow> rows;
  for (const PointStats& pt : stats.points) {
    for (const auto& [name, ell] : ells) {
      long long exceed = pt.n_trials - pt.converged_count;
      for (std::size_t t = 0; t < pt.tau_hist.size(); ++t)
        if (static_cast<long long>(t) > ell) exceed += pt.tau_hist[t];
      PhaseRow row;
      row.p = pt.point.p;
      row.ell_name = name;
      row.ell = ell;
      row.estimate = static_cast<double>(exceed) / pt.n_trials;
      row.ci_radius = binomial_ci_radius(row.estimate, pt.n_trials);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

GofResult compare_empirical_exact(int k, long long trials,
                                  std::uint64_t base_seed, int threads) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  ExperimentSpec spec;
  spec.grid.push_back({k, k, 1.0});
  spec.trials = trials;
  spec.base_seed = base_seed;
  spec.metrics.tau_ne = true;
  const SummaryStats stats = run_experiment(spec, threads);
  const PointStats& pt = stats.points.front();
  if (pt.converged_count != pt.n_trials)
    throw std::logic_error("p=1 trial trapped");

  const TauDistribution dist = tau_distribution(k, k);
  std::vector<double> pmf(pt.tau_hist.size());
  for (std::size_t t = 0; t < pmf.size(); ++t) pmf[t] = dist.pmf(t);
  return chi_square_gof(pt.tau_hist, pmf);
}

}  // namespace gamelab
