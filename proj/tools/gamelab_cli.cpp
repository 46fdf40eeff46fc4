#include <CLI11.hpp>
#include <array>
#include <fstream>
#include <iostream>

#include "gamelab/exact.hpp"
#include "gamelab/io.hpp"

namespace {

using namespace gamelab;

std::ostream* open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return &std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  return &file;
}

void log_seed(std::uint64_t seed) { std::cerr << "seed=" << seed << '\n'; }

int cmd_gen(const GameParams& params, const std::string& out) {
  log_seed(params.seed);
  if (static_cast<long long>(params.k_a) * params.k_b > kDenseCellBudget)
    throw std::runtime_error("k_a*k_b exceeds the dense cell budget");
  save_dense(out, generate_dense(params));
  return 0;
}

int cmd_brd(const GameParams& params, const std::string& in,
            const std::string& trace_path, const std::string& out) {
  BrdOptions opt;
  opt.retain_steps = !trace_path.empty();
  BrdTrace trace;
  if (!in.empty()) {
    const DenseGame game = load_dense(in);
    log_seed(game.params.seed);
    trace = run_brd(game, opt);
  } else {
    log_seed(params.seed);
    trace = run_brd(params, opt);
  }
  if (!trace_path.empty()) {
    std::ofstream ts(trace_path);
    if (!ts) throw std::runtime_error("cannot write " + trace_path);
    write_trace_jsonl(ts, trace);
  }
  std::ofstream file;
  *open_out(file, out) << outcome_json(trace).dump(2) << '\n';
  return 0;
}

int cmd_count(const GameParams& params, const std::string& in,
              const std::string& out) {
  const DenseGame game = in.empty() ? generate_dense(params) : load_dense(in);
  log_seed(game.params.seed);
  const PneReport report = enumerate_pne(game);
  std::ofstream file;
  *open_out(file, out) << pne_report_json(report).dump(2) << '\n';
  return 0;
}

int cmd_exact(int ka, int kb, const std::string& out) {
  const HazardTable table = hazard(ka, kb);
  const TauDistribution dist = tau_distribution(ka, kb);
  const LimitConstants lim = limit_constants();
  const json j{{"k_a", ka},
               {"k_b", kb},
               {"q", table.q},
               {"survival", dist.survival},
               {"mean", dist.mean},
               {"variance", dist.variance},
               {"limit",
                {{"mean", lim.mean_limit},
                 {"variance", lim.variance_limit},
                 {"phi_component", lim.phi_component},
                 {"tail_component", lim.tail_component}}}};
  std::ofstream file;
  *open_out(file, out) << j.dump(2) << '\n';
  return 0;
}

int cmd_sweep(const std::string& spec_path, bool seed_set, std::uint64_t seed,
              long long trials, int threads, const std::string& out) {
  std::ifstream is(spec_path);
  if (!is) throw std::runtime_error("cannot read " + spec_path);
  ExperimentSpec spec = spec_from_json(json::parse(is));
  if (seed_set) spec.base_seed = seed;
  if (trials > 0) spec.trials = trials;
  log_seed(spec.base_seed);
  const SummaryStats stats = run_experiment(spec, threads);
  {
    std::ofstream js(out + ".json");
    if (!js) throw std::runtime_error("cannot write " + out + ".json");
    js << summary_json(stats).dump(2) << '\n';
  }
  std::ofstream cs(out + ".csv");
  if (!cs) throw std::runtime_error("cannot write " + out + ".csv");
  write_summary_csv(cs, stats);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random-game generation, best-response dynamics, and exact "
               "formula evaluation"};
  app.require_subcommand(1);

  GameParams params;
  std::string out, in, trace_path, spec_path;
  std::uint64_t sweep_seed = 0;
  long long sweep_trials = 0;
  int threads = 0;
  int exact_ka = 0, exact_kb = 0;

  // gen always samples, so its parameters are hard-required; brd and count
  // accept either the sampling parameters or an --in stem written by gen.
  auto add_params = [&](CLI::App* sub, bool required) {
    auto* ka = sub->add_option("--ka", params.k_a, "player A action count");
    auto* kb = sub->add_option("--kb", params.k_b, "player B action count");
    sub->add_option("--p", params.p, "correlation probability")
        ->check(CLI::Range(0.0, 1.0));
    auto* s = sub->add_option("--seed", params.seed, "RNG seed");
    if (required) {
      ka->required();
      kb->required();
      s->required();
    }
    return std::array<CLI::Option*, 3>{ka, kb, s};
  };
  auto add_in = [&](CLI::App* sub) {
    return sub->add_option("--in", in,
                           "dense game stem to load instead of sampling");
  };

  CLI::App* gen = app.add_subcommand("gen", "materialize a dense game");
  add_params(gen, true);
  gen->add_option("--out", out, "output stem (.csv + .json)")->required();

  CLI::App* brd = app.add_subcommand("brd", "run one best-response walk");
  const auto brd_params = add_params(brd, false);
  CLI::Option* brd_in = add_in(brd);
  brd->add_option("--trace", trace_path, "write per-step JSONL here");
  brd->add_option("--out", out, "outcome JSON path (default stdout)");

  CLI::App* count = app.add_subcommand("count", "enumerate pure equilibria");
  const auto count_params = add_params(count, false);
  CLI::Option* count_in = add_in(count);
  count->add_option("--out", out, "report JSON path (default stdout)");

  CLI::App* exact = app.add_subcommand("exact", "hazards, survival, limits");
  exact->add_option("--ka", exact_ka, "player A action count")->required();
  exact->add_option("--kb", exact_kb, "player B action count")->required();
  exact->add_option("--out", out, "JSON path (default stdout)");

  CLI::App* sweep = app.add_subcommand("sweep", "run an experiment spec");
  sweep->add_option("--spec", spec_path, "ExperimentSpec JSON file")
      ->required();
  auto* seed_opt = sweep->add_option("--seed", sweep_seed,
                                     "override the spec base seed");
  sweep->add_option("--trials", sweep_trials, "override the trial count");
  sweep->add_option("--threads", threads, "worker count (0 = hardware)");
  sweep->add_option("--out", out, "output stem (.csv + .json)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  const auto needs_game = [&](const std::array<CLI::Option*, 3>& ps,
                              CLI::Option* in_flag) {
    if (in_flag->count() > 0) return false;
    for (CLI::Option* opt : ps)
      if (opt->count() == 0) {
        std::cerr << "either --in or --ka/--kb/--seed is required\n";
        return true;
      }
    return false;
  };
  if (brd->parsed() && needs_game(brd_params, brd_in)) return 2;
  if (count->parsed() && needs_game(count_params, count_in)) return 2;

  try {
    if (gen->parsed()) return cmd_gen(params, out);
    if (brd->parsed()) return cmd_brd(params, in, trace_path, out);
    if (count->parsed()) return cmd_count(params, in, out);
    if (exact->parsed()) return cmd_exact(exact_ka, exact_kb, out);
    return cmd_sweep(spec_path, seed_opt->count() > 0, sweep_seed,
                     sweep_trials, threads, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
