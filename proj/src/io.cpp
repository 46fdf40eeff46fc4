#include "gamelab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gamelab {

void to_json(json& j, const GameParams& params) {
  j = json{{"k_a", params.k_a},
           {"k_b", params.k_b},
           {"p", params.p},
           {"seed", params.seed}};
}

void from_json(const json& j, GameParams& params) {
  j.at("k_a").get_to(params.k_a);
  j.at("k_b").get_to(params.k_b);
  j.at("p").get_to(params.p);
  j.at("seed").get_to(params.seed);
  params.validate();
}

void write_dense_csv(std::ostream& os, const DenseGame& game) {
  os << "a,b,u_a,u_b\n";
  char buf[64];
  for (int a = 1; a <= game.params.k_a; ++a)
    for (int b = 1; b <= game.params.k_b; ++b) {
      std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g", a, b, game.u_a(a, b),
                    game.u_b(a, b));
      os << buf << '\n';
    }
}

DenseGame read_dense_csv(std::istream& is, const GameParams& params) {
  params.validate();
  DenseGame game;
  game.params = params;
  game.pay_a.resize(params.k_a, params.k_b);
  game.pay_b.resize(params.k_a, params.k_b);
  std::string line;
  if (!std::getline(is, line) || line.rfind("a,b,u_a,u_b", 0) != 0)
    throw std::runtime_error("missing CSV header a,b,u_a,u_b");
  long long rows = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    int a, b;
    double ua, ub;
    if (std::sscanf(line.c_str(), "%d,%d,%lf,%lf", &a, &b, &ua, &ub) != 4)
      throw std::runtime_error("malformed CSV row: " + line);
    if (a < 1 || a > params.k_a || b < 1 || b > params.k_b)
      throw std::runtime_error("profile out of range in CSV: " + line);
    game.pay_a(a - 1, b - 1) = ua;
    game.pay_b(a - 1, b - 1) = ub;
    ++rows;
  }
  if (rows != static_cast<long long>(params.k_a) * params.k_b)
    throw std::runtime_error("CSV row count does not match k_a*k_b");
  return game;
}

void save_dense(const std::string& stem, const DenseGame& game) {
  {
    std::ofstream os(stem + ".json");
    if (!os) throw std::runtime_error("cannot write " + stem + ".json");
    os << json(game.params).dump(2) << '\n';
  }
  std::ofstream os(stem + ".csv");
  if (!os) throw std::runtime_error("cannot write " + stem + ".csv");
  write_dense_csv(os, game);
}

DenseGame load_dense(const std::string& stem) {
  std::ifstream js(stem + ".json");
  if (!js) throw std::runtime_error("cannot read " + stem + ".json");
  const GameParams params = json::parse(js).get<GameParams>();
  std::ifstream cs(stem + ".csv");
  if (!cs) throw std::runtime_error("cannot read " + stem + ".csv");
  return read_dense_csv(cs, params);
}

json pne_report_json(const PneReport& report) {
  json eq = json::array();
  for (const auto& [a, b] : report.equilibria) eq.push_back({a, b});
  return json{{"count", report.count}, {"equilibria", eq}};
}

namespace {

const char* mover_name(Mover m) {
  switch (m) {
    case Mover::A: return "A";
    case Mover::B: return "B";
    default: return "None";
  }
}

json time_or_null(long t) {
  return t == kTauInfinity ? json(nullptr) : json(t);
}

}  // namespace

void write_trace_jsonl(std::ostream& os, const BrdTrace& trace) {
  for (const BrdStep& s : trace.steps)
    os << json{{"t", s.t},
               {"a", s.a},
               {"b", s.b},
               {"mover", mover_name(s.mover)},
               {"moved", s.moved}}
              .dump()
       << '\n';
}

json outcome_json(const BrdTrace& trace) {
  json j{{"outcome", trace.result == BrdResult::ConvergedToPne
                         ? "ConvergedToPne"
                         : "Trapped"},
         {"tau_ne", time_or_null(trace.tau_ne)},
         {"tau_r", trace.tau_r},
         {"tau_cycle", time_or_null(trace.tau_cycle)},
         {"reveals_total", trace.reveals_total}};
  if (trace.result == BrdResult::ConvergedToPne) {
    j["pne"] = {trace.pne.first, trace.pne.second};
  } else {
    json cyc = json::array();
    for (const auto& [a, b] : trace.cycle) cyc.push_back({a, b});
    j["cycle"] = cyc;
  }
  return j;
}

ExperimentSpec spec_from_json(const json& j) {
  ExperimentSpec spec;
  for (const json& g : j.at("grid"))
    spec.grid.push_back({g.at("k_a").get<int>(), g.at("k_b").get<int>(),
                         g.at("p").get<double>()});
  j.at("trials").get_to(spec.trials);
  if (j.contains("base_seed")) j.at("base_seed").get_to(spec.base_seed);
  for (const json& m : j.at("metrics")) {
    const std::string name = m.get<std::string>();
    if (name == "pne_count")
      spec.metrics.pne_count = true;
    else if (name == "tau_ne")
      spec.metrics.tau_ne = true;
    else if (name == "converged")
      spec.metrics.converged = true;
    else if (name == "tau_cycle")
      spec.metrics.tau_cycle = true;
    else if (name == "reveals_total")
      spec.metrics.reveals_total = true;
    else
      throw std::invalid_argument("unknown metric: " + name);
  }
  if (j.contains("retain_traces"))
    j.at("retain_traces").get_to(spec.retain_traces);
  spec.validate();
  return spec;
}

json spec_to_json(const ExperimentSpec& spec) {
  json grid = json::array();
  for (const GridPoint& g : spec.grid)
    grid.push_back({{"k_a", g.k_a}, {"k_b", g.k_b}, {"p", g.p}});
  json metrics = json::array();
  if (spec.metrics.pne_count) metrics.push_back("pne_count");
  if (spec.metrics.tau_ne) metrics.push_back("tau_ne");
  if (spec.metrics.converged) metrics.push_back("converged");
  if (spec.metrics.tau_cycle) metrics.push_back("tau_cycle");
  if (spec.metrics.reveals_total) metrics.push_back("reveals_total");
  return json{{"grid", grid},
              {"trials", spec.trials},
              {"base_seed", spec.base_seed},
              {"metrics", metrics},
              {"retain_traces", spec.retain_traces}};
}

json summary_json(const SummaryStats& stats) {
  json points = json::array();
  for (const PointStats& pt : stats.points) {
    json j{{"k_a", pt.point.k_a},
           {"k_b", pt.point.k_b},
           {"p", pt.point.p},
           {"n_trials", pt.n_trials},
           {"runtime_s", pt.runtime_s}};
    if (stats.spec.metrics.wants_brd()) {
      j["converged_count"] = pt.converged_count;
      j["converged_fraction"] = pt.converged_fraction();
      j["converged_ci_radius"] = pt.converged_ci_radius();
      j["tau_ne_hist"] = pt.tau_hist;
      j["tau_ne_mean"] = pt.tau_mean();
      j["tau_ne_variance"] = pt.tau_variance();
      j["reveals_sum"] = pt.reveals_sum;
    }
    if (stats.spec.metrics.pne_count) {
      j["w_hist"] = pt.w_hist;
      j["w_mean"] = pt.w_mean();
      j["w_variance"] = pt.w_variance();
      j["w_median"] = pt.w_median();
    }
    points.push_back(std::move(j));
  }
  return json{{"spec", spec_to_json(stats.spec)}, {"points", points}};
}

void write_summary_csv(std::ostream& os, const SummaryStats& stats) {
  os << "k_a,k_b,p,metric,value,ci_radius\n";
  char buf[160];
  auto row = [&](const GridPoint& g, const char* metric, double value,
                 double ci) {
    std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%s,%.17g,%.17g", g.k_a, g.k_b,
                  g.p, metric, value, ci);
    os << buf << '\n';
  };
  for (const PointStats& pt : stats.points) {
    if (stats.spec.metrics.converged || stats.spec.metrics.tau_ne)
      row(pt.point, "converged_fraction", pt.converged_fraction(),
          pt.converged_ci_radius());
    if (stats.spec.metrics.tau_ne) {
      row(pt.point, "tau_ne_mean", pt.tau_mean(), 0.0);
      row(pt.point, "tau_ne_variance", pt.tau_variance(), 0.0);
    }
    if (stats.spec.metrics.reveals_total)
      row(pt.point, "reveals_mean",
          static_cast<double>(pt.reveals_sum) / pt.n_trials, 0.0);
    if (stats.spec.metrics.pne_count) {
      const double sd = std::sqrt(pt.w_variance() / pt.n_trials);
      row(pt.point, "w_mean", pt.w_mean(), 3.0 * sd);
      row(pt.point, "w_median", pt.w_median(), 0.0);
    }
  }
}

}  // namespace gamelab
