#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gamelab/game.hpp"

namespace gamelab {

// Deterministic size of the revealed set R(t) while no row or column repeats:
//   r(t) = ceil((t+1)/2)*k_a + floor((t+1)/2)*k_b - floor((t+1)/2)*ceil((t+1)/2).
inline long long r_formula(long long t, long long k_a, long long k_b) {
  if (t < 1) throw std::invalid_argument("r_formula requires t >= 1");
  const long long hi = (t + 2) / 2;  // ceil((t+1)/2)
  const long long lo = (t + 1) / 2;  // floor((t+1)/2)
  return hi * k_a + lo * k_b - lo * hi;
}

enum class Mover { None, A, B };

struct BrdStep {
  long t = 0;
  int a = 1;
  int b = 1;
  Mover mover = Mover::None;
  bool moved = false;
};

// One strict payoff improvement by the active player.
struct Improvement {
  long t = 0;  // step index of the new position
  double before = 0.0;
  double after = 0.0;
};

enum class BrdResult { ConvergedToPne, Trapped };

inline constexpr long kTauInfinity = -1;

struct BrdTrace {
  GameParams params;
  BrdResult result = BrdResult::ConvergedToPne;
  std::pair<int, int> pne{0, 0};          // valid when converged
  long tau_ne = kTauInfinity;             // first time at a PNE
  long tau_r = 0;                         // first re-entry into R(t-2)
  long tau_cycle = kTauInfinity;          // trap confirmation time
  long length = 0;                        // last recorded step index
  std::vector<std::pair<int, int>> cycle; // the trap orbit, empty if converged
  std::vector<long long> revealed_sizes;  // |R(t)| for t = 0..length
  unsigned long long reveals_total = 0;   // payoff values examined
  std::vector<BrdStep> steps;             // retained on request
  std::vector<Improvement> improvements;  // retained with steps
};

struct BrdOptions {
  bool retain_steps = false;
};

struct StoppingTimes {
  long tau_ne = kTauInfinity;
  long tau_r = 0;
  long tau_cycle = kTauInfinity;
};

inline StoppingTimes classify_outcome(const BrdTrace& trace) {
  return {trace.tau_ne, trace.tau_r, trace.tau_cycle};
}

inline long long revealed_set_size(const BrdTrace& trace, long t) {
  if (t < 0 || t > trace.length)
    throw std::invalid_argument("t outside the trace");
  return trace.revealed_sizes[static_cast<std::size_t>(t)];
}

namespace detail {

// Alternating best-response walk from (1,1). A moves at even t, B at odd t,
// each jumping to the strict argmax of its payoff slice (first index wins a
// tie). Stops at the first profile revisit with t >= 2; the revisit is a stay
// iff a PNE was reached, otherwise the revisited stretch is the trap orbit.
template <class View>
BrdTrace run_brd_core(const GameParams& params, const View& view,
                      const BrdOptions& opt) {
  const int ka = params.k_a;
  const int kb = params.k_b;
  BrdTrace tr;
  tr.params = params;

  std::vector<long> row_first(static_cast<std::size_t>(ka) + 1, -1);
  std::vector<long> col_first(static_cast<std::size_t>(kb) + 1, -1);
  std::vector<char> col_scanned(static_cast<std::size_t>(kb) + 1, 0);
  std::vector<char> row_scanned(static_cast<std::size_t>(ka) + 1, 0);
  std::vector<std::pair<int, int>> path;
  std::unordered_map<std::uint64_t, long> first_visit;
  path.reserve(32);
  first_visit.reserve(32);

  long rows_c = 0, cols_c = 1;  // R(0) is column 1
  col_first[1] = 0;
  int a = 1, b = 1;
  long tau_r = -1;
  const long cap = 2L * std::min(ka, kb) + 4;
  auto profile_id = [kb](int a_, int b_) {
    return (static_cast<std::uint64_t>(a_) - 1) * kb + (b_ - 1);
  };

  for (long t = 0;; ++t) {
    if (t > cap) throw std::logic_error("BRD failed to terminate");
    path.push_back({a, b});
    if (t >= 1) {
      if (row_first[a] < 0) {
        row_first[a] = t;
        ++rows_c;
      }
      if (col_first[b] < 0) {
        col_first[b] = t;
        ++cols_c;
      }
    }
    tr.revealed_sizes.push_back(
        t == 0 ? ka
               : cols_c * static_cast<long long>(ka) +
                     rows_c * static_cast<long long>(kb) -
                     rows_c * static_cast<long long>(cols_c));
    if (t >= 2 && tau_r < 0 &&
        (row_first[a] <= t - 2 || col_first[b] <= t - 2))
      tau_r = t;
    if (opt.retain_steps) {
      const Mover m = t == 0 ? Mover::None : (t % 2 == 1 ? Mover::A : Mover::B);
      tr.steps.push_back({t, a, b, m, t > 0 && path[t] != path[t - 1]});
    }

    auto [it, fresh] = first_visit.try_emplace(profile_id(a, b), t);
    if (!fresh && t >= 2) {
      tr.length = t;
      tr.tau_r = tau_r;
      if (path[t - 1] == path[t]) {
        tr.result = BrdResult::ConvergedToPne;
        tr.pne = path[t];
        long s = t - 1;
        while (s > 0 && path[s - 1] == path[t]) --s;
        tr.tau_ne = s;
        tr.tau_cycle = kTauInfinity;
      } else {
        tr.result = BrdResult::Trapped;
        tr.tau_ne = kTauInfinity;
        tr.tau_cycle = tau_r;
        long s = t - 1;
        while (path[s] != path[t]) --s;
        tr.cycle.assign(path.begin() + s, path.begin() + t);
      }
      return tr;
    }

    if (t % 2 == 0) {  // A scans its current column
      if (!col_scanned[b]) {
        col_scanned[b] = 1;
        tr.reveals_total += static_cast<unsigned long long>(ka);
      }
      int best = 1;
      double best_u = view.payoff_a(1, b);
      double cur_u = a == 1 ? best_u : 0.0;
      for (int cand = 2; cand <= ka; ++cand) {
        const double u = view.payoff_a(cand, b);
        if (cand == a) cur_u = u;
        if (u > best_u) {
          best_u = u;
          best = cand;
        }
      }
      if (best != a && opt.retain_steps)
        tr.improvements.push_back({t + 1, cur_u, best_u});
      a = best;
    } else {  // B scans its current row
      if (!row_scanned[a]) {
        row_scanned[a] = 1;
        tr.reveals_total += static_cast<unsigned long long>(kb);
      }
      int best = 1;
      double best_u = view.payoff_b(a, 1);
      double cur_u = b == 1 ? best_u : 0.0;
      for (int cand = 2; cand <= kb; ++cand) {
        const double u = view.payoff_b(a, cand);
        if (cand == b) cur_u = u;
        if (u > best_u) {
          best_u = u;
          best = cand;
        }
      }
      if (best != b && opt.retain_steps)
        tr.improvements.push_back({t + 1, cur_u, best_u});
      b = best;
    }
  }
}

struct DenseView {
  const DenseGame* game;
  double payoff_a(int a, int b) const { return game->pay_a(a - 1, b - 1); }
  double payoff_b(int a, int b) const { return game->pay_b(a - 1, b - 1); }
};

struct LazyView {
  const LazyGame* game;
  double payoff_a(int a, int b) const { return game->reveal(a, b).first; }
  double payoff_b(int a, int b) const { return game->reveal(a, b).second; }
};

// Memoization-free oracle view for bulk Monte Carlo: identical values to the
// lazy store, nothing retained between calls.
struct OracleView {
  const PayoffOracle* oracle;
  double payoff_a(int a, int b) const { return oracle->payoff_a(a, b); }
  double payoff_b(int a, int b) const { return oracle->payoff_b(a, b); }
};

}  // namespace detail

inline BrdTrace run_brd(const DenseGame& game, const BrdOptions& opt = {}) {
  return detail::run_brd_core(game.params, detail::DenseView{&game}, opt);
}

inline BrdTrace run_brd(const LazyGame& game, const BrdOptions& opt = {}) {
  return detail::run_brd_core(game.params(), detail::LazyView{&game}, opt);
}

inline BrdTrace run_brd(const GameParams& params, const BrdOptions& opt = {}) {
  const PayoffOracle oracle(params);
  return detail::run_brd_core(params, detail::OracleView{&oracle}, opt);
}

}  // namespace gamelab
