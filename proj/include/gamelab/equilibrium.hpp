#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gamelab/game.hpp"
#include "gamelab/rational.hpp"

namespace gamelab {

struct PneReport {
  GameParams params;
  std::vector<std::pair<int, int>> equilibria;  // sorted lexicographically
  long long count = 0;
};

// (a,b) is a pure Nash equilibrium iff A cannot improve within column b and
// B cannot improve within row a.
inline bool is_pne(const DenseGame& game, int a, int b) {
  if (a < 1 || a > game.params.k_a || b < 1 || b > game.params.k_b)
    throw std::invalid_argument("profile out of range");
  const double ua = game.pay_a(a - 1, b - 1);
  for (int r = 0; r < game.params.k_a; ++r)
    if (game.pay_a(r, b - 1) > ua) return false;
  const double ub = game.pay_b(a - 1, b - 1);
  for (int c = 0; c < game.params.k_b; ++c)
    if (game.pay_b(a - 1, c) > ub) return false;
  return true;
}

// Marker-intersection scan: a profile is a PNE iff it is the argmax of its
// pay_a column and of its pay_b row. One pass over each matrix.
inline PneReport enumerate_pne(const DenseGame& game) {
  PneReport report;
  report.params = game.params;
  const int ka = game.params.k_a;
  const int kb = game.params.k_b;
  std::vector<int> row_best(kb);  // best a per column of pay_a
  for (int c = 0; c < kb; ++c) {
    Eigen::Index best;
    game.pay_a.col(c).maxCoeff(&best);
    row_best[c] = static_cast<int>(best);
  }
  for (int r = 0; r < ka; ++r) {
    Eigen::Index best;
    game.pay_b.row(r).maxCoeff(&best);
    const int c = static_cast<int>(best);
    if (row_best[c] == r) report.equilibria.emplace_back(r + 1, c + 1);
  }
  std::sort(report.equilibria.begin(), report.equilibria.end());
  report.count = static_cast<long long>(report.equilibria.size());
  return report;
}

// Independent route: test every profile against the definition directly.
inline PneReport enumerate_pne_exhaustive(const DenseGame& game) {
  PneReport report;
  report.params = game.params;
  for (int a = 1; a <= game.params.k_a; ++a)
    for (int b = 1; b <= game.params.k_b; ++b)
      if (is_pne(game, a, b)) report.equilibria.emplace_back(a, b);
  report.count = static_cast<long long>(report.equilibria.size());
  return report;
}

// Counting only, no profile list; used by the Monte Carlo harness.
inline long long count_pne(const DenseGame& game) {
  const int ka = game.params.k_a;
  const int kb = game.params.k_b;
  long long count = 0;
  std::vector<int> row_best(kb);
  for (int c = 0; c < kb; ++c) {
    Eigen::Index best;
    game.pay_a.col(c).maxCoeff(&best);
    row_best[c] = static_cast<int>(best);
  }
  for (int r = 0; r < ka; ++r) {
    Eigen::Index best;
    game.pay_b.row(r).maxCoeff(&best);
    if (row_best[static_cast<int>(best)] == r) ++count;
  }
  return count;
}

// E[W] = p * K^A K^B / (K^A + K^B - 1) + (1 - p).
inline double expected_pne(const GameParams& params) {
  params.validate();
  const double ka = params.k_a, kb = params.k_b;
  return params.p * ka * kb / (ka + kb - 1.0) + (1.0 - params.p);
}

// Exact form for rational p = p_num / p_den.
inline Rational expected_pne_rational(int k_a, int k_b, long long p_num,
                                      long long p_den) {
  if (k_a < 1 || k_b < 1) throw std::invalid_argument("action counts");
  const Rational p(p_num, p_den);
  if (p.num < 0 || p.num > p.den) throw std::invalid_argument("p outside [0,1]");
  return p * Rational(static_cast<long long>(k_a) * k_b, k_a + k_b - 1) +
         (Rational(1) - p);
}

// P((a,b) in NE) = p / (K^A + K^B - 1) + (1 - p) / (K^A K^B).
inline double pne_probability_at_profile(const GameParams& params) {
  params.validate();
  const double ka = params.k_a, kb = params.k_b;
  return params.p / (ka + kb - 1.0) + (1.0 - params.p) / (ka * kb);
}

}  // namespace gamelab
