#include "gamelab/game.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

namespace gamelab {

namespace {

// Re-draw profiles until no two entries coincide along a decision axis:
// player A compares within a column of pay_a, player B within a row of pay_b.
// A 64-bit tie has probability ~2^-53 per pair, so this loop essentially
// never iterates; it exists to keep the almost-surely-distinct model exact.
void resolve_ties(const PayoffOracle& oracle, DenseGame& game) {
  const int ka = game.params.k_a;
  const int kb = game.params.k_b;
  std::vector<std::uint64_t> salt(static_cast<std::size_t>(ka) * kb, 0);
  auto redraw = [&](int a, int b) {
    std::uint64_t& s = salt[static_cast<std::size_t>(a - 1) * kb + (b - 1)];
    ++s;
    const auto [ua, ub] = oracle.payoffs(a, b, s);
    game.pay_a(a - 1, b - 1) = ua;
    game.pay_b(a - 1, b - 1) = ub;
  };
  // Fast path: a sorted copy finds duplicates without hashing; the map-based
  // redraw runs only for a slice where a duplicate was actually seen.
  std::vector<double> buf(static_cast<std::size_t>(std::max(ka, kb)));
  auto has_duplicate = [&buf](std::size_t n) {
    std::sort(buf.begin(), buf.begin() + static_cast<long>(n));
    return std::adjacent_find(buf.begin(),
                              buf.begin() + static_cast<long>(n)) !=
           buf.begin() + static_cast<long>(n);
  };
  std::unordered_map<double, int> seen;
  for (int round = 0; round < 64; ++round) {
    bool clean = true;
    for (int b = 1; b <= kb; ++b) {
      for (int a = 1; a <= ka; ++a) buf[a - 1] = game.pay_a(a - 1, b - 1);
      if (!has_duplicate(static_cast<std::size_t>(ka))) continue;
      seen.clear();
      for (int a = 1; a <= ka; ++a)
        if (!seen.emplace(game.pay_a(a - 1, b - 1), a).second) {
          redraw(a, b);
          clean = false;
        }
    }
    for (int a = 1; a <= ka; ++a) {
      for (int b = 1; b <= kb; ++b) buf[b - 1] = game.pay_b(a - 1, b - 1);
      if (!has_duplicate(static_cast<std::size_t>(kb))) continue;
      seen.clear();
      for (int b = 1; b <= kb; ++b)
        if (!seen.emplace(game.pay_b(a - 1, b - 1), b).second) {
          redraw(a, b);
          clean = false;
        }
    }
    if (clean) return;
  }
  throw std::runtime_error("could not resolve payoff ties");
}

}  // namespace

DenseGame generate_dense(const GameParams& params) {
  params.validate();
  const long long cells =
      static_cast<long long>(params.k_a) * params.k_b;
  if (cells > kDenseCellBudget)
    throw std::invalid_argument("dense game exceeds the memory budget");

  PayoffOracle oracle(params);
  DenseGame game;
  game.params = params;
  game.pay_a.resize(params.k_a, params.k_b);
  game.pay_b.resize(params.k_a, params.k_b);
  for (int b = 1; b <= params.k_b; ++b) {
    const std::uint64_t ck = oracle.rng().col_key(b);
    for (int a = 1; a <= params.k_a; ++a) {
      const std::uint64_t key = KeyedRng::profile_key_from_col(ck, a);
      const double ua = KeyedRng::draw(key, Stream::PayoffA);
      double ub;
      if (params.p >= 1.0)
        ub = ua;
      else if (params.p <= 0.0)
        ub = KeyedRng::draw(key, Stream::PayoffB);
      else
        ub = KeyedRng::draw(key, Stream::Coin) < params.p
                 ? ua
                 : KeyedRng::draw(key, Stream::PayoffB);
      game.pay_a(a - 1, b - 1) = ua;
      game.pay_b(a - 1, b - 1) = ub;
    }
  }
  resolve_ties(oracle, game);
  return game;
}

DenseGame densify(const LazyGame& game) {
  const GameParams& params = game.params();
  const long long cells =
      static_cast<long long>(params.k_a) * params.k_b;
  if (cells > kDenseCellBudget)
    throw std::invalid_argument("dense game exceeds the memory budget");

  DenseGame dense;
  dense.params = params;
  dense.pay_a.resize(params.k_a, params.k_b);
  dense.pay_b.resize(params.k_a, params.k_b);
  for (int b = 1; b <= params.k_b; ++b)
    for (int a = 1; a <= params.k_a; ++a) {
      const auto [ua, ub] = game.oracle().payoffs(a, b);
      dense.pay_a(a - 1, b - 1) = ua;
      dense.pay_b(a - 1, b - 1) = ub;
    }
  return dense;
}

}  // namespace gamelab
