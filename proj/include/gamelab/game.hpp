#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "gamelab/rng.hpp"

namespace gamelab {

// Full description of the random game law: action counts, the correlation
// probability p interpolating i.i.d. payoffs (p=0) and common-interest
// potential games (p=1), and the seed. Actions are 1-based, matching [K].
struct GameParams {
  int k_a = 1;
  int k_b = 1;
  double p = 0.0;
  std::uint64_t seed = 0;

  void validate() const {
    if (k_a < 1 || k_b < 1)
      throw std::invalid_argument("action counts must be >= 1");
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("p must lie in [0,1]");
  }
};

// Recommended guard for materializing a full bimatrix.
inline constexpr long long kDenseCellBudget = 100'000'000LL;

// Pure payoff oracle: the payoff pair at (a,b) is a function of
// (seed, a, b) only. Marginals are Uniform[0,1]; with probability p the
// B payoff equals the A payoff, independently per profile.
class PayoffOracle {
 public:
  explicit PayoffOracle(const GameParams& params)
      : params_(params), rng_(params.seed) {
    params.validate();
  }

  double payoff_a(int a, int b, std::uint64_t salt = 0) const noexcept {
    return KeyedRng::draw(rng_.profile_key(a, b), Stream::PayoffA, salt);
  }

  double payoff_b(int a, int b, std::uint64_t salt = 0) const noexcept {
    const std::uint64_t key = rng_.profile_key(a, b);
    return payoff_b_from_key(key, salt);
  }

  std::pair<double, double> payoffs(int a, int b,
                                    std::uint64_t salt = 0) const noexcept {
    const std::uint64_t key = rng_.profile_key(a, b);
    const double ua = KeyedRng::draw(key, Stream::PayoffA, salt);
    return {ua, payoff_b_from_key(key, salt, ua)};
  }

  const GameParams& params() const noexcept { return params_; }
  const KeyedRng& rng() const noexcept { return rng_; }

 private:
  double payoff_b_from_key(std::uint64_t key, std::uint64_t salt,
                           double ua_hint = -1.0) const noexcept {
    if (params_.p >= 1.0)
      return ua_hint >= 0.0 ? ua_hint
                            : KeyedRng::draw(key, Stream::PayoffA, salt);
    if (params_.p <= 0.0) return KeyedRng::draw(key, Stream::PayoffB, salt);
    if (KeyedRng::draw(key, Stream::Coin, salt) < params_.p)
      return ua_hint >= 0.0 ? ua_hint
                            : KeyedRng::draw(key, Stream::PayoffA, salt);
    return KeyedRng::draw(key, Stream::PayoffB, salt);
  }

  GameParams params_;
  KeyedRng rng_;
};

// Materialized payoff bimatrix, k_a x k_b. Accessors are 1-based.
struct DenseGame {
  GameParams params;
  Eigen::MatrixXd pay_a;
  Eigen::MatrixXd pay_b;

  double u_a(int a, int b) const { return pay_a(a - 1, b - 1); }
  double u_b(int a, int b) const { return pay_b(a - 1, b - 1); }
};

// Draws the full bimatrix: all entries i.i.d. Uniform[0,1], then per profile
// with probability p the B entry is overwritten by the A entry. Exact
// floating-point ties along a decision axis (a column of pay_a or a row of
// pay_b) are resolved by re-drawing the later profile from a fresh sub-key.
DenseGame generate_dense(const GameParams& params);

// Deferred-decision view of the same law: payoffs are computed on first
// request and memoized. Supports action spaces far beyond the dense budget.
class LazyGame {
 public:
  explicit LazyGame(const GameParams& params) : oracle_(params) {}

  // Idempotent and order-independent; repeat calls return the stored pair.
  std::pair<double, double> reveal(int a, int b) const {
    const GameParams& prm = oracle_.params();
    if (a < 1 || a > prm.k_a || b < 1 || b > prm.k_b)
      throw std::invalid_argument("profile out of range");
    const std::uint64_t key =
        (static_cast<std::uint64_t>(a) - 1) * prm.k_b + (b - 1);
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = revealed_.find(key);
    if (it == revealed_.end())
      it = revealed_.emplace(key, oracle_.payoffs(a, b)).first;
    return it->second;
  }

  std::size_t revealed_count() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return revealed_.size();
  }

  const GameParams& params() const noexcept { return oracle_.params(); }
  const PayoffOracle& oracle() const noexcept { return oracle_; }

 private:
  PayoffOracle oracle_;
  mutable std::unordered_map<std::uint64_t, std::pair<double, double>>
      revealed_;
  mutable std::mutex mutex_;
};

// Reveals every profile. The oracle is pure, so the result agrees with every
// previously revealed entry by construction.
DenseGame densify(const LazyGame& game);

}  // namespace gamelab
