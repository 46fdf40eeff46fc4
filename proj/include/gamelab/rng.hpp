#pragma once

#include <cstdint>

namespace gamelab {

// SplitMix64 finalizer (Vigna / Steele-Lea-Flood). All keyed draws bottom out here.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Top 53 bits -> double in [0, 1).
constexpr double to_unit(std::uint64_t x) noexcept {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Sub-streams of a profile key. PayoffA and PayoffB are the two uniform draws,
// Coin decides whether B's payoff gets overwritten by A's. Keeping the coin on
// its own stream means changing p never changes the uniforms that would have
// been drawn, so experiments can be coupled across p.
enum class Stream : std::uint64_t { PayoffA = 1, PayoffB = 2, Coin = 3 };

// Counter-based keyed generator: every draw is a pure function of
// (seed, a, b, stream, salt). No mutable state, so reveals are
// order-independent and safe to evaluate from any worker.
class KeyedRng {
 public:
  explicit KeyedRng(std::uint64_t seed) noexcept
      : base_(mix64(seed ^ 0x6A09E667F3BCC909ULL)) {}

  std::uint64_t col_key(std::uint64_t b) const noexcept {
    return mix64(base_ + b * 0x9E3779B97F4A7C15ULL);
  }

  static std::uint64_t profile_key_from_col(std::uint64_t col_key,
                                            std::uint64_t a) noexcept {
    return mix64(col_key + a * 0xD1B54A32D192ED03ULL);
  }

  std::uint64_t profile_key(std::uint64_t a, std::uint64_t b) const noexcept {
    return profile_key_from_col(col_key(b), a);
  }

  // salt > 0 is used only to re-draw a profile after an exact floating-point
  // tie was detected at dense-generation time.
  static double draw(std::uint64_t profile_key, Stream s,
                     std::uint64_t salt = 0) noexcept {
    const std::uint64_t stream_id = static_cast<std::uint64_t>(s) + 4 * salt;
    return to_unit(mix64(profile_key ^ stream_id * 0x9E3779B97F4A7C15ULL));
  }

 private:
  std::uint64_t base_;
};

// Per-trial seeds for experiment grids: pure function of (base, i, j), so the
// schedule of a worker pool cannot change which game a trial sees.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t i,
                                    std::uint64_t j) noexcept {
  std::uint64_t z = mix64(base ^ 0x243F6A8885A308D3ULL);
  z = mix64(z + i * 0x9E3779B97F4A7C15ULL);
  return mix64(z + j * 0xD1B54A32D192ED03ULL);
}

// Tiny counter RNG for Monte Carlo helpers in tests and the harness.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) noexcept : state_(mix64(seed)) {}
  std::uint64_t next_u64() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }
  double next_unit() noexcept { return to_unit(next_u64()); }

 private:
  std::uint64_t state_;
};

}  // namespace gamelab
