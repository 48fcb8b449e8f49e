#pragma once

#include <cstdint>

namespace subtype {

// splitmix64 finalizer
constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

constexpr std::uint64_t hash_u64(std::uint64_t a, std::uint64_t b) {
  return mix64(a ^ (mix64(b) + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

constexpr std::uint64_t hash_u64(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return hash_u64(hash_u64(a, b), c);
}

/// Counter-based generator: output depends only on (seed, stream, counter),
/// so independent streams can be drawn from in parallel without shared state
/// and a draw can be replayed from its coordinates alone.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(hash_u64(seed, stream)) {}

  std::uint64_t next_u64() { return mix64(key_ + (counter_++) * 0x9e3779b97f4a7c15ULL); }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1].
  double next_double_open() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n). Fixed-point multiply; bias is O(n / 2^64).
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  /// Standard normal via Box-Muller. Consumes exactly two draws.
  double next_gauss();

  /// Normal(mean, sd) restricted to [lo, hi] by rejection; sd == 0 returns
  /// mean clamped into the interval.
  double next_trunc_normal(double mean, double sd, double lo, double hi);

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace subtype
