#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace secomp {

/// SplitMix64 step; used for seed mixing and stream derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Splittable random stream.
///
/// Every stream is identified by a 64-bit derived seed. Streams are obtained
/// either by deriving from a master seed plus an index path
/// (`RngStream::derive(master, {a, b, ...})`, one SplitMix64 absorption per
/// index) or by spawning a child from a live stream (`spawn()` derives the
/// child from the parent's next raw output). Identical (master, path)
/// always yields an identical stream; distinct paths yield independent
/// streams for simulation purposes.
///
/// Draw helpers avoid std::*_distribution on purpose: their output is
/// implementation-defined, and result payloads are required to be replayable
/// byte for byte.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed) {
    std::uint64_t s = seed;
    engine_.seed(splitmix64(s));
  }

  static RngStream derive(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = master;
    for (std::uint64_t idx : path) {
      s = splitmix64(s) ^ (idx * 0x9e3779b97f4a7c15ull + 0x5851f42d4c957f2dull);
    }
    return RngStream(s);
  }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Bernoulli(p) draw; p = 0 never fires, p = 1 always fires.
  bool bernoulli(double p) { return next_double() < p; }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return v % n;
  }

  /// Child stream derived from this stream's next raw output. Advances the
  /// parent, so consecutive spawns give distinct independent streams.
  RngStream spawn() {
    std::uint64_t s = next_u64();
    return RngStream(splitmix64(s));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace secomp
