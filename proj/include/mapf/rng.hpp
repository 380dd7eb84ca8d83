/*
 * Seeded pseudo-random numbers with platform-stable output.
 *
 * std::mt19937_64 itself is fully specified by the standard, so the raw
 * 64-bit stream is identical everywhere; the standard *distributions* are
 * not, which is why the bounded-int and unit-interval mappings below are
 * spelled out by hand. Every experiment record stores the seed, and a
 * (seed, call sequence) pair reproduces bit-identical draws on any
 * platform.
 */
#pragma once

#include <cstdint>
#include <random>

namespace mapf {

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // uniform in [0, 1), 53-bit resolution
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [0, n), n >= 1, via 128-bit multiply-shift
  uint64_t below(uint64_t n)
  {
    return static_cast<uint64_t>(
        (static_cast<__uint128_t>(next_u64()) * static_cast<__uint128_t>(n)) >> 64);
  }

  // uniform in [lo, hi] inclusive
  int64_t uniform_int(int64_t lo, int64_t hi)
  {
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // splitmix64 finalizer; used to derive decorrelated child seeds
  static uint64_t mix(uint64_t a, uint64_t b)
  {
    uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mapf
