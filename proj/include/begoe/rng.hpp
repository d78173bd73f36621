// Copyright 2026 The begoe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>

namespace begoe::rng {

/// SplitMix64 step; used only to expand seeds into generator state.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

/// xoshiro256++ (Blackman & Vigna). Bit-exact across platforms.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) {
    SplitMix64 sm{seed};
    for (auto& w : s_) w = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

/// Per-member stream: member index is folded into the seed via the golden
/// ratio multiplier, then expanded through SplitMix64. Streams for distinct
/// members are independent; the same (seed, member) always yields the same
/// sequence.
inline Xoshiro256pp member_stream(std::uint64_t seed, std::uint64_t member) {
  return Xoshiro256pp(seed ^ (0x9E3779B97F4A7C15ULL * (member + 1)));
}

/// Standard normals by polar Box-Muller (pairs cached).
class GaussianStream {
 public:
  explicit GaussianStream(Xoshiro256pp gen) : gen_(gen) {}

  double next() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u, v, s;
    do {
      u = 2.0 * gen_.uniform() - 1.0;
      v = 2.0 * gen_.uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    cached_ = v * f;
    have_cached_ = true;
    return u * f;
  }

 private:
  Xoshiro256pp gen_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace begoe::rng
