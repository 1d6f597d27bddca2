#pragma once

#include <cstdint>

#include "qcube/rational.hpp"

namespace qcube {

// SplitMix64-style finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

// Value of the stream at (seed, shot, step). Keys are mixed in nested stages,
// so draws are pure functions of their coordinates and order-independent.
constexpr std::uint64_t rng_value(std::uint64_t seed, std::uint64_t shot, std::uint64_t step) {
  std::uint64_t h = mix64(seed + 0x9E3779B97F4A7C15ULL);
  h = mix64(h ^ (shot + 0xD1B54A32D192ED03ULL));
  h = mix64(h ^ (step + 0x8CB92BA72F3D8DD7ULL));
  return h;
}

// One (seed, shot) stream; each draw consumes one step index.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t shot) : seed_(seed), shot_(shot) {}

  std::uint64_t next() { return rng_value(seed_, shot_, step_++); }

  // [0, n) by 128-bit multiply-shift.
  std::uint64_t uniform_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  // k / 2^64, uniform on [0, 1).
  Rat unit_rational() {
    BigInt den = BigInt(1) << 64;
    return Rat(BigInt(next()), den);
  }

  std::uint64_t step() const { return step_; }

 private:
  std::uint64_t seed_;
  std::uint64_t shot_;
  std::uint64_t step_ = 0;
};

}  // namespace qcube
