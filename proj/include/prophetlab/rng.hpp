#pragma once

#include <cmath>
#include <cstdint>

namespace prophetlab {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Counter-based stream: the state is a pure function of (seed, stream,
/// counter), so any sample can be regenerated independently of how work is
/// partitioned. Portable across standard libraries.
class CounterRng {
 public:
  constexpr CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept
      : state_(mix64(mix64(mix64(seed) ^ (stream * 0xD1B54A32D192ED03ULL)) ^ (counter + 0x9E3779B97F4A7C15ULL))) {}

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  /// Uniform on [0,1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform on (0,1].
  double uniform_open_closed() noexcept { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

  /// Uniform integer in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) noexcept {
    return lo + static_cast<std::uint64_t>(uniform() * static_cast<double>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace prophetlab
