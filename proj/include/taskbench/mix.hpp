#pragma once

#include <cstdint>

// 64-bit avalanche mixing used for task digests and counter-based random
// draws. Pure integer arithmetic, so results are identical on every
// platform and independent of execution order.

namespace taskbench {

inline constexpr std::uint64_t golden_gamma = 0x9e3779b97f4a7c15ULL;

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// Folds one more field into a running hash. Order-sensitive.
constexpr std::uint64_t mix_combine(std::uint64_t h, std::uint64_t v) noexcept {
  return mix64(h ^ (v + golden_gamma + (h << 6) + (h >> 2)));
}

// Uniform draw in [0, 1) from 53 random bits.
constexpr double mix_to_unit(std::uint64_t h) noexcept {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace taskbench
