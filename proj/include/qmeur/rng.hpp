#pragma once

#include <concepts>
#include <cstdint>
#include <random>

namespace qmeur {

/// Anything that yields uniform reals on a closed interval [a, b].
template <typename R>
concept UniformSource = requires(R& r, double a, double b) {
  { r.uniform(a, b) } -> std::convertible_to<double>;
};

/// Deterministic uniform stream backed by std::mt19937_64.
///
/// The 64-bit engine output is reduced to its top 53 bits k and mapped to
/// k / (2^53 - 1), which covers the closed interval [0, 1] (both ends are
/// reachable). uniform(a, b) is the affine image a + (b - a) * u. Because the
/// engine's output sequence is fixed by the C++ standard, a seed names the
/// same stream on every conforming platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  double unit() {
    constexpr double kScale = 1.0 / 9007199254740991.0;  // 1 / (2^53 - 1)
    return static_cast<double>(engine_() >> 11) * kScale;
  }

  double uniform(double a, double b) { return a + (b - a) * unit(); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer over (master, index); used to give each ensemble
/// sample its own stream independent of evaluation order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace qmeur
