#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <utility>

namespace schelling {

/// Independent random streams derived from one replicate seed. Placement and
/// friendship use separate streams so that changing k never moves agents.
enum class StreamTag : std::uint64_t {
  Placement = 1,
  Friendship = 2,
  Run = 3,
};

/// SplitMix64 finalizer.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Child seed for (base seed, replicate h, stream, optional salt). Pure function,
/// so every job can derive its seeds without coordination.
[[nodiscard]] constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t replicate, StreamTag tag,
                                                  std::uint64_t salt = 0) noexcept {
  std::uint64_t s = mix64(base);
  s = mix64(s ^ replicate);
  s = mix64(s ^ static_cast<std::uint64_t>(tag));
  return mix64(s ^ salt);
}

/// Seeded generator with platform-independent draws. The standard
/// distributions are implementation-defined, so bounded draws and shuffles are
/// done here on top of the (fully specified) mt19937_64 engine.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound). bound must be positive.
  std::size_t uniform_index(std::size_t bound) {
    const std::uint64_t range = static_cast<std::uint64_t>(bound);
    // Rejection on the largest multiple of `range`.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t draw = engine_();
    while (draw >= limit) draw = engine_();
    return static_cast<std::size_t>(draw % range);
  }

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = uniform_index(i);
      std::swap(items[i - 1], items[j]);
    }
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace schelling
