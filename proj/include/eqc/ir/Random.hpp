#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace eqc::ir {

/// SplitMix64 step, also used to derive seeds.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// xoshiro256** seeded through SplitMix64. Same stream on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) noexcept;

  std::uint64_t next() noexcept;
  /// Uniform in [0, bound); bound > 0. Unbiased (rejection).
  std::uint64_t below(std::uint64_t bound) noexcept;
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept;

private:
  std::array<std::uint64_t, 4> s_{};
};

/// k distinct values drawn uniformly from [0, population), in draw order.
/// k is clamped to population.
std::vector<std::uint64_t> sampleWithoutReplacement(Rng& rng,
                                                    std::uint64_t population,
                                                    std::uint64_t k);

} // namespace eqc::ir
