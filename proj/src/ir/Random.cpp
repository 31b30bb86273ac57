#include "eqc/ir/Random.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace eqc::ir {

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

namespace {
constexpr std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}
} // namespace

Rng::Rng(std::uint64_t seed) noexcept {
  std::uint64_t sm = seed;
  for (auto& w : s_) {
    w = splitmix64(sm);
  }
}

std::uint64_t Rng::next() noexcept {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17U;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Rng::below(std::uint64_t bound) noexcept {
  // reject the low partial block so every residue is equally likely
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) {
      return x % bound;
    }
  }
}

double Rng::uniform() noexcept {
  return static_cast<double>(next() >> 11U) * 0x1.0p-53;
}

std::vector<std::uint64_t> sampleWithoutReplacement(Rng& rng,
                                                    std::uint64_t population,
                                                    std::uint64_t k) {
  k = std::min(k, population);
  std::vector<std::uint64_t> out;
  out.reserve(k);
  if (population <= (1U << 20U) || k * 4 > population) {
    // partial Fisher-Yates
    std::vector<std::uint64_t> pool(population);
    std::iota(pool.begin(), pool.end(), std::uint64_t{0});
    for (std::uint64_t i = 0; i < k; ++i) {
      const std::uint64_t j = i + rng.below(population - i);
      std::swap(pool[i], pool[j]);
      out.push_back(pool[i]);
    }
    return out;
  }
  std::unordered_set<std::uint64_t> seen;
  while (out.size() < k) {
    const std::uint64_t x = rng.below(population);
    if (seen.insert(x).second) {
      out.push_back(x);
    }
  }
  return out;
}

} // namespace eqc::ir
