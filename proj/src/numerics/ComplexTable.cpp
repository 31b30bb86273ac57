#include "eqc/numerics/ComplexTable.hpp"

#include "eqc/Error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <limits>
#include <string>

namespace eqc {

namespace {

// binades above this share one absolute bucket width; beyond it the width
// grows again so bucket indices stay below 2^62
int maxFlatExponent(double tolerance) {
  return std::max(0, static_cast<int>(std::floor(62. + std::log2(tolerance))));
}

int scaleExponent(double x, int flat) {
  int e = 0;
  (void)std::frexp(x, &e);
  if (e <= 0) {
    return e;
  }
  return e <= flat ? 0 : e - flat;
}

} // namespace

std::size_t ComplexTable::KeyHash::operator()(const Key& k) const noexcept {
  std::uint64_t h = static_cast<std::uint64_t>(k.index) * 0x9E3779B97F4A7C15ULL;
  h ^= (static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.exponent)) << 1U) |
       (k.negative ? 1U : 0U);
  h ^= h >> 29U;
  return static_cast<std::size_t>(h);
}

ComplexTable::ComplexTable(double tolerance) : tolerance_(tolerance) {
  if (!(tolerance >= 1e-18) || !std::isfinite(tolerance) || tolerance > 1.) {
    throw Error(ErrorCode::InvalidArgument,
                "tolerance must lie in [1e-18, 1]");
  }
  seed();
}

void ComplexTable::seed() {
  // seeds are inserted first so they own their buckets
  for (const double v : {1., -1., SqrtHalf, -SqrtHalf, 0.5, -0.5}) {
    lookupReal(v);
  }
}

void ComplexTable::reset() {
  buckets_.clear();
  seed();
}

double ComplexTable::radius(double x) const {
  return std::ldexp(tolerance_, scaleExponent(std::abs(x), maxFlatExponent(tolerance_)));
}

ComplexTable::Key ComplexTable::keyOf(double x) const {
  const double a = std::abs(x);
  const int s = scaleExponent(a, maxFlatExponent(tolerance_));
  const double width = std::ldexp(tolerance_, s);
  return {static_cast<std::int64_t>(std::floor(a / width)), s, x < 0.};
}

double ComplexTable::lookupReal(double x) {
  if (!std::isfinite(x)) {
    throw Error(ErrorCode::NonFiniteValue,
                "cannot canonicalize " + std::to_string(x));
  }
  if (std::abs(x) < tolerance_) {
    return 0.;
  }
  const double r = radius(x);
  const Key own = keyOf(x);

  double best = x;
  double bestDistance = std::numeric_limits<double>::infinity();
  std::array<Key, 5> seen{};
  std::size_t nseen = 0;
  for (const double offset : {0., -r, -.5 * r, .5 * r, r}) {
    const double y = x + offset;
    if (std::abs(y) < tolerance_ || (y < 0.) != (x < 0.)) {
      continue;
    }
    const Key k = keyOf(y);
    if (std::find(seen.begin(), seen.begin() + static_cast<std::ptrdiff_t>(nseen), k) !=
        seen.begin() + static_cast<std::ptrdiff_t>(nseen)) {
      continue;
    }
    seen[nseen++] = k;
    const auto it = buckets_.find(k);
    if (it == buckets_.end()) {
      continue;
    }
    const double d = std::abs(it->second - x);
    if (d < r && d < bestDistance) {
      best = it->second;
      bestDistance = d;
    }
  }
  if (bestDistance < r) {
    return best;
  }
  buckets_.emplace(own, x);
  return x;
}

ComplexValue ComplexTable::lookup(double re, double im) {
  return {lookupReal(re), lookupReal(im)};
}

} // namespace eqc
