#pragma once

#include "eqc/numerics/Complex.hpp"

#include <cstddef>
#include <cstdint>
#include <unordered_map>

namespace eqc {

/// Tolerance-canonicalizing store for the real components of edge weights.
///
/// Values with magnitude below epsilon collapse to zero. Any other value x
/// is matched against the stored values within epsilon * 2^e, where 2^e is
/// the power of two just above |x|; at magnitude one and above that is the
/// plain absolute tolerance, below it the tolerance shrinks with the value.
/// Buckets have exactly that width, so a bucket never holds two canonical
/// values.
class ComplexTable {
public:
  static constexpr double DefaultTolerance = 1e-10;

  explicit ComplexTable(double tolerance = DefaultTolerance);

  /// Canonical instance within tolerance of (re, im). Throws
  /// Error(NonFiniteValue) for NaN or infinite input.
  ComplexValue lookup(double re, double im);
  ComplexValue lookup(const ComplexValue& c) { return lookup(c.re, c.im); }
  double lookupReal(double x);

  [[nodiscard]] bool approxEq(const ComplexValue& a,
                              const ComplexValue& b) const {
    return eqc::approxEq(a, b, tolerance_);
  }
  [[nodiscard]] bool approxZero(const ComplexValue& a) const {
    return std::abs(a.re) < tolerance_ && std::abs(a.im) < tolerance_;
  }

  [[nodiscard]] double tolerance() const noexcept { return tolerance_; }
  /// Number of canonical reals currently stored (seeds included).
  [[nodiscard]] std::size_t size() const noexcept { return buckets_.size(); }

  /// Drops every stored value except the seeded constants.
  void reset();

  static constexpr double SqrtHalf = 0.70710678118654752440;

private:
  void seed();

  double tolerance_;
  struct Key {
    std::int64_t index;
    std::int32_t exponent;
    bool negative;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };
  [[nodiscard]] double radius(double x) const;
  [[nodiscard]] Key keyOf(double x) const;

  std::unordered_map<Key, double, KeyHash> buckets_;
};

} // namespace eqc
