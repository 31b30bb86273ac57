#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <functional>

namespace eqc {

/// Plain double-precision complex number used for DD edge weights.
///
/// Instances handed out by a ComplexTable are canonical: two weights that
/// were looked up in the same table compare bitwise equal iff they denote
/// the same tolerance class.
struct ComplexValue {
  double re{};
  double im{};

  constexpr ComplexValue() = default;
  constexpr ComplexValue(double r, double i = 0.) : re(r), im(i) {}
  explicit ComplexValue(std::complex<double> c) : re(c.real()), im(c.imag()) {}

  [[nodiscard]] std::complex<double> toStd() const { return {re, im}; }

  [[nodiscard]] constexpr bool exactlyZero() const {
    return re == 0. && im == 0.;
  }
  [[nodiscard]] constexpr bool exactlyOne() const {
    return re == 1. && im == 0.;
  }

  [[nodiscard]] constexpr double mag2() const { return re * re + im * im; }
  [[nodiscard]] double mag() const { return std::hypot(re, im); }
  [[nodiscard]] double arg() const { return std::atan2(im, re); }
  [[nodiscard]] constexpr ComplexValue conj() const { return {re, -im}; }

  /// Bitwise identity, the notion of "same stored instance".
  [[nodiscard]] bool identical(const ComplexValue& o) const {
    return std::memcmp(this, &o, sizeof(ComplexValue)) == 0;
  }

  friend constexpr ComplexValue operator+(ComplexValue a, ComplexValue b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend constexpr ComplexValue operator-(ComplexValue a, ComplexValue b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend constexpr ComplexValue operator-(ComplexValue a) {
    return {-a.re, -a.im};
  }
  friend constexpr ComplexValue operator*(ComplexValue a, ComplexValue b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend constexpr ComplexValue operator*(ComplexValue a, double s) {
    return {a.re * s, a.im * s};
  }
  friend ComplexValue operator/(ComplexValue a, ComplexValue b) {
    if (b.im == 0.) {
      return {a.re / b.re, a.im / b.re};
    }
    const double d = b.mag2();
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
};

inline bool approxEq(const ComplexValue& a, const ComplexValue& b,
                     double tolerance) {
  return std::abs(a.re - b.re) < tolerance && std::abs(a.im - b.im) < tolerance;
}

inline ComplexValue polar(double magnitude, double phase) {
  return {magnitude * std::cos(phase), magnitude * std::sin(phase)};
}

/// Maps an angle onto [0, 2*pi).
inline double normalizePhase(double phase) {
  constexpr double twoPi = 2. * 3.14159265358979323846;
  double p = std::fmod(phase, twoPi);
  if (p < 0.) {
    p += twoPi;
  }
  if (p >= twoPi) {
    p = 0.;
  }
  return p;
}

struct ComplexValueHash {
  std::size_t operator()(const ComplexValue& c) const noexcept {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::memcpy(&a, &c.re, sizeof a);
    std::memcpy(&b, &c.im, sizeof b);
    return std::hash<std::uint64_t>{}(a ^ (b * 0x9E3779B97F4A7C15ULL));
  }
};

} // namespace eqc
