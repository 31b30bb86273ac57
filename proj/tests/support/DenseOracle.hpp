#pragma once

// Dense reference implementation: explicit 2^n x 2^n matrices built column
// by column from textbook gate definitions. Shares nothing with the DD code.

#include "eqc/ir/Circuit.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Matrix = std::vector<C>; // row-major
using Vector = std::vector<C>;

inline std::vector<C> block(const eqc::ir::Gate& g) {
  using K = eqc::ir::GateKind;
  const double r = 1. / std::sqrt(2.);
  const C i{0., 1.};
  const auto& p = g.params;
  auto e = [](double phi) { return std::exp(C{0., phi}); };
  auto u3 = [&](double th, double ph, double la) -> std::vector<C> {
    return {std::cos(th / 2), -e(la) * std::sin(th / 2),
            e(ph) * std::sin(th / 2), e(ph + la) * std::cos(th / 2)};
  };
  const double pi = std::numbers::pi;
  switch (g.kind) {
  case K::I: return {1, 0, 0, 1};
  case K::H: return {r, r, r, -r};
  case K::X: return {0, 1, 1, 0};
  case K::Y: return {0, -i, i, 0};
  case K::Z: return {1, 0, 0, -1};
  case K::S: return {1, 0, 0, i};
  case K::Sdg: return {1, 0, 0, -i};
  case K::T: return {1, 0, 0, e(pi / 4)};
  case K::Tdg: return {1, 0, 0, e(-pi / 4)};
  case K::SX: return {(1. + i) / 2., (1. - i) / 2., (1. - i) / 2., (1. + i) / 2.};
  case K::SXdg: return {(1. - i) / 2., (1. + i) / 2., (1. + i) / 2., (1. - i) / 2.};
  case K::RX: return u3(p[0], -pi / 2, pi / 2);
  case K::RY: return u3(p[0], 0, 0);
  case K::RZ: return {e(-p[0] / 2), 0, 0, e(p[0] / 2)};
  case K::P: return {1, 0, 0, e(p[0])};
  case K::U2: return u3(pi / 2, p[0], p[1]);
  case K::U3: return u3(p[0], p[1], p[2]);
  case K::SWAP: return {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1};
  case K::GPhase: return {e(p[0])};
  }
  throw std::logic_error("unknown gate");
}

inline Matrix gate(const eqc::ir::Gate& g, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  const auto u = block(g);
  const std::size_t k = g.targets.size();
  const std::size_t ldim = std::size_t{1} << k;
  Matrix m(dim * dim);
  for (std::size_t col = 0; col < dim; ++col) {
    bool active = true;
    for (auto c : g.controls) {
      active = active && ((col >> c) & 1U) != 0;
    }
    if (!active) {
      m[col * dim + col] = 1.;
      continue;
    }
    std::size_t local = 0;
    std::size_t rest = col;
    for (std::size_t j = 0; j < k; ++j) {
      local |= ((col >> g.targets[j]) & 1U) << j;
      rest &= ~(std::size_t{1} << g.targets[j]);
    }
    for (std::size_t r = 0; r < ldim; ++r) {
      std::size_t row = rest;
      for (std::size_t j = 0; j < k; ++j) {
        row |= ((r >> j) & 1U) << g.targets[j];
      }
      m[row * dim + col] += u[r * ldim + local];
    }
  }
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b, std::size_t dim) {
  Matrix c(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      const C aik = a[i * dim + k];
      if (aik == C{}) {
        continue;
      }
      for (std::size_t j = 0; j < dim; ++j) {
        c[i * dim + j] += aik * b[k * dim + j];
      }
    }
  }
  return c;
}

inline Matrix identity(std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  Matrix m(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m[i * dim + i] = 1.;
  }
  return m;
}

inline Matrix circuit(const eqc::ir::Circuit& c) {
  const std::size_t dim = std::size_t{1} << c.n;
  Matrix u = identity(c.n);
  for (const auto& g : c.gates) {
    u = multiply(gate(g, c.n), u, dim);
  }
  return u;
}

inline Matrix adjoint(const Matrix& a, std::size_t dim) {
  Matrix r(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      r[j * dim + i] = std::conj(a[i * dim + j]);
    }
  }
  return r;
}

inline Vector column(const Matrix& a, std::size_t dim, std::size_t j) {
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = a[i * dim + j];
  }
  return v;
}

inline double maxDiff(const std::vector<C>& a, const std::vector<C>& b) {
  if (a.size() != b.size()) {
    return INFINITY;
  }
  double d = 0.;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(a[i] - b[i]));
  }
  return d;
}

/// |<x|y>|^2
inline double fidelity(const Vector& x, const Vector& y) {
  C s{};
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += std::conj(x[i]) * y[i];
  }
  return std::norm(s);
}

/// alpha with b = e^{i alpha} a entrywise within tol, if it exists
inline std::optional<double> globalPhase(const Matrix& a, const Matrix& b,
                                         double tol) {
  std::size_t pivot = a.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i]) > 0.1) {
      pivot = i;
      break;
    }
  }
  if (pivot == a.size()) {
    return std::nullopt;
  }
  const C ratio = b[pivot] / a[pivot];
  if (std::abs(std::abs(ratio) - 1.) > tol) {
    return std::nullopt;
  }
  const C phase = ratio / std::abs(ratio);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(phase * a[i] - b[i]) > tol) {
      return std::nullopt;
    }
  }
  double alpha = std::arg(phase);
  if (alpha < 0) {
    alpha += 2 * std::numbers::pi;
  }
  return alpha;
}

} // namespace oracle
