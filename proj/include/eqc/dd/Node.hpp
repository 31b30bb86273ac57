#pragma once

#include "eqc/numerics/Complex.hpp"

#include <array>
#include <cstddef>
#include <cstdint>

namespace eqc::dd {

/// Qubit index a node decides; 0 is the least significant basis-state bit.
using Level = std::int16_t;
inline constexpr Level TerminalLevel = -1;

struct Node;

/// Weighted reference to a node. The terminal is the null node pointer; a
/// zero-weight edge always points at the terminal (the "0-stub").
struct Edge {
  const Node* p{nullptr};
  ComplexValue w{};

  static constexpr Edge zero() { return {nullptr, {0., 0.}}; }
  static constexpr Edge one() { return {nullptr, {1., 0.}}; }
  static constexpr Edge terminal(ComplexValue weight) {
    return {nullptr, weight};
  }

  [[nodiscard]] constexpr bool isTerminal() const { return p == nullptr; }
  [[nodiscard]] constexpr bool isZero() const {
    return p == nullptr && w.exactlyZero();
  }
  [[nodiscard]] Level level() const;

  /// Same node and bitwise-identical weight.
  [[nodiscard]] bool identical(const Edge& o) const {
    return p == o.p && w.identical(o.w);
  }
};

/// Matrix nodes hold four successors indexed 2*row + column, where row is
/// the output and column the input value of the node's qubit. Vector nodes
/// use e[0] and e[1] only.
struct Node {
  std::array<Edge, 4> e{};
  Level level{TerminalLevel};
  std::uint8_t arity{0};
  mutable std::uint32_t visited{0};

  [[nodiscard]] bool isMatrix() const { return arity == 4; }
  [[nodiscard]] bool isVector() const { return arity == 2; }
};

inline Level Edge::level() const {
  return p == nullptr ? TerminalLevel : p->level;
}

} // namespace eqc::dd
