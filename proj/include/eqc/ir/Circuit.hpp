#pragma once

#include "eqc/ir/Gate.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace eqc::ir {

struct Circuit {
  std::size_t n{0};
  std::vector<Gate> gates;
  std::string name;

  [[nodiscard]] std::size_t size() const noexcept { return gates.size(); }
  [[nodiscard]] bool empty() const noexcept { return gates.empty(); }

  /// Appends after validating g against n.
  Circuit& append(Gate g);

  bool operator==(const Circuit& o) const {
    return n == o.n && gates == o.gates;
  }
};

/// Throws QubitOutOfRange, OverlappingControlTarget or InvalidArgument
/// (wrong target/parameter count, repeated qubit, non-finite angle).
void validate(const Gate& g, std::size_t n);
void validate(const Circuit& c);

/// g_{m-1}^-1 ... g_0^-1
[[nodiscard]] Circuit invert(const Circuit& c);

/// Copy without the gates at `positions` (duplicates ignored).
/// Throws IndexOutOfRange.
[[nodiscard]] Circuit removeGates(const Circuit& c,
                                  const std::vector<std::size_t>& positions);

/// Removes k distinct, uniformly drawn gate positions. Throws TooFewGates
/// when k exceeds the gate count.
[[nodiscard]] Circuit injectErrors(const Circuit& c, std::size_t k,
                                   std::uint64_t seed);

/// Positions injectErrors(c, k, seed) removes, in draw order.
[[nodiscard]] std::vector<std::size_t>
injectionPositions(std::size_t m, std::size_t k, std::uint64_t seed);

/// Concatenation a then b; qubit counts must match.
[[nodiscard]] Circuit concat(const Circuit& a, const Circuit& b);

} // namespace eqc::ir
