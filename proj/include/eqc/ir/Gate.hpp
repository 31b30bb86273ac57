#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace eqc::ir {

using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t {
  I,
  H,
  X,
  Y,
  Z,
  S,
  Sdg,
  T,
  Tdg,
  SX,
  SXdg,
  RX,
  RY,
  RZ,
  P,
  U2,
  U3,
  SWAP,
  // global phase e^{i*alpha}; acts on no target. IR only, has no QASM form
  GPhase,
};

inline constexpr std::size_t GateKindCount =
    static_cast<std::size_t>(GateKind::GPhase) + 1;

[[nodiscard]] std::string_view name(GateKind kind) noexcept;
[[nodiscard]] std::optional<GateKind> kindFromName(std::string_view name);
[[nodiscard]] std::size_t numTargets(GateKind kind) noexcept;
[[nodiscard]] std::size_t numParams(GateKind kind) noexcept;

struct Gate {
  GateKind kind{GateKind::I};
  std::vector<double> params;
  std::vector<Qubit> targets;
  std::vector<Qubit> controls;

  bool operator==(const Gate&) const = default;
};

Gate makeGate(GateKind kind, std::vector<Qubit> targets,
              std::vector<Qubit> controls = {},
              std::vector<double> params = {});

/// Same kind, qubits and control lists; parameters within `tolerance`.
[[nodiscard]] bool approxEqual(const Gate& a, const Gate& b,
                               double tolerance = 1e-12);

/// Row-major 2^k x 2^k block acting on the targets. Local basis index bit j
/// is the value of targets[j].
[[nodiscard]] std::vector<std::complex<double>> localMatrix(const Gate& g);

/// Gate implementing the inverse operation, controls unchanged.
[[nodiscard]] Gate inverse(const Gate& g);

} // namespace eqc::ir
