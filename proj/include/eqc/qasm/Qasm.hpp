#pragma once

#include "eqc/ir/Circuit.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eqc::qasm {

enum class Severity : std::uint8_t { Error, Warning };

struct Diagnostic {
  std::size_t line{0};
  std::size_t column{0};
  std::string message;
  Severity severity{Severity::Error};
  // "syntax", "UnsupportedGate", "MidCircuitMeasurement", ...
  std::string code;

  [[nodiscard]] std::string format(std::string_view file = {}) const;
};

struct ParseResult {
  std::optional<ir::Circuit> circuit;
  std::vector<Diagnostic> diagnostics;

  [[nodiscard]] bool ok() const { return circuit.has_value(); }
};

inline constexpr std::size_t MaxQubits = 4096;

/// OpenQASM 2.0 subset. Never throws on malformed input; failures come
/// back as error diagnostics and an empty circuit.
ParseResult parse(std::string_view text, std::string name = {});
ParseResult parseFile(const std::string& path);

/// Text accepted by parse() with the same gates. Throws UnsupportedGate for
/// gates without a QASM form (GPhase).
std::string emit(const ir::Circuit& c);

} // namespace eqc::qasm
