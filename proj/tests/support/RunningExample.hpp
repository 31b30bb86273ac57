#pragma once

#include "DenseOracle.hpp"

#include "eqc/ir/Circuit.hpp"

#include <cmath>
#include <string>

namespace testing_support {

inline std::string dataPath(const std::string& file) {
  return std::string(EQC_TEST_DATA_DIR) + "/" + file;
}

// running example: H, CX, Toffoli, CX on three qubits
inline eqc::ir::Circuit exampleG() {
  using eqc::ir::GateKind;
  using eqc::ir::makeGate;
  eqc::ir::Circuit c{3, {}, "g"};
  c.append(makeGate(GateKind::H, {1}));
  c.append(makeGate(GateKind::X, {2}, {1}));
  c.append(makeGate(GateKind::X, {0}, {2, 1}));
  c.append(makeGate(GateKind::X, {1}, {2}));
  return c;
}

// same function with the Toffoli decomposed into Clifford+T
inline eqc::ir::Circuit exampleGPrime() {
  using eqc::ir::GateKind;
  using eqc::ir::makeGate;
  eqc::ir::Circuit c{3, {}, "gprime"};
  c.append(makeGate(GateKind::H, {1}));
  c.append(makeGate(GateKind::X, {2}, {1}));
  c.append(makeGate(GateKind::H, {0}));
  c.append(makeGate(GateKind::X, {0}, {1}));
  c.append(makeGate(GateKind::Tdg, {0}));
  c.append(makeGate(GateKind::X, {0}, {2}));
  c.append(makeGate(GateKind::T, {0}));
  c.append(makeGate(GateKind::X, {0}, {1}));
  c.append(makeGate(GateKind::Tdg, {0}));
  c.append(makeGate(GateKind::T, {1}));
  c.append(makeGate(GateKind::X, {0}, {2}));
  c.append(makeGate(GateKind::X, {1}, {2}));
  c.append(makeGate(GateKind::T, {0}));
  c.append(makeGate(GateKind::H, {0}));
  c.append(makeGate(GateKind::Tdg, {1}));
  c.append(makeGate(GateKind::T, {2}));
  return c;
}

// exampleGPrime with its final T gate missing
inline eqc::ir::Circuit exampleGTilde() {
  auto c = exampleGPrime();
  c.gates.pop_back();
  c.name = "gtilde";
  return c;
}

// system matrix of exampleG, written out by hand
inline oracle::Matrix exampleMatrix() {
  const double s = 1. / std::sqrt(2.);
  const int m[8][8] = {
      {1, 0, 1, 0, 0, 0, 0, 0},  {0, 1, 0, 1, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 0, -1, 0}, {0, 0, 0, 0, 0, 1, 0, -1},
      {0, 1, 0, -1, 0, 0, 0, 0}, {1, 0, -1, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 1, 0, 1, 0},  {0, 0, 0, 0, 0, 1, 0, 1}};
  oracle::Matrix out(64);
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      out[static_cast<std::size_t>(r * 8 + c)] = s * m[r][c];
    }
  }
  return out;
}

} // namespace testing_support
