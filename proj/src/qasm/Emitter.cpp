#include "eqc/qasm/Qasm.hpp"

#include "eqc/Error.hpp"

#include <cstdio>
#include <sstream>

namespace eqc::qasm {

namespace {

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string gateName(const ir::Gate& g) {
  std::string base;
  switch (g.kind) {
  case ir::GateKind::P:
    base = "u1";
    break;
  case ir::GateKind::GPhase:
    throw Error(ErrorCode::UnsupportedGate,
                "a global phase gate has no OpenQASM 2.0 form");
  default:
    base = std::string(ir::name(g.kind));
  }
  const std::size_t k = g.controls.size();
  if (k >= 3) {
    return "c" + std::to_string(k) + base;
  }
  return std::string(k, 'c') + base;
}

} // namespace

std::string emit(const ir::Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  if (c.n > 0) {
    os << "qreg q[" << c.n << "];\n";
  }
  for (const ir::Gate& g : c.gates) {
    os << gateName(g);
    if (!g.params.empty()) {
      os << "(";
      for (std::size_t i = 0; i < g.params.size(); ++i) {
        os << (i == 0 ? "" : ",") << number(g.params[i]);
      }
      os << ")";
    }
    bool first = true;
    for (const auto* list : {&g.controls, &g.targets}) {
      for (const ir::Qubit q : *list) {
        os << (first ? " " : ",") << "q[" << q << "]";
        first = false;
      }
    }
    os << ";\n";
  }
  return os.str();
}

} // namespace eqc::qasm
