#pragma once

#include "eqc/dd/Package.hpp"
#include "eqc/ir/Circuit.hpp"

#include <cstdint>

namespace eqc::dd {

/// System matrix of g on n qubits. Throws QubitOutOfRange,
/// OverlappingControlTarget.
Edge gateToDD(Package& pkg, const ir::Gate& g, std::size_t n);

// The three functions below may garbage-collect between gates. Edges the
// caller still needs must be pinned first.

/// U_{m-1} ... U_0 |index>. Throws IndexOutOfRange.
Edge simulate(Package& pkg, const ir::Circuit& c, std::uint64_t index);
/// U_{m-1} ... U_0 |state>
Edge simulateState(Package& pkg, const ir::Circuit& c, Edge state);

/// U = U_{m-1} ... U_0; identity for the empty circuit.
Edge buildMatrix(Package& pkg, const ir::Circuit& c);

} // namespace eqc::dd
