#pragma once

#include "eqc/dd/Package.hpp"
#include "eqc/ec/Verdict.hpp"
#include "eqc/ir/Circuit.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace eqc::ec {

/// Facts about the diagonal d_ii of a difference matrix.
struct DifferenceAnalysis {
  // index with the smallest |d_ii|, and that value squared
  std::uint64_t minIndex{0};
  double minMag2{1.};
  // d_00 and the smallest j with d_jj != d_00, if any
  ComplexValue d00{};
  std::optional<std::uint64_t> phaseIndex;
};

/// Linear in the DD size. `tolerance` decides when two diagonal entries
/// are considered equal.
DifferenceAnalysis analyzeDifference(dd::Package& pkg, const dd::Edge& diff,
                                     double tolerance);

/// Columns i of the matrix of `diff` that are not a phase times |i>, i.e.
/// |d_ii|^2 < 1 - tolerance.
std::uint64_t affectedColumns(dd::Package& pkg, const dd::Edge& diff,
                              double tolerance = 1e-8);
std::uint64_t affectedColumns(const ir::Circuit& diff, double tolerance = 1e-8);

/// Produces the column difference U^dagger U' on demand.
using ColumnDifference = std::function<dd::Edge(dd::Package&)>;

/// Witness that g and g2 differ, re-verified by simulating both circuits in
/// a fresh package. `diff` is U U'^dagger. Basis states suggested by the
/// diagonal of `diff` are tried first, then the column difference. Returns
/// nullopt when no witness reaches fidelity below 1 - fidelityTolerance.
/// Throws NotADifference if `diff` is the identity up to a global phase.
std::optional<Counterexample>
extractCounterexample(dd::Package& pkg, const dd::Edge& diff,
                      const ir::Circuit& g, const ir::Circuit& g2,
                      const Config& config,
                      const ColumnDifference& columnDifference);

/// Fidelity of the outputs of g and g2 on |i>, or on (|i>+|j>)/sqrt2 for a
/// RelativePhasePair, computed independently of any difference DD. The
/// amplitude listings of `cex` are filled in.
double verifyCounterexample(Counterexample& cex, const ir::Circuit& g,
                            const ir::Circuit& g2, const Config& config);

} // namespace eqc::ec
