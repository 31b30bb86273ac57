#pragma once

#include "eqc/dd/Package.hpp"
#include "eqc/ec/Schedule.hpp"
#include "eqc/ec/Verdict.hpp"
#include "eqc/ir/Circuit.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>

namespace eqc::ec {

/// Builds both system matrices and compares root edges.
Verdict checkReference(const ir::Circuit& g, const ir::Circuit& g2,
                       const Config& config = {});

/// G -> I <- G' with a scheduling strategy (not Reference).
Verdict checkAlternating(const ir::Circuit& g, const ir::Circuit& g2,
                         Strategy strategy, const Config& config = {});

/// G -> I <- G' following a fixed application sequence.
Verdict checkWithSchedule(const ir::Circuit& g, const ir::Circuit& g2,
                          const Schedule& schedule, const Config& config = {});

/// Reference or alternating, by strategy.
Verdict checkEquivalence(const ir::Circuit& g, const ir::Circuit& g2,
                         Strategy strategy, const Config& config = {});

struct LookaheadStep {
  Side side{Side::G};
  dd::Edge result;
  std::size_t nodesG{0};
  std::size_t nodesGPrime{0};
};

/// Tries gate g from the left and gate g2 (of G') inverted from the right of
/// e and keeps the smaller product; ties go to G.
LookaheadStep stepLookahead(dd::Package& pkg, const dd::Edge& e,
                            const ir::Gate& g, const ir::Gate& g2,
                            std::size_t n);

struct SimulationResult {
  std::optional<Counterexample> counterexample;
  // runs performed, the failing one included
  std::size_t runs{0};
  double seconds{0.};
};

/// min(r, 2^n) distinct random basis states, stops at the first witness.
SimulationResult checkSimulation(const ir::Circuit& g, const ir::Circuit& g2,
                                 std::size_t r, std::uint64_t seed,
                                 const Config& config = {});

/// Random simulations first, then the configured equivalence check under
/// the timeout.
Verdict checkFlow(const ir::Circuit& g, const ir::Circuit& g2,
                  const Config& config = {});

} // namespace eqc::ec
