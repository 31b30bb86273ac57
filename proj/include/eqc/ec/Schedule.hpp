#pragma once

#include "eqc/ec/Verdict.hpp"

#include <cstddef>
#include <vector>

namespace eqc::ec {

using Schedule = std::vector<Side>;

/// Alternate starting with G; leftovers of the longer side at the end.
Schedule scheduleNaive(std::size_t m, std::size_t m2);
/// Spread the shorter side evenly; each of its gates is followed (G shorter)
/// or preceded (G' shorter) by a burst of the other side.
Schedule scheduleProportional(std::size_t m, std::size_t m2);
/// All of G, then all of G'.
Schedule scheduleSequential(std::size_t m, std::size_t m2);

/// Counts per side match and every side is in range.
bool isComplete(const Schedule& s, std::size_t m, std::size_t m2);

} // namespace eqc::ec
