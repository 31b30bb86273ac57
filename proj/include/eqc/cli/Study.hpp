#pragma once

#include "eqc/cli/Report.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace eqc::cli {

struct StudyOptions {
  std::size_t instances{100};
  std::size_t remove{1};
  std::size_t sims{16};
  std::uint64_t seed{0};
  // 0 picks the hardware concurrency
  std::size_t threads{0};
  ec::Config config;
};

struct StudyRow {
  std::string benchmark;
  std::size_t n{0};
  std::size_t gates{0};
  std::size_t instances{0};
  double avgSims{0.};
  double avgTSim{0.};
  double maxTSim{0.};
  double pSuccess{0.};
  // set when the benchmark could not be processed
  std::string error;
};

/// Seeds of one instance, derived from the benchmark name and base seed.
struct InstanceSeeds {
  std::uint64_t inject;
  std::uint64_t simulate;
};
std::vector<InstanceSeeds> instanceSeeds(const std::string& name,
                                         std::uint64_t seed,
                                         std::size_t instances);

/// Simulation-only detection over `instances` erroneous copies of g2 (k
/// gates removed each) compared against g.
StudyRow studyPair(const ir::Circuit& g, const ir::Circuit& g2,
                   const StudyOptions& opts);

/// Every *.qasm in dir (sorted), paired with <stem>.alt.qasm when present,
/// otherwise with itself. Files named *.alt.qasm are not benchmarks.
std::vector<StudyRow> studyDirectory(const std::string& dir,
                                     const StudyOptions& opts);

Json toJson(const std::vector<StudyRow>& rows, const StudyOptions& opts,
            bool omitTiming = false);

} // namespace eqc::cli
