#pragma once

#include "eqc/ec/Verdict.hpp"
#include "eqc/ir/Circuit.hpp"

#include <nlohmann/json.hpp>

#include <complex>
#include <cstdint>
#include <string>

namespace eqc::cli {

using Json = nlohmann::ordered_json;

struct RunReport {
  std::string benchmark;
  std::size_t n{0};
  std::size_t gatesG{0};
  std::size_t gatesG2{0};
  ec::Verdict verdict;
  ec::Strategy strategy{ec::Strategy::Proportional};
  std::uint64_t seed{0};
};

RunReport makeReport(const ir::Circuit& g, const ir::Circuit& g2,
                     const ec::Verdict& v, const ec::Config& config);

/// Fixed key order. With omitTiming the timing fields are null, so equal
/// inputs give byte-identical output.
Json toJson(const RunReport& r, bool omitTiming = false);

/// Exit status for a verdict: 0 equivalent (incl. global phase), 1 not
/// equivalent, 2 probably equivalent.
int exitCode(ec::Outcome o) noexcept;

/// "0.70710678", "1.0", "0.5-0.5i"
std::string formatAmplitude(std::complex<double> a);
/// q_{n-1} ... q_0
std::string bitstring(std::uint64_t index, std::size_t n);
/// "010: 0.70710678, 110: 0.70710678"
std::string formatState(const ec::Amplitudes& amps, std::size_t n);

/// Plain-text rendering for terminals.
std::string toText(const RunReport& r);

} // namespace eqc::cli
