#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eqc::ec {

enum class Strategy : std::uint8_t { Reference, Naive, Proportional, Lookahead };

[[nodiscard]] std::string_view toString(Strategy s) noexcept;
[[nodiscard]] std::optional<Strategy> parseStrategy(std::string_view s);

/// Which circuit the next gate comes from.
enum class Side : std::uint8_t { G, GPrime };

enum class Outcome : std::uint8_t {
  Equivalent,
  EquivalentUpToGlobalPhase,
  NotEquivalent,
  ProbablyEquivalent,
};

[[nodiscard]] std::string_view toString(Outcome o) noexcept;

using Amplitudes = std::vector<std::pair<std::uint64_t, std::complex<double>>>;

struct Counterexample {
  enum class Kind : std::uint8_t { BasisState, RelativePhasePair };
  Kind kind{Kind::BasisState};
  std::uint64_t i{0};
  // second index of a RelativePhasePair witness (|i> + |j>)/sqrt2
  std::uint64_t j{0};
  Amplitudes outputG;
  Amplitudes outputG2;
  // true when the amplitude listings were cut at the dump limit
  bool truncated{false};
  double fidelity{1.};

  [[nodiscard]] std::string input() const;
};

struct Stats {
  std::size_t numSims{0};
  double tSim{0.};
  double tEc{0.};
  double tTotal{0.};
  std::size_t maxNodes{0};
  double avgNodes{0.};
  // node count of the working DD after every application, initial first
  std::vector<std::size_t> nodeTrace;
  // side of every application, in order
  std::vector<Side> applied;
  bool timedOut{false};
};

struct Verdict {
  Outcome outcome{Outcome::ProbablyEquivalent};
  // e^{i phase} U = U' for EquivalentUpToGlobalPhase, in [0, 2pi)
  double phase{0.};
  std::optional<Counterexample> counterexample;
  Stats stats;

  [[nodiscard]] bool equivalent() const {
    return outcome == Outcome::Equivalent ||
           outcome == Outcome::EquivalentUpToGlobalPhase;
  }
};

struct Config {
  double tolerance{1e-10};
  double fidelityTolerance{1e-8};
  std::size_t sims{16};
  std::uint64_t seed{0};
  Strategy strategy{Strategy::Proportional};
  // applies to the equivalence-checking phase; unset means unbounded
  std::optional<double> timeoutSeconds;
  // amplitude listings in counterexamples keep at most this many entries
  std::size_t dumpLimit{64};
};

} // namespace eqc::ec
