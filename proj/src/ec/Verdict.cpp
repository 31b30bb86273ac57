#include "eqc/ec/Verdict.hpp"

#include <array>

namespace eqc::ec {

namespace {
constexpr std::array<std::string_view, 4> StrategyNames{
    "reference", "naive", "proportional", "lookahead"};
}

std::string_view toString(Strategy s) noexcept {
  return StrategyNames[static_cast<std::size_t>(s)];
}

std::optional<Strategy> parseStrategy(std::string_view s) {
  for (std::size_t i = 0; i < StrategyNames.size(); ++i) {
    if (StrategyNames[i] == s) {
      return static_cast<Strategy>(i);
    }
  }
  return std::nullopt;
}

std::string_view toString(Outcome o) noexcept {
  switch (o) {
  case Outcome::Equivalent:
    return "equivalent";
  case Outcome::EquivalentUpToGlobalPhase:
    return "equivalent_up_to_global_phase";
  case Outcome::NotEquivalent:
    return "not_equivalent";
  case Outcome::ProbablyEquivalent:
    return "probably_equivalent";
  }
  return "unknown";
}

std::string Counterexample::input() const {
  if (kind == Kind::BasisState) {
    return "|" + std::to_string(i) + ">";
  }
  return "(|" + std::to_string(i) + "> + |" + std::to_string(j) + ">)/sqrt2";
}

} // namespace eqc::ec
