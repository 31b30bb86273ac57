#include "eqc/ec/Checker.hpp"

#include "eqc/Error.hpp"
#include "eqc/dd/Operations.hpp"
#include "eqc/ec/Difference.hpp"
#include "eqc/ir/Random.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace eqc::ec {

namespace {

using dd::Edge;
using dd::Package;
using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void requireSameWidth(const ir::Circuit& g, const ir::Circuit& g2) {
  if (g.n != g2.n) {
    throw Error(ErrorCode::QubitCountMismatch,
                std::to_string(g.n) + " vs " + std::to_string(g2.n) +
                    " qubits");
  }
}

class DeadlineScope {
public:
  DeadlineScope(Package& pkg, const Config& config) : pkg_(pkg) {
    if (config.timeoutSeconds) {
      const auto budget = std::chrono::duration_cast<Clock::duration>(
          std::chrono::duration<double>(std::max(0., *config.timeoutSeconds)));
      pkg_.setDeadline(Clock::now() + budget);
    }
  }
  ~DeadlineScope() { pkg_.setDeadline(std::nullopt); }
  DeadlineScope(const DeadlineScope&) = delete;
  DeadlineScope& operator=(const DeadlineScope&) = delete;

private:
  Package& pkg_;
};

void summarize(Stats& s) {
  if (s.nodeTrace.empty()) {
    return;
  }
  s.maxNodes = *std::max_element(s.nodeTrace.begin(), s.nodeTrace.end());
  s.avgNodes = static_cast<double>(std::accumulate(
                   s.nodeTrace.begin(), s.nodeTrace.end(), std::size_t{0})) /
               static_cast<double>(s.nodeTrace.size());
}

/// Verdict for a difference U U'^dagger that may or may not be identity.
void classify(Package& pkg, const Edge& diff, const ir::Circuit& g,
              const ir::Circuit& g2, const Config& config,
              const ColumnDifference& columns, Verdict& v) {
  const auto id = pkg.isIdentity(diff);
  if (id.kind == dd::IdentityCheck::Kind::Exact) {
    v.outcome = Outcome::Equivalent;
    return;
  }
  // diff = e^{-i alpha} I when U' = e^{i alpha} U
  auto fromPhase = [&](double argDiff) {
    const double alpha = normalizePhase(-argDiff);
    const double dist = std::min(alpha, 2. * std::numbers::pi - alpha);
    if (dist < config.tolerance) {
      v.outcome = Outcome::Equivalent;
    } else {
      v.outcome = Outcome::EquivalentUpToGlobalPhase;
      v.phase = alpha;
    }
  };
  if (id.kind == dd::IdentityCheck::Kind::GlobalPhase) {
    fromPhase(id.phase);
    return;
  }
  pkg.setDeadline(std::nullopt);
  v.counterexample = extractCounterexample(pkg, diff, g, g2, config, columns);
  if (v.counterexample) {
    v.outcome = Outcome::NotEquivalent;
    return;
  }
  // structurally not the identity, yet no input separates the circuits
  // beyond the fidelity tolerance
  fromPhase(analyzeDifference(pkg, diff, config.fidelityTolerance).d00.arg());
}

struct SchemeRun {
  Edge e;
  Stats stats;
};

/// Runs G -> I <- G'. With `schedule` null the look-ahead rule decides.
SchemeRun runScheme(Package& pkg, const ir::Circuit& g, const ir::Circuit& g2,
                    const Schedule* schedule) {
  SchemeRun run;
  Edge e = pkg.identity(g.n);
  run.stats.nodeTrace.push_back(pkg.nodeCount(e));
  std::size_t i = 0;
  std::size_t j = 0;
  const std::size_t total = g.size() + g2.size();
  for (std::size_t step = 0; step < total; ++step) {
    pkg.checkDeadline();
    Side side{};
    if (schedule != nullptr) {
      side = (*schedule)[step];
    } else if (i < g.size() && j < g2.size()) {
      const auto la = stepLookahead(pkg, e, g.gates[i], g2.gates[j], g.n);
      side = la.side;
      e = la.result;
    } else {
      side = i < g.size() ? Side::G : Side::GPrime;
    }
    const bool decided = schedule == nullptr && i < g.size() && j < g2.size();
    if (!decided) {
      if (side == Side::G) {
        e = pkg.multiply(dd::gateToDD(pkg, g.gates[i], g.n), e);
      } else {
        e = pkg.multiply(e, dd::gateToDD(pkg, ir::inverse(g2.gates[j]), g.n));
      }
    }
    (side == Side::G ? i : j)++;
    run.stats.applied.push_back(side);
    run.stats.nodeTrace.push_back(pkg.nodeCount(e));
    pkg.collectIfNeeded(std::span<const Edge>(&e, 1));
  }
  run.e = e;
  summarize(run.stats);
  return run;
}

} // namespace

LookaheadStep stepLookahead(Package& pkg, const Edge& e, const ir::Gate& g,
                            const ir::Gate& g2, std::size_t n) {
  const Edge left = pkg.multiply(dd::gateToDD(pkg, g, n), e);
  const Package::Pin keep(pkg, left);
  const Edge right = pkg.multiply(e, dd::gateToDD(pkg, ir::inverse(g2), n));
  LookaheadStep s;
  s.nodesG = pkg.nodeCount(left);
  s.nodesGPrime = pkg.nodeCount(right);
  if (s.nodesGPrime < s.nodesG) {
    s.side = Side::GPrime;
    s.result = right;
  } else {
    s.side = Side::G;
    s.result = left;
  }
  return s;
}

Verdict checkReference(const ir::Circuit& g, const ir::Circuit& g2,
                       const Config& config) {
  requireSameWidth(g, g2);
  const auto start = Clock::now();
  Verdict v;
  Package pkg(config.tolerance);
  try {
    const DeadlineScope scope(pkg, config);
    pkg.checkDeadline();
    auto build = [&](const ir::Circuit& c) {
      Edge u = pkg.identity(c.n);
      v.stats.nodeTrace.push_back(pkg.nodeCount(u));
      for (const ir::Gate& gate : c.gates) {
        pkg.checkDeadline();
        u = pkg.multiply(dd::gateToDD(pkg, gate, c.n), u);
        v.stats.nodeTrace.push_back(pkg.nodeCount(u));
        pkg.collectIfNeeded(std::span<const Edge>(&u, 1));
      }
      return u;
    };
    const Edge u = build(g);
    const Package::Pin pinU(pkg, u);
    const Edge u2 = build(g2);
    const Package::Pin pinU2(pkg, u2);
    summarize(v.stats);

    if (u.p == u2.p && !u.w.exactlyZero() && !u2.w.exactlyZero()) {
      const ComplexValue ratio = u2.w / u.w;
      if (approxEq(ratio, {1., 0.}, config.tolerance)) {
        v.outcome = Outcome::Equivalent;
      } else if (std::abs(ratio.mag() - 1.) < config.tolerance) {
        v.outcome = Outcome::EquivalentUpToGlobalPhase;
        v.phase = normalizePhase(ratio.arg());
      }
    }
    if (v.outcome == Outcome::ProbablyEquivalent) {
      const Edge diff = pkg.multiply(u, pkg.adjoint(u2));
      const Package::Pin pinDiff(pkg, diff);
      classify(pkg, diff, g, g2, config,
               [&](Package& p) { return p.multiply(p.adjoint(u), u2); }, v);
    }
  } catch (const dd::DeadlineExceeded&) {
    v = Verdict{};
    v.stats.timedOut = true;
  }
  v.stats.tEc = secondsSince(start);
  v.stats.tTotal = v.stats.tEc;
  return v;
}

Verdict checkWithSchedule(const ir::Circuit& g, const ir::Circuit& g2,
                          const Schedule& schedule, const Config& config) {
  requireSameWidth(g, g2);
  if (!isComplete(schedule, g.size(), g2.size())) {
    throw Error(ErrorCode::InvalidArgument,
                "schedule does not cover both circuits");
  }
  const auto start = Clock::now();
  Verdict v;
  Package pkg(config.tolerance);
  try {
    const DeadlineScope scope(pkg, config);
    auto run = runScheme(pkg, g, g2, &schedule);
    v.stats = std::move(run.stats);
    const Package::Pin pinDiff(pkg, run.e);
    // inverted circuits turn U U'^dagger into U^dagger U'
    const ColumnDifference columns = [&](Package& p) {
      const auto gi = ir::invert(g);
      const auto g2i = ir::invert(g2);
      const auto s = scheduleProportional(gi.size(), g2i.size());
      return runScheme(p, gi, g2i, &s).e;
    };
    classify(pkg, run.e, g, g2, config, columns, v);
  } catch (const dd::DeadlineExceeded&) {
    v.outcome = Outcome::ProbablyEquivalent;
    v.counterexample.reset();
    v.stats.timedOut = true;
  }
  v.stats.tEc = secondsSince(start);
  v.stats.tTotal = v.stats.tEc;
  return v;
}

Verdict checkAlternating(const ir::Circuit& g, const ir::Circuit& g2,
                         Strategy strategy, const Config& config) {
  requireSameWidth(g, g2);
  switch (strategy) {
  case Strategy::Naive:
    return checkWithSchedule(g, g2, scheduleNaive(g.size(), g2.size()),
                             config);
  case Strategy::Proportional:
    return checkWithSchedule(g, g2, scheduleProportional(g.size(), g2.size()),
                             config);
  case Strategy::Lookahead:
    break;
  case Strategy::Reference:
    throw Error(ErrorCode::InvalidArgument,
                "the reference check has no application schedule");
  }
  const auto start = Clock::now();
  Verdict v;
  Package pkg(config.tolerance);
  try {
    const DeadlineScope scope(pkg, config);
    auto run = runScheme(pkg, g, g2, nullptr);
    v.stats = std::move(run.stats);
    const Package::Pin pinDiff(pkg, run.e);
    const ColumnDifference columns = [&](Package& p) {
      const auto gi = ir::invert(g);
      const auto g2i = ir::invert(g2);
      return runScheme(p, gi, g2i, nullptr).e;
    };
    classify(pkg, run.e, g, g2, config, columns, v);
  } catch (const dd::DeadlineExceeded&) {
    v.outcome = Outcome::ProbablyEquivalent;
    v.counterexample.reset();
    v.stats.timedOut = true;
  }
  v.stats.tEc = secondsSince(start);
  v.stats.tTotal = v.stats.tEc;
  return v;
}

Verdict checkEquivalence(const ir::Circuit& g, const ir::Circuit& g2,
                         Strategy strategy, const Config& config) {
  if (strategy == Strategy::Reference) {
    return checkReference(g, g2, config);
  }
  return checkAlternating(g, g2, strategy, config);
}

SimulationResult checkSimulation(const ir::Circuit& g, const ir::Circuit& g2,
                                 std::size_t r, std::uint64_t seed,
                                 const Config& config) {
  requireSameWidth(g, g2);
  const auto start = Clock::now();
  SimulationResult res;
  const std::uint64_t population =
      g.n >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << g.n;
  ir::Rng rng(seed);
  const auto indices = ir::sampleWithoutReplacement(rng, population, r);
  Package pkg(config.tolerance);
  for (const std::uint64_t i : indices) {
    ++res.runs;
    const Edge x = dd::simulate(pkg, g, i);
    const Package::Pin keep(pkg, x);
    const Edge y = dd::simulate(pkg, g2, i);
    if (pkg.fidelity(x, y) < 1. - config.fidelityTolerance) {
      Counterexample c;
      c.kind = Counterexample::Kind::BasisState;
      c.i = i;
      verifyCounterexample(c, g, g2, config);
      res.counterexample = std::move(c);
      break;
    }
  }
  res.seconds = secondsSince(start);
  return res;
}

Verdict checkFlow(const ir::Circuit& g, const ir::Circuit& g2,
                  const Config& config) {
  requireSameWidth(g, g2);
  const auto start = Clock::now();
  Verdict v;
  if (config.sims > 0) {
    auto sim = checkSimulation(g, g2, config.sims, config.seed, config);
    if (sim.counterexample) {
      v.outcome = Outcome::NotEquivalent;
      v.counterexample = std::move(sim.counterexample);
      v.stats.numSims = sim.runs;
      v.stats.tSim = sim.seconds;
      v.stats.tTotal = secondsSince(start);
      return v;
    }
    v.stats.numSims = sim.runs;
    v.stats.tSim = sim.seconds;
  }
  const std::size_t sims = v.stats.numSims;
  const double tSim = v.stats.tSim;
  v = checkEquivalence(g, g2, config.strategy, config);
  v.stats.numSims = sims;
  v.stats.tSim = tSim;
  v.stats.tTotal = secondsSince(start);
  return v;
}

} // namespace eqc::ec
