#include "eqc/ec/Difference.hpp"

#include "eqc/Error.hpp"
#include "eqc/dd/Export.hpp"
#include "eqc/dd/Operations.hpp"

#include <unordered_map>

namespace eqc::ec {

namespace {

using dd::Edge;
using dd::Node;

struct MinEntry {
  double mag{1.};
  std::uint8_t branch{0};
};

double minDiag(const Edge& e, std::unordered_map<const Node*, MinEntry>& memo) {
  if (e.w.exactlyZero()) {
    return 0.;
  }
  const double w = e.w.mag();
  if (e.p == nullptr) {
    return w;
  }
  if (const auto it = memo.find(e.p); it != memo.end()) {
    return w * it->second.mag;
  }
  const double lo = minDiag(e.p->e[0], memo);
  const double hi = minDiag(e.p->e[3], memo);
  const MinEntry entry = hi < lo ? MinEntry{hi, 1} : MinEntry{lo, 0};
  memo.emplace(e.p, entry);
  return w * entry.mag;
}

/// Constant value of all diagonal entries below a unit-weight node, if the
/// diagonal is constant.
struct ConstDiag {
  std::unordered_map<const Node*, std::optional<ComplexValue>> memo;
  double tol;

  std::optional<ComplexValue> of(const Edge& e) {
    if (e.w.exactlyZero()) {
      return ComplexValue{0., 0.};
    }
    if (e.p == nullptr) {
      return e.w;
    }
    auto inner = node(e.p);
    if (!inner) {
      return std::nullopt;
    }
    return *inner * e.w;
  }

  std::optional<ComplexValue> node(const Node* p) {
    if (const auto it = memo.find(p); it != memo.end()) {
      return it->second;
    }
    std::optional<ComplexValue> r;
    const auto lo = of(p->e[0]);
    if (lo) {
      const auto hi = of(p->e[3]);
      if (hi && approxEq(*lo, *hi, tol)) {
        r = lo;
      }
    }
    memo.emplace(p, r);
    return r;
  }
};

/// Smallest index in the subtree whose diagonal value differs from ref.
std::optional<std::uint64_t> firstDifferent(const Edge& e, ComplexValue acc,
                                            std::uint64_t prefix,
                                            const ComplexValue& ref,
                                            ConstDiag& cd) {
  if (const auto c = cd.of(e)) {
    if (approxEq(acc * *c, ref, cd.tol)) {
      return std::nullopt;
    }
    return prefix;
  }
  // non-constant subtree: one of the halves holds a differing entry
  const ComplexValue w = acc * e.w;
  const auto bit = std::uint64_t{1} << static_cast<unsigned>(e.p->level);
  if (auto r = firstDifferent(e.p->e[0], w, prefix, ref, cd)) {
    return r;
  }
  return firstDifferent(e.p->e[3], w, prefix | bit, ref, cd);
}

ComplexValue diagEntry(const Edge& e, std::uint64_t index) {
  ComplexValue w = e.w;
  const Edge* cur = &e;
  while (cur->p != nullptr && !cur->w.exactlyZero()) {
    const auto bit = (index >> static_cast<unsigned>(cur->p->level)) & 1U;
    cur = &cur->p->e[3 * bit];
    w = w * cur->w;
  }
  return cur->w.exactlyZero() ? ComplexValue{0., 0.} : w;
}

// zero blocks point at the terminal, so the level comes from the parent
std::uint64_t countAffected(dd::Package& pkg, const Edge& e, int level,
                            double accMag, double threshold) {
  const std::uint64_t size = std::uint64_t{1} << static_cast<unsigned>(level + 1);
  if (e.w.exactlyZero()) {
    return size;
  }
  const double mag = accMag * e.w.mag();
  const auto id = pkg.identity(static_cast<std::size_t>(level + 1));
  if (e.p == id.p) {
    return mag * mag < threshold ? size : 0;
  }
  return countAffected(pkg, e.p->e[0], level - 1, mag, threshold) +
         countAffected(pkg, e.p->e[3], level - 1, mag, threshold);
}

Counterexample basis(std::uint64_t i) {
  Counterexample c;
  c.kind = Counterexample::Kind::BasisState;
  c.i = i;
  return c;
}

} // namespace

DifferenceAnalysis analyzeDifference(dd::Package& /*pkg*/, const Edge& diff,
                                     double tolerance) {
  DifferenceAnalysis a;
  std::unordered_map<const Node*, MinEntry> memo;
  const double m = minDiag(diff, memo);
  a.minMag2 = m * m;
  const Edge* cur = &diff;
  while (cur->p != nullptr && !cur->w.exactlyZero()) {
    const auto it = memo.find(cur->p);
    const std::uint8_t b = it == memo.end() ? 0 : it->second.branch;
    if (b == 1) {
      a.minIndex |= std::uint64_t{1} << static_cast<unsigned>(cur->p->level);
    }
    cur = &cur->p->e[3 * b];
  }
  a.d00 = diagEntry(diff, 0);
  ConstDiag cd{{}, tolerance};
  a.phaseIndex = firstDifferent(diff, {1., 0.}, 0, a.d00, cd);
  return a;
}

std::uint64_t affectedColumns(dd::Package& pkg, const Edge& diff,
                              double tolerance) {
  return countAffected(pkg, diff, diff.level(), 1., 1. - tolerance);
}

std::uint64_t affectedColumns(const ir::Circuit& diff, double tolerance) {
  dd::Package pkg;
  const Edge d = dd::buildMatrix(pkg, diff);
  return affectedColumns(pkg, d, tolerance);
}

double verifyCounterexample(Counterexample& cex, const ir::Circuit& g,
                            const ir::Circuit& g2, const Config& config) {
  dd::Package pkg(config.tolerance);
  Edge in = pkg.basisState(g.n, cex.i);
  if (cex.kind == Counterexample::Kind::RelativePhasePair) {
    in = pkg.scale(pkg.add(in, pkg.basisState(g.n, cex.j)),
                   ComplexTable::SqrtHalf);
  }
  const dd::Package::Pin pinIn(pkg, in);
  const Edge x = dd::simulateState(pkg, g, in);
  const dd::Package::Pin pinX(pkg, x);
  const Edge y = dd::simulateState(pkg, g2, in);
  cex.fidelity = pkg.fidelity(x, y);
  auto dump = [&](const Edge& e, Amplitudes& out) {
    auto amps = dd::nonzeroAmplitudes(e, config.dumpLimit + 1);
    if (amps.size() > config.dumpLimit) {
      amps.resize(config.dumpLimit);
      cex.truncated = true;
    }
    out = std::move(amps);
  };
  cex.truncated = false;
  dump(x, cex.outputG);
  dump(y, cex.outputG2);
  return cex.fidelity;
}

std::optional<Counterexample>
extractCounterexample(dd::Package& pkg, const Edge& diff, const ir::Circuit& g,
                      const ir::Circuit& g2, const Config& config,
                      const ColumnDifference& columnDifference) {
  if (pkg.isIdentity(diff).kind != dd::IdentityCheck::Kind::No) {
    throw Error(ErrorCode::NotADifference,
                "difference is the identity up to a global phase");
  }
  const double bound = 1. - config.fidelityTolerance;
  const auto rows = analyzeDifference(pkg, diff, config.fidelityTolerance);

  // the diagonal of U U'^dagger only hints at columns; verify each guess
  std::vector<std::uint64_t> guesses;
  if (rows.minMag2 < bound) {
    guesses.push_back(rows.minIndex);
  }
  if (rows.phaseIndex) {
    guesses.push_back(*rows.phaseIndex);
  }
  for (const std::uint64_t i : guesses) {
    Counterexample c = basis(i);
    if (verifyCounterexample(c, g, g2, config) < bound) {
      return c;
    }
  }

  if (!columnDifference) {
    return std::nullopt;
  }
  const dd::Package::Pin keep(pkg, diff);
  const Edge cols = columnDifference(pkg);
  const auto colInfo = analyzeDifference(pkg, cols, config.fidelityTolerance);
  if (colInfo.minMag2 < bound) {
    Counterexample c = basis(colInfo.minIndex);
    if (verifyCounterexample(c, g, g2, config) < bound) {
      return c;
    }
  }
  if (colInfo.phaseIndex) {
    Counterexample c;
    c.kind = Counterexample::Kind::RelativePhasePair;
    c.i = 0;
    c.j = *colInfo.phaseIndex;
    if (verifyCounterexample(c, g, g2, config) < bound) {
      return c;
    }
  }
  return std::nullopt;
}

} // namespace eqc::ec
