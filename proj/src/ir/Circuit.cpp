#include "eqc/ir/Circuit.hpp"

#include "eqc/Error.hpp"
#include "eqc/ir/Random.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace eqc::ir {

void validate(const Gate& g, std::size_t n) {
  const std::string gname(name(g.kind));
  if (g.targets.size() != numTargets(g.kind)) {
    throw Error(ErrorCode::InvalidArgument,
                gname + " expects " + std::to_string(numTargets(g.kind)) +
                    " target(s)");
  }
  if (g.params.size() != numParams(g.kind)) {
    throw Error(ErrorCode::InvalidArgument,
                gname + " expects " + std::to_string(numParams(g.kind)) +
                    " parameter(s)");
  }
  for (const double p : g.params) {
    if (!std::isfinite(p)) {
      throw Error(ErrorCode::NonFiniteValue, gname + " has a non-finite angle");
    }
  }
  std::set<Qubit> targets;
  for (const Qubit q : g.targets) {
    if (q >= n) {
      throw Error(ErrorCode::QubitOutOfRange,
                  gname + " target q" + std::to_string(q) + " outside " +
                      std::to_string(n) + " qubits");
    }
    if (!targets.insert(q).second) {
      throw Error(ErrorCode::InvalidArgument,
                  gname + " repeats target q" + std::to_string(q));
    }
  }
  std::set<Qubit> controls;
  for (const Qubit q : g.controls) {
    if (q >= n) {
      throw Error(ErrorCode::QubitOutOfRange,
                  gname + " control q" + std::to_string(q) + " outside " +
                      std::to_string(n) + " qubits");
    }
    if (targets.count(q) != 0) {
      throw Error(ErrorCode::OverlappingControlTarget,
                  gname + " uses q" + std::to_string(q) +
                      " as control and target");
    }
    if (!controls.insert(q).second) {
      throw Error(ErrorCode::InvalidArgument,
                  gname + " repeats control q" + std::to_string(q));
    }
  }
}

void validate(const Circuit& c) {
  for (const Gate& g : c.gates) {
    validate(g, c.n);
  }
}

Circuit& Circuit::append(Gate g) {
  validate(g, n);
  gates.push_back(std::move(g));
  return *this;
}

Circuit invert(const Circuit& c) {
  Circuit r{c.n, {}, c.name};
  r.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    r.gates.push_back(inverse(*it));
  }
  return r;
}

Circuit removeGates(const Circuit& c,
                    const std::vector<std::size_t>& positions) {
  std::vector<bool> drop(c.gates.size(), false);
  for (const std::size_t p : positions) {
    if (p >= c.gates.size()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "gate position " + std::to_string(p) + " outside " +
                      std::to_string(c.gates.size()) + " gates");
    }
    drop[p] = true;
  }
  Circuit r{c.n, {}, c.name};
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    if (!drop[i]) {
      r.gates.push_back(c.gates[i]);
    }
  }
  return r;
}

std::vector<std::size_t> injectionPositions(std::size_t m, std::size_t k,
                                            std::uint64_t seed) {
  if (k > m) {
    throw Error(ErrorCode::TooFewGates,
                "cannot remove " + std::to_string(k) + " of " +
                    std::to_string(m) + " gates");
  }
  Rng rng(seed);
  const auto drawn = sampleWithoutReplacement(rng, m, k);
  return {drawn.begin(), drawn.end()};
}

Circuit injectErrors(const Circuit& c, std::size_t k, std::uint64_t seed) {
  return removeGates(c, injectionPositions(c.gates.size(), k, seed));
}

Circuit concat(const Circuit& a, const Circuit& b) {
  if (a.n != b.n) {
    throw Error(ErrorCode::QubitCountMismatch,
                std::to_string(a.n) + " vs " + std::to_string(b.n) + " qubits");
  }
  Circuit r = a;
  r.gates.insert(r.gates.end(), b.gates.begin(), b.gates.end());
  return r;
}

} // namespace eqc::ir
