#include "eqc/dd/Operations.hpp"

#include "eqc/Error.hpp"

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace eqc::dd {

namespace {

using C = std::complex<double>;
using Block = std::array<C, 4>;

constexpr Block P0{1., 0., 0., 0.};
constexpr Block P1{0., 0., 0., 1.};

/// kron of per-qubit 2x2 blocks (identity where absent), times `scalar`
Edge kronTerm(Package& pkg, std::size_t n,
              const std::vector<const Block*>& blocks, C scalar) {
  Edge e = Edge::terminal(ComplexValue(scalar));
  for (std::size_t q = 0; q < n; ++q) {
    std::array<Edge, 4> succ{};
    if (blocks[q] == nullptr) {
      succ = {e, Edge::zero(), Edge::zero(), e};
    } else {
      for (std::size_t k = 0; k < 4; ++k) {
        const C f = (*blocks[q])[k];
        succ[k] = f == C{} ? Edge::zero() : Edge{e.p, e.w * ComplexValue(f)};
      }
    }
    e = pkg.makeNode(static_cast<Level>(q), succ);
  }
  return e;
}

} // namespace

Edge gateToDD(Package& pkg, const ir::Gate& g, std::size_t n) {
  ir::validate(g, n);
  const auto u = ir::localMatrix(g);
  const std::size_t k = g.targets.size();
  const std::size_t dim = std::size_t{1} << k;

  std::vector<const Block*> blocks(n, nullptr);
  Edge result = Edge::zero();

  // controls not all |1>: disjoint terms, first control found in |0> decides
  for (std::size_t j = 0; j < g.controls.size(); ++j) {
    std::fill(blocks.begin(), blocks.end(), nullptr);
    for (std::size_t i = 0; i < j; ++i) {
      blocks[g.controls[i]] = &P1;
    }
    blocks[g.controls[j]] = &P0;
    result = pkg.add(result, kronTerm(pkg, n, blocks, 1.));
  }

  std::fill(blocks.begin(), blocks.end(), nullptr);
  for (const ir::Qubit c : g.controls) {
    blocks[c] = &P1;
  }
  if (k == 1) {
    const Block b{u[0], u[1], u[2], u[3]};
    blocks[g.targets[0]] = &b;
    result = pkg.add(result, kronTerm(pkg, n, blocks, 1.));
  } else {
    // sum of u[r][c] |r><c| with one elementary block per target
    std::array<Block, 4> unit{};
    for (std::size_t x = 0; x < 4; ++x) {
      unit[x] = Block{};
      unit[x][x] = 1.;
    }
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        const C v = u[r * dim + c];
        if (v == C{}) {
          continue;
        }
        for (std::size_t t = 0; t < k; ++t) {
          const std::size_t rb = (r >> t) & 1U;
          const std::size_t cb = (c >> t) & 1U;
          blocks[g.targets[t]] = &unit[2 * rb + cb];
        }
        result = pkg.add(result, kronTerm(pkg, n, blocks, v));
      }
    }
  }
  return result;
}

Edge simulateState(Package& pkg, const ir::Circuit& c, Edge state) {
  for (const ir::Gate& g : c.gates) {
    pkg.checkDeadline();
    state = pkg.multiply(gateToDD(pkg, g, c.n), state);
    pkg.collectIfNeeded(std::span<const Edge>(&state, 1));
  }
  return state;
}

Edge simulate(Package& pkg, const ir::Circuit& c, std::uint64_t index) {
  if (c.n < 64 && (index >> c.n) != 0U) {
    throw Error(ErrorCode::IndexOutOfRange,
                "basis state " + std::to_string(index) + " outside " +
                    std::to_string(c.n) + " qubits");
  }
  return simulateState(pkg, c, pkg.basisState(c.n, index));
}

Edge buildMatrix(Package& pkg, const ir::Circuit& c) {
  Edge u = pkg.identity(c.n);
  for (const ir::Gate& g : c.gates) {
    pkg.checkDeadline();
    u = pkg.multiply(gateToDD(pkg, g, c.n), u);
    pkg.collectIfNeeded(std::span<const Edge>(&u, 1));
  }
  return u;
}

} // namespace eqc::dd
