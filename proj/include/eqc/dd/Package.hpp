#pragma once

#include "eqc/dd/Node.hpp"
#include "eqc/numerics/ComplexTable.hpp"

#include <chrono>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace eqc::dd {

/// Thrown from inside DD recursions once the package deadline has passed.
class DeadlineExceeded : public std::runtime_error {
public:
  DeadlineExceeded() : std::runtime_error("deadline exceeded") {}
};

struct IdentityCheck {
  enum class Kind { Exact, GlobalPhase, No };
  Kind kind{Kind::No};
  /// arg of the root weight for GlobalPhase, in [0, 2pi)
  double phase{0.};
};

/// A decision-diagram package: unique table, compute table and complex
/// table for quasi-reduced QMDDs (every level 0..n-1 is present on each
/// nonzero path).
///
/// A package is single-threaded; run one package per thread. Edges are only
/// meaningful inside the package that created them. Edges that are not
/// passed as roots to garbageCollect() must not be used afterwards.
class Package {
public:
  class Pin;

  explicit Package(double tolerance = ComplexTable::DefaultTolerance);
  ~Package() = default;
  Package(const Package&) = delete;
  Package& operator=(const Package&) = delete;

  [[nodiscard]] ComplexTable& complexTable() noexcept { return complex_; }
  [[nodiscard]] double tolerance() const noexcept {
    return complex_.tolerance();
  }

  /// Normalized, hash-consed node. `successors` holds 4 (matrix) or 2
  /// (vector) edges; every nonzero successor must sit exactly one level below
  /// `level`. The common factor is returned as the edge weight.
  Edge makeNode(Level level, std::span<const Edge> successors);

  /// Identity on n qubits: exactly n nodes, root weight 1.
  Edge identity(std::size_t n);
  /// Computational basis state |index> on n qubits.
  Edge basisState(std::size_t n, std::uint64_t index);
  Edge fromDenseMatrix(std::span<const std::complex<double>> rowMajor,
                       std::size_t n);
  Edge fromDenseVector(std::span<const std::complex<double>> amplitudes,
                       std::size_t n);

  /// a*b for a matrix a and a matrix or vector b.
  Edge multiply(const Edge& a, const Edge& b);
  Edge add(const Edge& a, const Edge& b);
  /// Conjugate transpose of a matrix DD.
  Edge adjoint(const Edge& a);
  /// <x|y>
  ComplexValue innerProduct(const Edge& x, const Edge& y);
  /// |<x|y>|^2
  double fidelity(const Edge& x, const Edge& y);
  /// Multiplies the root weight by `factor` and canonicalizes it.
  Edge scale(const Edge& e, ComplexValue factor);

  [[nodiscard]] std::size_t nodeCount(const Edge& e) const;
  /// Distinct nodes reachable from any of `roots`.
  [[nodiscard]] std::size_t nodeCount(std::span<const Edge> roots) const;
  [[nodiscard]] IdentityCheck isIdentity(const Edge& e) const;

  /// Nodes currently stored in the unique table.
  [[nodiscard]] std::size_t liveNodes() const noexcept {
    return unique_.size();
  }
  [[nodiscard]] std::size_t computeTableSize() const noexcept {
    return compute_.size();
  }

  /// Reclaims every node not reachable from `roots` (cached identities are
  /// always kept), clears the compute table and rebuilds the complex table
  /// from the surviving weights. Returns the number of reclaimed nodes.
  std::size_t garbageCollect(std::span<const Edge> roots);
  /// Collects only when the live node count exceeds the adaptive threshold.
  std::size_t collectIfNeeded(std::span<const Edge> roots);

  /// Pinned edges survive every collection until unpinned.
  void pin(const Edge& e) { pinned_.push_back(e); }
  void unpin(const Edge& e);

  /// Full table scan: every node normalized, weights canonical and
  /// successors one level below. Used by tests.
  [[nodiscard]] bool checkInvariants() const;

  using Clock = std::chrono::steady_clock;
  void setDeadline(std::optional<Clock::time_point> deadline) {
    deadline_ = deadline;
    pollCounter_ = 0;
  }
  /// Throws DeadlineExceeded if the deadline has passed.
  void checkDeadline() const;

private:
  enum class Op : std::uint8_t { Multiply, Add, Adjoint, InnerProduct };

  struct CacheKey {
    Op op;
    const Node* a;
    const Node* b;
    ComplexValue w;
    bool operator==(const CacheKey& o) const {
      return op == o.op && a == o.a && b == o.b && w.identical(o.w);
    }
  };
  struct CacheKeyHash {
    std::size_t operator()(const CacheKey& k) const noexcept;
  };
  struct NodeHash {
    std::size_t operator()(const Node* n) const noexcept;
  };
  struct NodeEqual {
    bool operator()(const Node* a, const Node* b) const noexcept;
  };

  Edge multiplyRec(const Edge& a, const Edge& b);
  Edge addRec(const Edge& a, const Edge& b);
  Edge adjointRec(const Edge& a);
  ComplexValue innerProductRec(const Edge& x, const Edge& y);
  Edge canonicalRoot(const Edge& e);
  void beginOperation();
  void poll();

  Node* allocate();
  void release(Node* n);
  std::uint32_t nextVisitStamp() const;
  void markFrom(const Edge& e, std::uint32_t stamp) const;

  ComplexTable complex_;
  std::unordered_set<Node*, NodeHash, NodeEqual> unique_;
  std::unordered_map<CacheKey, Edge, CacheKeyHash> compute_;
  std::deque<Node> storage_;
  std::vector<Node*> freeList_;
  std::vector<Edge> identities_;
  std::vector<Edge> pinned_;

  mutable std::uint32_t visitStamp_{0};
  std::size_t gcThreshold_{1U << 16U};
  std::size_t computeLimit_{1U << 21U};
  std::optional<Clock::time_point> deadline_;
  std::uint32_t pollCounter_{0};
};

/// Scoped pin.
class Package::Pin {
public:
  Pin(Package& pkg, const Edge& e) : pkg_(pkg), e_(e) { pkg_.pin(e_); }
  ~Pin() { pkg_.unpin(e_); }
  Pin(const Pin&) = delete;
  Pin& operator=(const Pin&) = delete;

private:
  Package& pkg_;
  Edge e_;
};

} // namespace eqc::dd
