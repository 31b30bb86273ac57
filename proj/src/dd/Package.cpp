#include "eqc/dd/Package.hpp"

#include "eqc/Error.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

namespace eqc::dd {

namespace {

std::uint64_t bitsOf(double d) {
  std::uint64_t b = 0;
  std::memcpy(&b, &d, sizeof b);
  return b;
}

inline void hashCombine(std::size_t& seed, std::uint64_t v) {
  seed ^= v + 0x9E3779B97F4A7C15ULL + (seed << 6U) + (seed >> 2U);
}

std::uint64_t ptrBits(const void* p) {
  return static_cast<std::uint64_t>(reinterpret_cast<std::uintptr_t>(p));
}

constexpr std::uint32_t PollInterval = 1024;

} // namespace

std::size_t Package::NodeHash::operator()(const Node* n) const noexcept {
  std::size_t h = static_cast<std::size_t>(n->level) * 31U + n->arity;
  for (std::size_t i = 0; i < n->arity; ++i) {
    hashCombine(h, ptrBits(n->e[i].p));
    hashCombine(h, bitsOf(n->e[i].w.re));
    hashCombine(h, bitsOf(n->e[i].w.im));
  }
  return h;
}

bool Package::NodeEqual::operator()(const Node* a,
                                    const Node* b) const noexcept {
  if (a->level != b->level || a->arity != b->arity) {
    return false;
  }
  for (std::size_t i = 0; i < a->arity; ++i) {
    if (!a->e[i].identical(b->e[i])) {
      return false;
    }
  }
  return true;
}

std::size_t Package::CacheKeyHash::operator()(const CacheKey& k) const noexcept {
  std::size_t h = static_cast<std::size_t>(k.op);
  hashCombine(h, ptrBits(k.a));
  hashCombine(h, ptrBits(k.b));
  hashCombine(h, bitsOf(k.w.re));
  hashCombine(h, bitsOf(k.w.im));
  return h;
}

Package::Package(double tolerance) : complex_(tolerance) {
  identities_.push_back(Edge::one());
}

Node* Package::allocate() {
  if (!freeList_.empty()) {
    Node* n = freeList_.back();
    freeList_.pop_back();
    *n = Node{};
    return n;
  }
  return &storage_.emplace_back();
}

void Package::release(Node* n) { freeList_.push_back(n); }

void Package::checkDeadline() const {
  if (deadline_ && Clock::now() >= *deadline_) {
    throw DeadlineExceeded();
  }
}

void Package::poll() {
  if (deadline_ && ++pollCounter_ >= PollInterval) {
    pollCounter_ = 0;
    checkDeadline();
  }
}

void Package::beginOperation() {
  if (compute_.size() > computeLimit_) {
    compute_.clear();
  }
}

Edge Package::makeNode(Level level, std::span<const Edge> successors) {
  if (successors.size() != 2 && successors.size() != 4) {
    throw Error(ErrorCode::InvalidArgument,
                "a node needs 2 or 4 successors, got " +
                    std::to_string(successors.size()));
  }
  if (level < 0) {
    throw Error(ErrorCode::LevelOrderViolation,
                "node level must be non-negative");
  }
  Node probe;
  probe.level = level;
  probe.arity = static_cast<std::uint8_t>(successors.size());

  std::size_t leftmost = successors.size();
  for (std::size_t i = 0; i < successors.size(); ++i) {
    Edge s = successors[i];
    s.w = complex_.lookup(s.w);
    if (s.w.exactlyZero()) {
      s = Edge::zero();
    } else {
      if (s.level() != level - 1) {
        throw Error(ErrorCode::LevelOrderViolation,
                    "successor at level " + std::to_string(s.level()) +
                        " below node at level " + std::to_string(level));
      }
      if (s.p != nullptr && s.p->arity != probe.arity) {
        throw Error(ErrorCode::DimensionMismatch,
                    "mixing vector and matrix nodes");
      }
      if (leftmost == successors.size()) {
        leftmost = i;
      }
    }
    probe.e[i] = s;
  }
  if (leftmost == successors.size()) {
    return Edge::zero();
  }

  const ComplexValue factor = probe.e[leftmost].w;
  if (!factor.exactlyOne()) {
    for (std::size_t i = leftmost + 1; i < successors.size(); ++i) {
      if (!probe.e[i].w.exactlyZero()) {
        probe.e[i].w = complex_.lookup(probe.e[i].w / factor);
        if (probe.e[i].w.exactlyZero()) {
          probe.e[i] = Edge::zero();
        }
      }
    }
    probe.e[leftmost].w = ComplexValue{1., 0.};
  }

  if (const auto it = unique_.find(&probe); it != unique_.end()) {
    return {*it, factor};
  }
  Node* node = allocate();
  *node = probe;
  unique_.insert(node);
  return {node, factor};
}

Edge Package::identity(std::size_t n) {
  while (identities_.size() <= n) {
    const Edge below = identities_.back();
    const auto level = static_cast<Level>(identities_.size() - 1);
    const std::array<Edge, 4> succ{below, Edge::zero(), Edge::zero(), below};
    identities_.push_back(makeNode(level, succ));
  }
  return identities_[n];
}

Edge Package::basisState(std::size_t n, std::uint64_t index) {
  if (n < 64 && (index >> n) != 0U) {
    throw Error(ErrorCode::IndexOutOfRange,
                "basis index " + std::to_string(index) + " needs more than " +
                    std::to_string(n) + " qubits");
  }
  Edge e = Edge::one();
  for (std::size_t q = 0; q < n; ++q) {
    std::array<Edge, 2> succ{Edge::zero(), Edge::zero()};
    succ[(index >> q) & 1U] = e;
    e = makeNode(static_cast<Level>(q), succ);
  }
  return e;
}

Edge Package::fromDenseMatrix(std::span<const std::complex<double>> rowMajor,
                              std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  if (rowMajor.size() != dim * dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "dense matrix size does not match qubit count");
  }
  auto build = [&](auto&& self, Level level, std::size_t row,
                   std::size_t col) -> Edge {
    if (level < 0) {
      return Edge::terminal(
          complex_.lookup(ComplexValue(rowMajor[row * dim + col])));
    }
    const std::size_t half = std::size_t{1} << static_cast<unsigned>(level);
    std::array<Edge, 4> succ{};
    for (std::size_t k = 0; k < 4; ++k) {
      succ[k] = self(self, static_cast<Level>(level - 1), row + (k >> 1U) * half,
                     col + (k & 1U) * half);
    }
    return makeNode(level, succ);
  };
  if (n == 0) {
    return canonicalRoot(build(build, TerminalLevel, 0, 0));
  }
  return canonicalRoot(build(build, static_cast<Level>(n - 1), 0, 0));
}

Edge Package::fromDenseVector(std::span<const std::complex<double>> amplitudes,
                              std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  if (amplitudes.size() != dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "dense vector size does not match qubit count");
  }
  auto build = [&](auto&& self, Level level, std::size_t offset) -> Edge {
    if (level < 0) {
      return Edge::terminal(complex_.lookup(ComplexValue(amplitudes[offset])));
    }
    const std::size_t half = std::size_t{1} << static_cast<unsigned>(level);
    const std::array<Edge, 2> succ{
        self(self, static_cast<Level>(level - 1), offset),
        self(self, static_cast<Level>(level - 1), offset + half)};
    return makeNode(level, succ);
  };
  if (n == 0) {
    return canonicalRoot(build(build, TerminalLevel, 0));
  }
  return canonicalRoot(build(build, static_cast<Level>(n - 1), 0));
}

Edge Package::canonicalRoot(const Edge& e) {
  Edge r = e;
  r.w = complex_.lookup(r.w);
  if (r.w.exactlyZero()) {
    return Edge::zero();
  }
  return r;
}

Edge Package::scale(const Edge& e, ComplexValue factor) {
  return canonicalRoot({e.p, e.w * factor});
}

// --- multiplication ---------------------------------------------------------

Edge Package::multiply(const Edge& a, const Edge& b) {
  if (a.p != nullptr && !a.p->isMatrix()) {
    throw Error(ErrorCode::DimensionMismatch,
                "left operand of multiply must be a matrix");
  }
  if (!a.w.exactlyZero() && !b.w.exactlyZero() && a.level() != b.level()) {
    throw Error(ErrorCode::DimensionMismatch,
                "operands span " + std::to_string(a.level() + 1) + " and " +
                    std::to_string(b.level() + 1) + " qubits");
  }
  beginOperation();
  return canonicalRoot(multiplyRec(a, b));
}

Edge Package::multiplyRec(const Edge& a, const Edge& b) {
  if (a.w.exactlyZero() || b.w.exactlyZero()) {
    return Edge::zero();
  }
  const ComplexValue factor = a.w * b.w;
  if (a.p == nullptr && b.p == nullptr) {
    return Edge::terminal(factor);
  }
  poll();

  const CacheKey key{Op::Multiply, a.p, b.p, {}};
  if (const auto it = compute_.find(key); it != compute_.end()) {
    const Edge& r = it->second;
    if (r.w.exactlyZero()) {
      return Edge::zero();
    }
    return {r.p, r.w * factor};
  }

  const Node& x = *a.p;
  const Node& y = *b.p;
  Edge result;
  if (y.isMatrix()) {
    std::array<Edge, 4> succ{};
    for (std::size_t row = 0; row < 2; ++row) {
      for (std::size_t col = 0; col < 2; ++col) {
        const Edge t0 = multiplyRec(x.e[2 * row], y.e[col]);
        const Edge t1 = multiplyRec(x.e[2 * row + 1], y.e[2 + col]);
        succ[2 * row + col] = addRec(t0, t1);
      }
    }
    result = makeNode(x.level, succ);
  } else {
    std::array<Edge, 2> succ{};
    for (std::size_t row = 0; row < 2; ++row) {
      const Edge t0 = multiplyRec(x.e[2 * row], y.e[0]);
      const Edge t1 = multiplyRec(x.e[2 * row + 1], y.e[1]);
      succ[row] = addRec(t0, t1);
    }
    result = makeNode(x.level, succ);
  }
  compute_.emplace(key, result);
  if (result.w.exactlyZero()) {
    return Edge::zero();
  }
  return {result.p, result.w * factor};
}

// --- addition ---------------------------------------------------------------

Edge Package::add(const Edge& a, const Edge& b) {
  if (!a.w.exactlyZero() && !b.w.exactlyZero()) {
    if (a.level() != b.level() ||
        (a.p != nullptr && b.p != nullptr && a.p->arity != b.p->arity)) {
      throw Error(ErrorCode::DimensionMismatch, "add operands differ in shape");
    }
  }
  beginOperation();
  return canonicalRoot(addRec(a, b));
}

Edge Package::addRec(const Edge& a, const Edge& b) {
  if (a.w.exactlyZero()) {
    return b;
  }
  if (b.w.exactlyZero()) {
    return a;
  }
  if (a.p == b.p) {
    const ComplexValue sum = a.w + b.w;
    if (complex_.approxZero(sum)) {
      return Edge::zero();
    }
    return {a.p, sum};
  }
  poll();

  // a + b = a.w * (a' + (b.w / a.w) b') with a', b' unit-weight nodes
  const ComplexValue ratio = b.w / a.w;
  const CacheKey key{Op::Add, a.p, b.p, ratio};
  if (const auto it = compute_.find(key); it != compute_.end()) {
    const Edge& r = it->second;
    if (r.w.exactlyZero()) {
      return Edge::zero();
    }
    return {r.p, r.w * a.w};
  }

  const Node& x = *a.p;
  const Node& y = *b.p;
  std::array<Edge, 4> succ{};
  for (std::size_t i = 0; i < x.arity; ++i) {
    const Edge& ex = x.e[i];
    const Edge& ey = y.e[i];
    succ[i] = addRec(ex, {ey.p, ey.w * ratio});
  }
  const Edge result = makeNode(x.level, std::span(succ.data(), x.arity));
  compute_.emplace(key, result);
  if (result.w.exactlyZero()) {
    return Edge::zero();
  }
  return {result.p, result.w * a.w};
}

// --- conjugate transpose ----------------------------------------------------

Edge Package::adjoint(const Edge& a) {
  if (a.p != nullptr && !a.p->isMatrix()) {
    throw Error(ErrorCode::DimensionMismatch, "adjoint needs a matrix DD");
  }
  beginOperation();
  return canonicalRoot(adjointRec(a));
}

Edge Package::adjointRec(const Edge& a) {
  if (a.w.exactlyZero()) {
    return Edge::zero();
  }
  if (a.p == nullptr) {
    return Edge::terminal(a.w.conj());
  }
  poll();
  const CacheKey key{Op::Adjoint, a.p, nullptr, {}};
  Edge result;
  if (const auto it = compute_.find(key); it != compute_.end()) {
    result = it->second;
  } else {
    const Node& x = *a.p;
    const std::array<Edge, 4> succ{adjointRec(x.e[0]), adjointRec(x.e[2]),
                                   adjointRec(x.e[1]), adjointRec(x.e[3])};
    result = makeNode(x.level, succ);
    compute_.emplace(key, result);
  }
  if (result.w.exactlyZero()) {
    return Edge::zero();
  }
  return {result.p, result.w * a.w.conj()};
}

// --- inner product ----------------------------------------------------------

ComplexValue Package::innerProduct(const Edge& x, const Edge& y) {
  if (!x.w.exactlyZero() && !y.w.exactlyZero() && x.level() != y.level()) {
    throw Error(ErrorCode::DimensionMismatch,
                "inner product operands differ in qubit count");
  }
  beginOperation();
  return innerProductRec(x, y);
}

double Package::fidelity(const Edge& x, const Edge& y) {
  const double f = innerProduct(x, y).mag2();
  return std::clamp(f, 0., 1.);
}

ComplexValue Package::innerProductRec(const Edge& x, const Edge& y) {
  if (x.w.exactlyZero() || y.w.exactlyZero()) {
    return {0., 0.};
  }
  const ComplexValue factor = x.w.conj() * y.w;
  if (x.p == nullptr && y.p == nullptr) {
    return factor;
  }
  poll();
  const CacheKey key{Op::InnerProduct, x.p, y.p, {}};
  if (const auto it = compute_.find(key); it != compute_.end()) {
    return it->second.w * factor;
  }
  ComplexValue sum{0., 0.};
  for (std::size_t i = 0; i < x.p->arity; ++i) {
    sum = sum + innerProductRec(x.p->e[i], y.p->e[i]);
  }
  compute_.emplace(key, Edge::terminal(sum));
  return sum * factor;
}

// --- inspection -------------------------------------------------------------

std::uint32_t Package::nextVisitStamp() const {
  if (++visitStamp_ == 0) {
    for (const Node* n : unique_) {
      n->visited = 0;
    }
    visitStamp_ = 1;
  }
  return visitStamp_;
}

std::size_t Package::nodeCount(const Edge& e) const {
  return nodeCount(std::span<const Edge>(&e, 1));
}

std::size_t Package::nodeCount(std::span<const Edge> roots) const {
  const std::uint32_t stamp = nextVisitStamp();
  std::size_t count = 0;
  std::vector<const Node*> stack;
  for (const Edge& r : roots) {
    if (r.p != nullptr && r.p->visited != stamp) {
      r.p->visited = stamp;
      stack.push_back(r.p);
    }
  }
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    ++count;
    for (std::size_t i = 0; i < n->arity; ++i) {
      const Node* c = n->e[i].p;
      if (c != nullptr && c->visited != stamp) {
        c->visited = stamp;
        stack.push_back(c);
      }
    }
  }
  return count;
}

IdentityCheck Package::isIdentity(const Edge& e) const {
  const std::size_t n = static_cast<std::size_t>(e.level() + 1);
  // identities_ only ever grows through identity(); a DD whose size exceeds
  // the cache cannot be an identity node we created
  if (n >= identities_.size() || identities_[n].p != e.p) {
    return {};
  }
  const double tol = complex_.tolerance();
  if (approxEq(e.w, ComplexValue{1., 0.}, tol)) {
    return {IdentityCheck::Kind::Exact, 0.};
  }
  if (std::abs(e.w.mag() - 1.) < tol) {
    return {IdentityCheck::Kind::GlobalPhase, normalizePhase(e.w.arg())};
  }
  return {};
}

void Package::markFrom(const Edge& e, std::uint32_t stamp) const {
  std::vector<const Node*> stack;
  if (e.p != nullptr && e.p->visited != stamp) {
    e.p->visited = stamp;
    stack.push_back(e.p);
  }
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < n->arity; ++i) {
      const Node* c = n->e[i].p;
      if (c != nullptr && c->visited != stamp) {
        c->visited = stamp;
        stack.push_back(c);
      }
    }
  }
}

std::size_t Package::garbageCollect(std::span<const Edge> roots) {
  const std::uint32_t stamp = nextVisitStamp();
  for (const Edge& r : roots) {
    markFrom(r, stamp);
  }
  for (const Edge& r : identities_) {
    markFrom(r, stamp);
  }
  for (const Edge& r : pinned_) {
    markFrom(r, stamp);
  }

  std::size_t reclaimed = 0;
  for (auto it = unique_.begin(); it != unique_.end();) {
    if ((*it)->visited != stamp) {
      release(*it);
      it = unique_.erase(it);
      ++reclaimed;
    } else {
      ++it;
    }
  }
  compute_.clear();

  // surviving weights are pairwise further than epsilon apart, so
  // re-inserting them reproduces the same canonical values
  complex_.reset();
  for (const Node* n : unique_) {
    for (std::size_t i = 0; i < n->arity; ++i) {
      complex_.lookup(n->e[i].w);
    }
  }
  for (const Edge& r : roots) {
    complex_.lookup(r.w);
  }
  for (const Edge& r : pinned_) {
    complex_.lookup(r.w);
  }
  return reclaimed;
}

void Package::unpin(const Edge& e) {
  const auto it = std::find_if(pinned_.rbegin(), pinned_.rend(),
                               [&](const Edge& x) { return x.identical(e); });
  if (it != pinned_.rend()) {
    pinned_.erase(std::next(it).base());
  }
}

std::size_t Package::collectIfNeeded(std::span<const Edge> roots) {
  if (unique_.size() < gcThreshold_) {
    return 0;
  }
  const std::size_t before = unique_.size();
  const std::size_t reclaimed = garbageCollect(roots);
  // mostly live: grow the threshold so we do not thrash
  if (reclaimed < before / 2) {
    gcThreshold_ *= 2;
  }
  return reclaimed;
}

bool Package::checkInvariants() const {
  for (const Node* n : unique_) {
    if (n->arity != 2 && n->arity != 4) {
      return false;
    }
    bool seenNonZero = false;
    for (std::size_t i = 0; i < n->arity; ++i) {
      const Edge& s = n->e[i];
      if (s.w.exactlyZero()) {
        if (s.p != nullptr) {
          return false;
        }
        continue;
      }
      if (s.level() != n->level - 1) {
        return false;
      }
      if (!seenNonZero && !s.w.exactlyOne()) {
        return false;
      }
      seenNonZero = true;
      const double tol = complex_.tolerance();
      if (std::abs(s.w.re) < tol && std::abs(s.w.im) < tol) {
        return false;
      }
    }
    if (!seenNonZero) {
      return false;
    }
  }
  return true;
}

} // namespace eqc::dd
