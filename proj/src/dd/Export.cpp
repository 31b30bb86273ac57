#include "eqc/dd/Export.hpp"

#include "eqc/Error.hpp"

#include <sstream>
#include <unordered_map>

namespace eqc::dd {

namespace {

using C = std::complex<double>;

void fillMatrix(const Edge& e, C factor, Level level, std::size_t row,
                std::size_t col, std::size_t dim, std::vector<C>& out) {
  const C w = factor * e.w.toStd();
  if (e.w.exactlyZero()) {
    return;
  }
  if (level < 0) {
    out[row * dim + col] = w;
    return;
  }
  const std::size_t half = std::size_t{1} << static_cast<unsigned>(level);
  for (std::size_t k = 0; k < 4; ++k) {
    fillMatrix(e.p->e[k], w, static_cast<Level>(level - 1),
               row + (k >> 1U) * half, col + (k & 1U) * half, dim, out);
  }
}

void fillVector(const Edge& e, C factor, Level level, std::size_t offset,
                std::vector<C>& out) {
  if (e.w.exactlyZero()) {
    return;
  }
  const C w = factor * e.w.toStd();
  if (level < 0) {
    out[offset] = w;
    return;
  }
  const std::size_t half = std::size_t{1} << static_cast<unsigned>(level);
  fillVector(e.p->e[0], w, static_cast<Level>(level - 1), offset, out);
  fillVector(e.p->e[1], w, static_cast<Level>(level - 1), offset + half, out);
}

void checkShape(const Edge& e, std::size_t n, bool matrix) {
  if (e.w.exactlyZero()) {
    return;
  }
  if (static_cast<std::size_t>(e.level() + 1) != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "DD spans " + std::to_string(e.level() + 1) +
                    " qubits, expected " + std::to_string(n));
  }
  if (e.p != nullptr && e.p->isMatrix() != matrix) {
    throw Error(ErrorCode::DimensionMismatch,
                matrix ? "expected a matrix DD" : "expected a vector DD");
  }
}

} // namespace

std::vector<C> denseMatrix(const Edge& e, std::size_t n) {
  checkShape(e, n, true);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<C> out(dim * dim);
  fillMatrix(e, 1., static_cast<Level>(static_cast<int>(n) - 1), 0, 0, dim,
             out);
  return out;
}

std::vector<C> denseVector(const Edge& e, std::size_t n) {
  checkShape(e, n, false);
  std::vector<C> out(std::size_t{1} << n);
  fillVector(e, 1., static_cast<Level>(static_cast<int>(n) - 1), 0, out);
  return out;
}

C amplitude(const Edge& e, std::uint64_t index) {
  C w = e.w.toStd();
  const Edge* cur = &e;
  while (cur->p != nullptr && !cur->w.exactlyZero()) {
    const auto bit = (index >> static_cast<unsigned>(cur->p->level)) & 1U;
    cur = &cur->p->e[bit];
    w *= cur->w.toStd();
  }
  return cur->w.exactlyZero() ? C{} : w;
}

std::vector<std::pair<std::uint64_t, C>> nonzeroAmplitudes(const Edge& e,
                                                           std::size_t limit) {
  std::vector<std::pair<std::uint64_t, C>> out;
  auto walk = [&](auto&& self, const Edge& x, C acc,
                  std::uint64_t prefix) -> void {
    if (x.w.exactlyZero() || out.size() >= limit) {
      return;
    }
    const C w = acc * x.w.toStd();
    if (x.p == nullptr) {
      out.emplace_back(prefix, w);
      return;
    }
    const auto bit = std::uint64_t{1} << static_cast<unsigned>(x.p->level);
    self(self, x.p->e[0], w, prefix);
    self(self, x.p->e[1], w, prefix | bit);
  };
  walk(walk, e, 1., 0);
  return out;
}

std::string toDot(const Edge& e) {
  std::ostringstream os;
  std::unordered_map<const Node*, std::size_t> ids;
  os << "digraph dd {\n  root [shape=point];\n  t [shape=box,label=\"1\"];\n";
  auto label = [](const ComplexValue& w) {
    std::ostringstream l;
    l << w.re;
    if (w.im != 0.) {
      l << (w.im < 0 ? "-" : "+") << std::abs(w.im) << "i";
    }
    return l.str();
  };
  auto nameOf = [&](const Node* p) -> std::string {
    return p == nullptr ? "t" : "n" + std::to_string(ids.at(p));
  };
  std::vector<const Node*> order;
  std::vector<const Node*> stack;
  if (e.p != nullptr) {
    ids.emplace(e.p, 0);
    stack.push_back(e.p);
  }
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    order.push_back(n);
    for (std::size_t i = 0; i < n->arity; ++i) {
      const Node* c = n->e[i].p;
      if (c != nullptr && ids.emplace(c, ids.size()).second) {
        stack.push_back(c);
      }
    }
  }
  for (const Node* n : order) {
    os << "  " << nameOf(n) << " [label=\"q" << n->level << "\"];\n";
  }
  if (!e.w.exactlyZero()) {
    os << "  root -> " << nameOf(e.p) << " [label=\"" << label(e.w)
       << "\"];\n";
  }
  for (const Node* n : order) {
    for (std::size_t i = 0; i < n->arity; ++i) {
      const Edge& s = n->e[i];
      if (s.w.exactlyZero()) {
        continue;
      }
      os << "  " << nameOf(n) << " -> " << nameOf(s.p) << " [taillabel=\""
         << i << "\"";
      if (!s.w.exactlyOne()) {
        os << ",label=\"" << label(s.w) << "\"";
      }
      os << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

} // namespace eqc::dd
