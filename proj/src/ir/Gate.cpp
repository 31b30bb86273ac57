#include "eqc/ir/Gate.hpp"

#include "eqc/Error.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace eqc::ir {

namespace {

using C = std::complex<double>;
constexpr double Pi = std::numbers::pi;
constexpr double SqrtHalf = 0.70710678118654752440;

struct KindInfo {
  std::string_view name;
  std::size_t targets;
  std::size_t params;
};

constexpr std::array<KindInfo, GateKindCount> Info{{
    {"id", 1, 0},   {"h", 1, 0},    {"x", 1, 0},  {"y", 1, 0},
    {"z", 1, 0},    {"s", 1, 0},    {"sdg", 1, 0}, {"t", 1, 0},
    {"tdg", 1, 0},  {"sx", 1, 0},   {"sxdg", 1, 0}, {"rx", 1, 1},
    {"ry", 1, 1},   {"rz", 1, 1},   {"p", 1, 1},  {"u2", 1, 2},
    {"u3", 1, 3},   {"swap", 2, 0}, {"gphase", 0, 1},
}};

const KindInfo& info(GateKind k) { return Info[static_cast<std::size_t>(k)]; }

C expi(double phi) { return std::polar(1., phi); }

std::vector<C> u3(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2.);
  const double s = std::sin(theta / 2.);
  return {c, -expi(lambda) * s, expi(phi) * s, expi(phi + lambda) * c};
}

} // namespace

std::string_view name(GateKind kind) noexcept { return info(kind).name; }

std::optional<GateKind> kindFromName(std::string_view n) {
  for (std::size_t i = 0; i < GateKindCount; ++i) {
    if (Info[i].name == n) {
      return static_cast<GateKind>(i);
    }
  }
  return std::nullopt;
}

std::size_t numTargets(GateKind kind) noexcept { return info(kind).targets; }
std::size_t numParams(GateKind kind) noexcept { return info(kind).params; }

Gate makeGate(GateKind kind, std::vector<Qubit> targets,
              std::vector<Qubit> controls, std::vector<double> params) {
  return Gate{kind, std::move(params), std::move(targets), std::move(controls)};
}

bool approxEqual(const Gate& a, const Gate& b, double tolerance) {
  if (a.kind != b.kind || a.targets != b.targets || a.controls != b.controls ||
      a.params.size() != b.params.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.params.size(); ++i) {
    if (!(std::abs(a.params[i] - b.params[i]) <= tolerance)) {
      return false;
    }
  }
  return true;
}

std::vector<C> localMatrix(const Gate& g) {
  if (g.params.size() != numParams(g.kind)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(name(g.kind)) + " expects " +
                    std::to_string(numParams(g.kind)) + " parameters");
  }
  const auto& p = g.params;
  const C i{0., 1.};
  switch (g.kind) {
  case GateKind::I:
    return {1., 0., 0., 1.};
  case GateKind::H:
    return {SqrtHalf, SqrtHalf, SqrtHalf, -SqrtHalf};
  case GateKind::X:
    return {0., 1., 1., 0.};
  case GateKind::Y:
    return {0., -i, i, 0.};
  case GateKind::Z:
    return {1., 0., 0., -1.};
  case GateKind::S:
    return {1., 0., 0., i};
  case GateKind::Sdg:
    return {1., 0., 0., -i};
  case GateKind::T:
    return {1., 0., 0., C{SqrtHalf, SqrtHalf}};
  case GateKind::Tdg:
    return {1., 0., 0., C{SqrtHalf, -SqrtHalf}};
  case GateKind::SX:
    return {C{0.5, 0.5}, C{0.5, -0.5}, C{0.5, -0.5}, C{0.5, 0.5}};
  case GateKind::SXdg:
    return {C{0.5, -0.5}, C{0.5, 0.5}, C{0.5, 0.5}, C{0.5, -0.5}};
  case GateKind::RX: {
    const double c = std::cos(p[0] / 2.);
    const double s = std::sin(p[0] / 2.);
    return {c, -i * s, -i * s, c};
  }
  case GateKind::RY: {
    const double c = std::cos(p[0] / 2.);
    const double s = std::sin(p[0] / 2.);
    return {c, -s, s, c};
  }
  case GateKind::RZ:
    return {expi(-p[0] / 2.), 0., 0., expi(p[0] / 2.)};
  case GateKind::P:
    return {1., 0., 0., expi(p[0])};
  case GateKind::U2:
    // u3(pi/2, ...) with cos and sin of pi/4 both pinned to 1/sqrt2
    return {SqrtHalf, -expi(p[1]) * SqrtHalf, expi(p[0]) * SqrtHalf,
            expi(p[0] + p[1]) * SqrtHalf};
  case GateKind::U3:
    return u3(p[0], p[1], p[2]);
  case GateKind::SWAP:
    return {1., 0., 0., 0., 0., 0., 1., 0., 0., 1., 0., 0., 0., 0., 0., 1.};
  case GateKind::GPhase:
    return {expi(p[0])};
  }
  throw Error(ErrorCode::UnsupportedGate, "unknown gate kind");
}

Gate inverse(const Gate& g) {
  Gate r = g;
  switch (g.kind) {
  case GateKind::S:
    r.kind = GateKind::Sdg;
    break;
  case GateKind::Sdg:
    r.kind = GateKind::S;
    break;
  case GateKind::T:
    r.kind = GateKind::Tdg;
    break;
  case GateKind::Tdg:
    r.kind = GateKind::T;
    break;
  case GateKind::SX:
    r.kind = GateKind::SXdg;
    break;
  case GateKind::SXdg:
    r.kind = GateKind::SX;
    break;
  case GateKind::RX:
  case GateKind::RY:
  case GateKind::RZ:
  case GateKind::P:
  case GateKind::GPhase:
    r.params[0] = -g.params[0];
    break;
  case GateKind::U2:
    r.params = {Pi - g.params[1], Pi - g.params[0]};
    break;
  case GateKind::U3:
    r.params = {-g.params[0], -g.params[2], -g.params[1]};
    break;
  default:
    break; // self-inverse
  }
  return r;
}

} // namespace eqc::ir
