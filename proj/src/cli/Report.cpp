#include "eqc/cli/Report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace eqc::cli {

namespace {

Json timing(double seconds, bool omit) {
  if (omit) {
    return nullptr;
  }
  // millisecond resolution
  return std::round(seconds * 1000.) / 1000.;
}

std::string trimmed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.8f", v);
  std::string s = buf;
  while (s.size() > 1 && s.back() == '0' && s[s.size() - 2] != '.') {
    s.pop_back();
  }
  if (s == "-0.0") {
    s = "0.0";
  }
  return s;
}

Json amplitudes(const ec::Amplitudes& amps, std::size_t n) {
  Json arr = Json::array();
  for (const auto& [index, a] : amps) {
    Json e;
    e["basis"] = bitstring(index, n);
    e["re"] = a.real();
    e["im"] = a.imag();
    arr.push_back(std::move(e));
  }
  return arr;
}

} // namespace

RunReport makeReport(const ir::Circuit& g, const ir::Circuit& g2,
                     const ec::Verdict& v, const ec::Config& config) {
  RunReport r;
  r.benchmark = g.name;
  r.n = g.n;
  r.gatesG = g.size();
  r.gatesG2 = g2.size();
  r.verdict = v;
  r.strategy = config.strategy;
  r.seed = config.seed;
  return r;
}

Json toJson(const RunReport& r, bool omitTiming) {
  const auto& v = r.verdict;
  Json j;
  j["benchmark"] = r.benchmark;
  j["n"] = r.n;
  j["gates_g"] = r.gatesG;
  j["gates_g_prime"] = r.gatesG2;
  j["verdict"] = std::string(ec::toString(v.outcome));
  if (v.outcome == ec::Outcome::EquivalentUpToGlobalPhase) {
    j["global_phase"] = v.phase;
  } else {
    j["global_phase"] = nullptr;
  }
  if (v.counterexample) {
    const auto& c = *v.counterexample;
    Json cj;
    cj["kind"] = c.kind == ec::Counterexample::Kind::BasisState
                     ? "basis_state"
                     : "relative_phase_pair";
    cj["input"] = c.input();
    cj["index"] = c.i;
    if (c.kind == ec::Counterexample::Kind::RelativePhasePair) {
      cj["index2"] = c.j;
    } else {
      cj["index2"] = nullptr;
    }
    cj["fidelity"] = c.fidelity;
    cj["output_g"] = amplitudes(c.outputG, r.n);
    cj["output_g_prime"] = amplitudes(c.outputG2, r.n);
    cj["truncated"] = c.truncated;
    j["counterexample"] = std::move(cj);
  } else {
    j["counterexample"] = nullptr;
  }
  j["num_sims"] = v.stats.numSims;
  j["t_sim"] = timing(v.stats.tSim, omitTiming);
  j["t_ec"] = timing(v.stats.tEc, omitTiming);
  j["t_total"] = timing(v.stats.tTotal, omitTiming);
  j["timed_out"] = v.stats.timedOut;
  j["max_nodes"] = v.stats.maxNodes;
  j["avg_nodes"] = v.stats.avgNodes;
  j["strategy"] = std::string(ec::toString(r.strategy));
  j["seed"] = r.seed;
  return j;
}

int exitCode(ec::Outcome o) noexcept {
  switch (o) {
  case ec::Outcome::Equivalent:
  case ec::Outcome::EquivalentUpToGlobalPhase:
    return 0;
  case ec::Outcome::NotEquivalent:
    return 1;
  case ec::Outcome::ProbablyEquivalent:
    return 2;
  }
  return 2;
}

std::string formatAmplitude(std::complex<double> a) {
  std::string s = trimmed(a.real());
  const std::string im = trimmed(std::abs(a.imag()));
  if (im != "0.0") {
    s += (a.imag() < 0 ? "-" : "+") + im + "i";
  }
  return s;
}

std::string bitstring(std::uint64_t index, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t q = 0; q < n && q < 64; ++q) {
    if (((index >> q) & 1U) != 0) {
      s[n - 1 - q] = '1';
    }
  }
  return s;
}

std::string formatState(const ec::Amplitudes& amps, std::size_t n) {
  std::string out;
  for (const auto& [index, a] : amps) {
    if (std::abs(a) < 1e-12) {
      continue;
    }
    if (!out.empty()) {
      out += ", ";
    }
    out += bitstring(index, n) + ": " + formatAmplitude(a);
  }
  return out;
}

std::string toText(const RunReport& r) {
  const auto& v = r.verdict;
  std::ostringstream os;
  os << "verdict: " << ec::toString(v.outcome);
  if (v.outcome == ec::Outcome::EquivalentUpToGlobalPhase) {
    os << " (phase " << v.phase << ")";
  }
  os << "\nqubits: " << r.n << "  gates: " << r.gatesG << " / " << r.gatesG2
     << "\nstrategy: " << ec::toString(r.strategy) << "  seed: " << r.seed
     << "\nsimulations: " << v.stats.numSims << "\n";
  char times[128];
  std::snprintf(times, sizeof times, "time: sim %.3fs  ec %.3fs  total %.3fs\n",
                v.stats.tSim, v.stats.tEc, v.stats.tTotal);
  os << times;
  if (v.stats.maxNodes > 0) {
    os << "nodes: max " << v.stats.maxNodes << "  avg " << v.stats.avgNodes
       << "\n";
  }
  if (v.stats.timedOut) {
    os << "timeout reached\n";
  }
  if (v.counterexample) {
    const auto& c = *v.counterexample;
    os << "counterexample: " << c.input() << "  fidelity " << c.fidelity
       << "\n  G : " << formatState(c.outputG, r.n)
       << "\n  G': " << formatState(c.outputG2, r.n) << "\n";
    if (c.truncated) {
      os << "  (amplitude listing truncated)\n";
    }
  }
  return os.str();
}

} // namespace eqc::cli
