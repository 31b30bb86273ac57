#include "eqc/cli/Study.hpp"

#include "eqc/Error.hpp"
#include "eqc/ec/Checker.hpp"
#include "eqc/ir/Random.hpp"
#include "eqc/qasm/Qasm.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <thread>

namespace eqc::cli {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

struct InstanceResult {
  bool detected{false};
  std::size_t runs{0};
  double seconds{0.};
};

bool endsWith(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace

std::vector<InstanceSeeds> instanceSeeds(const std::string& name,
                                         std::uint64_t seed,
                                         std::size_t instances) {
  std::uint64_t state = fnv1a(name) ^ (seed * 0x9E3779B97F4A7C15ULL);
  std::vector<InstanceSeeds> out;
  out.reserve(instances);
  for (std::size_t i = 0; i < instances; ++i) {
    const std::uint64_t a = ir::splitmix64(state);
    const std::uint64_t b = ir::splitmix64(state);
    out.push_back({a, b});
  }
  return out;
}

StudyRow studyPair(const ir::Circuit& g, const ir::Circuit& g2,
                   const StudyOptions& opts) {
  StudyRow row;
  row.benchmark = g.name;
  row.n = g.n;
  row.gates = g2.size();
  row.instances = opts.instances;
  if (opts.remove > g2.size()) {
    row.error = "cannot remove " + std::to_string(opts.remove) + " of " +
                std::to_string(g2.size()) + " gates";
    return row;
  }
  const auto seeds = instanceSeeds(g.name, opts.seed, opts.instances);
  std::vector<InstanceResult> results(opts.instances);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < opts.instances; i = next++) {
      const auto faulty = ir::injectErrors(g2, opts.remove, seeds[i].inject);
      const auto sim = ec::checkSimulation(g, faulty, opts.sims,
                                           seeds[i].simulate, opts.config);
      results[i] = {sim.counterexample.has_value(), sim.runs, sim.seconds};
    }
  };
  std::size_t threads = opts.threads;
  if (threads == 0) {
    threads = std::max(1U, std::thread::hardware_concurrency());
  }
  threads = std::min(threads, std::max<std::size_t>(opts.instances, 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  std::size_t detected = 0;
  double sims = 0.;
  double total = 0.;
  for (const auto& r : results) {
    detected += r.detected ? 1 : 0;
    sims += static_cast<double>(r.runs);
    total += r.seconds;
    row.maxTSim = std::max(row.maxTSim, r.seconds);
  }
  if (opts.instances > 0) {
    const auto count = static_cast<double>(opts.instances);
    row.pSuccess = static_cast<double>(detected) / count;
    row.avgSims = sims / count;
    row.avgTSim = total / count;
  }
  return row;
}

std::vector<StudyRow> studyDirectory(const std::string& dir,
                                     const StudyOptions& opts) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && endsWith(name, ".qasm") &&
        !endsWith(name, ".alt.qasm")) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<StudyRow> rows;
  for (const auto& file : files) {
    const auto stem = file.stem().string();
    auto g = qasm::parseFile(file.string());
    if (!g.ok()) {
      StudyRow bad;
      bad.benchmark = stem;
      bad.error = g.diagnostics.back().format(file.filename().string());
      rows.push_back(std::move(bad));
      continue;
    }
    const fs::path alt = file.parent_path() / (stem + ".alt.qasm");
    ir::Circuit g2 = *g.circuit;
    if (fs::exists(alt)) {
      auto a = qasm::parseFile(alt.string());
      if (!a.ok()) {
        StudyRow bad;
        bad.benchmark = stem;
        bad.error = a.diagnostics.back().format(alt.filename().string());
        rows.push_back(std::move(bad));
        continue;
      }
      g2 = *a.circuit;
    }
    if (g2.n != g.circuit->n) {
      StudyRow bad;
      bad.benchmark = stem;
      bad.error = "qubit counts differ between the circuit and its .alt pair";
      rows.push_back(std::move(bad));
      continue;
    }
    rows.push_back(studyPair(*g.circuit, g2, opts));
  }
  return rows;
}

Json toJson(const std::vector<StudyRow>& rows, const StudyOptions& opts,
            bool omitTiming) {
  auto timing = [&](double s) -> Json {
    if (omitTiming) {
      return nullptr;
    }
    return std::round(s * 1000.) / 1000.;
  };
  Json j;
  j["instances"] = opts.instances;
  j["remove"] = opts.remove;
  j["sims"] = opts.sims;
  j["seed"] = opts.seed;
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json o;
    o["benchmark"] = r.benchmark;
    if (!r.error.empty()) {
      o["error"] = r.error;
      arr.push_back(std::move(o));
      continue;
    }
    o["n"] = r.n;
    o["gates"] = r.gates;
    o["instances"] = r.instances;
    o["avg_sims"] = r.avgSims;
    o["avg_t_sim"] = timing(r.avgTSim);
    o["max_t_sim"] = timing(r.maxTSim);
    o["p_success"] = r.pSuccess;
    arr.push_back(std::move(o));
  }
  j["benchmarks"] = std::move(arr);
  return j;
}

} // namespace eqc::cli
