#include "DenseOracle.hpp"
#include "RunningExample.hpp"
#include "RandomCircuits.hpp"
#include "Schema.hpp"

#include "eqc/cli/Report.hpp"
#include "eqc/ec/Checker.hpp"
#include "eqc/qasm/Qasm.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

// stderr is dropped unless the caller redirects it
Run run(const std::string& args, const std::string& redirect = "2>/dev/null") {
  const std::string cmd = std::string(EQCHECK_PATH) + " " + args + " " + redirect;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    return {-1, {}};
  }
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    out.append(buf.data(), got);
  }
  const int st = pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string data(const std::string& f) {
  return testing_support::dataPath(f);
}

std::string docs(const std::string& f) {
  return std::string(EQC_DOCS_DIR) + "/" + f;
}

class TempDir {
public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("eqc_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  [[nodiscard]] std::string str() const { return path_.string(); }

private:
  fs::path path_;
  static inline int counter_ = 0;
};

void expectValid(const std::string& schema, const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  const auto errors = testing_support::SchemaValidator::fromFile(docs(schema)).validate(doc);
  EXPECT_TRUE(errors.empty()) << (errors.empty() ? "" : errors.front());
}

std::complex<double> parseAmplitude(const std::string& s) {
  static const std::regex re(
      R"(^([-+]?[0-9.]+(?:e[-+]?[0-9]+)?)?(?:([-+]?(?:[0-9.]+(?:e[-+]?[0-9]+)?)?)i)?$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) {
    ADD_FAILURE() << "bad amplitude " << s;
    return {};
  }
  double re_ = 0.;
  double im = 0.;
  if (m[2].matched) {
    const auto t = m[2].str();
    im = t.empty() || t == "+" ? 1. : t == "-" ? -1. : std::stod(t);
    re_ = m[1].matched ? std::stod(m[1].str()) : 0.;
  } else {
    re_ = std::stod(m[1].str());
  }
  return {re_, im};
}

} // namespace

TEST(CliCheck, EquivalentPair) {
  const auto r = run("check " + data("g.qasm") + " " + data("gprime.qasm") +
                     " --strategy proportional");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("verdict: equivalent"), std::string::npos) << r.out;
}

TEST(CliCheck, EveryStrategyAgrees) {
  for (const char* s : {"reference", "naive", "proportional", "lookahead"}) {
    EXPECT_EQ(run("check " + data("g.qasm") + " " + data("gprime.qasm") +
                  " --sims 0 --strategy " + s).status, 0) << s;
    EXPECT_EQ(run("check " + data("g.qasm") + " " + data("gtilde.qasm") +
                  " --sims 0 --strategy " + s).status, 1) << s;
  }
}

TEST(CliCheck, NotEquivalentPrintsCounterexample) {
  const auto r = run("check " + data("g.qasm") + " " + data("gtilde.qasm"));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("verdict: not_equivalent"), std::string::npos);
  EXPECT_TRUE(std::regex_search(r.out, std::regex(R"(counterexample: \|[4-7]>)"))) << r.out;
  EXPECT_NE(r.out.find("G : "), std::string::npos);
  EXPECT_NE(r.out.find("G': "), std::string::npos);
}

TEST(CliCheck, SelfWithReferenceOnly) {
  EXPECT_EQ(run("check " + data("g.qasm") + " " + data("g.qasm") +
                " --sims 0 --strategy reference").status, 0);
}

TEST(CliCheck, ZeroTimeoutIsProbablyEquivalent) {
  const auto r = run("check " + data("g.qasm") + " " + data("gprime.qasm") +
                     " --timeout 0 --json");
  EXPECT_EQ(r.status, 2);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "probably_equivalent");
  EXPECT_EQ(j["num_sims"], 8);
  EXPECT_EQ(j["timed_out"], true);
  expectValid("report.schema.json", r.out);
}

TEST(CliCheck, JsonValidatesForEveryOutcome) {
  TempDir tmp;
  const auto phase = tmp.write("phase.qasm",
                               "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\n"
                               "x q[0];\nz q[0];\nx q[0];\nz q[0];\n");
  const auto empty = tmp.write("empty.qasm",
                               "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\n");
  const std::vector<std::pair<std::string, int>> cases{
      {data("g.qasm") + " " + data("gprime.qasm"), 0},
      {data("g.qasm") + " " + data("gtilde.qasm"), 1},
      {data("g.qasm") + " " + data("gtilde.qasm") + " --sims 0 --strategy lookahead", 1},
      {phase + " " + empty + " --sims 0", 0},
      {data("g.qasm") + " " + data("gprime.qasm") + " --timeout 0 --sims 0", 2},
  };
  for (const auto& [args, want] : cases) {
    for (const char* extra : {" --json", " --json --omit-timing"}) {
      const auto r = run("check " + args + extra);
      EXPECT_EQ(r.status, want) << args;
      expectValid("report.schema.json", r.out);
    }
  }
  const auto r = run("check " + phase + " " + empty + " --sims 0 --json");
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "equivalent_up_to_global_phase");
  EXPECT_NEAR(std::abs(j["global_phase"].get<double>()), 3.141592653589793, 1e-9);
}

TEST(CliCheck, OmitTimingIsByteIdentical) {
  for (const char* pair : {"gprime.qasm", "gtilde.qasm"}) {
    const std::string args = "check " + data("g.qasm") + " " + data(pair) +
                             " --json --omit-timing --seed 5 --strategy lookahead";
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(CliCheck, ExitCodesMatchLibrary) {
  eqc::ir::Rng rng(3);
  TempDir tmp;
  for (int t = 0; t < 8; ++t) {
    const std::size_t n = 1 + rng.below(4);
    const auto g = testing_support::randomCircuit(rng, n, 10);
    const auto g2 = t % 2 == 0 ? eqc::ir::injectErrors(g, 1, rng.next()) : g;
    if (g2.gates.empty() && g.gates.empty()) {
      continue;
    }
    const auto f1 = tmp.write("a.qasm", eqc::qasm::emit(g));
    const auto f2 = tmp.write("b.qasm", eqc::qasm::emit(g2));
    const auto parsed1 = eqc::qasm::parseFile(f1);
    const auto parsed2 = eqc::qasm::parseFile(f2);
    ASSERT_TRUE(parsed1.ok());
    ASSERT_TRUE(parsed2.ok());
    const auto v = eqc::ec::checkFlow(*parsed1.circuit, *parsed2.circuit);
    EXPECT_EQ(run("check " + f1 + " " + f2).status, eqc::cli::exitCode(v.outcome));
  }
}

TEST(CliSim, RunningExampleColumnFour) {
  const auto r = run("sim " + data("g.qasm") + " --state 4");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "010: 0.70710678, 110: 0.70710678\n");
}

TEST(CliSim, EmptyCircuit) {
  TempDir tmp;
  const auto f = tmp.write("e.qasm", "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\n");
  const auto r = run("sim " + f + " --state 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "11: 1.0\n");
}

TEST(CliSim, OutOfRangeState) {
  EXPECT_EQ(run("sim " + data("g.qasm") + " --state 8").status, 3);
}

TEST(CliSim, MatchesDenseOracle) {
  eqc::ir::Rng rng(13);
  TempDir tmp;
  for (int t = 0; t < 6; ++t) {
    const std::size_t n = 1 + rng.below(4);
    const auto c = testing_support::randomCircuit(rng, n, 12);
    const auto f = tmp.write("c.qasm", eqc::qasm::emit(c));
    const auto parsed = eqc::qasm::parseFile(f);
    ASSERT_TRUE(parsed.ok());
    const auto m = oracle::circuit(*parsed.circuit);
    const std::size_t dim = std::size_t{1} << n;
    const std::uint64_t i = rng.below(dim);
    const auto r = run("sim " + f + " --state " + std::to_string(i));
    ASSERT_EQ(r.status, 0);
    std::vector<std::complex<double>> got(dim);
    const std::regex item(R"(([01]+): ([^,\n]+))");
    for (auto it = std::sregex_iterator(r.out.begin(), r.out.end(), item);
         it != std::sregex_iterator(); ++it) {
      got[std::stoull((*it)[1].str(), nullptr, 2)] = parseAmplitude((*it)[2].str());
    }
    for (std::size_t k = 0; k < dim; ++k) {
      EXPECT_NEAR(std::abs(got[k] - m[k * dim + i]), 0., 2e-8) << t << " " << k;
    }
  }
}

TEST(CliInject, MatchesLibrary) {
  const auto r = run("inject " + data("gprime.qasm") + " --remove 1 --seed 8");
  EXPECT_EQ(r.status, 0);
  const auto gp = eqc::qasm::parseFile(data("gprime.qasm"));
  ASSERT_TRUE(gp.ok());
  EXPECT_EQ(r.out, eqc::qasm::emit(eqc::ir::injectErrors(*gp.circuit, 1, 8)));
  const auto injected = eqc::qasm::parse(r.out);
  ASSERT_TRUE(injected.ok());
  EXPECT_EQ(injected.circuit->size(), 15U);
  EXPECT_EQ(eqc::ec::checkReference(*injected.circuit, testing_support::exampleGTilde()).outcome,
            eqc::ec::Outcome::Equivalent);
}

TEST(CliInject, WritesFile) {
  TempDir tmp;
  const auto out = tmp.str() + "/out.qasm";
  EXPECT_EQ(run("inject " + data("gprime.qasm") + " --remove 3 --seed 1 --out " + out).status, 0);
  const auto parsed = eqc::qasm::parseFile(out);
  ASSERT_TRUE(parsed.ok());
  EXPECT_EQ(parsed.circuit->size(), 13U);
}

TEST(CliInject, TooManyRemoved) {
  EXPECT_EQ(run("inject " + data("gprime.qasm") + " --remove 17").status, 3);
}

TEST(CliStudy, CorpusDetectsThreeRemovals) {
  const auto r = run("study " + data("corpus") + " --remove 3 --instances 20 --seed 1");
  ASSERT_EQ(r.status, 0);
  expectValid("study.schema.json", r.out);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["benchmarks"].size(), 6U);
  for (const auto& b : j["benchmarks"]) {
    EXPECT_FALSE(b.contains("error")) << b.dump();
    EXPECT_GE(b["p_success"].get<double>(), 0.9) << b["benchmark"];
    EXPECT_GE(b["avg_sims"].get<double>(), 1.);
  }
}

TEST(CliStudy, NothingRemovedNeverSucceeds) {
  const auto r = run("study " + data("corpus") + " --remove 0 --instances 3 --sims 4");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& b : j["benchmarks"]) {
    EXPECT_EQ(b["p_success"].get<double>(), 0.);
    EXPECT_EQ(b["avg_sims"].get<double>(), 4.);
  }
}

TEST(CliStudy, Reproducible) {
  const std::string args =
      "study " + data("corpus") + " --remove 1 --instances 10 --seed 9 --omit-timing";
  const auto a = run(args);
  const auto b = run(args + " --threads 1");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  expectValid("study.schema.json", a.out);
}

TEST(CliStudy, BadFileIsReportedAndStudyContinues) {
  TempDir tmp;
  tmp.write("bad.qasm", "OPENQASM 2.0;\nqreg q[2];\nfoo q[0];\n");
  tmp.write("ok.qasm", eqc::qasm::emit(testing_support::exampleG()));
  const auto r = run("study " + tmp.str() + " --instances 2");
  EXPECT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["benchmarks"].size(), 2U);
  EXPECT_TRUE(j["benchmarks"][0].contains("error"));
  EXPECT_FALSE(j["benchmarks"][1].contains("error"));
  expectValid("study.schema.json", r.out);
}

TEST(CliErrors, Usage) {
  EXPECT_EQ(run("").status, 3);
  EXPECT_EQ(run("frobnicate").status, 3);
  EXPECT_EQ(run("check " + data("g.qasm")).status, 3);
  EXPECT_EQ(run("check " + data("g.qasm") + " " + data("g.qasm") + " --strategy random").status, 3);
  EXPECT_EQ(run("check " + data("g.qasm") + " " + data("g.qasm") + " --bogus").status, 3);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(CliErrors, QubitCountMismatch) {
  TempDir tmp;
  const auto f = tmp.write("two.qasm", "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\n");
  EXPECT_EQ(run("check " + data("g.qasm") + " " + f).status, 3);
}

TEST(CliErrors, MissingFile) {
  const auto r = run("check /nonexistent/a.qasm " + data("g.qasm"), "2>&1");
  EXPECT_EQ(r.status, 4);
  EXPECT_FALSE(r.out.empty());
  EXPECT_EQ(run("sim /nonexistent/a.qasm --state 0").status, 4);
  EXPECT_EQ(run("study /nonexistent/dir").status, 4);
}

TEST(CliErrors, ParseErrorHasDiagnostic) {
  TempDir tmp;
  const auto f = tmp.write("bad.qasm", "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncx q[0];\n");
  const auto r = run("check " + f + " " + f, "2>&1 >/dev/null");
  EXPECT_EQ(r.status, 4);
  EXPECT_NE(r.out.find("bad.qasm:4"), std::string::npos) << r.out;
}

TEST(Report, FormatHelpers) {
  EXPECT_EQ(eqc::cli::formatAmplitude({0.7071067811865476, 0.}), "0.70710678");
  EXPECT_EQ(eqc::cli::formatAmplitude({1., 0.}), "1.0");
  EXPECT_EQ(eqc::cli::formatAmplitude({0.5, -0.5}), "0.5-0.5i");
  EXPECT_EQ(eqc::cli::bitstring(2, 3), "010");
  EXPECT_EQ(eqc::cli::exitCode(eqc::ec::Outcome::Equivalent), 0);
  EXPECT_EQ(eqc::cli::exitCode(eqc::ec::Outcome::EquivalentUpToGlobalPhase), 0);
  EXPECT_EQ(eqc::cli::exitCode(eqc::ec::Outcome::NotEquivalent), 1);
  EXPECT_EQ(eqc::cli::exitCode(eqc::ec::Outcome::ProbablyEquivalent), 2);
}

TEST(Report, TotalTimeCoversSimulation) {
  const auto g = testing_support::exampleG();
  const auto g2 = testing_support::exampleGPrime();
  const eqc::ec::Config cfg;
  const auto rep = eqc::cli::makeReport(g, g2, eqc::ec::checkFlow(g, g2, cfg), cfg);
  const auto j = eqc::cli::toJson(rep);
  EXPECT_GE(j["t_total"].get<double>(), j["t_sim"].get<double>());
  EXPECT_EQ(j.begin().key(), "benchmark");
}
