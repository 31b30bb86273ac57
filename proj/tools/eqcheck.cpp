#include "eqc/Error.hpp"
#include "eqc/cli/Report.hpp"
#include "eqc/cli/Study.hpp"
#include "eqc/dd/Export.hpp"
#include "eqc/dd/Operations.hpp"
#include "eqc/ec/Checker.hpp"
#include "eqc/qasm/Qasm.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int ExitUsage = 3;
constexpr int ExitInput = 4;

struct InputError {};

eqc::ir::Circuit load(const std::string& path) {
  auto r = eqc::qasm::parseFile(path);
  for (const auto& d : r.diagnostics) {
    std::cerr << d.format(path) << "\n";
  }
  if (!r.ok()) {
    throw InputError{};
  }
  return std::move(*r.circuit);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivalence checking of quantum circuits with decision diagrams"};
  app.require_subcommand(1);

  eqc::ec::Config config;
  std::string strategy = "proportional";
  double timeout = 3600.;
  bool json = false;
  bool omitTiming = false;

  std::string file1;
  std::string file2;
  auto* check = app.add_subcommand("check", "check two circuits for equivalence");
  check->add_option("g", file1, "first circuit")->required();
  check->add_option("g_prime", file2, "second circuit")->required();
  check->add_option("--strategy", strategy, "reference, naive, proportional or lookahead")
      ->check(CLI::IsMember({"reference", "naive", "proportional", "lookahead"}));
  check->add_option("--sims", config.sims, "random simulations before the check");
  check->add_option("--seed", config.seed, "seed for the simulations");
  check->add_option("--timeout", timeout, "seconds for the equivalence check")
      ->check(CLI::NonNegativeNumber);
  check->add_option("--tolerance", config.tolerance, "numerical tolerance")
      ->check(CLI::PositiveNumber);
  check->add_option("--fid-tolerance", config.fidelityTolerance,
                    "fidelity tolerance")
      ->check(CLI::PositiveNumber);
  check->add_flag("--json", json, "print a JSON report");
  check->add_flag("--omit-timing", omitTiming, "null out timings in the JSON report");

  std::string simFile;
  std::uint64_t state = 0;
  auto* sim = app.add_subcommand("sim", "simulate a circuit on a basis state");
  sim->add_option("file", simFile, "circuit")->required();
  sim->add_option("--state", state, "basis state index")->required();

  std::string injectFile;
  std::string outPath;
  std::size_t remove = 1;
  std::uint64_t injectSeed = 0;
  auto* inject = app.add_subcommand("inject", "remove random gates from a circuit");
  inject->add_option("file", injectFile, "circuit")->required();
  inject->add_option("--remove", remove, "gates to remove");
  inject->add_option("--seed", injectSeed, "seed");
  inject->add_option("--out", outPath, "output file (stdout if omitted)");

  std::string dir;
  eqc::cli::StudyOptions study;
  auto* studyCmd = app.add_subcommand("study", "simulation-only detection study");
  studyCmd->add_option("dir", dir, "directory of .qasm files")->required();
  studyCmd->add_option("--instances", study.instances, "erroneous instances per benchmark");
  studyCmd->add_option("--remove", study.remove, "gates removed per instance");
  studyCmd->add_option("--sims", study.sims, "simulations per instance");
  studyCmd->add_option("--seed", study.seed, "seed");
  studyCmd->add_option("--threads", study.threads, "worker threads (0 = all cores)");
  studyCmd->add_flag("--omit-timing", omitTiming, "null out timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ExitUsage;
  }

  try {
    if (*check) {
      config.strategy = *eqc::ec::parseStrategy(strategy);
      config.timeoutSeconds = timeout;
      const auto g = load(file1);
      const auto g2 = load(file2);
      const auto verdict = eqc::ec::checkFlow(g, g2, config);
      const auto report = eqc::cli::makeReport(g, g2, verdict, config);
      if (json) {
        std::cout << eqc::cli::toJson(report, omitTiming).dump(2) << "\n";
      } else {
        std::cout << eqc::cli::toText(report);
      }
      return eqc::cli::exitCode(verdict.outcome);
    }
    if (*sim) {
      const auto c = load(simFile);
      eqc::dd::Package pkg;
      const auto out = eqc::dd::simulate(pkg, c, state);
      const auto amps = eqc::dd::nonzeroAmplitudes(out, ~std::size_t{0});
      std::cout << eqc::cli::formatState(amps, c.n) << "\n";
      return 0;
    }
    if (*inject) {
      const auto c = load(injectFile);
      const auto text = eqc::qasm::emit(eqc::ir::injectErrors(c, remove, injectSeed));
      if (outPath.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(outPath);
        out << text;
        if (!out) {
          std::cerr << "cannot write '" << outPath << "'\n";
          return ExitInput;
        }
      }
      return 0;
    }
    if (*studyCmd) {
      std::error_code ec;
      if (!std::filesystem::is_directory(dir, ec)) {
        std::cerr << "'" << dir << "' is not a directory\n";
        return ExitInput;
      }
      const auto rows = eqc::cli::studyDirectory(dir, study);
      for (const auto& r : rows) {
        if (!r.error.empty()) {
          std::cerr << r.benchmark << ": " << r.error << "\n";
        }
      }
      std::cout << eqc::cli::toJson(rows, study, omitTiming).dump(2) << "\n";
      return 0;
    }
  } catch (const InputError&) {
    return ExitInput;
  } catch (const eqc::Error& e) {
    std::cerr << e.what() << "\n";
    return ExitUsage;
  }
  return ExitUsage;
}
