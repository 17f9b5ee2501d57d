// Command-line front end: closed-form constants, exhaustive searches,
// seeded Monte Carlo runs, feasibility-region CSVs and the Hardy sum report.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qcc/errors.hpp"
#include "qcc/harness.hpp"
#include "qcc/reports.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

void emit(const nlohmann::json& j, const std::string& text, bool json) {
  if (json) std::cout << j.dump(2) << '\n';
  else std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum vs classical communication-complexity toolkit"};
  app.require_subcommand(1);
  bool json = false;

  auto* analyze = app.add_subcommand("analyze", "Print every closed-form constant");
  analyze->add_flag("--json", json, "Emit JSON");

  int search_parties = 2;
  int search_n = 4;
  unsigned search_workers = 1;
  auto* search = app.add_subcommand("search", "Exhaustive search for the classical optimum");
  search->add_option("--parties", search_parties, "2 or 3")->required()->check(CLI::IsMember({2, 3}));
  search->add_option("--n", search_n, "Circle size N (two-party)");
  search->add_option("--workers", search_workers, "Worker threads")->check(CLI::Range(1U, 256U));
  search->add_flag("--json", json, "Emit JSON");

  std::string protocol;
  qcc::RunConfig config;
  auto* simulate = app.add_subcommand("simulate", "Seeded Monte Carlo run of one protocol");
  simulate->add_option("--protocol", protocol, "quantum2|classical2|spin2|quantum3|classical3")->required();
  simulate->add_option("--n", config.n, "Circle size N (two-party)");
  simulate->add_option("--eta", config.detector.eta, "Detector efficiency")->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--mu", config.detector.mu, "Faithful fraction of clicks")->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--trials", config.trials, "Number of trials")->required();
  simulate->add_option("--seed", config.seed, "Master seed")->required();
  simulate->add_option("--workers", config.workers, "Worker threads")->check(CLI::Range(1U, 256U));
  simulate->add_flag("--json", json, "Emit JSON");

  int region_parties = 2;
  int resolution = 201;
  int region_n = 4;
  std::string out_path;
  auto* region = app.add_subcommand("region", "Write the feasibility grid and boundary CSVs");
  region->add_option("--parties", region_parties, "2 or 3")->required()->check(CLI::IsMember({2, 3}));
  region->add_option("--resolution", resolution, "Grid points per axis")->required();
  region->add_option("--n", region_n, "Circle size N (two-party)");
  region->add_option("--out", out_path, "Grid CSV path")->required();
  region->add_flag("--json", json, "Emit JSON");

  std::uint64_t bell_trials = 0;
  std::uint64_t bell_seed = 0;
  unsigned bell_workers = 1;
  auto* bell = app.add_subcommand("bell", "Hardy sum: quantum, local bound and spin model");
  bell->add_option("--trials", bell_trials, "Hidden-variable samples per term")->required();
  bell->add_option("--seed", bell_seed, "Master seed")->required();
  bell->add_option("--workers", bell_workers, "Worker threads")->check(CLI::Range(1U, 256U));
  bell->add_flag("--json", json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) {
      const auto rows = qcc::analyze();
      emit(qcc::analyze_json(rows), qcc::format_analyze(rows), json);
    } else if (*search) {
      const auto result = qcc::search_json(search_parties, search_n, search_workers);
      emit(result, qcc::format_search(result), json);
    } else if (*simulate) {
      config.protocol = qcc::parse_protocol(protocol);
      const qcc::TrialSummary s = qcc::run_trials(config);
      emit(qcc::to_json(s), qcc::format_summary(s), json);
    } else if (*region) {
      const auto files = qcc::write_region(region_parties, resolution, out_path, region_n);
      const nlohmann::json j{{"grid", files.grid.string()}, {"boundary", files.boundary.string()}, {"rows", files.rows}};
      emit(j, "wrote " + std::to_string(files.rows) + " rows to " + files.grid.string() + "\nwrote boundary to " +
                  files.boundary.string() + "\n",
           json);
    } else if (*bell) {
      const auto result = qcc::bell_json(bell_trials, bell_seed, bell_workers);
      emit(result, qcc::format_bell(result), json);
    }
  } catch (const qcc::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}
