#include "qcc/reports.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qcc/classical_strategies.hpp"
#include "qcc/errors.hpp"
#include "qcc/nonlocality.hpp"
#include "qcc/quantum_strategies.hpp"

namespace qcc {
namespace {

double min_three_party_quantum_success() {
  double worst = 1.0;
  for (const auto& inst : enumerate_three_party()) worst = std::min(worst, three_party_quantum_instance_success(inst));
  return worst;
}

}  // namespace

std::string format_fixed9(double v) {
  std::array<char, 48> buf{};
  std::snprintf(buf.data(), buf.size(), "%.9f", v);
  return buf.data();
}

std::vector<AnalyzeRow> analyze() {
  const ExactProbability pc2 = exhaustive_search_two_party(4).best;
  const ExactProbability pc3 = exhaustive_search_three_party().best;
  return {
      {"p_c_two_party_n4", "two-party classical optimum (N=4)", pc2.to_double(), pc2.to_string()},
      {"p_q_two_party_n4", "two-party quantum success (N=4)", two_party_quantum_success(4), "(2+sqrt2)/4"},
      {"eta_min_two_party", "two-party minimum detector efficiency", eta_min_two_party(4), "2(sqrt2-1)"},
      {"mu_threshold_two_party_eta1", "two-party mu threshold at eta=1", mu_threshold_two_party(1.0).value,
       "2^(-1/4)"},
      {"hardy_sum_quantum", "Hardy sum, quantum maximum", hardy_sum_quantum(canonical_setup()), "2+sqrt2"},
      {"hardy_sum_local_bound", "Hardy sum, local bound", static_cast<double>(max_local_hardy_sum()), "3"},
      {"p_c_three_party", "three-party classical optimum", pc3.to_double(), pc3.to_string()},
      {"p_q_three_party", "three-party quantum success", min_three_party_quantum_success(), "1"},
      {"mu_threshold_three_party_eta1", "three-party mu threshold at eta=1", mu_threshold_three_party(1.0).value,
       "2^(-1/3)"},
      {"eta_min_three_party", "three-party eta threshold at mu=1", eta_min_three_party(), "(sqrt21-3)/2"},
  };
}

std::string format_analyze(const std::vector<AnalyzeRow>& rows) {
  std::ostringstream out;
  std::array<char, 160> line{};
  for (const auto& r : rows) {
    std::snprintf(line.data(), line.size(), "%-40s %14s  %s\n", r.label.c_str(), format_fixed9(r.value).c_str(),
                  r.exact.c_str());
    out << line.data();
  }
  return out.str();
}

nlohmann::json analyze_json(const std::vector<AnalyzeRow>& rows) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& r : rows) j[r.key] = {{"value", r.value}, {"exact", r.exact}};
  return j;
}

nlohmann::json to_json(const TrialSummary& s) {
  return {
      {"protocol", s.protocol},
      {"parties", s.parties},
      {"n", s.n ? nlohmann::json(*s.n) : nlohmann::json(nullptr)},
      {"detector", {{"eta", s.detector.eta}, {"mu", s.detector.mu}}},
      {"trials", s.trials},
      {"successes", s.successes},
      {"estimate", s.estimate},
      {"stderr", s.standard_error},
      {"seed", s.seed},
  };
}

std::string format_summary(const TrialSummary& s) {
  std::ostringstream out;
  out << "protocol   " << s.protocol << '\n';
  out << "parties    " << s.parties << '\n';
  if (s.n) out << "N          " << *s.n << '\n';
  out << "eta        " << s.detector.eta << '\n';
  out << "mu         " << s.detector.mu << '\n';
  out << "seed       " << s.seed << '\n';
  out << "trials     " << s.trials << '\n';
  out << "successes  " << s.successes << '\n';
  out << "estimate   " << format_fixed9(s.estimate) << '\n';
  out << "stderr     " << format_fixed9(s.standard_error) << '\n';
  return out.str();
}

nlohmann::json search_json(int parties, int n, unsigned workers) {
  if (parties == 3) {
    const ThreePartySearchResult r = exhaustive_search_three_party();
    const auto& w = r.witness;
    return {{"parties", 3},
            {"optimum", r.best.to_string()},
            {"optimum_value", r.best.to_double()},
            {"search_space", 256},
            {"witness",
             {{"bob", w.bob_msg}, {"claire", w.claire_msg}, {"alice", w.alice_decision}, {"text", format_encoding(w)}}}};
  }
  if (parties != 2) throw UsageError("parties must be 2 or 3");
  TwoPartySearchResult r;
  try {
    r = exhaustive_search_two_party(n, workers);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const CapacityError& e) {
    throw UsageError(e.what());
  }
  return {{"parties", 2},
          {"n", n},
          {"optimum", r.best.to_string()},
          {"optimum_value", r.best.to_double()},
          {"search_space", std::uint64_t{1} << (2 * n)},
          {"witness", format_colouring(r.witness)}};
}

std::string format_search(const nlohmann::json& j) {
  std::ostringstream out;
  if (j.at("parties") == 2) {
    out << "two-party exhaustive search, N=" << j.at("n").get<int>() << " (" << j.at("search_space").get<std::uint64_t>()
        << " colourings)\n";
    out << "optimum  " << j.at("optimum").get<std::string>() << '\n';
    out << "witness  " << j.at("witness").get<std::string>() << '\n';
  } else {
    out << "three-party exhaustive search (" << j.at("search_space").get<int>() << " message pairs)\n";
    out << "optimum  " << j.at("optimum").get<std::string>() << '\n';
    out << "witness\n" << j.at("witness").at("text").get<std::string>();
  }
  return out.str();
}

nlohmann::json bell_json(std::uint64_t trials, std::uint64_t seed, unsigned workers) {
  if (trials < 1) throw UsageError("trials must be at least 1");
  const SetupPair setup = canonical_setup();
  const SpinModelEstimate spin = hardy_sum_spin_model(setup, trials, seed, workers);
  return {{"quantum_sum", hardy_sum_quantum(setup)},
          {"quantum_terms", hardy_terms_quantum(setup).terms},
          {"local_max", max_local_hardy_sum()},
          {"spin_model",
           {{"estimate", spin.estimate},
            {"stderr", spin.standard_error},
            {"terms", spin.terms.terms},
            {"trials", trials},
            {"seed", seed}}}};
}

std::string format_bell(const nlohmann::json& j) {
  std::ostringstream out;
  out << "quantum sum        " << format_fixed9(j.at("quantum_sum").get<double>()) << '\n';
  out << "local maximum      " << j.at("local_max").get<int>() << '\n';
  const auto& s = j.at("spin_model");
  out << "spin model         " << format_fixed9(s.at("estimate").get<double>()) << " +/- "
      << format_fixed9(s.at("stderr").get<double>()) << "  (" << s.at("trials").get<std::uint64_t>()
      << " trials per term, seed " << s.at("seed").get<std::uint64_t>() << ")\n";
  return out.str();
}

std::filesystem::path boundary_path_for(const std::filesystem::path& out) {
  std::filesystem::path p = out;
  p.replace_filename(out.stem().string() + "_boundary" + out.extension().string());
  return p;
}

RegionFiles write_region(int parties, int resolution, const std::filesystem::path& out, int n) {
  std::vector<FeasibilityPoint> grid;
  std::vector<BoundaryPoint> boundary;
  try {
    grid = feasibility_grid(parties, resolution, n);
    boundary = feasibility_boundary(parties, resolution, n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const std::filesystem::path boundary_file = boundary_path_for(out);
  auto write = [](const std::filesystem::path& path, auto&& body) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    body(f);
    f.flush();
    if (!f) throw std::runtime_error("failed writing '" + path.string() + "'");
  };
  write(out, [&](std::ostream& f) { write_grid_csv(f, grid); });
  write(boundary_file, [&](std::ostream& f) { write_boundary_csv(f, boundary); });
  return {out, boundary_file, grid.size()};
}

}  // namespace qcc
