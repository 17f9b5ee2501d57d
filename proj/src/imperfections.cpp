#include "qcc/imperfections.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qcc/quantum_strategies.hpp"

namespace qcc {
namespace {

void check_probability(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
  }
}

void check_eta_positive(double eta) {
  check_probability(eta, "eta");
  if (eta == 0.0) throw std::invalid_argument("eta must be positive: no quantum branch exists at eta = 0");
}

void check_parties(int parties) {
  if (parties != 2 && parties != 3) throw std::invalid_argument("parties must be 2 or 3");
}

std::string format_g9(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.9g", v);
  return buf.data();
}

double grid_value(int i, int resolution) { return static_cast<double>(i) / static_cast<double>(resolution - 1); }

}  // namespace

void validate_detector(const DetectorModel& model) {
  check_probability(model.eta, "eta");
  check_probability(model.mu, "mu");
}

DetectionResult detect(Outcome true_outcome, const DetectorModel& model, RandomStream& rng) {
  if (rng.uniform() >= model.eta) return std::nullopt;
  if (rng.uniform() < model.mu) return Click{true_outcome, true};
  return Click{rng.coin() ? Outcome::Plus : Outcome::Minus, false};
}

TwoPartyFallback optimal_two_party_fallback(int n) {
  Colouring colouring = half_circle_colouring(n);
  DecisionRule rule = best_response_rule(colouring).rule;
  return {std::move(colouring), std::move(rule)};
}

TwoPartyRun run_two_party_with_detectors(const TwoPartyInstance& instance, const DetectorModel& model,
                                         const TwoPartyFallback& fallback, RandomStream& rng) {
  if (fallback.colouring.n != instance.n || fallback.rule.n() != instance.n) {
    throw std::invalid_argument("fallback strategy and instance must share N");
  }
  const std::array<MeasurementAxis, 2> axes{protocol_axis(instance.x, instance.n),
                                            protocol_axis(instance.y, instance.n)};
  const auto spins = sample_outcomes(make_singlet(), axes, rng);
  const DetectionResult alice = detect(spins[0], model, rng);
  const DetectionResult bob = detect(spins[1], model, rng);

  // The single bit Alice sends: her spin if she saw one, else her colour.
  const int message = alice ? value(alice->outcome) : fallback.colouring.at(instance.x);

  Relation guess;
  if (bob) {
    guess = guess_from_outcomes(message == 1 ? Outcome::Plus : Outcome::Minus, bob->outcome);
  } else {
    guess = fallback.rule.guess(instance.y, message);
  }
  return {guess, guess == instance.relation};
}

TwoPartyRun run_two_party_with_detectors(const TwoPartyInstance& instance, const DetectorModel& model,
                                         RandomStream& rng) {
  return run_two_party_with_detectors(instance, model, optimal_two_party_fallback(instance.n), rng);
}

ThreePartyRun run_three_party_with_detectors(const ThreePartyInstance& instance, const DetectorModel& model,
                                             const ThreePartyEncoding& fallback, RandomStream& rng) {
  static const std::array<MeasurementAxis, 3> computational{};
  const auto bits = sample_outcomes(ghz_protocol_state(instance), computational, rng);
  const DetectionResult alice = detect(bits[0], model, rng);
  const DetectionResult bob = detect(bits[1], model, rng);
  const DetectionResult claire = detect(bits[2], model, rng);

  const int bob_bit = bob ? to_bit(bob->outcome) : fallback.bob_msg[static_cast<std::size_t>(instance.y)];
  const int claire_bit = claire ? to_bit(claire->outcome) : fallback.claire_msg[static_cast<std::size_t>(instance.z)];

  const int guess = alice ? (to_bit(alice->outcome) ^ bob_bit ^ claire_bit)
                          : fallback.decide(instance.x, bob_bit, claire_bit);
  return {guess, guess == instance.f};
}

ThreePartyRun run_three_party_with_detectors(const ThreePartyInstance& instance, const DetectorModel& model,
                                             RandomStream& rng) {
  static const ThreePartyEncoding standard = standard_three_party_encoding();
  return run_three_party_with_detectors(instance, model, standard, rng);
}

double classical_bar(int parties, int n) {
  check_parties(parties);
  if (parties == 3) return 0.75;
  validate_circle_size(n);
  return static_cast<double>(n - 1) / static_cast<double>(n);
}

kernels::SuccessModel success_model(int parties, int n) {
  check_parties(parties);
  if (parties == 3) return {3, 1.0, 0.75};
  return {2, two_party_quantum_success(n), classical_bar(2, n)};
}

double expected_success_two_party(double eta, double mu, int n) {
  validate_detector({eta, mu});
  return kernels::expected_success_point(success_model(2, n), eta, mu);
}

double expected_success_three_party(double eta, double mu) {
  validate_detector({eta, mu});
  return kernels::expected_success_point(success_model(3), eta, mu);
}

double eta_min_two_party(int n) {
  const double pq = two_party_quantum_success(n);
  const double pc = classical_bar(2, n);
  return (2.0 * pc - 1.0) / (pq + pc - 1.0);
}

double eta_min_three_party() { return 0.5 * (std::sqrt(21.0) - 3.0); }

MuThreshold mu_threshold_two_party(double eta) {
  check_eta_positive(eta);
  return {std::sqrt(2.0 * std::numbers::sqrt2 * eta * (2.0 - eta)) / (2.0 * eta)};
}

MuThreshold mu_threshold_two_party(double eta, int n) {
  check_eta_positive(eta);
  const double pq = two_party_quantum_success(n);
  const double pc = classical_bar(2, n);
  // eta^2 mu^2 (pq - 1/2) + (1 - eta)^2 (pc - 1/2) = pc - 1/2
  const double detected = 1.0 - (1.0 - eta) * (1.0 - eta);
  return {std::sqrt((pc - 0.5) * detected / (pq - 0.5)) / eta};
}

MuThreshold mu_threshold_three_party(double eta) {
  check_eta_positive(eta);
  return {std::cbrt(4.0 * eta * eta * eta - 12.0 * eta * eta + 12.0 * eta) / (2.0 * eta)};
}

std::vector<FeasibilityPoint> feasibility_grid(int parties, int resolution, int n, kernels::Isa isa) {
  check_parties(parties);
  if (resolution < 2) throw std::invalid_argument("grid resolution must be at least 2");
  const kernels::SuccessModel model = success_model(parties, n);
  const auto r = static_cast<std::size_t>(resolution);

  std::vector<double> etas(r * r), mus(r * r), expected(r * r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      etas[i * r + j] = grid_value(static_cast<int>(i), resolution);
      mus[i * r + j] = grid_value(static_cast<int>(j), resolution);
    }
  }
  kernels::expected_success(model, etas, mus, expected, isa);

  std::vector<FeasibilityPoint> grid(r * r);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    grid[k] = {etas[k], mus[k], expected[k], expected[k] > model.p_classical};
  }
  return grid;
}

std::vector<BoundaryPoint> feasibility_boundary(int parties, int resolution, int n) {
  check_parties(parties);
  if (resolution < 2) throw std::invalid_argument("grid resolution must be at least 2");
  std::vector<BoundaryPoint> curve;
  curve.reserve(static_cast<std::size_t>(resolution - 1));
  for (int i = 1; i < resolution; ++i) {
    const double eta = grid_value(i, resolution);
    MuThreshold mu{};
    if (parties == 3) mu = mu_threshold_three_party(eta);
    else if (n == 4) mu = mu_threshold_two_party(eta);
    else mu = mu_threshold_two_party(eta, n);
    curve.push_back({eta, mu});
  }
  return curve;
}

void write_grid_csv(std::ostream& out, const std::vector<FeasibilityPoint>& grid) {
  out << "eta,mu,expected_success,beats_classical\n";
  for (const auto& p : grid) {
    out << format_g9(p.eta) << ',' << format_g9(p.mu) << ',' << format_g9(p.expected_success) << ','
        << (p.beats_classical ? "true" : "false") << '\n';
  }
}

void write_boundary_csv(std::ostream& out, const std::vector<BoundaryPoint>& boundary) {
  out << "eta,mu_threshold,feasible\n";
  for (const auto& p : boundary) {
    out << format_g9(p.eta) << ',' << format_g9(p.mu.value) << ',' << (p.mu.feasible() ? "true" : "false") << '\n';
  }
}

std::vector<FeasibilityPoint> read_grid_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "eta,mu,expected_success,beats_classical") {
    throw std::runtime_error("grid CSV: missing or unexpected header");
  }
  std::vector<FeasibilityPoint> grid;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::array<std::string, 4> cells;
    for (auto& cell : cells) {
      if (!std::getline(row, cell, ',')) throw std::runtime_error("grid CSV: short row '" + line + "'");
    }
    if (cells[3] != "true" && cells[3] != "false") throw std::runtime_error("grid CSV: bad flag '" + cells[3] + "'");
    grid.push_back({std::stod(cells[0]), std::stod(cells[1]), std::stod(cells[2]), cells[3] == "true"});
  }
  return grid;
}

}  // namespace qcc
