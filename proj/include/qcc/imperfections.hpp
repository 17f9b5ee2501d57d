#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "qcc/classical_strategies.hpp"
#include "qcc/kernels/kernels.hpp"
#include "qcc/quantum_core.hpp"
#include "qcc/random.hpp"
#include "qcc/tasks.hpp"

namespace qcc {

/// Per-detector efficiency `eta` (click probability) and faithful fraction
/// `mu` of the clicks; the remaining 1 - mu clicks carry a uniformly random
/// outcome.
struct DetectorModel {
  double eta = 1.0;
  double mu = 1.0;
};

/// Throws std::invalid_argument unless both parameters lie in [0, 1].
void validate_detector(const DetectorModel& model);

struct Click {
  Outcome outcome;
  /// Bookkeeping for tests. Protocol code never reads it.
  bool faithful;
};

/// Empty when the detector did not fire.
using DetectionResult = std::optional<Click>;

DetectionResult detect(Outcome true_outcome, const DetectorModel& model, RandomStream& rng);

/// Classical protocol the two-party players fall back on when a detector
/// stays silent.
struct TwoPartyFallback {
  Colouring colouring;
  DecisionRule rule;
};

/// Half-circle colouring with its best-response rule.
TwoPartyFallback optimal_two_party_fallback(int n);

TwoPartyRun run_two_party_with_detectors(const TwoPartyInstance& instance, const DetectorModel& model,
                                         const TwoPartyFallback& fallback, RandomStream& rng);

/// Builds the half-circle fallback for instance.n on every call.
TwoPartyRun run_two_party_with_detectors(const TwoPartyInstance& instance, const DetectorModel& model,
                                         RandomStream& rng);

ThreePartyRun run_three_party_with_detectors(const ThreePartyInstance& instance, const DetectorModel& model,
                                             const ThreePartyEncoding& fallback, RandomStream& rng);

/// Uses standard_three_party_encoding() as the fallback.
ThreePartyRun run_three_party_with_detectors(const ThreePartyInstance& instance, const DetectorModel& model,
                                             RandomStream& rng);

/// Classical optimum used as the bar to beat: (N-1)/N for two parties,
/// 3/4 for three.
double classical_bar(int parties, int n = 4);

kernels::SuccessModel success_model(int parties, int n = 4);

double expected_success_two_party(double eta, double mu, int n = 4);
double expected_success_three_party(double eta, double mu);

double eta_min_two_party(int n);

/// Smallest background-free efficiency for the three-party protocol,
/// (sqrt(21) - 3) / 2.
double eta_min_three_party();

/// A mu value above which the quantum protocol beats the classical bar.
/// Values above 1 cannot be reached and are reported as infeasible.
struct MuThreshold {
  double value;
  bool feasible() const { return value <= 1.0; }
};

/// (1/(2 eta)) sqrt(2 sqrt(2) eta (2 - eta)), the N = 4 closed form.
MuThreshold mu_threshold_two_party(double eta);

/// Level set of expected_success_two_party at (N-1)/N for general N.
MuThreshold mu_threshold_two_party(double eta, int n);

/// (1/(2 eta)) (4 eta^3 - 12 eta^2 + 12 eta)^(1/3).
MuThreshold mu_threshold_three_party(double eta);

struct FeasibilityPoint {
  double eta;
  double mu;
  double expected_success;
  bool beats_classical;
};

/// Uniform resolution x resolution grid on [0, 1]^2, eta-major. `n` only
/// matters for two parties.
std::vector<FeasibilityPoint> feasibility_grid(int parties, int resolution, int n = 4,
                                               kernels::Isa isa = kernels::active_isa());

struct BoundaryPoint {
  double eta;
  MuThreshold mu;
};

/// Threshold curve on the same eta grid, omitting eta = 0.
std::vector<BoundaryPoint> feasibility_boundary(int parties, int resolution, int n = 4);

/// CSV with header eta,mu,expected_success,beats_classical; 9 significant
/// digits.
void write_grid_csv(std::ostream& out, const std::vector<FeasibilityPoint>& grid);

/// CSV with header eta,mu_threshold,feasible.
void write_boundary_csv(std::ostream& out, const std::vector<BoundaryPoint>& boundary);

std::vector<FeasibilityPoint> read_grid_csv(std::istream& in);

}  // namespace qcc
