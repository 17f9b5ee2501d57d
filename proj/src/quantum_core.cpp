#include "qcc/quantum_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qcc {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Components (in the computational basis) of the eigenvector of the planar
// spin operator at `angle` with eigenvalue `o`.
std::array<double, 2> eigenvector(double angle, Outcome o) {
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  if (o == Outcome::Plus) return {c, s};
  return {-s, c};
}

void check_qubit(const StateVector& state, std::size_t qubit) {
  if (qubit >= state.num_qubits()) {
    throw std::invalid_argument("qubit index " + std::to_string(qubit) + " out of range for " +
                                std::to_string(state.num_qubits()) + "-qubit state");
  }
}

void check_axes(const StateVector& state, std::size_t count, const char* what) {
  if (count != state.num_qubits()) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(state.num_qubits()) +
                                " entries, got " + std::to_string(count));
  }
}

// Amplitude of the product eigenstate selected by the bits of `outcome_index`.
Amplitude projected_amplitude(const StateVector& state,
                              const std::array<std::array<double, 2>, 2 * kMaxQubits>& vectors,
                              std::size_t outcome_index) {
  const std::size_t n = state.num_qubits();
  const auto amps = state.amplitudes();
  Amplitude sum{0.0, 0.0};
  for (std::size_t basis = 0; basis < amps.size(); ++basis) {
    double weight = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t shift = n - 1 - k;
      const std::size_t out_bit = (outcome_index >> shift) & 1U;
      const std::size_t basis_bit = (basis >> shift) & 1U;
      weight *= vectors[2 * k + out_bit][basis_bit];
    }
    sum += weight * amps[basis];
  }
  return sum;
}

std::array<std::array<double, 2>, 2 * kMaxQubits> eigenvectors(std::span<const MeasurementAxis> axes) {
  std::array<std::array<double, 2>, 2 * kMaxQubits> v{};
  for (std::size_t k = 0; k < axes.size(); ++k) {
    v[2 * k] = eigenvector(axes[k].angle(), Outcome::Plus);
    v[2 * k + 1] = eigenvector(axes[k].angle(), Outcome::Minus);
  }
  return v;
}

}  // namespace

MeasurementAxis::MeasurementAxis(double radians) {
  if (!std::isfinite(radians)) throw std::invalid_argument("measurement axis angle must be finite");
  double a = std::fmod(radians, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  angle_ = a;
}

StateVector::StateVector(std::size_t num_qubits, std::span<const Amplitude> amplitudes) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("state must have 1 to 3 qubits");
  }
  if (amplitudes.size() != dimension()) {
    throw std::invalid_argument("expected " + std::to_string(dimension()) + " amplitudes, got " +
                                std::to_string(amplitudes.size()));
  }
  std::copy(amplitudes.begin(), amplitudes.end(), amps_.begin());
  if (std::abs(norm_squared() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized");
  }
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes()) total += std::norm(a);
  return total;
}

StateVector make_singlet() {
  const double r = std::numbers::sqrt2 / 2.0;
  const std::array<Amplitude, 4> amps{Amplitude{0.0}, Amplitude{r}, Amplitude{-r}, Amplitude{0.0}};
  return StateVector(2, amps);
}

StateVector make_ghz() {
  const double r = std::numbers::sqrt2 / 2.0;
  std::array<Amplitude, 8> amps{};
  amps[0] = r;
  amps[7] = r;
  return StateVector(3, amps);
}

StateVector make_basis_qubit(int bit) {
  std::array<Amplitude, 2> amps{};
  amps[bit == 0 ? 0 : 1] = 1.0;
  return StateVector(1, amps);
}

double joint_probability(const StateVector& state, std::span<const MeasurementAxis> axes,
                         std::span<const Outcome> outcomes) {
  check_axes(state, axes.size(), "axes");
  check_axes(state, outcomes.size(), "outcomes");
  std::size_t index = 0;
  for (const Outcome o : outcomes) index = (index << 1) | static_cast<std::size_t>(to_bit(o));
  return std::norm(projected_amplitude(state, eigenvectors(axes), index));
}

std::vector<double> outcome_distribution(const StateVector& state, std::span<const MeasurementAxis> axes) {
  check_axes(state, axes.size(), "axes");
  const auto vectors = eigenvectors(axes);
  std::vector<double> probs(state.dimension());
  for (std::size_t i = 0; i < probs.size(); ++i) probs[i] = std::norm(projected_amplitude(state, vectors, i));
  return probs;
}

SingletCorrelation singlet_correlation(double theta, double phi) {
  const double c = std::cos(theta - phi);
  const double p_same = 0.5 * (1.0 - c);
  return {p_same, 1.0 - p_same};
}

StateVector apply_phase(const StateVector& state, std::size_t qubit, double alpha) {
  check_qubit(state, qubit);
  StateVector out = state;
  const Amplitude phase = std::polar(1.0, alpha);
  const std::size_t mask = std::size_t{1} << (state.num_qubits() - 1 - qubit);
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    if (i & mask) out.amps_[i] *= phase;
  }
  return out;
}

StateVector apply_hadamard(const StateVector& state, std::size_t qubit) {
  check_qubit(state, qubit);
  StateVector out = state;
  const double r = std::numbers::sqrt2 / 2.0;
  const std::size_t mask = std::size_t{1} << (state.num_qubits() - 1 - qubit);
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    if (i & mask) continue;
    const Amplitude a0 = state.amps_[i];
    const Amplitude a1 = state.amps_[i | mask];
    out.amps_[i] = r * (a0 + a1);
    out.amps_[i | mask] = r * (a0 - a1);
  }
  return out;
}

std::vector<Outcome> sample_outcomes(const StateVector& state, std::span<const MeasurementAxis> axes,
                                     RandomStream& rng) {
  const auto probs = outcome_distribution(state, axes);
  const double u = rng.uniform();
  double total = 0.0;
  for (const double p : probs) total += p;

  // Scale the draw by the computed total so rounding never lands past the
  // last tuple, and skip zero-probability tuples entirely.
  const double target = u * total;
  std::size_t chosen = probs.size();
  double cumulative = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    cumulative += probs[i];
    chosen = i;
    if (target < cumulative) break;
  }

  const std::size_t n = state.num_qubits();
  std::vector<Outcome> outcomes(n);
  for (std::size_t k = 0; k < n; ++k) outcomes[k] = from_bit(static_cast<int>((chosen >> (n - 1 - k)) & 1U));
  return outcomes;
}

}  // namespace qcc
