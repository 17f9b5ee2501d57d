#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "qcc/random.hpp"

namespace qcc {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 3;
inline constexpr double kNormTolerance = 1e-12;

/// Measurement result of a spin along a planar axis. `Plus` is spin-up along
/// the axis; in the computational basis (axis angle 0) it is the bit 0.
enum class Outcome : int { Plus = +1, Minus = -1 };

inline constexpr int value(Outcome o) { return static_cast<int>(o); }
inline constexpr Outcome flip(Outcome o) { return o == Outcome::Plus ? Outcome::Minus : Outcome::Plus; }
inline constexpr int to_bit(Outcome o) { return o == Outcome::Plus ? 0 : 1; }
inline constexpr Outcome from_bit(int bit) { return bit == 0 ? Outcome::Plus : Outcome::Minus; }

/// Direction in the measurement plane, stored as an angle in [0, 2pi).
/// Only differences between axes enter any probability.
class MeasurementAxis {
 public:
  MeasurementAxis() = default;
  explicit MeasurementAxis(double radians);

  double angle() const { return angle_; }

 private:
  double angle_ = 0.0;
};

/// Pure state of 1 to 3 qubits. Qubit 0 is the leftmost tensor factor and the
/// most significant bit of the basis index, so for two qubits the basis order
/// is |++>, |+->, |-+>, |-->.
class StateVector {
 public:
  /// Throws std::invalid_argument unless 1 <= num_qubits <= 3, the amplitude
  /// count is 2^num_qubits and the norm is 1 within kNormTolerance.
  StateVector(std::size_t num_qubits, std::span<const Amplitude> amplitudes);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return std::size_t{1} << num_qubits_; }
  std::span<const Amplitude> amplitudes() const { return {amps_.data(), dimension()}; }
  double norm_squared() const;

 private:
  friend StateVector apply_phase(const StateVector&, std::size_t, double);
  friend StateVector apply_hadamard(const StateVector&, std::size_t);
  StateVector() = default;

  std::size_t num_qubits_ = 0;
  std::array<Amplitude, std::size_t{1} << kMaxQubits> amps_{};
};

/// (|+-> - |-+>)/sqrt(2).
StateVector make_singlet();

/// (|000> + |111>)/sqrt(2).
StateVector make_ghz();

/// Single-qubit |0> (spin up along axis angle 0).
StateVector make_basis_qubit(int bit);

/// Born-rule probability of observing `outcomes` when every qubit k is
/// measured along `axes[k]` simultaneously.
double joint_probability(const StateVector& state, std::span<const MeasurementAxis> axes,
                         std::span<const Outcome> outcomes);

/// Full distribution over the 2^n outcome tuples, indexed like the basis
/// (bit k of the index, from the left, is 1 when qubit k reads Minus).
std::vector<double> outcome_distribution(const StateVector& state,
                                         std::span<const MeasurementAxis> axes);

struct SingletCorrelation {
  double p_same;
  double p_opposite;
};

/// Closed-form singlet correlations: p_same = (1 - cos(theta - phi))/2.
SingletCorrelation singlet_correlation(double theta, double phi);

/// Multiplies the amplitudes where `qubit` is |1> by exp(i alpha).
StateVector apply_phase(const StateVector& state, std::size_t qubit, double alpha);

StateVector apply_hadamard(const StateVector& state, std::size_t qubit);

/// Draws one outcome tuple from the joint distribution using a single uniform
/// draw from `rng`.
std::vector<Outcome> sample_outcomes(const StateVector& state, std::span<const MeasurementAxis> axes,
                                     RandomStream& rng);

}  // namespace qcc
