#include "qcc/quantum_strategies.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace qcc {
namespace {

const std::array<MeasurementAxis, 3> kComputationalAxes{};

}  // namespace

double two_party_quantum_success(int n) {
  validate_circle_size(n);
  return 0.5 * (1.0 + std::cos(std::numbers::pi / n));
}

MeasurementAxis protocol_axis(int value, int n) { return MeasurementAxis(std::numbers::pi * value / n); }

Relation guess_from_outcomes(Outcome alice, Outcome bob) {
  return alice != bob ? Relation::Neighbours : Relation::AntiNeighbours;
}

TwoPartyRun run_two_party_quantum(const TwoPartyInstance& instance, RandomStream& rng) {
  const std::array<MeasurementAxis, 2> axes{protocol_axis(instance.x, instance.n),
                                            protocol_axis(instance.y, instance.n)};
  const auto out = sample_outcomes(make_singlet(), axes, rng);
  const Relation guess = guess_from_outcomes(out[0], out[1]);
  return {guess, guess == instance.relation};
}

double two_party_quantum_instance_success(const TwoPartyInstance& instance) {
  const StateVector singlet = make_singlet();
  const std::array<MeasurementAxis, 2> axes{protocol_axis(instance.x, instance.n),
                                            protocol_axis(instance.y, instance.n)};
  double p = 0.0;
  for (const Outcome a : {Outcome::Plus, Outcome::Minus}) {
    for (const Outcome b : {Outcome::Plus, Outcome::Minus}) {
      if (guess_from_outcomes(a, b) == instance.relation) {
        const std::array<Outcome, 2> o{a, b};
        p += joint_probability(singlet, axes, o);
      }
    }
  }
  return p;
}

StateVector ghz_protocol_state(const ThreePartyInstance& instance) {
  const std::array<int, 3> inputs{instance.x, instance.y, instance.z};
  StateVector state = make_ghz();
  for (std::size_t q = 0; q < 3; ++q) {
    state = apply_phase(state, q, 0.5 * std::numbers::pi * inputs[q]);
    state = apply_hadamard(state, q);
  }
  return state;
}

double three_party_quantum_instance_success(const ThreePartyInstance& instance) {
  const auto probs = outcome_distribution(ghz_protocol_state(instance), kComputationalAxes);
  double p = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const int parity = static_cast<int>(((i >> 2) ^ (i >> 1) ^ i) & 1U);
    if (parity == instance.f) p += probs[i];
  }
  return p;
}

ThreePartyRun run_three_party_quantum(const ThreePartyInstance& instance, RandomStream& rng) {
  const auto out = sample_outcomes(ghz_protocol_state(instance), kComputationalAxes, rng);
  const int guess = to_bit(out[0]) ^ to_bit(out[1]) ^ to_bit(out[2]);
  return {guess, guess == instance.f};
}

Outcome spin_model_outcome(double angle, double lambda) {
  return std::cos(angle - lambda) >= 0.0 ? Outcome::Plus : Outcome::Minus;
}

TwoPartyRun run_classical_spin_two_party(const TwoPartyInstance& instance, RandomStream& rng) {
  const double lambda = 2.0 * std::numbers::pi * rng.uniform();
  const double theta = std::numbers::pi * instance.x / instance.n;
  const double phi = std::numbers::pi * instance.y / instance.n;
  const Outcome alice = spin_model_outcome(theta, lambda);
  const Outcome bob = flip(spin_model_outcome(phi, lambda));
  const Relation guess = guess_from_outcomes(alice, bob);
  return {guess, guess == instance.relation};
}

}  // namespace qcc
