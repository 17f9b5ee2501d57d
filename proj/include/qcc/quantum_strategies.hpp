#pragma once

#include "qcc/quantum_core.hpp"
#include "qcc/random.hpp"
#include "qcc/tasks.hpp"

namespace qcc {

/// (1 + cos(pi/N)) / 2.
double two_party_quantum_success(int n);

/// Alice's axis pi*x/N (Bob uses the same map for y).
MeasurementAxis protocol_axis(int value, int n);

/// Bob's rule on the two spin results: opposite outcomes mean neighbours.
Relation guess_from_outcomes(Outcome alice, Outcome bob);

TwoPartyRun run_two_party_quantum(const TwoPartyInstance& instance, RandomStream& rng);

/// Exact success probability of the quantum two-party protocol on one
/// instance, from the statevector.
double two_party_quantum_instance_success(const TwoPartyInstance& instance);

/// GHZ state after every party applies phase pi*input/2 and a Hadamard.
StateVector ghz_protocol_state(const ThreePartyInstance& instance);

/// Probability that the XOR of the three computational-basis bits equals f.
double three_party_quantum_instance_success(const ThreePartyInstance& instance);

/// Samples the three bits; Alice outputs their XOR.
ThreePartyRun run_three_party_quantum(const ThreePartyInstance& instance, RandomStream& rng);

/// Local "classical spin" value sign(cos(angle - lambda)), with sign(0) = +1.
Outcome spin_model_outcome(double angle, double lambda);

/// Alice reports sign(cos(theta - lambda)), Bob holds -sign(cos(phi - lambda)),
/// and Bob applies the quantum protocol's opposite-means-neighbours rule.
TwoPartyRun run_classical_spin_two_party(const TwoPartyInstance& instance, RandomStream& rng);

}  // namespace qcc
