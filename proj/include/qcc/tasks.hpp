#pragma once

#include <array>
#include <vector>

#include "qcc/random.hpp"

namespace qcc {

enum class Relation { Neighbours, AntiNeighbours, Invalid };

const char* to_string(Relation r);

/// Inputs x, y on the circle of 2N points, promised to be neighbours or
/// anti-neighbours. `relation` is the ground truth.
struct TwoPartyInstance {
  int n;
  int x;
  int y;
  Relation relation;
};

/// Inputs in {0..3} with an even sum; `f` = ((x+y+z) mod 4) / 2.
struct ThreePartyInstance {
  int x;
  int y;
  int z;
  int f;
};

/// Bob's answer for one run of the two-party task.
struct TwoPartyRun {
  Relation guess;
  bool success;
};

/// Alice's answer bit for one run of the three-party task.
struct ThreePartyRun {
  int guess;
  bool success;
};

/// Throws std::invalid_argument unless n is even and >= 4.
void validate_circle_size(int n);

Relation classify_relation(int x, int y, int n);

/// All 8N valid pairs, neighbours and anti-neighbours interleaved in
/// ascending (x, y) order.
std::vector<TwoPartyInstance> enumerate_two_party(int n);

TwoPartyInstance sample_two_party(int n, RandomStream& rng);

int f_three(int x, int y, int z);

/// The 32 parity-consistent triples in ascending (x, y, z) order.
const std::array<ThreePartyInstance, 32>& enumerate_three_party();

ThreePartyInstance sample_three_party(RandomStream& rng);

}  // namespace qcc
