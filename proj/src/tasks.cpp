#include "qcc/tasks.hpp"

#include <stdexcept>
#include <string>

namespace qcc {
namespace {

void check_range(int v, int limit, const char* name) {
  if (v < 0 || v >= limit) {
    throw std::invalid_argument(std::string(name) + " = " + std::to_string(v) + " outside [0, " +
                                std::to_string(limit) + ")");
  }
}

std::array<ThreePartyInstance, 32> build_three_party() {
  std::array<ThreePartyInstance, 32> out{};
  std::size_t k = 0;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int z = 0; z < 4; ++z)
        if ((x + y + z) % 2 == 0) out[k++] = {x, y, z, ((x + y + z) % 4) / 2};
  return out;
}

}  // namespace

const char* to_string(Relation r) {
  switch (r) {
    case Relation::Neighbours: return "neighbours";
    case Relation::AntiNeighbours: return "anti-neighbours";
    case Relation::Invalid: break;
  }
  return "invalid";
}

void validate_circle_size(int n) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("N must be an even integer >= 4, got " + std::to_string(n));
  }
}

Relation classify_relation(int x, int y, int n) {
  validate_circle_size(n);
  const int m = 2 * n;
  check_range(x, m, "x");
  check_range(y, m, "y");
  const int d = ((x - y) % m + m) % m;
  if (d == 1 || d == m - 1) return Relation::Neighbours;
  if (d == n - 1 || d == n + 1) return Relation::AntiNeighbours;
  return Relation::Invalid;
}

std::vector<TwoPartyInstance> enumerate_two_party(int n) {
  validate_circle_size(n);
  const int m = 2 * n;
  std::vector<TwoPartyInstance> out;
  out.reserve(static_cast<std::size_t>(8 * n));
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      const Relation r = classify_relation(x, y, n);
      if (r != Relation::Invalid) out.push_back({n, x, y, r});
    }
  }
  return out;
}

TwoPartyInstance sample_two_party(int n, RandomStream& rng) {
  validate_circle_size(n);
  // Index into the 8N-element support: x, then one of the four valid offsets.
  static constexpr std::array<Relation, 4> kRelations{Relation::Neighbours, Relation::Neighbours,
                                                      Relation::AntiNeighbours, Relation::AntiNeighbours};
  const int m = 2 * n;
  const auto idx = static_cast<int>(rng.below(static_cast<std::uint64_t>(8 * n)));
  const int x = idx / 4;
  const int slot = idx % 4;
  const std::array<int, 4> offsets{1, m - 1, n - 1, n + 1};
  const int y = (x + offsets[slot]) % m;
  return {n, x, y, kRelations[slot]};
}

int f_three(int x, int y, int z) {
  check_range(x, 4, "x");
  check_range(y, 4, "y");
  check_range(z, 4, "z");
  if ((x + y + z) % 2 != 0) throw std::invalid_argument("f is undefined for odd x+y+z");
  return ((x + y + z) % 4) / 2;
}

const std::array<ThreePartyInstance, 32>& enumerate_three_party() {
  static const std::array<ThreePartyInstance, 32> all = build_three_party();
  return all;
}

ThreePartyInstance sample_three_party(RandomStream& rng) {
  return enumerate_three_party()[rng.below(32)];
}

}  // namespace qcc
