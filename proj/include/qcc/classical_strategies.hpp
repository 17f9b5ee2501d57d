#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qcc/tasks.hpp"

namespace qcc {

/// Reduced fraction in [0, 1].
class ExactProbability {
 public:
  ExactProbability() = default;
  ExactProbability(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const ExactProbability&, const ExactProbability&) = default;
  friend std::strong_ordering operator<=>(const ExactProbability& a, const ExactProbability& b) {
    // Cross-multiplication is exact: denominators here are at most a few hundred.
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Alice's message g(x) = +/-1 for each of the 2N points.
struct Colouring {
  int n = 0;
  std::vector<int> colours;

  int at(int x) const { return colours[static_cast<std::size_t>(x)]; }
};

/// Bob's guess for every (y, received bit).
class DecisionRule {
 public:
  DecisionRule() = default;
  explicit DecisionRule(int n);

  int n() const { return n_; }
  Relation guess(int y, int bit) const { return table_[slot(y, bit)]; }
  void set(int y, int bit, Relation r) { table_[slot(y, bit)] = r; }

 private:
  std::size_t slot(int y, int bit) const;

  int n_ = 0;
  std::vector<Relation> table_;
};

struct ScoredRule {
  DecisionRule rule;
  ExactProbability success;
};

struct TwoPartySearchResult {
  ExactProbability best;
  Colouring witness;
};

/// One-bit messages from Bob and Claire plus Alice's decision table,
/// indexed by (x, bob bit, claire bit).
struct ThreePartyEncoding {
  std::array<int, 4> bob_msg{};
  std::array<int, 4> claire_msg{};
  std::array<int, 16> alice_decision{};

  int decide(int x, int bob_bit, int claire_bit) const {
    return alice_decision[static_cast<std::size_t>(4 * x + 2 * bob_bit + claire_bit)];
  }
};

struct ThreePartySearchResult {
  ExactProbability best;
  ThreePartyEncoding witness;
};

/// Largest N the exhaustive two-party search accepts (2^16 colourings).
inline constexpr int kMaxSearchN = 8;

/// Throws std::invalid_argument if n is invalid or a colour is not +/-1.
void validate_colouring(const Colouring& c);

Colouring half_circle_colouring(int n);
Colouring constant_colouring(int n, int colour);
/// Colouring whose point x is -1 exactly when bit x of `index` is set.
Colouring colouring_from_index(int n, std::uint64_t index);

/// Exact success of `rule` against `colouring` under uniform instances.
ExactProbability score_rule(const Colouring& colouring, const DecisionRule& rule);

/// Majority guess per (y, bit); exact ties go to Neighbours.
ScoredRule best_response_rule(const Colouring& colouring);

/// Maximum of best_response_rule over all 2^(2N) colourings; the witness is
/// the lowest-index optimal colouring regardless of `workers`.
TwoPartySearchResult exhaustive_search_two_party(int n, unsigned workers = 1);

TwoPartyRun run_classical_two_party(const TwoPartyInstance& instance, const Colouring& colouring,
                                     const DecisionRule& rule);

ExactProbability evaluate_three_party_encoding(const ThreePartyEncoding& enc);

/// Fills in Alice's optimal decision for fixed messages (ties go to bit 0).
ThreePartyEncoding majority_decision(const std::array<int, 4>& bob_msg, const std::array<int, 4>& claire_msg);

/// Bob and Claire send the high bit of their input.
ThreePartyEncoding standard_three_party_encoding();

/// Scans all 16 x 16 message pairs; witness is the first optimum in
/// (bob index, claire index) order.
ThreePartySearchResult exhaustive_search_three_party();

int run_classical_three_party(const ThreePartyInstance& instance, const ThreePartyEncoding& enc);

/// '+' / '-' per point, e.g. "++++----".
std::string format_colouring(const Colouring& c);
Colouring parse_colouring(std::string_view text);

/// Three labelled lines: bob, claire, alice tables.
std::string format_encoding(const ThreePartyEncoding& enc);
ThreePartyEncoding parse_encoding(std::string_view text);

}  // namespace qcc
