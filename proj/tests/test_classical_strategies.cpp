#include <doctest.h>

#include <random>
#include <stdexcept>

#include "qcc/classical_strategies.hpp"
#include "qcc/errors.hpp"

using namespace qcc;

namespace {

DecisionRule random_rule(int n, std::mt19937_64& gen) {
  DecisionRule r(n);
  std::bernoulli_distribution coin(0.5);
  for (int y = 0; y < 2 * n; ++y)
    for (const int bit : {1, -1}) r.set(y, bit, coin(gen) ? Relation::Neighbours : Relation::AntiNeighbours);
  return r;
}

Colouring random_colouring(int n, std::mt19937_64& gen) {
  std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << (2 * n)) - 1);
  return colouring_from_index(n, pick(gen));
}

}  // namespace

TEST_CASE("exact probabilities reduce and compare exactly") {
  CHECK(ExactProbability(24, 32) == ExactProbability(3, 4));
  CHECK(ExactProbability(24, 32).to_string() == "3/4");
  CHECK(ExactProbability(5, 6) > ExactProbability(3, 4));
  CHECK(ExactProbability(0, 7).to_string() == "0/1");
  CHECK_THROWS_AS(ExactProbability(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(ExactProbability(1, 0), std::invalid_argument);
}

TEST_CASE("half-circle colouring") {
  const Colouring c = half_circle_colouring(4);
  CHECK(c.colours == std::vector<int>{1, 1, 1, 1, -1, -1, -1, -1});
  CHECK(best_response_rule(c).success == ExactProbability(3, 4));
  CHECK(best_response_rule(half_circle_colouring(6)).success == ExactProbability(5, 6));
  CHECK(best_response_rule(half_circle_colouring(8)).success == ExactProbability(7, 8));
  CHECK_THROWS_AS(half_circle_colouring(5), std::invalid_argument);
}

TEST_CASE("constant colouring carries no information") {
  for (const int n : {4, 6, 8}) {
    const Colouring c = constant_colouring(n, 1);
    // Oracle: for every y the neighbour and anti-neighbour x counts with bit +1 agree.
    for (int y = 0; y < 2 * n; ++y) {
      int nb = 0, an = 0;
      for (const auto& inst : enumerate_two_party(n)) {
        if (inst.y != y) continue;
        (inst.relation == Relation::Neighbours ? nb : an) += 1;
      }
      CHECK(nb == an);
    }
    CHECK(best_response_rule(c).success == ExactProbability(1, 2));
  }
}

TEST_CASE("best response is optimal against random rules") {
  std::mt19937_64 gen(31337);
  for (const int n : {4, 6}) {
    for (int c = 0; c < 20; ++c) {
      const Colouring col = random_colouring(n, gen);
      const ScoredRule best = best_response_rule(col);
      CHECK(score_rule(col, best.rule) == best.success);
      for (int r = 0; r < 1000; ++r) CHECK(score_rule(col, random_rule(n, gen)) <= best.success);
    }
  }
}

TEST_CASE("best-response score is invariant under flips and rotations") {
  std::mt19937_64 gen(7);
  for (const int n : {4, 6, 8}) {
    for (int rep = 0; rep < 30; ++rep) {
      const Colouring col = random_colouring(n, gen);
      const ExactProbability base = best_response_rule(col).success;
      Colouring flipped = col;
      for (auto& v : flipped.colours) v = -v;
      CHECK(best_response_rule(flipped).success == base);
      for (int k = 1; k < 2 * n; ++k) {
        Colouring rotated{n, std::vector<int>(col.colours.size())};
        for (int x = 0; x < 2 * n; ++x) rotated.colours[static_cast<std::size_t>(x)] = col.at((x + k) % (2 * n));
        CHECK(best_response_rule(rotated).success == base);
      }
    }
  }
}

TEST_CASE("exhaustive two-party search") {
  const auto r4 = exhaustive_search_two_party(4);
  CHECK(r4.best == ExactProbability(3, 4));
  CHECK(best_response_rule(r4.witness).success == r4.best);

  // Brute-force oracle independent of the packed scan.
  ExactProbability brute(0, 1);
  for (std::uint64_t i = 0; i < 4096; ++i) brute = std::max(brute, best_response_rule(colouring_from_index(6, i)).success);
  const auto r6 = exhaustive_search_two_party(6);
  CHECK(brute == ExactProbability(5, 6));
  CHECK(r6.best == brute);
  CHECK(r6.best >= best_response_rule(half_circle_colouring(6)).success);

  const auto r8 = exhaustive_search_two_party(8);
  CHECK(r8.best == ExactProbability(7, 8));
}

TEST_CASE("parallel search returns the sequential witness") {
  for (const int n : {4, 6}) {
    const auto seq = exhaustive_search_two_party(n, 1);
    for (const unsigned w : {2U, 3U, 8U}) {
      const auto par = exhaustive_search_two_party(n, w);
      CHECK(par.best == seq.best);
      CHECK(par.witness.colours == seq.witness.colours);
    }
  }
}

TEST_CASE("search capacity and argument errors") {
  CHECK_THROWS_AS(exhaustive_search_two_party(10), CapacityError);
  CHECK_THROWS_AS(exhaustive_search_two_party(5), std::invalid_argument);
}

TEST_CASE("randomized mixtures never beat the deterministic optimum") {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  std::uniform_int_distribution<int> members(1, 8);
  for (int rep = 0; rep < 1000; ++rep) {
    const int k = members(gen);
    double total_w = 0.0, mixed = 0.0;
    for (int i = 0; i < k; ++i) {
      const double w = weight(gen);
      total_w += w;
      mixed += w * best_response_rule(random_colouring(4, gen)).success.to_double();
    }
    CHECK(mixed / total_w <= 0.75 + 1e-15);
  }
}

TEST_CASE("running the classical two-party protocol") {
  const Colouring half = half_circle_colouring(4);
  const ScoredRule best = best_response_rule(half);
  const TwoPartyRun r = run_classical_two_party({4, 0, 1, Relation::Neighbours}, half, best.rule);
  CHECK(r.guess == Relation::Neighbours);
  CHECK(r.success);

  int wins = 0;
  const auto all = enumerate_two_party(4);
  for (const auto& inst : all) wins += run_classical_two_party(inst, half, best.rule).success ? 1 : 0;
  CHECK(ExactProbability(wins, static_cast<std::int64_t>(all.size())) == ExactProbability(3, 4));

  // Hand-traced against colouring +-++-+-- with its best-response rule.
  const Colouring traced = parse_colouring("+-++-+--");
  const DecisionRule rule = best_response_rule(traced).rule;
  const TwoPartyRun a = run_classical_two_party({4, 5, 2, Relation::AntiNeighbours}, traced, rule);
  CHECK(a.guess == Relation::Neighbours);  // tie 1:1, broken toward neighbours
  CHECK_FALSE(a.success);
  const TwoPartyRun b = run_classical_two_party({4, 3, 0, Relation::AntiNeighbours}, traced, rule);
  CHECK(b.guess == Relation::AntiNeighbours);
  CHECK(b.success);
  const TwoPartyRun c = run_classical_two_party({4, 1, 0, Relation::Neighbours}, traced, rule);
  CHECK(c.guess == Relation::Neighbours);
  CHECK(c.success);

  CHECK_THROWS_AS(run_classical_two_party({6, 0, 1, Relation::Neighbours}, half, best.rule), std::invalid_argument);
}

TEST_CASE("three-party encodings") {
  constexpr std::array<int, 4> high{0, 0, 1, 1};
  constexpr std::array<int, 4> outer{0, 1, 1, 0};
  constexpr std::array<int, 4> parity{0, 1, 0, 1};
  constexpr std::array<int, 4> constant{0, 0, 0, 0};
  CHECK(evaluate_three_party_encoding(majority_decision(high, high)) == ExactProbability(3, 4));
  CHECK(evaluate_three_party_encoding(majority_decision(high, outer)) == ExactProbability(3, 4));
  CHECK(evaluate_three_party_encoding(majority_decision(outer, outer)) == ExactProbability(3, 4));
  // Parity of y or z is already implied by x and the promise.
  CHECK(evaluate_three_party_encoding(majority_decision(parity, high)) == ExactProbability(1, 2));
  CHECK(evaluate_three_party_encoding(majority_decision(constant, constant)) == ExactProbability(1, 2));
  CHECK(evaluate_three_party_encoding(standard_three_party_encoding()) == ExactProbability(3, 4));
}

TEST_CASE("every three-party encoding scores a multiple of 1/32") {
  std::mt19937_64 gen(3);
  std::bernoulli_distribution coin(0.5);
  for (int rep = 0; rep < 500; ++rep) {
    ThreePartyEncoding enc;
    for (auto& b : enc.bob_msg) b = coin(gen);
    for (auto& b : enc.claire_msg) b = coin(gen);
    for (auto& b : enc.alice_decision) b = coin(gen);
    const ExactProbability p = evaluate_three_party_encoding(enc);
    CHECK(32 % p.denominator() == 0);
    CHECK(p <= evaluate_three_party_encoding(majority_decision(enc.bob_msg, enc.claire_msg)));
  }
}

TEST_CASE("exhaustive three-party search") {
  const auto r = exhaustive_search_three_party();
  CHECK(r.best == ExactProbability(3, 4));
  CHECK(evaluate_three_party_encoding(r.witness) == r.best);
}

TEST_CASE("witness serialization round-trips") {
  std::mt19937_64 gen(11);
  for (int rep = 0; rep < 50; ++rep) {
    const Colouring c = random_colouring(6, gen);
    CHECK(parse_colouring(format_colouring(c)).colours == c.colours);
  }
  CHECK(format_colouring(half_circle_colouring(4)) == "++++----");
  const ThreePartyEncoding enc = exhaustive_search_three_party().witness;
  const ThreePartyEncoding back = parse_encoding(format_encoding(enc));
  CHECK(back.bob_msg == enc.bob_msg);
  CHECK(back.claire_msg == enc.claire_msg);
  CHECK(back.alice_decision == enc.alice_decision);
  CHECK_THROWS_AS(parse_colouring("++x-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_colouring("+++"), std::invalid_argument);
  CHECK_THROWS_AS(parse_encoding("bob: 0011\nclaire: 001\nalice: 0000 0000 0000 0000"), std::invalid_argument);
}
