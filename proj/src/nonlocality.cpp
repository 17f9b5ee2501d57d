#include "qcc/nonlocality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qcc/random.hpp"

namespace qcc {
namespace {

constexpr std::uint64_t kBatch = 4096;

// Setting pairs for the four terms and whether the term counts equal
// (rather than different) outcomes.
struct TermSpec {
  double alice;
  double bob;
  bool equal;
};

std::array<TermSpec, 4> term_specs(const SetupPair& s) {
  return {{{s.alice[0], s.bob[0], false},
           {s.alice[1], s.bob[0], false},
           {s.alice[1], s.bob[1], false},
           {s.alice[0], s.bob[1], true}}};
}

// Opposite-outcome counts for every term over trials [begin, end).
std::array<std::uint64_t, 4> count_range(const std::array<TermSpec, 4>& specs, std::uint64_t begin,
                                         std::uint64_t end, std::uint64_t seed, kernels::Isa isa) {
  std::array<std::uint64_t, 4> opposite{};
  std::vector<double> lambdas(kBatch);
  for (std::size_t j = 0; j < specs.size(); ++j) {
    for (std::uint64_t start = begin; start < end; start += kBatch) {
      const std::uint64_t len = std::min(kBatch, end - start);
      for (std::uint64_t k = 0; k < len; ++k) {
        RandomStream rng(seed, 4 * (start + k) + j);
        lambdas[k] = 2.0 * std::numbers::pi * rng.uniform();
      }
      opposite[j] += kernels::spin_agreement_count(specs[j].alice, specs[j].bob, {lambdas.data(), len}, isa);
    }
  }
  return opposite;
}

}  // namespace

SetupPair canonical_setup() {
  constexpr double pi = std::numbers::pi;
  return {{0.0, pi / 2.0}, {pi / 4.0, 3.0 * pi / 4.0}};
}

HardyTerms hardy_terms_quantum(const SetupPair& setup) {
  HardyTerms h{};
  const auto specs = term_specs(setup);
  for (std::size_t j = 0; j < specs.size(); ++j) {
    const SingletCorrelation c = singlet_correlation(specs[j].alice, specs[j].bob);
    h.terms[j] = specs[j].equal ? c.p_same : c.p_opposite;
  }
  return h;
}

double hardy_sum_quantum(const SetupPair& setup) { return hardy_terms_quantum(setup).sum(); }

int hardy_sum_local(const LocalDeterministicStrategy& s) {
  const auto& a = s.alice;
  const auto& b = s.bob;
  return (a[0] != b[0] ? 1 : 0) + (a[1] != b[0] ? 1 : 0) + (a[1] != b[1] ? 1 : 0) + (a[0] == b[1] ? 1 : 0);
}

std::array<LocalDeterministicStrategy, 16> all_local_strategies() {
  std::array<LocalDeterministicStrategy, 16> all{};
  for (unsigned i = 0; i < 16; ++i) {
    auto bit = [i](unsigned k) { return from_bit(static_cast<int>((i >> (3 - k)) & 1U)); };
    all[i] = {{bit(0), bit(1)}, {bit(2), bit(3)}};
  }
  return all;
}

int max_local_hardy_sum() {
  int best = 0;
  for (const auto& s : all_local_strategies()) best = std::max(best, hardy_sum_local(s));
  return best;
}

SpinModelEstimate hardy_sum_spin_model(const SetupPair& setup, std::uint64_t trials, std::uint64_t seed,
                                       unsigned workers, kernels::Isa isa) {
  if (trials < 1) throw std::invalid_argument("spin model needs at least one trial");
  workers = std::clamp<unsigned>(workers, 1U, 256U);
  const auto specs = term_specs(setup);

  std::vector<std::array<std::uint64_t, 4>> partial(workers);
  const std::uint64_t chunk = (trials + workers - 1) / workers;
  if (workers == 1) {
    partial[0] = count_range(specs, 0, trials, seed, isa);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(trials, w * chunk);
      const std::uint64_t end = std::min(trials, begin + chunk);
      pool.emplace_back([&, w, begin, end] { partial[w] = count_range(specs, begin, end, seed, isa); });
    }
    for (auto& t : pool) t.join();
  }

  SpinModelEstimate est{};
  est.trials = trials;
  const auto n = static_cast<double>(trials);
  double variance = 0.0;
  for (std::size_t j = 0; j < specs.size(); ++j) {
    std::uint64_t opposite = 0;
    for (const auto& p : partial) opposite += p[j];
    const std::uint64_t hits = specs[j].equal ? trials - opposite : opposite;
    const double p = static_cast<double>(hits) / n;
    est.terms.terms[j] = p;
    variance += p * (1.0 - p) / n;
  }
  est.estimate = est.terms.sum();
  est.standard_error = std::sqrt(variance);
  return est;
}

double spin_model_opposite_fraction(double theta, double phi, std::uint64_t trials, std::uint64_t seed,
                                    kernels::Isa isa) {
  if (trials < 1) throw std::invalid_argument("spin model needs at least one trial");
  std::vector<double> lambdas(kBatch);
  std::uint64_t opposite = 0;
  for (std::uint64_t start = 0; start < trials; start += kBatch) {
    const std::uint64_t len = std::min(kBatch, trials - start);
    for (std::uint64_t k = 0; k < len; ++k) {
      RandomStream rng(seed, start + k);
      lambdas[k] = 2.0 * std::numbers::pi * rng.uniform();
    }
    opposite += kernels::spin_agreement_count(theta, phi, {lambdas.data(), len}, isa);
  }
  return static_cast<double>(opposite) / static_cast<double>(trials);
}

}  // namespace qcc
