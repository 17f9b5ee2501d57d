#include "qcc/harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>
#include <vector>

#include "qcc/classical_strategies.hpp"
#include "qcc/errors.hpp"
#include "qcc/quantum_strategies.hpp"

namespace qcc {
namespace {

constexpr std::array<std::pair<Protocol, std::string_view>, 5> kRegistry{{
    {Protocol::Quantum2, "quantum2"},
    {Protocol::Classical2, "classical2"},
    {Protocol::Spin2, "spin2"},
    {Protocol::Quantum3, "quantum3"},
    {Protocol::Classical3, "classical3"},
}};

// Everything a trial needs that is fixed for the whole run.
struct Prepared {
  RunConfig config;
  std::optional<TwoPartyFallback> two_party;
  ThreePartyEncoding three_party = standard_three_party_encoding();
};

bool run_one(const Prepared& p, std::uint64_t trial) {
  RandomStream rng(p.config.seed, trial);
  switch (p.config.protocol) {
    case Protocol::Quantum2:
      return run_two_party_with_detectors(sample_two_party(p.config.n, rng), p.config.detector, *p.two_party, rng)
          .success;
    case Protocol::Classical2: {
      const TwoPartyInstance inst = sample_two_party(p.config.n, rng);
      return run_classical_two_party(inst, p.two_party->colouring, p.two_party->rule).success;
    }
    case Protocol::Spin2:
      return run_classical_spin_two_party(sample_two_party(p.config.n, rng), rng).success;
    case Protocol::Quantum3:
      return run_three_party_with_detectors(sample_three_party(rng), p.config.detector, p.three_party, rng).success;
    case Protocol::Classical3: {
      const ThreePartyInstance inst = sample_three_party(rng);
      return run_classical_three_party(inst, p.three_party) == inst.f;
    }
  }
  return false;
}

std::uint64_t count_successes(const Prepared& p, std::uint64_t begin, std::uint64_t end) {
  std::uint64_t wins = 0;
  for (std::uint64_t t = begin; t < end; ++t) wins += run_one(p, t) ? 1 : 0;
  return wins;
}

}  // namespace

std::string_view to_string(Protocol p) {
  for (const auto& [id, name] : kRegistry) {
    if (id == p) return name;
  }
  return "unknown";
}

Protocol parse_protocol(std::string_view name) {
  for (const auto& [id, text] : kRegistry) {
    if (text == name) return id;
  }
  throw UsageError("unknown protocol '" + std::string(name) +
                   "' (expected quantum2, classical2, spin2, quantum3 or classical3)");
}

int parties_of(Protocol p) { return p == Protocol::Quantum3 || p == Protocol::Classical3 ? 3 : 2; }

void validate_config(const RunConfig& config) {
  if (config.trials < 1) throw UsageError("trials must be at least 1");
  if (config.workers < 1) throw UsageError("workers must be at least 1");
  try {
    validate_detector(config.detector);
    if (parties_of(config.protocol) == 2) validate_circle_size(config.n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

double binomial_standard_error(double estimate, std::uint64_t trials) {
  return std::sqrt(estimate * (1.0 - estimate) / static_cast<double>(trials));
}

TrialSummary run_trials(const RunConfig& config) {
  validate_config(config);
  Prepared prepared{config, std::nullopt};
  if (parties_of(config.protocol) == 2) prepared.two_party = optimal_two_party_fallback(config.n);

  const unsigned workers = std::clamp<unsigned>(config.workers, 1U, 256U);
  std::vector<std::uint64_t> tallies(workers, 0);
  if (workers == 1) {
    tallies[0] = count_successes(prepared, 0, config.trials);
  } else {
    const std::uint64_t chunk = (config.trials + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(config.trials, w * chunk);
      const std::uint64_t end = std::min(config.trials, begin + chunk);
      pool.emplace_back([&, w, begin, end] { tallies[w] = count_successes(prepared, begin, end); });
    }
    for (auto& t : pool) t.join();
  }

  TrialSummary s;
  s.protocol = std::string(to_string(config.protocol));
  s.parties = parties_of(config.protocol);
  if (s.parties == 2) s.n = config.n;
  s.detector = config.detector;
  s.trials = config.trials;
  for (const auto t : tallies) s.successes += t;
  s.estimate = static_cast<double>(s.successes) / static_cast<double>(s.trials);
  s.standard_error = binomial_standard_error(s.estimate, s.trials);
  s.seed = config.seed;
  return s;
}

}  // namespace qcc
