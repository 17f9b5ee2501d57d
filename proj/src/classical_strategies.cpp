#include "qcc/classical_strategies.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qcc/errors.hpp"

namespace qcc {
namespace {

// Neighbour and anti-neighbour offsets of y on the 2N circle.
std::array<int, 2> neighbour_offsets(int n) { return {1, 2 * n - 1}; }
std::array<int, 2> anti_offsets(int n) { return {n - 1, n + 1}; }

// Counts of valid x carrying `bit` among y's neighbours and anti-neighbours.
struct ClassCounts {
  int neighbours = 0;
  int anti = 0;
};

ClassCounts class_counts(const Colouring& c, int y, int bit) {
  const int m = 2 * c.n;
  ClassCounts counts;
  for (const int d : neighbour_offsets(c.n)) counts.neighbours += c.at((y + d) % m) == bit ? 1 : 0;
  for (const int d : anti_offsets(c.n)) counts.anti += c.at((y + d) % m) == bit ? 1 : 0;
  return counts;
}

// Best-response success count (out of 8N) for the colouring packed in `index`.
int best_response_count(int n, std::uint64_t index) {
  const int m = 2 * n;
  auto colour = [&](int x) { return ((index >> x) & 1U) != 0 ? -1 : 1; };
  int total = 0;
  for (int y = 0; y < m; ++y) {
    int n_plus = 0, a_plus = 0;
    for (const int d : neighbour_offsets(n)) n_plus += colour((y + d) % m) == 1 ? 1 : 0;
    for (const int d : anti_offsets(n)) a_plus += colour((y + d) % m) == 1 ? 1 : 0;
    total += std::max(n_plus, a_plus) + std::max(2 - n_plus, 2 - a_plus);
  }
  return total;
}

struct SearchSlice {
  int best = -1;
  std::uint64_t index = 0;
};

SearchSlice scan_colourings(int n, std::uint64_t begin, std::uint64_t end) {
  SearchSlice s;
  for (std::uint64_t i = begin; i < end; ++i) {
    const int c = best_response_count(n, i);
    if (c > s.best) {
      s.best = c;
      s.index = i;
    }
  }
  return s;
}

int bit_char(char ch) {
  if (ch == '0') return 0;
  if (ch == '1') return 1;
  throw std::invalid_argument(std::string("expected '0' or '1', got '") + ch + "'");
}

}  // namespace

ExactProbability::ExactProbability(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0 || numerator < 0 || numerator > denominator) {
    throw std::invalid_argument("probability fraction must satisfy 0 <= num <= den, den > 0");
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string ExactProbability::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

DecisionRule::DecisionRule(int n) : n_(n), table_(static_cast<std::size_t>(4 * n), Relation::Neighbours) {
  validate_circle_size(n);
}

std::size_t DecisionRule::slot(int y, int bit) const {
  if (y < 0 || y >= 2 * n_ || (bit != 1 && bit != -1)) throw std::invalid_argument("decision rule index out of range");
  return static_cast<std::size_t>(2 * y + (bit == 1 ? 0 : 1));
}

void validate_colouring(const Colouring& c) {
  validate_circle_size(c.n);
  if (c.colours.size() != static_cast<std::size_t>(2 * c.n)) {
    throw std::invalid_argument("colouring must have exactly 2N entries");
  }
  for (const int v : c.colours) {
    if (v != 1 && v != -1) throw std::invalid_argument("colours must be +1 or -1");
  }
}

Colouring half_circle_colouring(int n) {
  validate_circle_size(n);
  Colouring c{n, std::vector<int>(static_cast<std::size_t>(2 * n), -1)};
  std::fill_n(c.colours.begin(), n, 1);
  return c;
}

Colouring constant_colouring(int n, int colour) {
  validate_circle_size(n);
  return {n, std::vector<int>(static_cast<std::size_t>(2 * n), colour)};
}

Colouring colouring_from_index(int n, std::uint64_t index) {
  validate_circle_size(n);
  Colouring c{n, std::vector<int>(static_cast<std::size_t>(2 * n))};
  for (int x = 0; x < 2 * n; ++x) c.colours[static_cast<std::size_t>(x)] = ((index >> x) & 1U) != 0 ? -1 : 1;
  return c;
}

ExactProbability score_rule(const Colouring& colouring, const DecisionRule& rule) {
  validate_colouring(colouring);
  if (rule.n() != colouring.n) throw std::invalid_argument("rule and colouring disagree on N");
  std::int64_t wins = 0;
  const auto instances = enumerate_two_party(colouring.n);
  for (const auto& inst : instances) {
    if (rule.guess(inst.y, colouring.at(inst.x)) == inst.relation) ++wins;
  }
  return {wins, static_cast<std::int64_t>(instances.size())};
}

ScoredRule best_response_rule(const Colouring& colouring) {
  validate_colouring(colouring);
  const int n = colouring.n;
  DecisionRule rule(n);
  std::int64_t wins = 0;
  for (int y = 0; y < 2 * n; ++y) {
    for (const int bit : {1, -1}) {
      const ClassCounts c = class_counts(colouring, y, bit);
      rule.set(y, bit, c.neighbours >= c.anti ? Relation::Neighbours : Relation::AntiNeighbours);
      wins += std::max(c.neighbours, c.anti);
    }
  }
  return {std::move(rule), ExactProbability(wins, 8 * n)};
}

TwoPartySearchResult exhaustive_search_two_party(int n, unsigned workers) {
  validate_circle_size(n);
  if (n > kMaxSearchN) {
    throw CapacityError("exhaustive two-party search supports N <= " + std::to_string(kMaxSearchN) + ", got " +
                        std::to_string(n));
  }
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  workers = std::clamp<unsigned>(workers, 1U, 64U);

  std::vector<SearchSlice> slices(workers);
  if (workers == 1) {
    slices[0] = scan_colourings(n, 0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(total, w * chunk);
      const std::uint64_t end = std::min(total, begin + chunk);
      pool.emplace_back([&slices, n, w, begin, end] { slices[w] = scan_colourings(n, begin, end); });
    }
    for (auto& t : pool) t.join();
  }

  // Slices are in index order, so a strict comparison keeps the lowest index.
  SearchSlice best;
  for (const auto& s : slices) {
    if (s.best > best.best) best = s;
  }
  return {ExactProbability(best.best, 8 * n), colouring_from_index(n, best.index)};
}

TwoPartyRun run_classical_two_party(const TwoPartyInstance& instance, const Colouring& colouring,
                                     const DecisionRule& rule) {
  if (colouring.n != instance.n || rule.n() != instance.n) {
    throw std::invalid_argument("instance, colouring and rule must share N");
  }
  const Relation guess = rule.guess(instance.y, colouring.at(instance.x));
  return {guess, guess == instance.relation};
}

ExactProbability evaluate_three_party_encoding(const ThreePartyEncoding& enc) {
  std::int64_t wins = 0;
  for (const auto& inst : enumerate_three_party()) {
    if (run_classical_three_party(inst, enc) == inst.f) ++wins;
  }
  return {wins, 32};
}

ThreePartyEncoding majority_decision(const std::array<int, 4>& bob_msg, const std::array<int, 4>& claire_msg) {
  ThreePartyEncoding enc{bob_msg, claire_msg, {}};
  std::array<int, 16> ones{};
  std::array<int, 16> zeros{};
  for (const auto& inst : enumerate_three_party()) {
    const auto slot = static_cast<std::size_t>(4 * inst.x + 2 * bob_msg[static_cast<std::size_t>(inst.y)] +
                                               claire_msg[static_cast<std::size_t>(inst.z)]);
    (inst.f == 1 ? ones : zeros)[slot] += 1;
  }
  for (std::size_t s = 0; s < 16; ++s) enc.alice_decision[s] = ones[s] > zeros[s] ? 1 : 0;
  return enc;
}

ThreePartyEncoding standard_three_party_encoding() {
  constexpr std::array<int, 4> high_bit{0, 0, 1, 1};
  return majority_decision(high_bit, high_bit);
}

ThreePartySearchResult exhaustive_search_three_party() {
  auto table = [](unsigned code) {
    std::array<int, 4> t{};
    for (unsigned v = 0; v < 4; ++v) t[v] = static_cast<int>((code >> v) & 1U);
    return t;
  };
  ThreePartySearchResult best{ExactProbability(0, 1), {}};
  bool first = true;
  for (unsigned b = 0; b < 16; ++b) {
    for (unsigned c = 0; c < 16; ++c) {
      const ThreePartyEncoding enc = majority_decision(table(b), table(c));
      const ExactProbability p = evaluate_three_party_encoding(enc);
      if (first || p > best.best) {
        best = {p, enc};
        first = false;
      }
    }
  }
  return best;
}

int run_classical_three_party(const ThreePartyInstance& instance, const ThreePartyEncoding& enc) {
  return enc.decide(instance.x, enc.bob_msg[static_cast<std::size_t>(instance.y)],
                    enc.claire_msg[static_cast<std::size_t>(instance.z)]);
}

std::string format_colouring(const Colouring& c) {
  std::string s;
  s.reserve(c.colours.size());
  for (const int v : c.colours) s.push_back(v == 1 ? '+' : '-');
  return s;
}

Colouring parse_colouring(std::string_view text) {
  if (text.size() % 2 != 0) throw std::invalid_argument("colouring string must have even length 2N");
  Colouring c{static_cast<int>(text.size() / 2), {}};
  for (const char ch : text) {
    if (ch == '+') c.colours.push_back(1);
    else if (ch == '-') c.colours.push_back(-1);
    else throw std::invalid_argument(std::string("unexpected colour character '") + ch + "'");
  }
  validate_colouring(c);
  return c;
}

std::string format_encoding(const ThreePartyEncoding& enc) {
  std::ostringstream out;
  out << "bob: ";
  for (const int b : enc.bob_msg) out << b;
  out << "\nclaire: ";
  for (const int b : enc.claire_msg) out << b;
  out << "\nalice:";
  for (int x = 0; x < 4; ++x) {
    out << ' ';
    for (int s = 0; s < 4; ++s) out << enc.alice_decision[static_cast<std::size_t>(4 * x + s)];
  }
  out << '\n';
  return out.str();
}

ThreePartyEncoding parse_encoding(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string label, bob, claire;
  ThreePartyEncoding enc;
  if (!(in >> label >> bob) || label != "bob:" || bob.size() != 4) throw std::invalid_argument("malformed bob table");
  if (!(in >> label >> claire) || label != "claire:" || claire.size() != 4) {
    throw std::invalid_argument("malformed claire table");
  }
  if (!(in >> label) || label != "alice:") throw std::invalid_argument("malformed alice table");
  for (std::size_t v = 0; v < 4; ++v) {
    enc.bob_msg[v] = bit_char(bob[v]);
    enc.claire_msg[v] = bit_char(claire[v]);
  }
  for (std::size_t x = 0; x < 4; ++x) {
    std::string group;
    if (!(in >> group) || group.size() != 4) throw std::invalid_argument("malformed alice table");
    for (std::size_t s = 0; s < 4; ++s) enc.alice_decision[4 * x + s] = bit_char(group[s]);
  }
  return enc;
}

}  // namespace qcc
