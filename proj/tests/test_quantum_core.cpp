#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qcc/quantum_core.hpp"
#include "test_support.hpp"

using namespace qcc;

namespace {

constexpr double kPi = std::numbers::pi;
using C = std::complex<double>;
using Mat2 = std::array<std::array<C, 2>, 2>;

// Oracle: projector (I + s (cos a Z + sin a X)) / 2 onto outcome s along a.
Mat2 projector(double a, int s) {
  const double c = std::cos(a), sn = std::sin(a);
  return {{{0.5 * (1.0 + s * c), 0.5 * s * sn}, {0.5 * s * sn, 0.5 * (1.0 - s * c)}}};
}

// Oracle: <psi| P_0 (x) P_1 (x) ... |psi> by explicit Kronecker products.
double kron_probability(const StateVector& psi, const std::vector<double>& axes, const std::vector<int>& signs) {
  const std::size_t n = psi.num_qubits();
  const std::size_t dim = psi.dimension();
  const auto amps = psi.amplitudes();
  double total = 0.0;
  for (std::size_t r = 0; r < dim; ++r) {
    C row{0.0};
    for (std::size_t c = 0; c < dim; ++c) {
      C entry{1.0};
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t shift = n - 1 - k;
        entry *= projector(axes[k], signs[k])[(r >> shift) & 1U][(c >> shift) & 1U];
      }
      row += entry * amps[c];
    }
    total += (std::conj(amps[r]) * row).real();
  }
  return total;
}

std::array<Outcome, 2> pair(Outcome a, Outcome b) { return {a, b}; }

}  // namespace

TEST_CASE("singlet amplitudes and norm") {
  const StateVector s = make_singlet();
  REQUIRE(s.num_qubits() == 2);
  const auto a = s.amplitudes();
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(a[0]) == 0.0);
  CHECK(a[1].real() == doctest::Approx(r).epsilon(1e-15));
  CHECK(a[2].real() == doctest::Approx(-r).epsilon(1e-15));
  CHECK(std::abs(a[3]) == 0.0);
  CHECK(std::abs(s.norm_squared() - 1.0) < 1e-12);
}

TEST_CASE("singlet is perfectly anticorrelated at equal axes") {
  const StateVector s = make_singlet();
  const std::array<MeasurementAxis, 2> axes{MeasurementAxis(0.3), MeasurementAxis(0.3)};
  CHECK(joint_probability(s, axes, pair(Outcome::Plus, Outcome::Plus)) < 1e-12);
  CHECK(joint_probability(s, axes, pair(Outcome::Minus, Outcome::Minus)) < 1e-12);
  const double opposite = joint_probability(s, axes, pair(Outcome::Plus, Outcome::Minus)) +
                          joint_probability(s, axes, pair(Outcome::Minus, Outcome::Plus));
  CHECK(std::abs(opposite - 1.0) < 1e-12);
}

TEST_CASE("GHZ state and computational-basis agreement") {
  const StateVector g = make_ghz();
  const auto a = g.amplitudes();
  for (std::size_t i = 0; i < 8; ++i) {
    const double expect = (i == 0 || i == 7) ? 1.0 / std::sqrt(2.0) : 0.0;
    CHECK(std::abs(a[i] - C{expect}) < 1e-15);
  }
  CHECK(std::abs(g.norm_squared() - 1.0) < 1e-12);

  const std::array<MeasurementAxis, 3> z{};
  double agree = 0.0;
  for (const Outcome o0 : {Outcome::Plus, Outcome::Minus})
    for (const Outcome o1 : {Outcome::Plus, Outcome::Minus})
      for (const Outcome o2 : {Outcome::Plus, Outcome::Minus}) {
        const std::array<Outcome, 3> o{o0, o1, o2};
        const double p = joint_probability(g, z, o);
        if (o0 == o1 && o1 == o2) agree += p;
        else CHECK(p < 1e-12);
      }
  CHECK(std::abs(agree - 1.0) < 1e-12);
  const std::array<Outcome, 3> mixed{Outcome::Plus, Outcome::Plus, Outcome::Minus};
  CHECK(joint_probability(g, z, mixed) == 0.0);
}

TEST_CASE("joint probability at (0, pi/4)") {
  const StateVector s = make_singlet();
  const std::array<MeasurementAxis, 2> axes{MeasurementAxis(0.0), MeasurementAxis(kPi / 4)};
  const double pp = joint_probability(s, axes, pair(Outcome::Plus, Outcome::Plus));
  const double mm = joint_probability(s, axes, pair(Outcome::Minus, Outcome::Minus));
  CHECK(pp == doctest::Approx(0.25 * (1.0 - std::cos(kPi / 4))).epsilon(1e-12));
  CHECK(pp + mm == doctest::Approx(0.146446609406726).epsilon(1e-12));
}

TEST_CASE("joint probability agrees with the Kronecker projector oracle") {
  std::mt19937_64 gen(1234);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int rep = 0; rep < 200; ++rep) {
    const double a = angle(gen), b = angle(gen), c = angle(gen);
    const StateVector two = make_singlet();
    const StateVector three = apply_hadamard(apply_phase(make_ghz(), 1, angle(gen)), 2);
    const std::array<MeasurementAxis, 2> ax2{MeasurementAxis(a), MeasurementAxis(b)};
    const std::array<MeasurementAxis, 3> ax3{MeasurementAxis(a), MeasurementAxis(b), MeasurementAxis(c)};
    for (int s0 : {1, -1})
      for (int s1 : {1, -1}) {
        const auto o2 = pair(s0 == 1 ? Outcome::Plus : Outcome::Minus, s1 == 1 ? Outcome::Plus : Outcome::Minus);
        CHECK(std::abs(joint_probability(two, ax2, o2) - kron_probability(two, {a, b}, {s0, s1})) < 1e-12);
        for (int s2 : {1, -1}) {
          const std::array<Outcome, 3> o3{o2[0], o2[1], s2 == 1 ? Outcome::Plus : Outcome::Minus};
          CHECK(std::abs(joint_probability(three, ax3, o3) - kron_probability(three, {a, b, c}, {s0, s1, s2})) < 1e-12);
        }
      }
  }
}

TEST_CASE("statevector same-outcome probability equals the closed form") {
  const StateVector s = make_singlet();
  for (double theta = -7.0; theta < 7.0; theta += 0.37) {
    for (double phi = -7.0; phi < 7.0; phi += 0.41) {
      const std::array<MeasurementAxis, 2> axes{MeasurementAxis(theta), MeasurementAxis(phi)};
      const double same = joint_probability(s, axes, pair(Outcome::Plus, Outcome::Plus)) +
                          joint_probability(s, axes, pair(Outcome::Minus, Outcome::Minus));
      const SingletCorrelation c = singlet_correlation(theta, phi);
      CHECK(std::abs(same - c.p_same) < 1e-12);
      CHECK(c.p_same + c.p_opposite == 1.0);
      CHECK(c.p_same >= 0.0);
      CHECK(c.p_opposite <= 1.0);
      double total = 0.0;
      for (const double p : outcome_distribution(s, axes)) total += p;
      CHECK(std::abs(total - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("singlet correlation examples") {
  const SingletCorrelation c = singlet_correlation(0.0, kPi / 4);
  CHECK(c.p_opposite == doctest::Approx(0.5 * (1.0 + std::sqrt(2.0) / 2.0)).epsilon(1e-15));
  CHECK(c.p_opposite == doctest::Approx(0.853553).epsilon(1e-6));
  const SingletCorrelation eq = singlet_correlation(1.1, 1.1);
  CHECK(eq.p_same == 0.0);
  CHECK(eq.p_opposite == 1.0);
  const SingletCorrelation anti = singlet_correlation(0.0, kPi);
  CHECK(anti.p_same == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(anti.p_opposite == doctest::Approx(0.0));
}

TEST_CASE("phase gate") {
  const StateVector g = make_ghz();
  for (const double alpha : {0.0, 2.0 * kPi}) {
    const StateVector out = apply_phase(g, 1, alpha);
    for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(out.amplitudes()[i] - g.amplitudes()[i]) < 1e-12);
  }
  StateVector flipped = g;
  for (std::size_t q = 0; q < 3; ++q) flipped = apply_phase(flipped, q, kPi);
  CHECK(std::abs(flipped.amplitudes()[0] - C{1.0 / std::sqrt(2.0)}) < 1e-12);
  CHECK(std::abs(flipped.amplitudes()[7] - C{-1.0 / std::sqrt(2.0)}) < 1e-12);
  CHECK(std::abs(flipped.norm_squared() - 1.0) < 1e-12);
  CHECK_THROWS_AS(apply_phase(g, 3, 0.1), std::invalid_argument);
}

TEST_CASE("Hadamard gate") {
  const StateVector plus = apply_hadamard(make_basis_qubit(0), 0);
  CHECK(std::abs(plus.amplitudes()[0] - C{1.0 / std::sqrt(2.0)}) < 1e-15);
  CHECK(std::abs(plus.amplitudes()[1] - C{1.0 / std::sqrt(2.0)}) < 1e-15);

  const StateVector g = apply_phase(make_ghz(), 0, 0.7);
  for (std::size_t q = 0; q < 3; ++q) {
    const StateVector twice = apply_hadamard(apply_hadamard(g, q), q);
    for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(twice.amplitudes()[i] - g.amplitudes()[i]) < 1e-12);
  }

  StateVector h = make_ghz();
  for (std::size_t q = 0; q < 3; ++q) h = apply_hadamard(h, q);
  for (std::size_t i = 0; i < 8; ++i) {
    const bool even = (__builtin_popcount(static_cast<unsigned>(i)) % 2) == 0;
    CHECK(std::abs(h.amplitudes()[i] - C{even ? 0.5 : 0.0}) < 1e-12);
  }
  CHECK_THROWS_AS(apply_hadamard(make_singlet(), 2), std::invalid_argument);
}

TEST_CASE("argument errors") {
  const StateVector s = make_singlet();
  const std::array<MeasurementAxis, 3> three{};
  const std::array<MeasurementAxis, 2> two{};
  const std::array<Outcome, 1> one{Outcome::Plus};
  CHECK_THROWS_AS(joint_probability(s, three, pair(Outcome::Plus, Outcome::Plus)), std::invalid_argument);
  CHECK_THROWS_AS(joint_probability(s, two, one), std::invalid_argument);
  RandomStream rng(1);
  CHECK_THROWS_AS(sample_outcomes(s, three, rng), std::invalid_argument);

  const std::array<Amplitude, 4> unnormalized{1.0, 1.0, 0.0, 0.0};
  CHECK_THROWS_AS(StateVector(2, unnormalized), std::invalid_argument);
  const std::array<Amplitude, 2> wrong_size{1.0, 0.0};
  CHECK_THROWS_AS(StateVector(2, wrong_size), std::invalid_argument);
  CHECK_THROWS_AS(MeasurementAxis(std::nan("")), std::invalid_argument);
}

TEST_CASE("axis angles normalize into [0, 2pi)") {
  CHECK(MeasurementAxis(-kPi / 2).angle() == doctest::Approx(1.5 * kPi));
  CHECK(MeasurementAxis(5 * kPi).angle() == doctest::Approx(kPi));
  const double a = MeasurementAxis(-1e-300).angle();
  CHECK(a >= 0.0);
  CHECK(a < 2.0 * kPi);
}

TEST_CASE("sampling never produces zero-probability outcomes") {
  const StateVector s = make_singlet();
  const std::array<MeasurementAxis, 2> axes{MeasurementAxis(1.0), MeasurementAxis(1.0)};
  RandomStream rng(5);
  for (int i = 0; i < 100000; ++i) {
    const auto o = sample_outcomes(s, axes, rng);
    REQUIRE(o[0] != o[1]);
  }
}

TEST_CASE("sampled frequencies match the Born rule") {
  const StateVector s = make_singlet();
  const std::uint64_t trials = 1000000;
  const std::array<std::pair<double, double>, 3> grid{{{0.0, kPi / 4}, {0.5, 2.9}, {kPi / 2, 3 * kPi / 4}}};
  for (const auto& [theta, phi] : grid) {
    const std::array<MeasurementAxis, 2> axes{MeasurementAxis(theta), MeasurementAxis(phi)};
    const auto exact = outcome_distribution(s, axes);
    std::array<std::uint64_t, 4> counts{};
    RandomStream rng(42);
    for (std::uint64_t t = 0; t < trials; ++t) {
      const auto o = sample_outcomes(s, axes, rng);
      ++counts[static_cast<std::size_t>(2 * to_bit(o[0]) + to_bit(o[1]))];
    }
    for (std::size_t k = 0; k < 4; ++k) {
      const double freq = static_cast<double>(counts[k]) / trials;
      CHECK(test::within_sigma(freq, exact[k], test::binomial_sigma(exact[k], trials)));
    }
  }
  // (+1, -1) at (0, pi/4) against the closed form.
  const std::array<MeasurementAxis, 2> axes{MeasurementAxis(0.0), MeasurementAxis(kPi / 4)};
  const double expected = 0.5 * singlet_correlation(0.0, kPi / 4).p_opposite;
  std::uint64_t hits = 0;
  RandomStream rng(77);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto o = sample_outcomes(s, axes, rng);
    hits += (o[0] == Outcome::Plus && o[1] == Outcome::Minus) ? 1 : 0;
  }
  CHECK(test::within_sigma(static_cast<double>(hits) / trials, expected, test::binomial_sigma(expected, trials)));
}

TEST_CASE("fixed seed gives identical outcome sequences") {
  const StateVector g = apply_hadamard(make_ghz(), 0);
  const std::array<MeasurementAxis, 3> axes{MeasurementAxis(0.2), MeasurementAxis(1.3), MeasurementAxis(2.4)};
  RandomStream a(99), b(99);
  for (int i = 0; i < 1000; ++i) CHECK(sample_outcomes(g, axes, a) == sample_outcomes(g, axes, b));
}
