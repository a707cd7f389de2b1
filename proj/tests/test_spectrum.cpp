#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "memchan/numeric.hpp"
#include "memchan/spectrum.hpp"

using namespace memchan;

namespace {

double uniform01(std::mt19937_64& rng) {
  return std::ldexp(static_cast<double>(rng() >> 11), -53);
}

// Straight-sum entropy for small spectra, kept separate from the library's
// compensated implementation.
double plain_entropy_bits(const std::vector<double>& spec) {
  double s = 0.0;
  for (double l : spec) {
    if (l > 0.0) s -= l * std::log2(l);
  }
  return s;
}

}  // namespace

TEST_SUITE("spectrum") {

TEST_CASE("bit string accessors") {
  const BitString b{0b0110, 4};
  CHECK(b.bit(1) == 0);
  CHECK(b.bit(2) == 1);
  CHECK(b.bit(3) == 1);
  CHECK(b.bit(4) == 0);
  CHECK(b.complement().value == 0b1001);
  CHECK(b.complement().length == 4);
}

TEST_CASE("diagonal weights for two qubits") {
  const ChannelParams ch = symmetric_channel(0.4, 0.5);
  // eta0=0.8, eta1=0.2; transitions (1-mu)eta+mu*delta.
  CHECK(diagonal_weight({0b00, 2}, ch) == doctest::Approx(0.72).epsilon(1e-15));
  CHECK(diagonal_weight({0b01, 2}, ch) == doctest::Approx(0.08).epsilon(1e-15));
  CHECK(diagonal_weight({0b10, 2}, ch) == doctest::Approx(0.08).epsilon(1e-15));
  CHECK(diagonal_weight({0b11, 2}, ch) == doctest::Approx(0.12).epsilon(1e-15));
}

TEST_CASE("antidiagonal weights for two qubits") {
  const ChannelParams ch = symmetric_channel(0.4, 0.5);
  CHECK(antidiagonal_weight({0b00, 2}, ch) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(antidiagonal_weight({0b01, 2}, ch) == 0.0);
  CHECK(antidiagonal_weight({0b10, 2}, ch) == 0.0);
  CHECK(antidiagonal_weight({0b11, 2}, ch) == doctest::Approx(0.1).epsilon(1e-15));

  // Odd lengths carry no antidiagonal part.
  CHECK(antidiagonal_weight({0b010, 3}, ch) == 0.0);
  CHECK(antidiagonal_weight({0b111, 3}, ch) == 0.0);
}

TEST_CASE("antidiagonal support condition") {
  for (std::uint64_t w = 0; w < 16; ++w) {
    const BitString b{w, 4};
    const bool expected = b.bit(1) == b.bit(2) && b.bit(3) == b.bit(4);
    CHECK(detail::antidiagonal_support(w, 4) == expected);
    CHECK(detail::antidiagonal_support(b.complement().value, 4) == expected);
  }
}

TEST_CASE("separable stream matches per-string weights exactly") {
  const ChannelParams ch = symmetric_channel(0.3, 0.65);
  const int n = 5;
  const detail::TransitionTable tt(ch);
  std::uint64_t expected_word = 0;
  detail::enumerate_diagonal_weights(n, tt, [&](std::uint64_t word, double w) {
    CHECK(word == expected_word);
    CHECK(w == diagonal_weight({word, n}, ch));
    ++expected_word;
  });
  CHECK(expected_word == 32);
}

TEST_CASE("pair stream carries both complements exactly") {
  const ChannelParams ch = symmetric_channel(0.45, 0.2);
  const int n = 4;
  const detail::TransitionTable tt(ch);
  int pairs = 0;
  detail::enumerate_complement_pairs(n, tt, [&](std::uint64_t word, double pa, double pc) {
    const BitString alpha{word, n};
    CHECK(alpha.bit(1) == 0);
    CHECK(pa == diagonal_weight(alpha, ch));
    CHECK(pc == diagonal_weight(alpha.complement(), ch));
    ++pairs;
  });
  CHECK(pairs == 8);
}

TEST_CASE("two-qubit spectra match hand enumeration") {
  const ChannelParams ch = symmetric_channel(0.4, 0.5);

  const std::vector<double> sep = separable_spectrum(2, ch).to_vector();
  REQUIRE(sep.size() == 4);
  CHECK(sep[0] == doctest::Approx(0.72).epsilon(1e-15));
  CHECK(sep[1] == doctest::Approx(0.08).epsilon(1e-15));
  CHECK(sep[2] == doctest::Approx(0.08).epsilon(1e-15));
  CHECK(sep[3] == doctest::Approx(0.12).epsilon(1e-15));

  // Pair {00,11}: (P, Q) = (0.84, 0.5) -> 0.67, 0.17; pair {01,10}: 0.08 twice.
  const std::vector<double> ghz = ghz_spectrum(2, ch).to_vector();
  REQUIRE(ghz.size() == 4);
  CHECK(ghz[0] == doctest::Approx(0.67).epsilon(1e-15));
  CHECK(ghz[1] == doctest::Approx(0.17).epsilon(1e-15));
  CHECK(ghz[2] == doctest::Approx(0.08).epsilon(1e-15));
  CHECK(ghz[3] == doctest::Approx(0.08).epsilon(1e-15));
}

TEST_CASE("odd-length pair entries come with multiplicity two") {
  const ChannelParams ch = symmetric_channel(0.4, 0.6);
  const SpectrumStream stream = ghz_spectrum(3, ch);
  CHECK(stream.dimension() == 8);
  std::uint64_t total = 0;
  stream.for_each([&](double lambda, std::uint64_t mult) {
    CHECK(mult == 2);
    CHECK(lambda >= 0.0);
    total += mult;
  });
  CHECK(total == 8);
}

TEST_CASE("spectra are normalized and nonnegative") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const ChannelParams ch = symmetric_channel(0.5 * uniform01(rng), uniform01(rng));
    for (const bool ghz : {false, true}) {
      const SpectrumStream stream = ghz ? ghz_spectrum(n, ch) : separable_spectrum(n, ch);
      CHECK(std::abs(stream.mass() - 1.0) <= 1e-12);
      stream.for_each([&](double lambda, std::uint64_t) { CHECK(lambda >= 0.0); });
    }
  }
}

TEST_CASE("independent and perfect-memory limits") {
  for (int n = 1; n <= 8; ++n) {
    for (const double p : {0.1, 0.3, 0.4, 0.45}) {
      const double h = binary_entropy_bits(2.0 * p);

      const ChannelParams mu0 = symmetric_channel(p, 0.0);
      CHECK(std::abs(separable_entropy_closed(n, mu0) - n * h) <= 1e-12);

      const ChannelParams mu1 = symmetric_channel(p, 1.0);
      CHECK(std::abs(separable_entropy_closed(n, mu1) - h) <= 1e-12);

      // Perfect memory collapses the entangled output to one state (even n)
      // or an equal pair (odd n).
      const std::vector<double> spec = ghz_spectrum(n, mu1).sorted_descending();
      if (n % 2 == 0) {
        CHECK(spec[0] == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(spec[1] == 0.0);
      } else {
        CHECK(spec[0] == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(spec[1] == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(spec[2] == 0.0);
      }
    }
  }
}

TEST_CASE("closed separable entropy matches enumeration") {
  std::mt19937_64 rng(22);
  for (int n : {1, 2, 3, 5, 9, 12}) {
    for (int trial = 0; trial < 4; ++trial) {
      const ChannelParams ch = symmetric_channel(0.5 * uniform01(rng), uniform01(rng));
      const double enumerated = plain_entropy_bits(separable_spectrum(n, ch).to_vector());
      CHECK(std::abs(separable_entropy_closed(n, ch) - enumerated) <= 1e-10);
    }
  }
}

TEST_CASE("stream construction is validated") {
  const ChannelParams asym = make_channel(0.7, 0.1, 0.1, 0.1, 0.5);
  CHECK_THROWS_AS(separable_spectrum(2, asym), std::invalid_argument);
  CHECK_THROWS_AS(ghz_spectrum(2, asym), std::invalid_argument);
  const ChannelParams ch = symmetric_channel(0.4, 0.5);
  CHECK_THROWS_AS(separable_spectrum(0, ch), std::invalid_argument);
  CHECK_THROWS_AS(separable_spectrum(kMaxStreamQubits + 1, ch), std::invalid_argument);
}

TEST_CASE("materializing a huge stream is refused") {
  const ChannelParams ch = symmetric_channel(0.4, 0.5);
  const SpectrumStream stream = separable_spectrum(23, ch);
  CHECK(stream.dimension() == (std::uint64_t{1} << 23));
  CHECK_THROWS_AS(stream.to_vector(), std::length_error);
}

}  // TEST_SUITE
