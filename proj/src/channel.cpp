#include "memchan/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace memchan {

namespace {

constexpr double kSumTolerance = 1e-9;
constexpr double kSymmetryTolerance = 1e-12;

}  // namespace

ChannelParams make_channel(double p0, double p1, double p2, double p3, double mu) {
  const std::array<double, 4> raw{p0, p1, p2, p3};
  double sum = 0.0;
  for (double v : raw) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("error probabilities must be finite and nonnegative");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw std::invalid_argument("error probabilities must sum to 1 (got " +
                                std::to_string(sum) + ")");
  }
  if (!std::isfinite(mu) || mu < 0.0 || mu > 1.0) {
    throw std::invalid_argument("memory parameter must lie in [0, 1]");
  }

  ChannelParams ch;
  for (int i = 0; i < 4; ++i) ch.p[i] = raw[i] / sum;
  ch.mu = mu;
  ch.symmetric = std::abs(ch.p[0] - ch.p[3]) < kSymmetryTolerance &&
                 std::abs(ch.p[1] - ch.p[2]) < kSymmetryTolerance;
  return ch;
}

ChannelParams symmetric_channel(double p, double mu) {
  if (!std::isfinite(p) || p < 0.0 || p > 0.5) {
    throw std::invalid_argument("symmetric channel requires p in [0, 1/2]");
  }
  return make_channel(p, 0.5 - p, 0.5 - p, p, mu);
}

EtaWeights eta_weights(const ChannelParams& ch) {
  if (!ch.symmetric) {
    throw std::invalid_argument("eta weights are defined for symmetric channels only");
  }
  return EtaWeights{ch.p[0] + ch.p[3], ch.p[1] + ch.p[2]};
}

int pauli_index_from_bits(int flip, int phase) {
  static constexpr int table[2][2] = {{0, 3}, {1, 2}};  // [flip][phase]
  if ((flip & ~1) != 0 || (phase & ~1) != 0) {
    throw std::invalid_argument("pauli bits must be 0 or 1");
  }
  return table[flip][phase];
}

std::pair<int, int> pauli_bits_from_index(int index) {
  switch (index) {
    case 0: return {0, 0};
    case 1: return {1, 0};
    case 2: return {1, 1};
    case 3: return {0, 1};
    default: throw std::invalid_argument("pauli index must lie in {0,1,2,3}");
  }
}

double pattern_prob(std::span<const std::uint8_t> s, const ChannelParams& ch) {
  if (s.empty()) {
    throw std::invalid_argument("error pattern must be nonempty");
  }
  for (std::uint8_t i : s) {
    if (i > 3) throw std::invalid_argument("pattern entries must lie in {0,1,2,3}");
  }
  const double mu = ch.mu;
  double w = 1.0;
  for (std::size_t m = 0; m + 1 < s.size(); ++m) {
    w *= (1.0 - mu) * ch.p[s[m]] + (s[m] == s[m + 1] ? mu : 0.0);
  }
  return w * ch.p[s.back()];
}

double pattern_prob(std::uint64_t flips, std::uint64_t phases, int n,
                    const ChannelParams& ch) {
  if (n < 1 || n > 63) {
    throw std::invalid_argument("pattern length must lie in [1, 63]");
  }
  PauliIndexString s(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    const int bitpos = n - 1 - m;  // qubit m+1 sits at the most significant end
    const int f = static_cast<int>((flips >> bitpos) & 1u);
    const int ph = static_cast<int>((phases >> bitpos) & 1u);
    s[static_cast<std::size_t>(m)] = static_cast<std::uint8_t>(pauli_index_from_bits(f, ph));
  }
  return pattern_prob(s, ch);
}

double total_pattern_mass(int n, const ChannelParams& ch) {
  if (n < 1 || n > kPatternEnumerationCap) {
    throw std::invalid_argument("pattern enumeration supports 1 <= n <= " +
                                std::to_string(kPatternEnumerationCap));
  }
  PauliIndexString s(static_cast<std::size_t>(n), 0);
  const std::uint64_t count = std::uint64_t{1} << (2 * n);
  double mass = 0.0;
  for (std::uint64_t code = 0; code < count; ++code) {
    for (int m = 0; m < n; ++m) {
      s[static_cast<std::size_t>(m)] =
          static_cast<std::uint8_t>((code >> (2 * (n - 1 - m))) & 3u);
    }
    mass += pattern_prob(s, ch);
  }
  return mass;
}

std::array<std::complex<double>, 4> single_qubit_pauli(int flip, int phase) {
  if ((flip & ~1) != 0 || (phase & ~1) != 0) {
    throw std::invalid_argument("pauli bits must be 0 or 1");
  }
  std::array<std::complex<double>, 4> m{};  // row-major 2x2
  for (int k = 0; k < 2; ++k) {
    const double sign = (phase && k) ? -1.0 : 1.0;
    m[static_cast<std::size_t>(2 * (k ^ flip) + k)] = sign;
  }
  return m;
}

}  // namespace memchan
