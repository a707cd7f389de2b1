#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace memchan {

// A Pauli channel with nearest-neighbor memory. p[i] is the probability of
// the single-qubit error sigma_i (one-index order: I, sigma_x, sigma_y up to
// phase, sigma_z); mu is the probability that a qubit suffers the same error
// as its predecessor instead of an independent draw.
struct ChannelParams {
  std::array<double, 4> p{1.0, 0.0, 0.0, 0.0};
  double mu = 0.0;
  // True when p0 == p3 and p1 == p2 (then p0 + p1 == 1/2 and the closed-form
  // output spectra apply).
  bool symmetric = false;
};

// Marginal weights of the two basis outcomes on one qubit of a symmetric
// channel: eta0 = p0 + p3 = 2p, eta1 = p1 + p2 = 2q.
struct EtaWeights {
  double eta0 = 0.0;
  double eta1 = 0.0;
};

// A string of one-index Pauli labels, entry m in {0,1,2,3} for qubit m+1.
using PauliIndexString = std::vector<std::uint8_t>;

// Validates and normalizes channel parameters. Probabilities must be
// nonnegative and sum to 1 within 1e-9 (they are rescaled to sum exactly 1),
// mu must lie in [0,1]. Throws std::invalid_argument otherwise.
ChannelParams make_channel(double p0, double p1, double p2, double p3, double mu);

// Symmetric channel shorthand: p0 = p3 = p, p1 = p2 = 1/2 - p, p in [0, 1/2].
ChannelParams symmetric_channel(double p, double mu);

// Marginal weights; only defined for symmetric channels (throws otherwise).
EtaWeights eta_weights(const ChannelParams& ch);

// One-index label <-> (flip bit, phase bit) of the corresponding Pauli.
// The fixed bijection is 0 <-> (0,0) [I], 1 <-> (1,0) [sigma_x],
// 2 <-> (1,1) [i sigma_y], 3 <-> (0,1) [sigma_z].
int pauli_index_from_bits(int flip, int phase);
std::pair<int, int> pauli_bits_from_index(int index);

// Probability of the correlated error pattern s = (i_1, ..., i_n):
// p_{i_n} * prod_{m=1}^{n-1} [(1-mu) p_{i_m} + mu delta_{i_m, i_{m+1}}].
double pattern_prob(std::span<const std::uint8_t> s, const ChannelParams& ch);

// Same pattern probability in the two-index labeling. Bit m (counted from
// the most significant of the n low bits, qubit 1 first) of `flips`/`phases`
// holds the flip/phase bit of qubit m+1. Agrees with the one-index form
// exactly: the labels are mapped and the same product is evaluated.
double pattern_prob(std::uint64_t flips, std::uint64_t phases, int n,
                    const ChannelParams& ch);

// Sum of pattern_prob over all 4^n patterns; equals 1 for any valid channel.
// Enumeration is capped at n <= 10 (test utility, not a production path).
double total_pattern_mass(int n, const ChannelParams& ch);
inline constexpr int kPatternEnumerationCap = 10;

// The 2x2 matrix sum_k (-1)^(phase*k) |k + flip><k| (addition mod 2),
// row-major. (1,1) yields {{0,-1},{1,0}}, i.e. i*sigma_y with the phase kept;
// the phase cancels in every channel conjugation.
std::array<std::complex<double>, 4> single_qubit_pauli(int flip, int phase);

}  // namespace memchan
