#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "memchan/channel.hpp"
#include "memchan/numeric.hpp"

namespace memchan {

// An n-bit basis label alpha = alpha_1 ... alpha_n. Bit convention used
// throughout: alpha_1 (qubit 1, the leftmost tensor factor) is the most
// significant of the n low bits of `value`.
struct BitString {
  std::uint64_t value = 0;
  int length = 0;

  // i is 1-based: bit(1) = alpha_1.
  int bit(int i) const {
    return static_cast<int>((value >> (length - i)) & 1u);
  }

  BitString complement() const {
    return BitString{value ^ ((std::uint64_t{1} << length) - 1), length};
  }
};

inline constexpr int kMaxStreamQubits = 48;

// Diagonal weight of basis string alpha in the channel output:
// eta_{a_n} * prod_{i=1}^{n-1} [(1-mu) eta_{a_i} + mu delta_{a_i, a_{i+1}}].
// Requires a symmetric channel.
double diagonal_weight(BitString alpha, const ChannelParams& ch);

// Antidiagonal weight of basis string alpha: couples alpha to its
// complement in the entangled output. Zero for odd lengths; for even n it is
// mu^(n/2) eta_{a_n} delta_{a_{n-1},a_n} *
//   prod_{i=1}^{n/2-1} delta_{a_{2i-1},a_{2i}} [(1-mu) eta_{a_{2i}} + mu delta_{a_{2i},a_{2i+1}}].
double antidiagonal_weight(BitString alpha, const ChannelParams& ch);

namespace detail {

// Precomputed transition factors t[a][b] = (1-mu) eta_a + mu delta_{a,b}.
struct TransitionTable {
  double t[2][2];
  double eta[2];

  explicit TransitionTable(const ChannelParams& ch) {
    const EtaWeights w = eta_weights(ch);  // throws for non-symmetric channels
    eta[0] = w.eta0;
    eta[1] = w.eta1;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        t[a][b] = (1.0 - ch.mu) * eta[a] + (a == b ? ch.mu : 0.0);
      }
    }
  }
};

// Depth-first enumeration of all 2^n diagonal weights in ascending word
// order. Shares transition-product prefixes across branches, so the total
// work is O(2^n) instead of O(n 2^n), with O(n) stack and no materialized
// spectrum. The multiplication order (transitions left to right, marginal
// last) matches diagonal_weight, so emitted values are bit-identical to
// per-string recomputation.
template <class Visit>
void enumerate_diagonal_weights(int n, const TransitionTable& tt, Visit&& visit) {
  auto rec = [&](auto&& self, int depth, std::uint64_t word, double prod) -> void {
    if (depth == n) {
      visit(word, prod * tt.eta[word & 1]);
      return;
    }
    const int prev = static_cast<int>(word & 1);
    self(self, depth + 1, word << 1, prod * tt.t[prev][0]);
    self(self, depth + 1, (word << 1) | 1, prod * tt.t[prev][1]);
  };
  rec(rec, 1, 0, 1.0);
  rec(rec, 1, 1, 1.0);
}

// Same enumeration restricted to words with leading bit 0, carrying the
// diagonal weights of the word and of its complement simultaneously. Each
// visit covers one unordered pair {alpha, complement(alpha)} exactly once.
template <class Visit>
void enumerate_complement_pairs(int n, const TransitionTable& tt, Visit&& visit) {
  auto rec = [&](auto&& self, int depth, std::uint64_t word, double prodA,
                 double prodC) -> void {
    if (depth == n) {
      const int last = static_cast<int>(word & 1);
      visit(word, prodA * tt.eta[last], prodC * tt.eta[last ^ 1]);
      return;
    }
    const int prev = static_cast<int>(word & 1);
    self(self, depth + 1, word << 1, prodA * tt.t[prev][0], prodC * tt.t[prev ^ 1][1]);
    self(self, depth + 1, (word << 1) | 1, prodA * tt.t[prev][1],
         prodC * tt.t[prev ^ 1][0]);
  };
  rec(rec, 1, 0, 1.0, 1.0);  // alpha_1 fixed to 0
}

// True when the odd/even position pairs (a_1,a_2), (a_3,a_4), ... all match,
// which is the support condition of antidiagonal_weight. Invariant under
// complementation, so one test covers the whole pair.
inline bool antidiagonal_support(std::uint64_t word, int n) {
  const std::uint64_t diff = word ^ (word >> 1);
  const std::uint64_t even_positions = 0x5555555555555555ULL;
  const std::uint64_t mask = ((std::uint64_t{1} << (n - 1)) - 1) & even_positions;
  return (diff & mask) == 0;
}

}  // namespace detail

// An ordered stream of output eigenvalues with multiplicities. Closed-form
// streams enumerate on demand (O(1) memory beyond the visitor's state);
// explicit streams wrap a materialized list from the dense path.
class SpectrumStream {
 public:
  // lambda_alpha = diagonal weight, one entry per alpha in ascending order.
  static SpectrumStream separable(int n, const ChannelParams& ch);

  // Entangled-input spectrum. For each pair {alpha, complement}, visited once
  // via the alpha_1 = 0 representative: even n yields the two block
  // eigenvalues (P +/- Q)/2 with multiplicity 1 each, odd n yields P/2 with
  // multiplicity 2. Negative rounding residue is clamped to 0.
  static SpectrumStream ghz(int n, const ChannelParams& ch);

  static SpectrumStream from_values(std::vector<double> eigenvalues);

  int qubit_count() const { return n_; }

  // Total eigenvalue count including multiplicity (2^n for closed forms).
  std::uint64_t dimension() const;

  template <class Visitor>
  void for_each(Visitor&& visit) const {
    switch (kind_) {
      case Kind::Explicit:
        for (double v : values_) visit(v, std::uint64_t{1});
        return;
      case Kind::Separable: {
        const detail::TransitionTable tt(ch_);
        detail::enumerate_diagonal_weights(n_, tt, [&](std::uint64_t, double w) {
          visit(w < 0.0 ? 0.0 : w, std::uint64_t{1});
        });
        return;
      }
      case Kind::Ghz: {
        const detail::TransitionTable tt(ch_);
        const bool even = n_ % 2 == 0;
        detail::enumerate_complement_pairs(
            n_, tt, [&](std::uint64_t word, double pa, double pc) {
              const double p = pa + pc;
              if (even && detail::antidiagonal_support(word, n_)) {
                const BitString alpha{word, n_};
                const double q = antidiagonal_weight(alpha, ch_) +
                                 antidiagonal_weight(alpha.complement(), ch_);
                const double hi = 0.5 * (p + q);
                const double lo = 0.5 * (p - q);
                visit(hi < 0.0 ? 0.0 : hi, std::uint64_t{1});
                visit(lo < 0.0 ? 0.0 : lo, std::uint64_t{1});
              } else if (even) {
                const double half = 0.5 * p;
                visit(half, std::uint64_t{1});
                visit(half, std::uint64_t{1});
              } else {
                visit(0.5 * p, std::uint64_t{2});
              }
            });
        return;
      }
    }
  }

  // Compensated sum of eigenvalue * multiplicity.
  double mass() const;

  // Expanded eigenvalue list in stream order; refused above 2^22 entries.
  std::vector<double> to_vector() const;
  std::vector<double> sorted_descending() const;

 private:
  enum class Kind { Separable, Ghz, Explicit };

  SpectrumStream(Kind kind, int n, ChannelParams ch, std::vector<double> values)
      : kind_(kind), n_(n), ch_(std::move(ch)), values_(std::move(values)) {}

  Kind kind_;
  int n_ = 0;
  ChannelParams ch_;
  std::vector<double> values_;
};

// Output entropy of the separable all-zeros input in O(1) arithmetic:
// h(2p) + (n-1) [2p h((1-mu) 2p + mu) + 2q h((1-mu) 2q + mu)], bits.
// Equals the entropy of the streamed separable spectrum.
double separable_entropy_closed(int n, const ChannelParams& ch);

SpectrumStream separable_spectrum(int n, const ChannelParams& ch);
SpectrumStream ghz_spectrum(int n, const ChannelParams& ch);

}  // namespace memchan
