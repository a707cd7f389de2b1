#include "memchan/spectrum.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace memchan {

namespace {

void check_stream_length(int n) {
  if (n < 1 || n > kMaxStreamQubits) {
    throw std::invalid_argument("qubit count must be in [1, " +
                                std::to_string(kMaxStreamQubits) + "], got " +
                                std::to_string(n));
  }
}

}  // namespace

double diagonal_weight(BitString alpha, const ChannelParams& ch) {
  check_stream_length(alpha.length);
  const detail::TransitionTable tt(ch);
  double prod = 1.0;
  for (int i = 1; i < alpha.length; ++i) {
    prod *= tt.t[alpha.bit(i)][alpha.bit(i + 1)];
  }
  return prod * tt.eta[alpha.bit(alpha.length)];
}

double antidiagonal_weight(BitString alpha, const ChannelParams& ch) {
  check_stream_length(alpha.length);
  const int n = alpha.length;
  if (n % 2 != 0) return 0.0;
  if (!detail::antidiagonal_support(alpha.value, n)) return 0.0;
  const detail::TransitionTable tt(ch);
  double prod = 1.0;
  for (int i = 1; i <= n / 2 - 1; ++i) {
    prod *= tt.t[alpha.bit(2 * i)][alpha.bit(2 * i + 1)];
  }
  prod *= tt.eta[alpha.bit(n)];
  for (int k = 0; k < n / 2; ++k) prod *= ch.mu;
  return prod;
}

SpectrumStream SpectrumStream::separable(int n, const ChannelParams& ch) {
  check_stream_length(n);
  eta_weights(ch);  // reject non-symmetric channels up front
  return SpectrumStream(Kind::Separable, n, ch, {});
}

SpectrumStream SpectrumStream::ghz(int n, const ChannelParams& ch) {
  check_stream_length(n);
  eta_weights(ch);
  return SpectrumStream(Kind::Ghz, n, ch, {});
}

SpectrumStream SpectrumStream::from_values(std::vector<double> eigenvalues) {
  const int n = 0;
  return SpectrumStream(Kind::Explicit, n, ChannelParams{}, std::move(eigenvalues));
}

std::uint64_t SpectrumStream::dimension() const {
  if (kind_ == Kind::Explicit) return values_.size();
  return std::uint64_t{1} << n_;
}

double SpectrumStream::mass() const {
  CompensatedSum sum;
  for_each([&](double lambda, std::uint64_t mult) {
    sum.add(lambda * static_cast<double>(mult));
  });
  return sum.value();
}

std::vector<double> SpectrumStream::to_vector() const {
  constexpr std::uint64_t kMaxMaterialized = std::uint64_t{1} << 22;
  if (dimension() > kMaxMaterialized) {
    throw std::length_error("spectrum too large to materialize: " +
                            std::to_string(dimension()) + " eigenvalues");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(dimension()));
  for_each([&](double lambda, std::uint64_t mult) {
    for (std::uint64_t k = 0; k < mult; ++k) out.push_back(lambda);
  });
  return out;
}

std::vector<double> SpectrumStream::sorted_descending() const {
  std::vector<double> out = to_vector();
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

double separable_entropy_closed(int n, const ChannelParams& ch) {
  check_stream_length(n);
  const EtaWeights w = eta_weights(ch);
  const double first = binary_entropy_bits(w.eta0);
  if (n == 1) return first;
  const double cond0 = binary_entropy_bits((1.0 - ch.mu) * w.eta0 + ch.mu);
  const double cond1 = binary_entropy_bits((1.0 - ch.mu) * w.eta1 + ch.mu);
  return first + (n - 1) * (w.eta0 * cond0 + w.eta1 * cond1);
}

SpectrumStream separable_spectrum(int n, const ChannelParams& ch) {
  return SpectrumStream::separable(n, ch);
}

SpectrumStream ghz_spectrum(int n, const ChannelParams& ch) {
  return SpectrumStream::ghz(n, ch);
}

}  // namespace memchan
