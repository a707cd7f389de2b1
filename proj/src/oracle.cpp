#include "memchan/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>

namespace memchan {

namespace {

std::string cap_message(int requested, int cap) {
  return "dense channel application limited to " + std::to_string(cap) +
         " qubits, got " + std::to_string(requested) +
         "; raise the dense cap to override";
}

void check_dense_cap(int n, int cap) {
  if (n > cap) throw DenseCapExceeded(n, cap);
}

void check_state(const DensityMatrix& rho) {
  const std::size_t dim = rho.dim();
  if (rho.n < 1 || rho.entries.size() != dim * dim) {
    throw std::invalid_argument("density matrix storage does not match its qubit count");
  }
  if (std::abs(rho.trace() - std::complex<double>{1.0, 0.0}) > 1e-8) {
    throw std::invalid_argument("density matrix trace deviates from 1");
  }
  if (rho.hermiticity_defect() > 1e-8) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
}

}  // namespace

DenseCapExceeded::DenseCapExceeded(int requested, int cap)
    : std::runtime_error(cap_message(requested, cap)), requested_(requested), cap_(cap) {}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

DensityMatrix DensityMatrix::zero(int n) {
  DensityMatrix rho;
  rho.n = n;
  rho.entries.assign((std::size_t{1} << n) * (std::size_t{1} << n), {0.0, 0.0});
  return rho;
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  DensityMatrix rho = DensityMatrix::zero(psi.n);
  const std::size_t dim = rho.dim();
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      rho.at(r, c) = psi.amplitudes[r] * std::conj(psi.amplitudes[c]);
    }
  }
  return rho;
}

std::complex<double> DensityMatrix::trace() const {
  std::complex<double> t{0.0, 0.0};
  for (std::size_t k = 0; k < dim(); ++k) t += at(k, k);
  return t;
}

double DensityMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim(); ++r) {
    for (std::size_t c = r; c < dim(); ++c) {
      worst = std::max(worst, std::abs(at(r, c) - std::conj(at(c, r))));
    }
  }
  return worst;
}

EncodingSpec EncodingSpec::parse(std::string_view s) {
  EncodingSpec spec;
  if (s == "sep" || s == "ghz" || s == "w3") {
    spec.kind = Kind::Named;
    spec.text = std::string(s);
    return spec;
  }
  if (!s.empty() && s.find_first_not_of("0B") == std::string_view::npos) {
    spec.kind = Kind::Pattern;
    spec.text = std::string(s);
    return spec;
  }
  throw std::invalid_argument(
      "unknown encoding \"" + std::string(s) +
      "\": expected sep, ghz, w3, or a pattern over {0,B}");
}

int EncodingSpec::required_length() const {
  if (kind == Kind::Named) return text == "w3" ? 3 : -1;
  int qubits = 0;
  for (char c : text) qubits += (c == 'B') ? 2 : 1;
  return qubits;
}

bool EncodingSpec::valid_for(int n) const {
  if (n < 1) return false;
  const int req = required_length();
  return req == -1 || req == n;
}

StateVector encode_state(const EncodingSpec& spec, int n) {
  if (!spec.valid_for(n)) {
    throw std::invalid_argument("encoding \"" + spec.text + "\" does not fit n=" +
                                std::to_string(n) + " qubits");
  }
  StateVector psi;
  psi.n = n;
  const std::size_t dim = std::size_t{1} << n;
  psi.amplitudes.assign(dim, {0.0, 0.0});
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  if (spec.kind == EncodingSpec::Kind::Named) {
    if (spec.text == "sep") {
      psi.amplitudes[0] = 1.0;
    } else if (spec.text == "ghz") {
      psi.amplitudes[0] = inv_sqrt2;
      psi.amplitudes[dim - 1] = inv_sqrt2;
    } else {  // w3
      psi.amplitudes[0b100] = 0.5;
      psi.amplitudes[0b010] = 0.5;
      psi.amplitudes[0b001] = 0.5;
      psi.amplitudes[0b111] = 0.5;
    }
    return psi;
  }

  // Product pattern, built left to right; each step appends factors on the
  // low-significance side so qubit 1 stays the most significant bit.
  std::vector<std::complex<double>> v{{1.0, 0.0}};
  for (char c : spec.text) {
    if (c == '0') {
      std::vector<std::complex<double>> next(v.size() * 2, {0.0, 0.0});
      for (std::size_t k = 0; k < v.size(); ++k) next[2 * k] = v[k];
      v = std::move(next);
    } else {
      std::vector<std::complex<double>> next(v.size() * 4, {0.0, 0.0});
      for (std::size_t k = 0; k < v.size(); ++k) {
        next[4 * k] = v[k] * inv_sqrt2;
        next[4 * k + 3] = v[k] * inv_sqrt2;
      }
      v = std::move(next);
    }
  }
  psi.amplitudes = std::move(v);
  return psi;
}

namespace {

// Accumulates weight * (U rho U^dag) into out, where U is the Pauli string
// with flip word a and phase word b: (U rho U^dag)_{k^a, l^a} =
// (-1)^parity(b & (k^l)) rho_{k,l}.
void accumulate_conjugated(const DensityMatrix& rho, std::uint64_t a, std::uint64_t b,
                           double weight, DensityMatrix& out) {
  const std::size_t dim = rho.dim();
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t l = 0; l < dim; ++l) {
      const bool neg = std::popcount(b & (k ^ l)) & 1;
      out.at(k ^ a, l ^ a) += (neg ? -weight : weight) * rho.at(k, l);
    }
  }
}

void pauli_words_from_indices(const PauliIndexString& s, std::uint64_t& flips,
                              std::uint64_t& phases) {
  const int n = static_cast<int>(s.size());
  flips = 0;
  phases = 0;
  for (int m = 0; m < n; ++m) {
    const auto [flip, phase] = pauli_bits_from_index(s[m]);
    flips |= static_cast<std::uint64_t>(flip) << (n - 1 - m);
    phases |= static_cast<std::uint64_t>(phase) << (n - 1 - m);
  }
}

}  // namespace

DensityMatrix conjugate_by_pauli_string(const DensityMatrix& rho,
                                        const PauliIndexString& s) {
  if (static_cast<int>(s.size()) != rho.n) {
    throw std::invalid_argument("Pauli string length does not match qubit count");
  }
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  pauli_words_from_indices(s, a, b);
  DensityMatrix out = DensityMatrix::zero(rho.n);
  accumulate_conjugated(rho, a, b, 1.0, out);
  return out;
}

DensityMatrix apply_channel_dense(const DensityMatrix& rho, const ChannelParams& ch,
                                  int dense_cap) {
  check_state(rho);
  check_dense_cap(rho.n, dense_cap);
  const int n = rho.n;

  DensityMatrix out = DensityMatrix::zero(n);
  std::vector<std::uint8_t> digits(n);
  const std::uint64_t patterns = std::uint64_t{1} << (2 * n);
  for (std::uint64_t code = 0; code < patterns; ++code) {
    for (int m = 0; m < n; ++m) {
      digits[m] = static_cast<std::uint8_t>((code >> (2 * (n - 1 - m))) & 3u);
    }
    const double pr = pattern_prob(digits, ch);
    if (pr == 0.0) continue;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    PauliIndexString idx(digits.begin(), digits.end());
    pauli_words_from_indices(idx, a, b);
    accumulate_conjugated(rho, a, b, pr, out);
  }
  return out;
}

SpectrumStream output_spectrum_dense(const StateVector& psi, const ChannelParams& ch,
                                     int dense_cap) {
  if (psi.n < 1 || psi.amplitudes.size() != (std::size_t{1} << psi.n)) {
    throw std::invalid_argument("state vector storage does not match its qubit count");
  }
  if (std::abs(psi.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("state vector is not normalized");
  }
  check_dense_cap(psi.n, dense_cap);

  const DensityMatrix out = apply_channel_dense(DensityMatrix::from_pure(psi), ch, dense_cap);
  const auto dim = static_cast<Eigen::Index>(out.dim());
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      m(r, c) = out.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition of the channel output failed");
  }

  std::vector<double> lambdas(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + dim);
  for (double& l : lambdas) {
    if (l < 0.0) l = 0.0;
  }
  std::sort(lambdas.begin(), lambdas.end(), std::greater<double>());
  return SpectrumStream::from_values(std::move(lambdas));
}

}  // namespace memchan
