#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "memchan/channel.hpp"
#include "memchan/spectrum.hpp"

namespace memchan {

// Dense channel application costs O(16^n) elementary updates; the cap keeps
// the default paths under control. Callers can raise it explicitly.
inline constexpr int kDefaultDenseCap = 8;

class DenseCapExceeded : public std::runtime_error {
 public:
  DenseCapExceeded(int requested, int cap);
  int requested() const { return requested_; }
  int cap() const { return cap_; }

 private:
  int requested_;
  int cap_;
};

// Pure state on n qubits; qubit 1 is the most significant bit of the
// amplitude index (leftmost tensor factor).
struct StateVector {
  int n = 0;
  std::vector<std::complex<double>> amplitudes;

  std::size_t dim() const { return amplitudes.size(); }
  double norm() const;
};

// Dense 2^n x 2^n complex matrix, row-major.
struct DensityMatrix {
  int n = 0;
  std::vector<std::complex<double>> entries;

  static DensityMatrix zero(int n);
  static DensityMatrix from_pure(const StateVector& psi);

  std::size_t dim() const { return std::size_t{1} << n; }
  std::complex<double>& at(std::size_t row, std::size_t col) {
    return entries[row * dim() + col];
  }
  const std::complex<double>& at(std::size_t row, std::size_t col) const {
    return entries[row * dim() + col];
  }

  std::complex<double> trace() const;
  // Largest |a_ij - conj(a_ji)| over all entries.
  double hermiticity_defect() const;
};

// An input encoding named on the command line and in sweep tables. Either a
// fixed named state ("sep" = |0...0>, "ghz", "w3") or a product pattern over
// {'0','B'} where '0' places one qubit in |0> and 'B' places two qubits in
// the Bell state (|00> + |11>)/sqrt(2), left to right.
struct EncodingSpec {
  enum class Kind { Named, Pattern };

  Kind kind = Kind::Named;
  std::string text = "sep";

  // Accepts "sep", "ghz", "w3", or a nonempty string over {'0','B'}.
  // Throws std::invalid_argument for anything else.
  static EncodingSpec parse(std::string_view s);

  // Qubits the spec pins down: pattern length in qubits, 3 for "w3",
  // -1 for the length-agnostic "sep"/"ghz".
  int required_length() const;
  bool valid_for(int n) const;

  // True for the encodings whose output spectrum has a closed form.
  bool closed_form() const { return kind == Kind::Named && (text == "sep" || text == "ghz"); }

  const std::string& str() const { return text; }
};

// Builds the normalized amplitude vector for the encoding on n qubits.
// "w3" is (|100> + |010> + |001> + |111>)/2. Throws std::invalid_argument
// when the spec does not fit n.
StateVector encode_state(const EncodingSpec& spec, int n);

// U rho U^dag for U the tensor product of the indexed Paulis. Each Pauli
// string acts as a signed index permutation |k> -> +/- |k ^ flips>, so the
// conjugation costs O(4^n) instead of a matrix-matrix product's O(8^n).
DensityMatrix conjugate_by_pauli_string(const DensityMatrix& rho,
                                        const PauliIndexString& s);

// Brute-force channel output: sum over all 4^n error patterns of
// pattern_prob x (conjugated rho). Exact-zero patterns are skipped.
// Throws DenseCapExceeded when n exceeds the cap.
DensityMatrix apply_channel_dense(const DensityMatrix& rho, const ChannelParams& ch,
                                  int dense_cap = kDefaultDenseCap);

// Applies the channel to |psi><psi| and diagonalizes the Hermitian output.
// Eigenvalues are clamped at 0 and returned sorted descending.
SpectrumStream output_spectrum_dense(const StateVector& psi, const ChannelParams& ch,
                                     int dense_cap = kDefaultDenseCap);

}  // namespace memchan
