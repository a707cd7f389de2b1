#pragma once

#include <cmath>

namespace memchan {

// Neumaier-compensated accumulator. Spectrum masses and entropies are sums
// over up to 2^24 terms checked at 1e-12; plain summation drifts too much.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// -x*log2(x) with the 0*log0 := 0 convention. Negative inputs are treated
// as zero; they only arise as -1e-14-scale rounding in eigenvalue streams.
inline double entropy_term_bits(double x) {
  return x > 0.0 ? -x * std::log2(x) : 0.0;
}

// Binary entropy h(x) in bits.
inline double binary_entropy_bits(double x) {
  return entropy_term_bits(x) + entropy_term_bits(1.0 - x);
}

}  // namespace memchan
