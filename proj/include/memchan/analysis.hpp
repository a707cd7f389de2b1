#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "memchan/channel.hpp"
#include "memchan/oracle.hpp"
#include "memchan/spectrum.hpp"

namespace memchan {

// One evaluated (encoding, channel point): the output entropy and the
// information bounds derived from it.
struct EntropyReport {
  int n = 0;
  double p = 0.0;
  double mu = 0.0;
  std::string encoding;
  double entropy_bits = 0.0;
  double holevo_bound_bits = 0.0;
  double per_use_bits = 0.0;
};

struct MutualInfoBound {
  double holevo_bits = 0.0;
  double per_use_bits = 0.0;
};

struct CriticalMemoryResult {
  int n = 0;
  double p = 0.0;
  std::optional<double> mu_c;
  std::pair<double, double> bracket{0.0, 1.0};
  double tol = 0.0;
  // Sign changes of the gap detected on the pre-scan grid. 0 means no
  // crossing; more than 1 means mu_c is the smallest crossing only.
  int sign_changes = 0;
};

// -sum lambda lg lambda over the stream, 0 lg 0 = 0, tiny negatives treated
// as 0. Throws std::invalid_argument when the total mass deviates from 1 by
// more than 1e-10.
double von_neumann_entropy(const SpectrumStream& spectrum);

// Upper bound on the accessible information of n channel uses given the
// minimal output entropy: holevo_bits = n - entropy, per_use = that / n.
// entropy_bits must lie in [0, n] (a hair of slack for rounding).
MutualInfoBound mutual_info_bound(int n, double entropy_bits);

// S_separable - S_entangled at (n, p, mu), closed forms only.
// Positive means the entangled encoding wins.
double entropy_gap(int n, double p, double mu);

// Locates the smallest mu in [0,1] where the gap changes sign: a grid
// pre-scan brackets every crossing, then bisection tightens the first one to
// tol. mu_c is absent when the grid shows no crossing. tol must be >= 1e-8.
CriticalMemoryResult critical_memory(int n, double p, double tol = 1e-6,
                                     int grid_points = 64);

// Evaluates one encoding at one channel point. sep/ghz run on the closed
// forms; every other encoding goes through the dense path (cap applies).
EntropyReport entropy_report(int n, double p, double mu, const EncodingSpec& encoding,
                             int dense_cap = kDefaultDenseCap);

// One report per (encoding, mu), encoding-major in the order given, mu
// ascending. Invalid encodings throw std::invalid_argument naming the
// offender; dense-path encodings beyond the cap throw DenseCapExceeded.
std::vector<EntropyReport> sweep(int n, double p, std::vector<double> mu_grid,
                                 const std::vector<EncodingSpec>& encodings,
                                 int dense_cap = kDefaultDenseCap);

// Fixed CSV schema shared by the single-point and sweep outputs.
inline constexpr std::string_view kEntropyCsvHeader =
    "n,p,mu,encoding,entropy_bits,holevo_bound_bits,per_use_bits";
inline constexpr std::string_view kCriticalCsvHeader = "n,p,mu_c";

// Shortest decimal form capped at 12 significant digits.
std::string format_number(double x);
std::string csv_row(const EntropyReport& report);
std::string csv_row(const CriticalMemoryResult& result);

}  // namespace memchan
