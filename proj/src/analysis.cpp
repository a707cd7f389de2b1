#include "memchan/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "memchan/numeric.hpp"

namespace memchan {

double von_neumann_entropy(const SpectrumStream& spectrum) {
  CompensatedSum mass;
  CompensatedSum entropy;
  spectrum.for_each([&](double lambda, std::uint64_t mult) {
    const double m = static_cast<double>(mult);
    mass.add(lambda * m);
    entropy.add(entropy_term_bits(lambda) * m);
  });
  if (std::abs(mass.value() - 1.0) > 1e-10) {
    throw std::invalid_argument("spectrum mass " + format_number(mass.value()) +
                                " deviates from 1 beyond 1e-10");
  }
  return entropy.value();
}

MutualInfoBound mutual_info_bound(int n, double entropy_bits) {
  const double slack = 1e-9;
  if (n < 1 || entropy_bits < -slack || entropy_bits > n + slack) {
    throw std::invalid_argument("entropy " + format_number(entropy_bits) +
                                " outside [0, " + std::to_string(n) + "]");
  }
  const double s = std::min(std::max(entropy_bits, 0.0), static_cast<double>(n));
  MutualInfoBound bound;
  bound.holevo_bits = static_cast<double>(n) - s;
  bound.per_use_bits = bound.holevo_bits / static_cast<double>(n);
  return bound;
}

double entropy_gap(int n, double p, double mu) {
  const ChannelParams ch = symmetric_channel(p, mu);
  return von_neumann_entropy(separable_spectrum(n, ch)) -
         von_neumann_entropy(ghz_spectrum(n, ch));
}

CriticalMemoryResult critical_memory(int n, double p, double tol, int grid_points) {
  if (tol < 1e-8) {
    throw std::invalid_argument("tolerance below 1e-8 is not supported");
  }
  if (grid_points < 2) {
    throw std::invalid_argument("grid needs at least 2 points");
  }

  CriticalMemoryResult result;
  result.n = n;
  result.p = p;
  result.tol = tol;

  std::vector<double> gap(grid_points);
  for (int k = 0; k < grid_points; ++k) {
    gap[k] = entropy_gap(n, p, static_cast<double>(k) / (grid_points - 1));
  }

  int first = -1;
  for (int k = 0; k + 1 < grid_points; ++k) {
    if ((gap[k] < 0.0) != (gap[k + 1] < 0.0)) {
      ++result.sign_changes;
      if (first < 0) first = k;
    }
  }
  if (first < 0) return result;

  double lo = static_cast<double>(first) / (grid_points - 1);
  double hi = static_cast<double>(first + 1) / (grid_points - 1);
  const bool lo_negative = gap[first] < 0.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if ((entropy_gap(n, p, mid) < 0.0) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  result.bracket = {lo, hi};
  result.mu_c = 0.5 * (lo + hi);
  return result;
}

EntropyReport entropy_report(int n, double p, double mu, const EncodingSpec& encoding,
                             int dense_cap) {
  if (!encoding.valid_for(n)) {
    throw std::invalid_argument("encoding \"" + encoding.str() +
                                "\" does not fit n=" + std::to_string(n));
  }
  const ChannelParams ch = symmetric_channel(p, mu);
  double entropy = 0.0;
  if (encoding.closed_form()) {
    entropy = von_neumann_entropy(encoding.str() == "sep" ? separable_spectrum(n, ch)
                                                          : ghz_spectrum(n, ch));
  } else {
    entropy = von_neumann_entropy(
        output_spectrum_dense(encode_state(encoding, n), ch, dense_cap));
  }

  const MutualInfoBound bound = mutual_info_bound(n, entropy);
  EntropyReport report;
  report.n = n;
  report.p = p;
  report.mu = mu;
  report.encoding = encoding.str();
  report.entropy_bits = entropy;
  report.holevo_bound_bits = bound.holevo_bits;
  report.per_use_bits = bound.per_use_bits;
  return report;
}

std::vector<EntropyReport> sweep(int n, double p, std::vector<double> mu_grid,
                                 const std::vector<EncodingSpec>& encodings,
                                 int dense_cap) {
  for (const EncodingSpec& enc : encodings) {
    if (!enc.valid_for(n)) {
      throw std::invalid_argument("encoding \"" + enc.str() + "\" does not fit n=" +
                                  std::to_string(n));
    }
    if (!enc.closed_form() && n > dense_cap) {
      throw DenseCapExceeded(n, dense_cap);
    }
  }
  std::sort(mu_grid.begin(), mu_grid.end());

  std::vector<EntropyReport> rows;
  rows.reserve(mu_grid.size() * encodings.size());
  for (const EncodingSpec& enc : encodings) {
    for (double mu : mu_grid) {
      rows.push_back(entropy_report(n, p, mu, enc, dense_cap));
    }
  }
  return rows;
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string csv_row(const EntropyReport& r) {
  std::string row = std::to_string(r.n);
  row += ',';
  row += format_number(r.p);
  row += ',';
  row += format_number(r.mu);
  row += ',';
  row += r.encoding;
  row += ',';
  row += format_number(r.entropy_bits);
  row += ',';
  row += format_number(r.holevo_bound_bits);
  row += ',';
  row += format_number(r.per_use_bits);
  return row;
}

std::string csv_row(const CriticalMemoryResult& r) {
  std::string row = std::to_string(r.n);
  row += ',';
  row += format_number(r.p);
  row += ',';
  row += r.mu_c ? format_number(*r.mu_c) : std::string("none");
  return row;
}

}  // namespace memchan
