#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "memchan/channel.hpp"
#include "memchan/oracle.hpp"
#include "memchan/spectrum.hpp"

namespace memchan {

// Outcome of one verification suite.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::size_t failures = 0;
  // Descriptions of the first few failing cases (at most kMaxFailureSamples).
  std::vector<std::string> failure_samples;

  std::string summary() const;
};

inline constexpr std::size_t kMaxFailureSamples = 10;

struct VerifyOptions {
  // Largest n exercised by the closed-vs-dense equivalence suite.
  int n_max = 6;
  // Random draws in the normalization suite.
  int samples = 1000;
  std::uint64_t seed = 12345;
  int dense_cap = kDefaultDenseCap;
};

// Source of closed-form spectra, keyed by encoding name ("sep" or "ghz").
// The default (empty function) uses the library's own closed forms; tests
// substitute a deliberately wrong source to prove the suites can fail.
using ClosedSpectrumFn =
    std::function<SpectrumStream(std::string_view encoding, int n, const ChannelParams&)>;

// Runs all verification suites and returns one result per suite:
//   spectrum-normalization  random channels, closed spectra sum to 1 (1e-12)
//   oracle-equivalence      sorted closed vs dense eigenvalues (1e-10)
//   analytic-limits         mu=0 and mu=1 entropies against exact values (1e-12)
//   chain-rule              streamed vs closed separable entropy (1e-10)
std::vector<CheckResult> run_verification(const VerifyOptions& options = {},
                                          const ClosedSpectrumFn& closed = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace memchan
