#include "memchan/verification.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "memchan/analysis.hpp"
#include "memchan/numeric.hpp"

namespace memchan {

namespace {

SpectrumStream default_closed(std::string_view encoding, int n, const ChannelParams& ch) {
  if (encoding == "sep") return separable_spectrum(n, ch);
  return ghz_spectrum(n, ch);
}

// Uniform double in [0, 1) built from the top 53 bits of the generator, so
// results do not depend on the standard library's distribution internals.
double uniform01(std::mt19937_64& rng) {
  return std::ldexp(static_cast<double>(rng() >> 11), -53);
}

class SuiteRecorder {
 public:
  explicit SuiteRecorder(std::string name) { result_.name = std::move(name); }

  void record(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (ok) return;
    ++result_.failures;
    if (result_.failure_samples.size() < kMaxFailureSamples) {
      result_.failure_samples.push_back(describe());
    }
  }

  CheckResult finish() {
    result_.passed = result_.failures == 0;
    return result_;
  }

 private:
  CheckResult result_;
};

std::string point_label(int n, double p, double mu) {
  return "n=" + std::to_string(n) + " p=" + format_number(p) + " mu=" + format_number(mu);
}

CheckResult check_normalization(const VerifyOptions& opt, const ClosedSpectrumFn& closed) {
  SuiteRecorder suite("spectrum-normalization");
  std::mt19937_64 rng(opt.seed);
  for (int k = 0; k < opt.samples; ++k) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const double p = 0.5 * uniform01(rng);
    const double mu = uniform01(rng);
    const ChannelParams ch = symmetric_channel(p, mu);
    for (const char* enc : {"sep", "ghz"}) {
      const double mass = closed(enc, n, ch).mass();
      suite.record(std::abs(mass - 1.0) <= 1e-12, [&] {
        return std::string(enc) + " " + point_label(n, p, mu) +
               ": mass=" + format_number(mass);
      });
    }
  }
  return suite.finish();
}

CheckResult check_oracle_equivalence(const VerifyOptions& opt,
                                     const ClosedSpectrumFn& closed) {
  SuiteRecorder suite("oracle-equivalence");
  for (int n = 2; n <= opt.n_max; ++n) {
    for (double p : {0.3, 0.4, 0.45}) {
      for (double mu : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const ChannelParams ch = symmetric_channel(p, mu);
        for (const char* enc : {"sep", "ghz"}) {
          const StateVector psi = encode_state(EncodingSpec::parse(enc), n);
          const std::vector<double> dense =
              output_spectrum_dense(psi, ch, opt.dense_cap).sorted_descending();
          const std::vector<double> closed_sorted =
              closed(enc, n, ch).sorted_descending();
          double worst = 0.0;
          for (std::size_t i = 0; i < dense.size(); ++i) {
            worst = std::max(worst, std::abs(dense[i] - closed_sorted[i]));
          }
          suite.record(worst <= 1e-10, [&] {
            return std::string(enc) + " " + point_label(n, p, mu) +
                   ": max eigenvalue diff=" + format_number(worst);
          });
        }
      }
    }
  }
  return suite.finish();
}

CheckResult check_analytic_limits(const ClosedSpectrumFn& closed) {
  SuiteRecorder suite("analytic-limits");
  for (int n = 1; n <= 8; ++n) {
    for (double p : {0.1, 0.25, 0.3, 0.4, 0.45}) {
      const double h = binary_entropy_bits(2.0 * p);

      const ChannelParams independent = symmetric_channel(p, 0.0);
      const double s0 = von_neumann_entropy(closed("sep", n, independent));
      suite.record(std::abs(s0 - n * h) <= 1e-12, [&] {
        return "mu=0 sep " + point_label(n, p, 0.0) + ": S=" + format_number(s0) +
               " expected " + format_number(n * h);
      });

      const ChannelParams perfect = symmetric_channel(p, 1.0);
      const double s1 = von_neumann_entropy(closed("sep", n, perfect));
      suite.record(std::abs(s1 - h) <= 1e-12, [&] {
        return "mu=1 sep " + point_label(n, p, 1.0) + ": S=" + format_number(s1) +
               " expected " + format_number(h);
      });

      const double g1 = von_neumann_entropy(closed("ghz", n, perfect));
      const double expected = (n % 2 == 0) ? 0.0 : 1.0;
      suite.record(std::abs(g1 - expected) <= 1e-12, [&] {
        return "mu=1 ghz " + point_label(n, p, 1.0) + ": S=" + format_number(g1) +
               " expected " + format_number(expected);
      });
    }
  }
  return suite.finish();
}

CheckResult check_chain_rule(const ClosedSpectrumFn& closed) {
  SuiteRecorder suite("chain-rule");
  for (int n : {1, 2, 4, 8, 12, 14}) {
    for (double p : {0.3, 0.45}) {
      for (double mu : {0.0, 0.3, 0.7, 1.0}) {
        const ChannelParams ch = symmetric_channel(p, mu);
        const double streamed = von_neumann_entropy(closed("sep", n, ch));
        const double direct = separable_entropy_closed(n, ch);
        suite.record(std::abs(streamed - direct) <= 1e-10, [&] {
          return point_label(n, p, mu) + ": streamed=" + format_number(streamed) +
                 " closed=" + format_number(direct);
        });
      }
    }
  }
  return suite.finish();
}

}  // namespace

std::string CheckResult::summary() const {
  std::string s = name + ": " + (passed ? "pass" : "FAIL") + " (" +
                  std::to_string(cases - failures) + "/" + std::to_string(cases) +
                  " cases)";
  for (const std::string& f : failure_samples) {
    s += "\n  " + f;
  }
  return s;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options,
                                          const ClosedSpectrumFn& closed) {
  const ClosedSpectrumFn& source = closed ? closed : ClosedSpectrumFn(default_closed);
  std::vector<CheckResult> results;
  results.push_back(check_normalization(options, source));
  results.push_back(check_oracle_equivalence(options, source));
  results.push_back(check_analytic_limits(source));
  results.push_back(check_chain_rule(source));
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace memchan
