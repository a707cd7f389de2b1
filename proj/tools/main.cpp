#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "memchan/analysis.hpp"
#include "memchan/oracle.hpp"
#include "memchan/verification.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDenseCap = 3;

int env_dense_cap() {
  const char* raw = std::getenv("MEMCHAN_DENSE_CAP");
  if (raw == nullptr) return memchan::kDefaultDenseCap;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1 || v > 30) return memchan::kDefaultDenseCap;
  return static_cast<int>(v);
}

// Data goes to stdout unless an output path is set; diagnostics always go to
// stderr so redirected CSV stays clean.
struct OutputTarget {
  std::ofstream file;

  std::ostream& open(const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    return file;
  }
};

// Inclusive grid "start:stop:count" with count >= 2; the last point is
// exactly `stop` so boundary rows (mu = 1) hit the analytic limits.
std::vector<double> parse_mu_grid(const std::string& text) {
  const auto bad = [&]() {
    return std::invalid_argument("invalid --mu-grid \"" + text +
                                 "\": expected start:stop:count");
  };
  const std::size_t c1 = text.find(':');
  const std::size_t c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) throw bad();
  double start = 0.0;
  double stop = 0.0;
  long count = 0;
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, c1);
    const std::string b = text.substr(c1 + 1, c2 - c1 - 1);
    const std::string c = text.substr(c2 + 1);
    start = std::stod(a, &used);
    if (used != a.size()) throw bad();
    stop = std::stod(b, &used);
    if (used != b.size()) throw bad();
    count = std::stol(c, &used);
    if (used != c.size()) throw bad();
  } catch (const std::invalid_argument&) {
    throw bad();
  } catch (const std::out_of_range&) {
    throw bad();
  }
  if (count < 2) throw std::invalid_argument("--mu-grid count must be at least 2");
  if (!(0.0 <= start && start < stop && stop <= 1.0)) {
    throw std::invalid_argument("--mu-grid endpoints must satisfy 0 <= start < stop <= 1");
  }
  std::vector<double> grid(count);
  for (long k = 0; k < count; ++k) {
    grid[k] = (k == count - 1) ? stop : start + (stop - start) * k / (count - 1);
  }
  return grid;
}

void emit_reports(const std::vector<memchan::EntropyReport>& rows,
                  const std::string& format, std::ostream& out) {
  if (format == "csv") {
    out << memchan::kEntropyCsvHeader << "\n";
    for (const auto& r : rows) out << memchan::csv_row(r) << "\n";
    return;
  }
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n},
                   {"p", r.p},
                   {"mu", r.mu},
                   {"encoding", r.encoding},
                   {"entropy_bits", r.entropy_bits},
                   {"holevo_bound_bits", r.holevo_bound_bits},
                   {"per_use_bits", r.per_use_bits}});
  }
  out << arr.dump(2) << "\n";
}

int run_entropy(int n, double p, double mu, const std::string& encoding,
                int dense_cap, const std::string& format, std::ostream& out) {
  const auto spec = memchan::EncodingSpec::parse(encoding);
  emit_reports({memchan::entropy_report(n, p, mu, spec, dense_cap)}, format, out);
  return kExitOk;
}

int run_sweep(int n, double p, const std::vector<double>& grid,
              const std::vector<std::string>& encodings, int dense_cap,
              const std::string& format, std::ostream& out) {
  std::vector<memchan::EncodingSpec> specs;
  specs.reserve(encodings.size());
  for (const std::string& e : encodings) specs.push_back(memchan::EncodingSpec::parse(e));
  emit_reports(memchan::sweep(n, p, grid, specs, dense_cap), format, out);
  return kExitOk;
}

int run_critical(const std::vector<int>& ns, double p, double tol,
                 const std::string& format, std::ostream& out) {
  std::vector<memchan::CriticalMemoryResult> results;
  results.reserve(ns.size());
  for (int n : ns) {
    results.push_back(memchan::critical_memory(n, p, tol));
    if (results.back().sign_changes > 1) {
      std::cerr << "note: n=" << n << ": " << results.back().sign_changes
                << " sign changes on the scan grid; reporting the smallest crossing\n";
    }
  }
  if (format == "csv") {
    out << memchan::kCriticalCsvHeader << "\n";
    for (const auto& r : results) out << memchan::csv_row(r) << "\n";
    return kExitOk;
  }
  json arr = json::array();
  for (const auto& r : results) {
    json row = {{"n", r.n},
                {"p", r.p},
                {"tol", r.tol},
                {"sign_changes", r.sign_changes}};
    if (r.mu_c) {
      row["mu_c"] = *r.mu_c;
      row["bracket"] = {r.bracket.first, r.bracket.second};
    } else {
      row["mu_c"] = nullptr;
    }
    arr.push_back(std::move(row));
  }
  out << arr.dump(2) << "\n";
  return kExitOk;
}

int run_spectrum(int n, double p, double mu, const std::string& encoding,
                 int dense_cap, const std::string& format, std::ostream& out) {
  const auto spec = memchan::EncodingSpec::parse(encoding);
  if (!spec.valid_for(n)) {
    throw std::invalid_argument("encoding \"" + spec.str() + "\" does not fit n=" +
                                std::to_string(n));
  }
  const memchan::ChannelParams ch = memchan::symmetric_channel(p, mu);
  std::vector<double> values;
  if (spec.closed_form()) {
    values = (spec.str() == "sep" ? memchan::separable_spectrum(n, ch)
                                  : memchan::ghz_spectrum(n, ch))
                 .sorted_descending();
  } else {
    values = memchan::output_spectrum_dense(memchan::encode_state(spec, n), ch, dense_cap)
                 .sorted_descending();
  }
  if (format == "csv") {
    out << "n,p,mu,encoding,index,eigenvalue\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
      out << n << ',' << memchan::format_number(p) << ',' << memchan::format_number(mu)
          << ',' << spec.str() << ',' << i << ',' << memchan::format_number(values[i])
          << "\n";
    }
    return kExitOk;
  }
  json arr = json::array();
  for (std::size_t i = 0; i < values.size(); ++i) {
    arr.push_back({{"n", n},
                   {"p", p},
                   {"mu", mu},
                   {"encoding", spec.str()},
                   {"index", i},
                   {"eigenvalue", values[i]}});
  }
  out << arr.dump(2) << "\n";
  return kExitOk;
}

int run_verify(const memchan::VerifyOptions& options, std::ostream& out) {
  const auto results = memchan::run_verification(options);
  json suites = json::array();
  for (const auto& r : results) {
    suites.push_back({{"name", r.name},
                      {"passed", r.passed},
                      {"cases", r.cases},
                      {"failures", r.failures},
                      {"failure_samples", r.failure_samples}});
  }
  const bool ok = memchan::all_passed(results);
  out << json{{"passed", ok}, {"suites", suites}}.dump(2) << "\n";
  if (!ok) {
    for (const auto& r : results) {
      if (!r.passed) std::cerr << r.summary() << "\n";
    }
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Output entropy, information bounds, and critical memory of a "
               "correlated Pauli channel"};
  app.require_subcommand(1);

  const int default_cap = env_dense_cap();

  int n = 2;
  double p = 0.4;
  double mu = 0.0;
  double tol = 1e-6;
  int dense_cap = default_cap;
  std::string encoding = "sep";
  std::vector<std::string> encodings{"sep", "ghz"};
  std::vector<int> n_list;
  std::string mu_grid_text;
  bool have_mu = false;
  std::string format = "csv";
  std::string output_path;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", output_path, "Write to this file instead of stdout");
  };

  CLI::App* entropy = app.add_subcommand(
      "entropy", "Entropy and information bounds at one channel point");
  entropy->add_option("--n", n, "Qubit count")->required()->check(CLI::PositiveNumber);
  entropy->add_option("--p", p, "Identity/flip weight of the symmetric channel")
      ->required()
      ->check(CLI::Range(0.0, 0.5));
  entropy->add_option("--mu", mu, "Memory parameter")->required()->check(CLI::Range(0.0, 1.0));
  entropy->add_option("--encoding", encoding, "Input encoding")->capture_default_str();
  entropy->add_option("--dense-cap", dense_cap, "Qubit cap for the dense path")
      ->capture_default_str();
  add_common(entropy);

  CLI::App* sweep = app.add_subcommand("sweep", "Entropy table over a memory grid");
  sweep->add_option("--n", n, "Qubit count")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--p", p, "Identity/flip weight of the symmetric channel")
      ->required()
      ->check(CLI::Range(0.0, 0.5));
  sweep->add_option("--mu-grid", mu_grid_text, "Inclusive grid start:stop:count");
  sweep->add_option("--mu", mu, "Single memory value instead of a grid")
      ->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--encodings", encodings, "Comma-separated encodings")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--dense-cap", dense_cap, "Qubit cap for the dense path")
      ->capture_default_str();
  add_common(sweep);

  CLI::App* critical = app.add_subcommand(
      "critical", "Critical memory where the entangled encoding takes over");
  critical->add_option("--n", n_list, "Comma-separated qubit counts")
      ->required()
      ->delimiter(',');
  critical->add_option("--p", p, "Identity/flip weight of the symmetric channel")
      ->required()
      ->check(CLI::Range(0.0, 0.5));
  critical->add_option("--tol", tol, "Bisection tolerance")->capture_default_str();
  add_common(critical);

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Sorted output eigenvalues at one channel point");
  spectrum->add_option("--n", n, "Qubit count")->required()->check(CLI::PositiveNumber);
  spectrum->add_option("--p", p, "Identity/flip weight of the symmetric channel")
      ->required()
      ->check(CLI::Range(0.0, 0.5));
  spectrum->add_option("--mu", mu, "Memory parameter")->required()->check(CLI::Range(0.0, 1.0));
  spectrum->add_option("--encoding", encoding, "Input encoding")->capture_default_str();
  spectrum->add_option("--dense-cap", dense_cap, "Qubit cap for the dense path")
      ->capture_default_str();
  add_common(spectrum);

  memchan::VerifyOptions verify_options;
  verify_options.dense_cap = default_cap;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the closed-form vs dense self-check suites");
  verify->add_option("--n-max", verify_options.n_max, "Largest n in the equivalence suite")
      ->check(CLI::Range(2, 8))
      ->capture_default_str();
  verify->add_option("--samples", verify_options.samples, "Normalization suite draws")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--seed", verify_options.seed, "Normalization suite seed")
      ->capture_default_str();
  verify->add_option("--dense-cap", verify_options.dense_cap, "Qubit cap for the dense path")
      ->capture_default_str();
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }
  have_mu = sweep->count("--mu") > 0;

  try {
    OutputTarget target;
    std::ostream& out = target.open(output_path);
    if (*entropy) return run_entropy(n, p, mu, encoding, dense_cap, format, out);
    if (*sweep) {
      if (mu_grid_text.empty() == !have_mu) {
        throw std::invalid_argument("sweep needs exactly one of --mu-grid or --mu");
      }
      const std::vector<double> grid =
          have_mu ? std::vector<double>{mu} : parse_mu_grid(mu_grid_text);
      return run_sweep(n, p, grid, encodings, dense_cap, format, out);
    }
    if (*critical) return run_critical(n_list, p, tol, format, out);
    if (*spectrum) return run_spectrum(n, p, mu, encoding, dense_cap, format, out);
    return run_verify(verify_options, out);
  } catch (const memchan::DenseCapExceeded& e) {
    std::cerr << "error: " << e.what() << " (--dense-cap N)\n";
    return kExitDenseCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
