#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "memchan/analysis.hpp"
#include "memchan/oracle.hpp"
#include "memchan/spectrum.hpp"
#include "memchan/verification.hpp"

namespace py = pybind11;

namespace {

py::dict report_to_dict(const memchan::EntropyReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["p"] = r.p;
  d["mu"] = r.mu;
  d["encoding"] = r.encoding;
  d["entropy_bits"] = r.entropy_bits;
  d["holevo_bound_bits"] = r.holevo_bound_bits;
  d["per_use_bits"] = r.per_use_bits;
  return d;
}

double entropy_fn(int n, double p, double mu, const std::string& encoding, int dense_cap) {
  return memchan::entropy_report(n, p, mu, memchan::EncodingSpec::parse(encoding), dense_cap)
      .entropy_bits;
}

std::vector<double> spectrum_fn(int n, double p, double mu, const std::string& encoding,
                                int dense_cap) {
  const auto spec = memchan::EncodingSpec::parse(encoding);
  const memchan::ChannelParams ch = memchan::symmetric_channel(p, mu);
  if (spec.closed_form()) {
    return (spec.str() == "sep" ? memchan::separable_spectrum(n, ch)
                                : memchan::ghz_spectrum(n, ch))
        .sorted_descending();
  }
  return memchan::output_spectrum_dense(memchan::encode_state(spec, n), ch, dense_cap)
      .sorted_descending();
}

double separable_entropy_closed_fn(int n, double p, double mu) {
  return memchan::separable_entropy_closed(n, memchan::symmetric_channel(p, mu));
}

py::dict critical_memory_fn(int n, double p, double tol) {
  const memchan::CriticalMemoryResult r = memchan::critical_memory(n, p, tol);
  py::dict d;
  d["n"] = r.n;
  d["p"] = r.p;
  d["mu_c"] = r.mu_c ? py::object(py::float_(*r.mu_c)) : py::object(py::none());
  d["bracket"] = py::make_tuple(r.bracket.first, r.bracket.second);
  d["tol"] = r.tol;
  d["sign_changes"] = r.sign_changes;
  return d;
}

py::list sweep_fn(int n, double p, const std::vector<double>& mu_grid,
                  const std::vector<std::string>& encodings, int dense_cap) {
  std::vector<memchan::EncodingSpec> specs;
  specs.reserve(encodings.size());
  for (const std::string& e : encodings) specs.push_back(memchan::EncodingSpec::parse(e));
  py::list rows;
  for (const auto& r : memchan::sweep(n, p, mu_grid, specs, dense_cap)) {
    rows.append(report_to_dict(r));
  }
  return rows;
}

std::vector<std::complex<double>> encode_state_fn(const std::string& encoding, int n) {
  return memchan::encode_state(memchan::EncodingSpec::parse(encoding), n).amplitudes;
}

double entropy_of_spectrum_fn(const std::vector<double>& eigenvalues) {
  return memchan::von_neumann_entropy(memchan::SpectrumStream::from_values(eigenvalues));
}

py::dict verify_fn(int n_max, int samples, std::uint64_t seed, int dense_cap) {
  memchan::VerifyOptions options;
  options.n_max = n_max;
  options.samples = samples;
  options.seed = seed;
  options.dense_cap = dense_cap;
  const auto results = memchan::run_verification(options);
  py::list suites;
  for (const auto& r : results) {
    py::dict s;
    s["name"] = r.name;
    s["passed"] = r.passed;
    s["cases"] = r.cases;
    s["failures"] = r.failures;
    s["failure_samples"] = r.failure_samples;
    suites.append(s);
  }
  py::dict d;
  d["passed"] = memchan::all_passed(results);
  d["suites"] = suites;
  return d;
}

}  // namespace

PYBIND11_MODULE(_memchan, m) {
  m.doc() = "Output entropies and information bounds of a Pauli channel with memory";

  py::register_exception<memchan::DenseCapExceeded>(m, "DenseCapError", PyExc_RuntimeError);

  m.attr("DEFAULT_DENSE_CAP") = memchan::kDefaultDenseCap;

  m.def("entropy", &entropy_fn,
        "Output entropy in bits for an encoding at one channel point", py::arg("n"),
        py::arg("p"), py::arg("mu"), py::arg("encoding") = "sep",
        py::arg("dense_cap") = memchan::kDefaultDenseCap);

  m.def("spectrum", &spectrum_fn,
        "Sorted (descending) output eigenvalues for an encoding", py::arg("n"),
        py::arg("p"), py::arg("mu"), py::arg("encoding") = "sep",
        py::arg("dense_cap") = memchan::kDefaultDenseCap);

  m.def("separable_entropy_closed", &separable_entropy_closed_fn,
        "Separable output entropy from the closed form, no enumeration",
        py::arg("n"), py::arg("p"), py::arg("mu"));

  m.def("entropy_gap", &memchan::entropy_gap,
        "S_separable - S_entangled; positive favors the entangled encoding",
        py::arg("n"), py::arg("p"), py::arg("mu"));

  m.def("mutual_info_bound",
        [](int n, double entropy_bits) {
          const auto b = memchan::mutual_info_bound(n, entropy_bits);
          return py::make_tuple(b.holevo_bits, b.per_use_bits);
        },
        "(n - S, (n - S)/n) information bounds", py::arg("n"), py::arg("entropy_bits"));

  m.def("critical_memory", &critical_memory_fn,
        "Smallest memory value where the entangled encoding takes over",
        py::arg("n"), py::arg("p"), py::arg("tol") = 1e-6);

  m.def("sweep", &sweep_fn, "Entropy reports, encoding-major and mu-ascending",
        py::arg("n"), py::arg("p"), py::arg("mu_grid"), py::arg("encodings"),
        py::arg("dense_cap") = memchan::kDefaultDenseCap);

  m.def("encode_state", &encode_state_fn, "Amplitudes of a named or pattern encoding",
        py::arg("encoding"), py::arg("n"));

  m.def("entropy_of_spectrum", &entropy_of_spectrum_fn,
        "Entropy in bits of an explicit eigenvalue list (must sum to 1)",
        py::arg("eigenvalues"));

  m.def("verify", &verify_fn, "Run the self-check suites; returns a summary dict",
        py::arg("n_max") = 4, py::arg("samples") = 200, py::arg("seed") = 12345,
        py::arg("dense_cap") = memchan::kDefaultDenseCap);
}
