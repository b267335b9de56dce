#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "tauber/catalog.hpp"
#include "tauber/conditions.hpp"
#include "tauber/fit.hpp"
#include "tauber/normed_series.hpp"
#include "tauber/report.hpp"
#include "tauber/spaces.hpp"
#include "tauber/theorems.hpp"
#include "tauber/torus.hpp"

namespace py = pybind11;
using namespace tauber;

namespace {

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

ScalarSeries finite_series(std::vector<Complex> terms) {
  ScalarSeries s;
  s.term = [terms = std::move(terms)](std::int64_t k) {
    return k < static_cast<std::int64_t>(terms.size()) ? terms[static_cast<std::size_t>(k)]
                                                       : Complex{};
  };
  return s;
}

std::vector<Complex> fourier_coefficients(const std::string& entry, std::int64_t k_max,
                                          std::size_t grid_size) {
  if (k_max > static_cast<std::int64_t>(grid_size) / 2 - 1) {
    throw std::invalid_argument("aliasing: k_max exceeds grid_size/2 - 1");
  }
  const auto f = GridFunction::sample(catalog_entry(entry).sampler, grid_size);
  const auto t = coeff_table(f, k_max);
  return {t.values().begin(), t.values().end()};
}

py::dict kernel_audit(std::int64_t n, double delta) {
  std::size_t quad = std::size_t{1} << 16;
  while (quad < static_cast<std::size_t>(4 * (n + 1))) quad *= 2;
  py::dict d;
  d["A_residual"] = kernel_check_A(n, quad);
  d["B_min"] = kernel_check_B(n);
  d["Bprime_integral"] = kernel_check_Bprime(n, quad);
  d["mu"] = kernel_mu(n, delta);
  return d;
}

py::tuple cesaro_means(std::vector<Complex> terms) {
  const ScalarSpace space;
  const auto series = finite_series(terms);
  CesaroRunner<ScalarSpace> runner(space, series);
  std::vector<Complex> partial;
  std::vector<Complex> cesaro;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    runner.advance();
    partial.push_back(runner.partial_sum());
    cesaro.push_back(runner.cesaro_mean());
  }
  return py::make_tuple(partial, cesaro);
}

Complex delayed(std::vector<Complex> terms, std::int64_t n, std::int64_t m) {
  if (n < 0 || m < 1 || n + m > static_cast<std::int64_t>(terms.size())) {
    throw std::invalid_argument("need 0 <= n, 1 <= m and n + m <= len(terms)");
  }
  return delayed_mean(ScalarSpace{}, finite_series(std::move(terms)), n, m);
}

py::object check_condition(const std::string& kind, std::optional<std::string> entry,
                           std::optional<std::string> series, double p, std::uint64_t seed) {
  NormSequence seq;
  if (entry) {
    seq = pair_norms(catalog_entry(*entry));
  } else if (series) {
    seq = scalar_series(*series, seed).norms;
  } else {
    throw std::invalid_argument("pass entry= or series=");
  }
  if (kind != "hardy" && !(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  if (kind == "hardy") return to_python(to_json(hardy_check(seq)));
  if (kind == "tailpower") return to_python(to_json(tail_power_check(seq, p)));
  if (kind == "hl") return to_python(to_json(hl_sum_check(seq, p)));
  throw std::invalid_argument("kind must be hardy, tailpower or hl");
}

py::object verify(const std::string& driver, std::optional<std::string> entry,
                  std::optional<std::string> series, std::optional<std::string> set,
                  std::optional<std::string> space, double p, std::optional<double> alpha,
                  std::optional<std::vector<std::int64_t>> n_grid, std::optional<std::int64_t> n_max,
                  std::size_t grid_size, std::uint64_t seed) {
  ExperimentReport r;
  if (driver == "tauberian") {
    if (!series) throw std::invalid_argument("tauberian needs series=");
    TauberianOptions o;
    o.p = p;
    if (n_grid) o.n_grid = *n_grid;
    r = verify_tauberian(scalar_series(*series, seed), o);
  } else if (driver == "gibbs") {
    if (!entry) throw std::invalid_argument("gibbs needs entry=");
    GibbsOptions o;
    if (n_max) o.n_max = *n_max;
    r = gibbs_probe(catalog_entry(*entry), o);
  } else {
    if (!entry) throw std::invalid_argument(driver + " needs entry=");
    FourierOptions o;
    o.grid_N = grid_size;
    if (n_grid) o.n_grid = *n_grid;
    const auto K = set ? ClosedArcSet::parse(*set) : ClosedArcSet::full();
    const auto& e = catalog_entry(*entry);
    if (driver == "fejer-set") {
      r = verify_fejer_on_set(e, K, o);
    } else if (driver == "hardy-set") {
      r = verify_hardy_on_set(e, p, K, o);
    } else if (driver == "in-space") {
      r = verify_fourier_in_space(e, NormSpec::parse(space.value_or("sup")), p, o, alpha);
    } else {
      throw std::invalid_argument("unknown driver '" + driver + "'");
    }
  }
  return to_python(to_json(r));
}

py::object homogeneity(const std::string& entry, const std::string& space, std::size_t grid_size) {
  const auto f = GridFunction::sample(catalog_entry(entry).sampler, grid_size);
  const double h = kTwoPi / static_cast<double>(grid_size);
  const std::vector<double> shifts{h, 7 * h, 64 * h, 1000 * h};
  return to_python(to_json(check_homogeneity(f, NormSpec::parse(space), shifts)));
}

py::dict modulus(const std::string& entry, const std::string& set, double eps,
                 std::size_t grid_size) {
  const auto r = modulus_over_space(catalog_entry(entry).sampler, ClosedArcSet::parse(set), eps,
                                    grid_size);
  py::dict d;
  d["delta"] = r.delta;
  d["touches_jump"] = r.touches_jump;
  d["diagnostic"] = r.diagnostic;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "C++ core: summation, conditions, circle machinery and experiment drivers";

  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& e : catalog()) names.push_back(e.name);
    return names;
  });
  m.def("scalar_series_names", &scalar_series_names);
  m.def("fourier_coefficients", &fourier_coefficients, py::arg("entry"), py::arg("k_max"),
        py::arg("grid_size") = 4096,
        "Trapezoid coefficients for k = -k_max..k_max of a catalog entry.");
  m.def("fejer_kernel", &fejer_kernel, py::arg("n"), py::arg("t"));
  m.def("kernel_audit", &kernel_audit, py::arg("n"), py::arg("delta") = 0.1);
  m.def("cesaro_means", &cesaro_means, py::arg("terms"),
        "(S_n, sigma_n) for n = 0..len(terms)-1.");
  m.def("delayed_mean", &delayed, py::arg("terms"), py::arg("n"), py::arg("m"),
        "(S_n + ... + S_{n+m-1}) / m.");
  m.def("check_condition", &check_condition, py::arg("kind"), py::arg("entry") = py::none(),
        py::arg("series") = py::none(), py::arg("p") = 2.0, py::arg("seed") = 0);
  m.def("verify", &verify, py::arg("driver"), py::arg("entry") = py::none(),
        py::arg("series") = py::none(), py::arg("set") = py::none(),
        py::arg("space") = py::none(), py::arg("p") = 2.0, py::arg("alpha") = py::none(),
        py::arg("n_grid") = py::none(), py::arg("n_max") = py::none(),
        py::arg("grid_size") = 4096, py::arg("seed") = 0);
  m.def("homogeneity", &homogeneity, py::arg("entry"), py::arg("space"),
        py::arg("grid_size") = 4096);
  m.def("exp_norm_growth", [](const std::string& space) {
    return exp_norm_growth(NormSpec::parse(space));
  }, py::arg("space"));
  m.def("modulus_over_space", &modulus, py::arg("entry"), py::arg("set"), py::arg("eps"),
        py::arg("grid_size") = 4096);
}
