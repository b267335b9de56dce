// tauber: command-line front end.
//
// Exit codes: 0 pass / confirmed, 2 condition fails / hypothesis not met /
// refuted, 3 not applicable, 1 usage or internal error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tauber/catalog.hpp"
#include "tauber/conditions.hpp"
#include "tauber/fit.hpp"
#include "tauber/report.hpp"
#include "tauber/spaces.hpp"
#include "tauber/theorems.hpp"
#include "tauber/torus.hpp"

namespace {

using nlohmann::json;
using namespace tauber;

constexpr int kExitUsage = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string entry;
  std::string series;
  std::string coeffs_file;
  std::string samples_file;
  std::string set;
  std::string space;
  std::string check;
  std::string driver;
  std::optional<double> p;
  std::optional<double> alpha;
  std::string ngrid;
  std::optional<std::int64_t> nmax;
  std::size_t gridsize = 4096;
  std::int64_t kmax = 16;
  double eps = 0.5;
  std::string kernel_n = "0,16,64,256";
  double delta = 0.1;
  std::string out;
  std::string csv;
  std::uint64_t seed = 0;
};

std::vector<std::int64_t> parse_ngrid(const std::string& text) {
  std::vector<std::int64_t> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--ngrid must look like start:stop:factor");
    }
  }
  if (parts.size() != 3) throw UsageError("--ngrid must look like start:stop:factor");
  return geometric_grid(parts[0], parts[1], parts[2]);
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw UsageError("bad integer list '" + text + "'");
    }
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  json j = json::parse(in);
  // Accept a bare payload or one wrapped in a report envelope.
  if (j.contains("result")) return j.at("result");
  return j;
}

void emit(const RunConfig& cfg, const std::string& command, json result) {
  const auto text = dump(envelope(command, std::move(result)));
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    write_atomically(cfg.out, text);
  }
}

// a_0 = |c_0|, a_k = |c_k| + |c_{-k}| up to k_max, zero beyond.
NormSequence table_pair_norms(const CoeffTable& t) {
  NormSequence seq;
  seq.term = [t](std::int64_t k) {
    if (k > t.k_max()) return 0.0;
    return k == 0 ? std::abs(t.at(0)) : std::abs(t.at(k)) + std::abs(t.at(-k));
  };
  seq.tail_bound = [](std::int64_t, double) { return 0.0; };
  return seq;
}

int cmd_coeffs(const RunConfig& cfg) {
  if (!is_power_of_two(static_cast<std::int64_t>(cfg.gridsize)) || cfg.gridsize < 16) {
    throw UsageError("--gridsize must be a power of two >= 16");
  }
  const auto limit = static_cast<std::int64_t>(cfg.gridsize) / 2 - 1;
  if (cfg.kmax < 0 || cfg.kmax > limit) {
    throw UsageError("aliasing: --kmax " + std::to_string(cfg.kmax) + " exceeds N/2 - 1 = " +
                     std::to_string(limit) + " for --gridsize " + std::to_string(cfg.gridsize));
  }
  std::optional<GridFunction> f;
  json source;
  if (!cfg.entry.empty()) {
    f = GridFunction::sample(catalog_entry(cfg.entry).sampler, cfg.gridsize);
    source = {{"entry", cfg.entry}};
  } else if (!cfg.samples_file.empty()) {
    f = grid_function_from_json(read_json_file(cfg.samples_file));
    source = {{"samples_file", cfg.samples_file}};
    if (cfg.kmax > static_cast<std::int64_t>(f->size()) / 2 - 1) {
      throw UsageError("aliasing: --kmax exceeds N/2 - 1 for the sample file");
    }
  } else {
    throw UsageError("coeffs needs --entry or --samples-file");
  }
  auto result = to_json(coeff_table(*f, cfg.kmax));
  result["source"] = source;
  result["grid_N"] = f->size();
  emit(cfg, "coeffs", std::move(result));
  return 0;
}

int cmd_check(const RunConfig& cfg) {
  const double p = cfg.p.value_or(2.0);
  if (cfg.check != "hardy" && (!(p >= 1.0) || !std::isfinite(p))) {
    throw UsageError("--p must satisfy 1 <= p < inf");
  }
  NormSequence seq;
  json inputs = {{"check", cfg.check}};
  Window window = kDefaultWindow;
  std::int64_t K = kDefaultTruncation;
  if (!cfg.entry.empty()) {
    seq = pair_norms(catalog_entry(cfg.entry));
    inputs["entry"] = cfg.entry;
  } else if (!cfg.series.empty()) {
    seq = scalar_series(cfg.series, cfg.seed).norms;
    inputs["series"] = cfg.series;
    inputs["seed"] = cfg.seed;
  } else if (!cfg.coeffs_file.empty()) {
    const auto table = coeff_table_from_json(read_json_file(cfg.coeffs_file));
    seq = table_pair_norms(table);
    inputs["coeffs_file"] = cfg.coeffs_file;
    // A finite table only supports a window well inside it.
    K = table.k_max();
    window = {std::min<std::int64_t>(64, K / 64), K / 16};
    if (window.n_min < 1 || window.n_max < 4 * window.n_min) {
      json result = {{"inputs", inputs},
                     {"applicable", false},
                     {"diagnostic", "coefficient table too short for a decay window"}};
      emit(cfg, "check", std::move(result));
      return 3;
    }
  } else {
    throw UsageError("check needs --entry, --series or --coeffs-file");
  }

  ConditionVerdict v;
  if (cfg.check == "hardy") {
    v = hardy_check(seq, window);
  } else if (cfg.check == "tailpower") {
    inputs["p"] = p;
    v = tail_power_check(seq, p, window, K);
  } else if (cfg.check == "hl") {
    inputs["p"] = p;
    v = cfg.coeffs_file.empty() ? hl_sum_check(seq, p) : hl_sum_check(seq, p, K);
  } else {
    throw UsageError("--check must be hardy, tailpower or hl");
  }
  emit(cfg, "check", {{"inputs", inputs}, {"applicable", true}, {"verdict", to_json(v)}});
  return v.passes ? 0 : 2;
}

std::vector<std::int64_t> grid_for(const RunConfig& cfg, std::int64_t start,
                                   std::int64_t stop, std::int64_t factor) {
  if (!cfg.ngrid.empty()) return parse_ngrid(cfg.ngrid);
  if (cfg.nmax) {
    if (*cfg.nmax < 1) throw UsageError("--nmax must be >= 1");
    return geometric_grid(std::min(start, *cfg.nmax), *cfg.nmax, factor);
  }
  return geometric_grid(start, stop, factor);
}

int cmd_verify(const RunConfig& cfg) {
  ExperimentReport report;
  if (cfg.driver == "tauberian") {
    if (cfg.series.empty()) throw UsageError("verify tauberian needs --series");
    TauberianOptions o;
    o.p = cfg.p.value_or(2.0);
    o.eps = cfg.eps;
    o.n_grid = grid_for(cfg, 64, 16384, 4);
    report = verify_tauberian(scalar_series(cfg.series, cfg.seed), o);
    report.inputs["seed"] = cfg.seed;
  } else if (cfg.driver == "gibbs") {
    if (cfg.entry.empty()) throw UsageError("verify gibbs needs --entry");
    GibbsOptions o;
    if (cfg.nmax) o.n_max = *cfg.nmax;
    report = gibbs_probe(catalog_entry(cfg.entry), o);
  } else {
    if (cfg.entry.empty()) throw UsageError("verify " + cfg.driver + " needs --entry");
    const auto& entry = catalog_entry(cfg.entry);
    FourierOptions o;
    o.grid_N = cfg.gridsize;
    o.n_grid = grid_for(cfg, 64, 1024, 2);
    const auto K = cfg.set.empty() ? ClosedArcSet::full() : ClosedArcSet::parse(cfg.set);
    if (cfg.driver == "fejer-set") {
      report = verify_fejer_on_set(entry, K, o);
    } else if (cfg.driver == "hardy-set") {
      report = verify_hardy_on_set(entry, cfg.p.value_or(2.0), K, o);
    } else if (cfg.driver == "in-space") {
      const auto spec = NormSpec::parse(cfg.space.empty() ? "sup" : cfg.space);
      report = verify_fourier_in_space(entry, spec, cfg.p.value_or(2.0), o, cfg.alpha);
    } else {
      throw UsageError("unknown driver '" + cfg.driver +
                       "' (tauberian, fejer-set, hardy-set, in-space, gibbs)");
    }
  }
  if (!cfg.csv.empty()) write_atomically(cfg.csv, to_csv(report));
  for (const auto& d : report.diagnostics) std::cerr << "tauber: " << d << '\n';
  emit(cfg, "verify " + cfg.driver, to_json(report));
  return exit_code(report.conclusion.outcome);
}

int cmd_kernel(const RunConfig& cfg) {
  if (!(cfg.delta > 0.0) || cfg.delta > kPi) throw UsageError("--delta must lie in (0, pi]");
  json rows = json::array();
  std::vector<double> mus;
  for (const auto n : parse_list(cfg.kernel_n)) {
    if (n < 0) throw UsageError("kernel orders must be >= 0");
    std::size_t quad = std::size_t{1} << 16;
    while (quad < static_cast<std::size_t>(4 * (n + 1))) quad *= 2;
    const double mu = kernel_mu(n, cfg.delta);
    // K_0 is constant, so the decay of mu only concerns n >= 1.
    if (n >= 1) mus.push_back(mu);
    rows.push_back({{"n", n},
                    {"A_residual", kernel_check_A(n, quad)},
                    {"B_min", kernel_check_B(n)},
                    {"Bprime_integral", kernel_check_Bprime(n, quad)},
                    {"mu", mu},
                    {"quad_N", quad}});
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < mus.size(); ++i) decreasing = decreasing && mus[i] < mus[i - 1];
  emit(cfg, "kernel", {{"delta", cfg.delta}, {"rows", rows}, {"mu_strictly_decreasing", decreasing}});
  return 0;
}

int cmd_catalog(const RunConfig& cfg) {
  json entries = json::array();
  for (const auto& e : catalog()) {
    json jumps = json::array();
    for (const auto& d : e.discontinuities) jumps.push_back({{"at", d.at}, {"jump", d.jump}});
    json thresholds = json::object();
    for (const auto& [k, t] : e.thresholds) thresholds[k] = {{"value", t.value}, {"note", t.note}};
    entries.push_back({{"name", e.name},
                       {"description", e.description},
                       {"discontinuities", jumps},
                       {"real_valued", e.real_valued},
                       {"sobolev_order", e.sobolev_order},
                       {"known", {{"hardy", e.known.hardy}, {"tail_power_p2", e.known.tail_power_p2}}},
                       {"thresholds", thresholds}});
  }
  json series = json::array();
  for (const auto& name : scalar_series_names()) {
    const auto s = scalar_series(name);
    series.push_back({{"name", name},
                      {"description", s.description},
                      {"cesaro_sum_only", s.limit_is_cesaro_sum_only}});
  }
  emit(cfg, "catalog", {{"entries", entries}, {"scalar_series", series}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cesàro summability, Tauberian conditions and Fourier series on the circle"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Write JSON here instead of stdout");
    sub->add_option("--seed", cfg.seed, "Seed for the random scalar series");
  };

  auto* coeffs = app.add_subcommand("coeffs", "Fourier coefficients |k| <= kmax");
  coeffs->add_option("--entry", cfg.entry, "Catalog entry");
  coeffs->add_option("--samples-file", cfg.samples_file, "JSON {\"samples\": [[re, im], ...]}");
  coeffs->add_option("--kmax", cfg.kmax, "Largest |k|")->capture_default_str();
  coeffs->add_option("--gridsize", cfg.gridsize, "Sampling grid size N")->capture_default_str();
  common(coeffs);

  auto* check = app.add_subcommand("check", "Hardy, tail-power or HL-sum condition");
  check->add_option("--check", cfg.check, "hardy | tailpower | hl")->required();
  check->add_option("--entry", cfg.entry, "Catalog entry (grouped coefficient norms)");
  check->add_option("--series", cfg.series, "Scalar series (term norms)");
  check->add_option("--coeffs-file", cfg.coeffs_file, "Coefficient table JSON");
  check->add_option("--p", cfg.p, "Exponent p >= 1");
  common(check);

  auto* verify = app.add_subcommand("verify", "Run an experiment driver");
  verify->add_option("driver", cfg.driver, "tauberian | fejer-set | hardy-set | in-space | gibbs")
      ->required();
  verify->add_option("--entry", cfg.entry, "Catalog entry");
  verify->add_option("--series", cfg.series, "Scalar series (tauberian)");
  verify->add_option("--set", cfg.set, "Closed arcs a:b,c:d in radians");
  verify->add_option("--space", cfg.space, "Norm: sup, Lp, Wn,p, Cn");
  verify->add_option("--p", cfg.p, "Exponent p");
  verify->add_option("--alpha", cfg.alpha, "Override the fitted norm-growth exponent");
  verify->add_option("--ngrid", cfg.ngrid, "start:stop:factor");
  verify->add_option("--nmax", cfg.nmax, "Largest n");
  verify->add_option("--gridsize", cfg.gridsize, "Evaluation grid size")->capture_default_str();
  verify->add_option("--eps", cfg.eps, "Block schedule epsilon (tauberian)")->capture_default_str();
  verify->add_option("--csv", cfg.csv, "Write the error table as CSV");
  common(verify);

  auto* kernel = app.add_subcommand("kernel", "Fejér kernel audits");
  kernel->add_option("--n", cfg.kernel_n, "Comma-separated orders")->capture_default_str();
  kernel->add_option("--delta", cfg.delta, "Concentration radius")->capture_default_str();
  common(kernel);

  auto* cat = app.add_subcommand("catalog", "List catalog entries and scalar series");
  common(cat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (coeffs->parsed()) return cmd_coeffs(cfg);
    if (check->parsed()) return cmd_check(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (kernel->parsed()) return cmd_kernel(cfg);
    return cmd_catalog(cfg);
  } catch (const UsageError& e) {
    std::cerr << "tauber: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "tauber: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "tauber: error: " << e.what() << '\n';
    return kExitUsage;
  }
}
