#include "tauber/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "tauber/fit.hpp"
#include "tauber/normed_series.hpp"

namespace tauber {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Consecutive errors both at or below this count as "already converged".
constexpr double kVanishing = 1e-12;

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] < v[i - 1]) continue;
    if (v[i] <= kVanishing && v[i - 1] <= kVanishing) continue;
    return false;
  }
  return true;
}

std::vector<double> column(const ExperimentReport& r, bool partial) {
  std::vector<double> out;
  for (const auto& row : r.table) out.push_back(partial ? row.err_partial : row.err_cesaro);
  return out;
}

double tolerance(const ExperimentReport& r, const std::string& key) {
  const auto it = r.tolerances.find(key);
  if (it == r.tolerances.end()) throw std::logic_error("report lacks tolerance '" + key + "'");
  return it->second.value;
}

double metric(const ExperimentReport& r, const std::string& key) {
  const auto it = r.metrics.find(key);
  if (it == r.metrics.end()) throw std::logic_error("report lacks metric '" + key + "'");
  return it->second;
}

// last <= tol and last <= first.
bool settles(const std::vector<double>& v, double tol) {
  return !v.empty() && v.back() <= tol && v.back() <= v.front();
}

// Strictly decreasing trend ending below the threshold.
bool decreases_below(const std::vector<double>& v, double threshold) {
  return !v.empty() && strictly_decreasing(v) && v.back() < threshold;
}

void require_grid(const std::vector<std::int64_t>& n_grid) {
  if (n_grid.empty()) throw std::invalid_argument("n grid is empty");
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < 1) throw std::invalid_argument("n grid entries must be >= 1");
    if (i > 0 && n_grid[i] <= n_grid[i - 1]) {
      throw std::invalid_argument("n grid must be strictly increasing");
    }
  }
}

nlohmann::json window_json(const Window& w) { return {{"n_min", w.n_min}, {"n_max", w.n_max}}; }

// Precondition shared by the set drivers: K stays a grid step away from
// every listed jump.  Returns false and records a diagnostic otherwise.
bool set_inside_continuity(const CatalogEntry& entry, const ClosedArcSet& K,
                           std::size_t grid_N, ExperimentReport& report) {
  if (K.empty()) throw std::invalid_argument("K must be nonempty");
  const double margin = distance_to_discontinuities(entry, K);
  report.metrics["margin"] = margin;
  const double h = kTwoPi / static_cast<double>(grid_N);
  if (margin > h) return true;
  std::ostringstream os;
  os << "K = " << K.to_string() << " is not inside the continuity set of " << entry.name
     << " (distance to a jump " << margin << ")";
  report.diagnostics.push_back(os.str());
  report.precondition_failed = true;
  return false;
}

// sup over grid points of K of |f - S_n| and |f - sigma_n|.
void fill_set_table(const CatalogEntry& entry, const ClosedArcSet& K,
                    const FourierOptions& options, ExperimentReport& report) {
  const auto xs = grid_points_in_set(K, options.grid_N);
  const auto coeffs = closed_form_coefficients(entry, options.n_grid.back());
  std::vector<Complex> f(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) f[i] = entry.sampler(xs[i]);
  const auto sup_diff = [&](const std::vector<Complex>& g) {
    double m = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) m = std::max(m, std::abs(f[i] - g[i]));
    return m;
  };
  for (const auto n : options.n_grid) {
    report.table.push_back({n, sup_diff(partial_sum_on(coeffs, n, xs)),
                            sup_diff(fejer_mean_on(coeffs, n, xs))});
  }
}

nlohmann::json fourier_inputs(const CatalogEntry& entry, const FourierOptions& options) {
  return {{"entry", entry.name},
          {"n_grid", options.n_grid},
          {"grid_N", options.grid_N},
          {"window", window_json(options.window)},
          {"truncation_K", options.truncation_K}};
}

void check_fourier_options(const FourierOptions& options) {
  require_grid(options.n_grid);
  if (options.grid_N < 4096 || !is_power_of_two(static_cast<std::int64_t>(options.grid_N))) {
    throw std::invalid_argument("grid size must be a power of two >= 4096");
  }
}

}  // namespace

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kConfirmed: return "confirmed";
    case Outcome::kHypothesisNotMet: return "hypothesis not met";
    case Outcome::kNotApplicable: return "not applicable";
    case Outcome::kRefuted: return "refuted";
  }
  return "unknown";
}

Outcome outcome_from_string(const std::string& text) {
  for (const auto o : {Outcome::kConfirmed, Outcome::kHypothesisNotMet,
                       Outcome::kNotApplicable, Outcome::kRefuted}) {
    if (to_string(o) == text) return o;
  }
  throw std::invalid_argument("unknown outcome '" + text + "'");
}

int exit_code(Outcome outcome) {
  switch (outcome) {
    case Outcome::kConfirmed: return 0;
    case Outcome::kNotApplicable: return 3;
    default: return 2;
  }
}

Conclusion derive_conclusion(const ExperimentReport& report) {
  Conclusion c;
  c.conditions_hold = std::all_of(report.verdicts.begin(), report.verdicts.end(),
                                  [](const NamedVerdict& v) { return !v.required || v.verdict.passes; });
  const auto partial = column(report, true);
  const auto cesaro = column(report, false);
  const auto& tag = report.theorem;

  if (tag == "tauberian") {
    c.cesaro_converges = settles(cesaro, tolerance(report, "cesaro_tol"));
    c.partial_sums_converge = settles(partial, tolerance(report, "convergence_tol"));
    c.convergence_observed = c.partial_sums_converge;
    if (report.precondition_failed) {
      c.outcome = Outcome::kNotApplicable;
    } else if (!c.conditions_hold || !c.cesaro_converges) {
      c.outcome = Outcome::kHypothesisNotMet;
    } else {
      c.outcome = c.partial_sums_converge ? Outcome::kConfirmed : Outcome::kRefuted;
    }
    return c;
  }

  if (tag == "fejer-set" || tag == "hardy-set" || tag == "in-space") {
    const double threshold = tolerance(report, "threshold");
    if (tag == "fejer-set") {
      c.cesaro_converges = decreases_below(cesaro, threshold);
      c.partial_sums_converge = decreases_below(partial, threshold);
      c.convergence_observed = c.cesaro_converges;
    } else {
      c.partial_sums_converge = decreases_below(partial, threshold);
      c.cesaro_converges = settles(cesaro, std::numeric_limits<double>::infinity());
      c.convergence_observed = c.partial_sums_converge;
    }
    // Membership of f in the space is only tested once the coefficient
    // condition holds, so a failed condition wins for in-space.
    if (tag == "in-space" && !c.conditions_hold) {
      c.outcome = Outcome::kHypothesisNotMet;
    } else if (report.precondition_failed) {
      c.outcome = Outcome::kNotApplicable;
    } else if (!c.conditions_hold) {
      c.outcome = Outcome::kHypothesisNotMet;
    } else {
      c.outcome = c.convergence_observed ? Outcome::kConfirmed : Outcome::kRefuted;
    }
    return c;
  }

  if (tag == "gibbs") {
    const bool has_jump = metric(report, "has_jump") != 0.0;
    const bool has_floor = metric(report, "floor") >= tolerance(report, "gibbs_floor");
    bool cesaro_ok = true;
    if (has_jump) {
      cesaro_ok = metric(report, "cesaro_jump_floor") >=
                  metric(report, "half_jump") - tolerance(report, "cesaro_slack");
    }
    c.partial_sums_converge = !has_floor;
    c.cesaro_converges = !has_jump;
    c.convergence_observed = !has_floor;
    c.outcome = has_floor == has_jump && cesaro_ok ? Outcome::kConfirmed : Outcome::kRefuted;
    return c;
  }

  throw std::invalid_argument("unknown theorem tag '" + tag + "'");
}

ExperimentReport verify_tauberian(const ScalarSeriesEntry& series,
                                  const TauberianOptions& options) {
  if (!(options.p >= 1.0) || !std::isfinite(options.p)) {
    throw std::invalid_argument("p must satisfy 1 <= p < inf");
  }
  require_grid(options.n_grid);
  if (!(options.eps > 0.0)) throw std::invalid_argument("eps must be positive");

  ExperimentReport report;
  report.theorem = "tauberian";
  report.inputs = {{"series", series.name},
                   {"p", options.p},
                   {"n_grid", options.n_grid},
                   {"eps", options.eps}};
  report.tolerances["convergence_tol"] = {options.convergence_tol, "final norm(S - S_n)"};
  report.tolerances["cesaro_tol"] = {options.cesaro_tol, "final norm(S - sigma_n)"};

  report.verdicts.push_back({"tail_power", true,
                             tail_power_check(series.norms, options.p, kDefaultWindow,
                                              kDefaultTruncation, options.settings)});
  report.verdicts.push_back({"hardy", false, hardy_check(series.norms, kDefaultWindow, options.settings)});

  const ScalarSpace space;
  ScalarSeries terms = series.terms;
  if (!terms.limit) {
    const std::int64_t n_ref = 16 * options.n_grid.back();
    terms.limit = cesaro_mean(space, terms, n_ref);
    report.diagnostics.push_back("limit estimated by sigma_" + std::to_string(n_ref));
    report.metrics["limit_estimate_n"] = static_cast<double>(n_ref);
  }
  if (series.limit_is_cesaro_sum_only) {
    report.diagnostics.push_back("recorded limit is the (C,1) sum; the series diverges");
  }
  report.metrics["limit_re"] = terms.limit->real();
  report.metrics["limit_im"] = terms.limit->imag();

  for (const auto& row : convergence_probe(space, terms, options.n_grid)) {
    report.table.push_back({row.n, row.err_partial, row.err_cesaro});
  }

  if (options.p > 1.0) {
    const double q = options.p / (options.p - 1.0);
    for (const auto n : options.n_grid) {
      const auto m = block_schedule(n, options.eps, q);
      if (m < 2) continue;
      const auto b = holder_block_bound(space, terms, n, m, options.p);
      report.holder_audit.push_back({n, m, b.lhs, b.weighted_rhs, b.rhs});
    }
  }

  report.conclusion = derive_conclusion(report);
  return report;
}

ExperimentReport verify_fejer_on_set(const CatalogEntry& entry, const ClosedArcSet& K,
                                     const FourierOptions& options) {
  check_fourier_options(options);
  ExperimentReport report;
  report.theorem = "fejer-set";
  report.inputs = fourier_inputs(entry, options);
  report.inputs["set"] = K.to_string();
  report.tolerances["threshold"] = entry.threshold("fejer_set");
  if (set_inside_continuity(entry, K, options.grid_N, report)) {
    fill_set_table(entry, K, options, report);
  }
  report.conclusion = derive_conclusion(report);
  return report;
}

ExperimentReport verify_hardy_on_set(const CatalogEntry& entry, double p,
                                     const ClosedArcSet& K, const FourierOptions& options) {
  if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("p must satisfy 1 < p < inf");
  check_fourier_options(options);
  ExperimentReport report;
  report.theorem = "hardy-set";
  report.inputs = fourier_inputs(entry, options);
  report.inputs["set"] = K.to_string();
  report.inputs["p"] = p;
  report.tolerances["threshold"] = entry.threshold("hardy_set");

  const auto norms = pair_norms(entry);
  report.verdicts.push_back({"tail_power", true,
                             tail_power_check(norms, p, options.window, options.truncation_K,
                                              options.settings)});
  report.verdicts.push_back({"hardy", false, hardy_check(norms, options.window, options.settings)});
  if (set_inside_continuity(entry, K, options.grid_N, report)) {
    fill_set_table(entry, K, options, report);
  }
  report.conclusion = derive_conclusion(report);
  return report;
}

double snapped_growth_exponent(const NormSpec& spec) {
  const double alpha = exp_norm_growth(spec);
  const double nearest = std::nearbyint(alpha);
  return std::abs(alpha - nearest) <= 0.05 ? nearest : alpha;
}

ExperimentReport verify_fourier_in_space(const CatalogEntry& entry, const NormSpec& spec,
                                         double p, const FourierOptions& options,
                                         std::optional<double> alpha_override) {
  if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("p must satisfy 1 < p < inf");
  check_fourier_options(options);
  ExperimentReport report;
  report.theorem = "in-space";
  report.inputs = fourier_inputs(entry, options);
  report.inputs["space"] = spec.to_string();
  report.inputs["p"] = p;
  report.tolerances["threshold"] = entry.threshold("in_space");

  if (spec.kind == NormSpec::Kind::kSupOnSet) {
    throw std::invalid_argument("in-space needs a norm on the whole circle; use hardy-set for sup@K");
  }
  const double alpha = alpha_override ? *alpha_override : snapped_growth_exponent(spec);
  report.inputs["alpha"] = alpha;
  report.metrics["alpha"] = alpha;

  const auto base = pair_norms(entry);
  NormSequence weighted;
  weighted.term = [base, alpha](std::int64_t k) {
    const double a = base.term(k);
    return alpha == 0.0 || a == 0.0 ? a : std::pow(static_cast<double>(k), alpha) * a;
  };
  if (alpha == 0.0) weighted.tail_bound = base.tail_bound;
  report.verdicts.push_back({"weighted_tail_power", true,
                             tail_power_check(weighted, p, options.window, options.truncation_K,
                                              options.settings)});

  // Is f an element of the space at all?
  bool member = true;
  const bool sup_type = spec.kind == NormSpec::Kind::kSupOnT || spec.kind == NormSpec::Kind::kCn;
  if (sup_type && !entry.continuous()) member = false;
  if (spec.kind == NormSpec::Kind::kSobolev && entry.sobolev_order < spec.order) member = false;
  if (spec.kind == NormSpec::Kind::kCn && entry.sobolev_order < spec.order + 1) member = false;
  if (!member) {
    report.precondition_failed = true;
    report.diagnostics.push_back(entry.name + " is not an element of " + spec.to_string());
    report.conclusion = derive_conclusion(report);
    return report;
  }

  const std::size_t N = options.grid_N;
  if (options.n_grid.back() > static_cast<std::int64_t>(N) / 2 - 1) {
    throw std::invalid_argument("n grid exceeds the grid size: need n_max <= N/2 - 1");
  }
  // Sampled norms see |k| <= N/2 - 1; coefficient residuals reach about 64 n_max.
  std::size_t residual_N = N;
  if (spec.needs_derivatives()) {
    while (residual_N < static_cast<std::size_t>(256 * options.n_grid.back())) residual_N *= 2;
  }
  const std::int64_t k_ref = spec.needs_derivatives()
                                 ? static_cast<std::int64_t>(residual_N) / 4 - 1
                                 : static_cast<std::int64_t>(N) / 2 - 1;
  const auto coeffs = closed_form_coefficients(entry, k_ref);
  const auto weighted_table = [&](auto weight) {
    std::vector<Complex> v(static_cast<std::size_t>(2 * k_ref + 1));
    for (std::int64_t k = -k_ref; k <= k_ref; ++k) {
      v[static_cast<std::size_t>(k + k_ref)] = weight(k) * coeffs.at(k);
    }
    return CoeffTable(k_ref, std::move(v));
  };
  report.metrics["residual_k_max"] = static_cast<double>(k_ref);

  if (spec.needs_derivatives()) {
    // Coefficient residuals f - S_n and f - sigma_n.
    for (const auto n : options.n_grid) {
      const auto rp = weighted_table([n](std::int64_t k) { return std::abs(k) > n ? 1.0 : 0.0; });
      const auto rc = weighted_table([n](std::int64_t k) {
        return std::abs(k) > n ? 1.0 : static_cast<double>(std::abs(k)) / static_cast<double>(n + 1);
      });
      report.table.push_back({n, norm(rp, spec, residual_N), norm(rc, spec, residual_N)});
    }
  } else {
    const auto f = GridFunction::sample(entry.sampler, N);
    const auto diff_norm = [&](const GridFunction& g) {
      std::vector<Complex> d(N);
      for (std::size_t j = 0; j < N; ++j) d[j] = f[j] - g[j];
      return norm(GridFunction(std::move(d)), spec);
    };
    for (const auto n : options.n_grid) {
      const auto sn = weighted_table([n](std::int64_t k) { return std::abs(k) > n ? 0.0 : 1.0; });
      const auto sg = weighted_table([n](std::int64_t k) {
        return std::abs(k) > n ? 0.0
                               : 1.0 - static_cast<double>(std::abs(k)) / static_cast<double>(n + 1);
      });
      report.table.push_back({n, diff_norm(synthesize(sn, N)), diff_norm(synthesize(sg, N))});
    }
  }
  report.conclusion = derive_conclusion(report);
  return report;
}

ExperimentReport gibbs_probe(const CatalogEntry& entry, const GibbsOptions& options) {
  if (options.n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  for (const double r : options.shrink) {
    if (!(r > 0.0)) throw std::invalid_argument("shrink radii must be positive");
  }
  ExperimentReport report;
  report.theorem = "gibbs";
  report.inputs = {{"entry", entry.name}, {"n_max", options.n_max}, {"shrink", options.shrink}};
  report.tolerances["gibbs_floor"] = entry.threshold("gibbs_floor");
  report.tolerances["cesaro_slack"] = {0.01, "sigma_n(x0) sits at the midpoint, half a jump from f(x0+)"};

  std::vector<Discontinuity> jumps = entry.discontinuities;
  const bool has_jump = !jumps.empty();
  if (!has_jump) {
    jumps.push_back({0.0, 0.0});
    report.diagnostics.push_back(entry.name + " has no listed jump; probing around x = 0");
  }
  report.metrics["has_jump"] = has_jump ? 1.0 : 0.0;
  double half_jump = 0.0;
  for (const auto& d : jumps) half_jump = std::max(half_jump, std::abs(d.jump) / 2.0);
  report.metrics["half_jump"] = half_jump;

  const auto coeffs = closed_form_coefficients(entry, options.n_max);
  std::vector<double> near_error(static_cast<std::size_t>(options.n_max) + 1, 0.0);
  double floor = std::numeric_limits<double>::infinity();
  double cesaro_floor = std::numeric_limits<double>::infinity();
  std::vector<double> shrink_floor(options.shrink.size(), std::numeric_limits<double>::infinity());

  const auto grid = geometric_grid(1, options.n_max, 2);
  std::size_t next_row = 0;
  for (std::int64_t n = 1; n <= options.n_max; ++n) {
    const double nd = static_cast<double>(n);
    double worst = 0.0;
    double worst_radius = 0.0;
    for (const auto& d : jumps) {
      for (const double off : {kPi / (nd + 1.0), kPi / nd}) {
        for (const double x : {d.at - off, d.at + off}) {
          const double e = std::abs(partial_sum_at(coeffs, n, x) - entry.sampler(x));
          if (e > worst) {
            worst = e;
            worst_radius = off;
          }
        }
      }
    }
    floor = std::min(floor, worst);
    for (std::size_t i = 0; i < options.shrink.size(); ++i) {
      if (worst_radius <= options.shrink[i]) shrink_floor[i] = std::min(shrink_floor[i], worst);
    }

    const bool tabulated = next_row < grid.size() && grid[next_row] == n;
    double at_jump = std::numeric_limits<double>::infinity();
    if (has_jump || tabulated) {
      for (const auto& d : jumps) {
        const Complex right = entry.sampler(d.at) + d.jump / 2.0;
        at_jump = std::min(at_jump, std::abs(fejer_mean_at(coeffs, n, d.at) - right));
      }
      cesaro_floor = std::min(cesaro_floor, at_jump);
    }
    if (tabulated) {
      report.table.push_back({n, worst, at_jump});
      ++next_row;
    }
  }
  report.metrics["floor"] = floor;
  report.metrics["cesaro_jump_floor"] = cesaro_floor;
  for (std::size_t i = 0; i < options.shrink.size(); ++i) {
    std::ostringstream key;
    key << "floor_within_" << options.shrink[i];
    report.metrics[key.str()] = std::isfinite(shrink_floor[i]) ? shrink_floor[i] : kNaN;
  }
  report.conclusion = derive_conclusion(report);
  return report;
}

}  // namespace tauber
