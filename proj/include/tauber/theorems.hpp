#pragma once

// Experiment drivers.  Each one assembles the series engine, the condition
// checks, the circle machinery and the norms into a reproducible experiment
// and returns an ExperimentReport.  The conclusion flags of a report are a
// pure function of its tables, verdicts and tolerances: `derive_conclusion`
// recomputes them, and every driver ends by calling it.
//
// "Hypothesis not met" and "not applicable" are outcomes, not errors.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tauber/catalog.hpp"
#include "tauber/conditions.hpp"
#include "tauber/spaces.hpp"

namespace tauber {

enum class Outcome {
  kConfirmed,         // hypotheses hold and the conclusion was observed
  kHypothesisNotMet,  // a required condition failed
  kNotApplicable,     // a precondition failed (e.g. K meets a jump)
  kRefuted,           // hypotheses hold but the conclusion was not observed
};

std::string to_string(Outcome outcome);
Outcome outcome_from_string(const std::string& text);
// 0 confirmed, 2 hypothesis not met or refuted, 3 not applicable.
int exit_code(Outcome outcome);

struct ErrorRow {
  std::int64_t n = 0;
  double err_partial = 0.0;  // error of S_n; NaN when not computed
  double err_cesaro = 0.0;   // error of sigma_n; NaN when not computed
};

struct NamedVerdict {
  std::string name;
  bool required = false;
  ConditionVerdict verdict;
};

struct HolderAuditRow {
  std::int64_t n = 0;
  std::int64_t m = 0;
  double lhs = 0.0;
  double weighted_rhs = 0.0;
  double rhs = 0.0;
};

struct Conclusion {
  bool conditions_hold = false;
  bool cesaro_converges = false;
  bool partial_sums_converge = false;
  bool convergence_observed = false;
  Outcome outcome = Outcome::kNotApplicable;

  bool operator==(const Conclusion&) const = default;
};

struct ExperimentReport {
  std::string theorem;  // tauberian | fejer-set | hardy-set | in-space | gibbs
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<NamedVerdict> verdicts;
  std::vector<ErrorRow> table;
  std::vector<HolderAuditRow> holder_audit;
  std::map<std::string, double> metrics;
  std::map<std::string, Threshold> tolerances;
  std::vector<std::string> diagnostics;
  bool precondition_failed = false;
  Conclusion conclusion;
};

Conclusion derive_conclusion(const ExperimentReport& report);

struct TauberianOptions {
  double p = 2.0;
  std::vector<std::int64_t> n_grid{64, 256, 1024, 4096, 16384};
  double eps = 0.5;                // block schedule m(n) = floor(n eps^q) + 1
  double convergence_tol = 0.05;   // final norm(S - S_n)
  double cesaro_tol = 0.1;         // final norm(S - sigma_n)
  ConditionSettings settings;
};

// Tauberian theorem for a scalar series.  Without a known limit, S is
// estimated by sigma at 16 n_max.
ExperimentReport verify_tauberian(const ScalarSeriesEntry& series,
                                  const TauberianOptions& options = {});

struct FourierOptions {
  std::vector<std::int64_t> n_grid{64, 128, 256, 512, 1024};
  std::size_t grid_N = 4096;
  Window window = kDefaultWindow;
  std::int64_t truncation_K = kDefaultTruncation;
  ConditionSettings settings;
};

// sigma_n -> f uniformly on a closed K inside the continuity set.
ExperimentReport verify_fejer_on_set(const CatalogEntry& entry, const ClosedArcSet& K,
                                     const FourierOptions& options = {});

// S_n -> f uniformly on a closed K inside the continuity set, when the
// coefficients satisfy the tail-power condition for p > 1.
ExperimentReport verify_hardy_on_set(const CatalogEntry& entry, double p,
                                     const ClosedArcSet& K,
                                     const FourierOptions& options = {});

// S_n -> f in the norm of `spec` under the weighted tail-power condition
// sum_{|k|>n} |k|^{alpha p} |f^(k)|^p = O(n^{1-p}).
ExperimentReport verify_fourier_in_space(const CatalogEntry& entry, const NormSpec& spec,
                                         double p, const FourierOptions& options = {},
                                         std::optional<double> alpha = std::nullopt);

struct GibbsOptions {
  std::int64_t n_max = 4096;  // every n in 1..n_max
  std::vector<double> shrink{0.5, 0.1, 0.01};
};

// Negative control: S_n keeps a positive sup error next to a jump, and
// sigma_n at the jump stays half a jump away from the one-sided limit.
ExperimentReport gibbs_probe(const CatalogEntry& entry, const GibbsOptions& options = {});

// Fitted norm-growth exponent snapped to the nearest integer when within 0.05.
double snapped_growth_exponent(const NormSpec& spec);

}  // namespace tauber
