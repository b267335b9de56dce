#pragma once

// Finite-window evaluators for Tauberian hypotheses on a sequence of term
// norms a_k = norm(u_k):
//
//   hardy_check       a_n = O(1/n)
//   tail_power_check  sum_{k>n} a_k^p = O(n^{1-p})
//   hl_sum_check      sum_n n^{p-1} a_n^p < inf
//
// An O(.) statement cannot be decided from finitely many terms.  A check
// "passes on a window" when the normalized quantity stays bounded there and
// its log-log slope is within `slope_tolerance` of the decay the condition
// demands.  Every verdict records the window and truncation it used.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tauber {

struct NormSequence {
  // k -> a_k >= 0, k >= 0.
  std::function<double(std::int64_t)> term;
  // Optional (n, p) -> upper bound for sum_{k>n} a_k^p.  When present it
  // closes truncated tail sums; it may return +inf for divergent tails.
  std::function<double(std::int64_t, double)> tail_bound;
};

struct Window {
  std::int64_t n_min = 64;
  std::int64_t n_max = 65536;
};

struct ConditionSettings {
  double slope_tolerance = 0.1;
  double cauchy_tolerance = 1e-6;  // relative to the partial sum P_K
};

inline constexpr Window kDefaultWindow{64, 65536};
inline constexpr std::int64_t kDefaultTruncation = std::int64_t{1} << 20;

struct ConditionVerdict {
  bool passes = false;
  double constant_M = 0.0;
  double fitted_slope = 0.0;
  Window window;
  std::int64_t truncation_K = 0;
  std::string notes;
};

ConditionVerdict hardy_check(const NormSequence& seq, Window window = kDefaultWindow,
                             const ConditionSettings& settings = {});

ConditionVerdict tail_power_check(const NormSequence& seq, double p,
                                  Window window = kDefaultWindow,
                                  std::int64_t truncation_K = kDefaultTruncation,
                                  const ConditionSettings& settings = {});

ConditionVerdict hl_sum_check(const NormSequence& seq, double p,
                              std::int64_t truncation_K = std::int64_t{1} << 22,
                              const ConditionSettings& settings = {});

// T_n = sum_{k=n+1}^{K} a_k^p (+ tail_bound(K, p) when available) for every
// n in the window, index 0 <-> n_min.  Nonincreasing in n by construction.
std::vector<double> tail_sums(const NormSequence& seq, double p, Window window,
                              std::int64_t truncation_K);

struct ImplicationReport {
  std::vector<std::int64_t> points;
  std::vector<double> normalized_tail;  // n^{p-1} T_n at `points`
  bool nonincreasing = false;
  double decay_ratio = 0.0;  // last / first
  bool little_o_trend = false;
  ConditionVerdict hl_verdict;
};

// Numerical view of "sum n^{p-1} a_n^p < inf implies n^{p-1} T_n -> 0".
// Throws std::invalid_argument unless hl_sum_check passes for (seq, p).
ImplicationReport implication_probe(const NormSequence& seq, double p,
                                    Window window = {256, 65536},
                                    std::int64_t truncation_K = std::int64_t{1} << 22,
                                    const ConditionSettings& settings = {},
                                    double required_decay = 4.0);

}  // namespace tauber
