#include "tauber/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "tauber/fit.hpp"
#include "tauber/normed_series.hpp"

namespace tauber {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double checked_term(const NormSequence& seq, std::int64_t k) {
  const double a = seq.term(k);
  if (a < 0.0 || std::isnan(a)) {
    throw std::domain_error("norm sequence produced a negative or NaN term at k=" +
                            std::to_string(k));
  }
  return a;
}

void check_window(Window window) {
  if (window.n_min < 1 || window.n_max < window.n_min) {
    throw std::invalid_argument("window must satisfy 1 <= n_min <= n_max");
  }
}

void check_p(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("exponent p must satisfy 1 <= p < inf");
  }
}

// Convergence of sum_{k=1}^{K} t_k with t_k >= 0: relative Cauchy tail
// P_K - P_{K/2}, or dyadic block sums D_j decaying faster than 1/j.
struct SeriesConvergence {
  bool converges = false;
  double total = 0.0;
  double cauchy_relative = 0.0;
  double condensation_slope = 0.0;
};

SeriesConvergence series_convergence(const std::function<double(std::int64_t)>& t,
                                     std::int64_t K, const ConditionSettings& s) {
  if (K < 16) throw std::invalid_argument("truncation must be at least 16");
  CompensatedSum total;
  double half_total = 0.0;
  std::vector<double> blocks;  // D_j for j = 1, 2, ...: sum over (2^{j-1}, 2^j]
  CompensatedSum block;
  std::int64_t block_end = 1;
  for (std::int64_t k = 1; k <= K; ++k) {
    const double x = t(k);
    total.add(x);
    block.add(x);
    if (k == K / 2) half_total = total.value();
    if (k == block_end) {
      if (k > 1) blocks.push_back(block.value());
      block = CompensatedSum{};
      block_end *= 2;
    }
  }
  SeriesConvergence out;
  out.total = total.value();
  if (!std::isfinite(out.total)) return out;
  out.cauchy_relative = out.total > 0.0 ? (out.total - half_total) / out.total : 0.0;

  // Blocks j = J/2 .. J; vanishing blocks mean finite support (or underflow).
  const std::size_t J = blocks.size();
  std::vector<std::int64_t> js;
  std::vector<double> ds;
  for (std::size_t j = J / 2; j < J; ++j) {
    js.push_back(static_cast<std::int64_t>(j + 1));
    ds.push_back(blocks[j]);
  }
  out.condensation_slope = log_log_slope(js, ds);
  const bool tail_vanishes =
      std::all_of(ds.end() - std::min<std::ptrdiff_t>(2, ds.size()), ds.end(),
                  [](double d) { return d == 0.0; });
  out.converges = out.cauchy_relative < s.cauchy_tolerance || tail_vanishes ||
                  out.condensation_slope <= -(1.0 + s.slope_tolerance);
  return out;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace

ConditionVerdict hardy_check(const NormSequence& seq, Window window,
                             const ConditionSettings& settings) {
  check_window(window);
  const auto points = log_spaced(window.n_min, window.n_max);
  std::vector<double> envelope;
  envelope.reserve(points.size());

  double running = 0.0;
  std::size_t next = 0;
  for (std::int64_t n = window.n_min; n <= window.n_max; ++n) {
    running = std::max(running, static_cast<double>(n) * checked_term(seq, n));
    if (n == points[next]) {
      envelope.push_back(running);
      ++next;
    }
  }

  ConditionVerdict v;
  v.window = window;
  v.truncation_K = window.n_max;
  v.constant_M = running;
  v.fitted_slope = log_log_slope(points, envelope);
  v.passes = std::isfinite(v.constant_M) &&
             v.fitted_slope <= settings.slope_tolerance;
  v.notes = "hardy: sup n*a_n over window; slope of running-max envelope of "
            "log(n*a_n) vs log n must be <= " + fmt(settings.slope_tolerance);
  return v;
}

std::vector<double> tail_sums(const NormSequence& seq, double p, Window window,
                              std::int64_t truncation_K) {
  check_window(window);
  check_p(p);
  if (truncation_K <= window.n_max) {
    throw std::invalid_argument("window exceeds truncation K");
  }
  // Backward plain summation of nonnegative terms: every partial result is
  // >= the previous one, so T_n is exactly nonincreasing in n.
  double tail = seq.tail_bound ? seq.tail_bound(truncation_K, p) : 0.0;
  if (tail < 0.0 || std::isnan(tail)) {
    throw std::domain_error("tail bound must be nonnegative");
  }
  std::vector<double> out(static_cast<std::size_t>(window.n_max - window.n_min + 1));
  for (std::int64_t k = truncation_K; k > window.n_min; --k) {
    tail += std::pow(checked_term(seq, k), p);
    const std::int64_t n = k - 1;
    if (n <= window.n_max) out[static_cast<std::size_t>(n - window.n_min)] = tail;
  }
  return out;
}

ConditionVerdict tail_power_check(const NormSequence& seq, double p, Window window,
                                  std::int64_t truncation_K,
                                  const ConditionSettings& settings) {
  check_window(window);
  check_p(p);
  if (truncation_K <= window.n_max) {
    throw std::invalid_argument("window exceeds truncation K");
  }
  if (!seq.tail_bound && truncation_K < 16 * window.n_max) {
    throw std::invalid_argument(
        "without an analytic tail bound truncation K must be >= 16 * n_max");
  }
  const auto tails = tail_sums(seq, p, window, truncation_K);

  ConditionVerdict v;
  v.window = window;
  v.truncation_K = truncation_K;
  double M = 0.0;
  for (std::int64_t n = window.n_min; n <= window.n_max; ++n) {
    const double T = tails[static_cast<std::size_t>(n - window.n_min)];
    M = std::max(M, std::pow(static_cast<double>(n), p - 1.0) * T);
  }
  v.constant_M = M;

  const auto points = log_spaced(window.n_min, window.n_max);
  std::vector<double> sampled;
  sampled.reserve(points.size());
  for (const auto n : points) sampled.push_back(tails[static_cast<std::size_t>(n - window.n_min)]);
  v.fitted_slope = log_log_slope(points, sampled);

  const double target = -(p - 1.0);
  v.passes = std::isfinite(M) && v.fitted_slope <= target + settings.slope_tolerance;
  v.notes = "tail-power p=" + fmt(p) + ": sup n^(p-1) T_n over window; slope of "
            "log T_n vs log n must be <= " + fmt(target + settings.slope_tolerance);
  v.notes += seq.tail_bound ? "; analytic tail bound closes the truncation"
                            : "; truncated sum, no analytic tail bound";

  if (p == 1.0 && v.passes && !seq.tail_bound) {
    const auto abs_conv = series_convergence(
        [&](std::int64_t k) { return checked_term(seq, k); }, truncation_K, settings);
    v.passes = abs_conv.converges;
    v.notes += "; p=1 requires absolute convergence: cauchy_rel=" +
               fmt(abs_conv.cauchy_relative) +
               " condensation_slope=" + fmt(abs_conv.condensation_slope);
  }
  if (std::isinf(v.fitted_slope)) v.notes += "; tail vanishes on the window";
  return v;
}

ConditionVerdict hl_sum_check(const NormSequence& seq, double p,
                              std::int64_t truncation_K,
                              const ConditionSettings& settings) {
  check_p(p);
  const auto conv = series_convergence(
      [&](std::int64_t n) {
        return std::pow(static_cast<double>(n), p - 1.0) *
               std::pow(checked_term(seq, n), p);
      },
      truncation_K, settings);

  ConditionVerdict v;
  v.window = {1, truncation_K};
  v.truncation_K = truncation_K;
  v.constant_M = conv.total;
  v.fitted_slope = conv.condensation_slope;
  v.passes = std::isfinite(conv.total) && conv.converges;
  v.notes = "hl-sum p=" + fmt(p) + ": P_K = sum n^(p-1) a_n^p; cauchy_rel=" +
            fmt(conv.cauchy_relative) + " (tolerance " +
            fmt(settings.cauchy_tolerance) +
            "); dyadic block slope must be <= " +
            fmt(-(1.0 + settings.slope_tolerance));
  return v;
}

ImplicationReport implication_probe(const NormSequence& seq, double p, Window window,
                                    std::int64_t truncation_K,
                                    const ConditionSettings& settings,
                                    double required_decay) {
  ImplicationReport report;
  report.hl_verdict = hl_sum_check(seq, p, truncation_K, settings);
  if (!report.hl_verdict.passes) {
    throw std::invalid_argument(
        "implication probe requires the Hardy-Littlewood sum condition to pass");
  }
  const auto tails = tail_sums(seq, p, window, truncation_K);
  report.points = log_spaced(window.n_min, window.n_max, 4);
  for (const auto n : report.points) {
    report.normalized_tail.push_back(
        std::pow(static_cast<double>(n), p - 1.0) *
        tails[static_cast<std::size_t>(n - window.n_min)]);
  }
  const auto& q = report.normalized_tail;
  report.nonincreasing = std::is_sorted(q.rbegin(), q.rend());
  report.decay_ratio = q.front() > 0.0 ? q.back() / q.front() : 0.0;
  report.little_o_trend =
      report.nonincreasing && q.back() * required_decay < q.front();
  if (q.front() == 0.0) report.little_o_trend = true;
  return report;
}

}  // namespace tauber
