#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tauber/fit.hpp"
#include "tauber/normed_series.hpp"
#include "tauber/torus.hpp"

namespace tauber {
namespace {

constexpr double kSmallHalfSine = 1e-8;

void check_order(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("kernel order must be nonnegative");
}

void check_quadrature(std::int64_t n, std::size_t N) {
  if (!is_power_of_two(static_cast<std::int64_t>(N)) ||
      static_cast<std::int64_t>(N) < 4 * (n + 1)) {
    throw std::invalid_argument("quadrature grid must be a power of two >= 4(n+1), got " +
                                std::to_string(N));
  }
}

template <class F>
double trapezoid_over_circle(std::size_t N, F f) {
  CompensatedSum acc;
  const double h = kTwoPi / static_cast<double>(N);
  for (std::size_t j = 0; j < N; ++j) acc.add(f(-kPi + h * static_cast<double>(j)));
  return h * acc.value();
}

}  // namespace

double fejer_kernel(std::int64_t n, double t) {
  check_order(n);
  const double r = std::remainder(t, kTwoPi);
  const double np1 = static_cast<double>(n + 1);
  const double half_sine = std::sin(0.5 * r);
  if (std::abs(half_sine) < kSmallHalfSine) {
    const double nn = static_cast<double>(n);
    return 0.5 * np1 * (1.0 - nn * (nn + 2.0) * r * r / 12.0);
  }
  const double num = std::sin(0.5 * np1 * r);
  return num * num / (2.0 * np1 * half_sine * half_sine);
}

double fejer_kernel_sum_form(std::int64_t n, double t) {
  check_order(n);
  const double denom = 2.0 * std::sin(0.5 * t);
  if (denom == 0.0) throw std::domain_error("sum form is 0/0 at t = 0 mod 2pi");
  CompensatedSum acc;
  for (std::int64_t k = 0; k <= n; ++k) {
    acc.add(std::sin((static_cast<double>(k) + 0.5) * t) / denom);
  }
  return acc.value() / static_cast<double>(n + 1);
}

double kernel_check_A(std::int64_t n, std::size_t quad_N) {
  check_order(n);
  check_quadrature(n, quad_N);
  const double integral =
      trapezoid_over_circle(quad_N, [n](double t) { return fejer_kernel(n, t); });
  return std::abs(integral / kPi - 1.0);
}

double kernel_check_B(std::int64_t n, std::size_t grid_N) {
  check_order(n);
  if (grid_N == 0) throw std::invalid_argument("grid must be nonempty");
  const double h = kTwoPi / static_cast<double>(grid_N);
  double lowest = fejer_kernel(n, -kPi);
  for (std::size_t j = 1; j < grid_N; ++j) {
    lowest = std::min(lowest, fejer_kernel(n, -kPi + h * static_cast<double>(j)));
  }
  return lowest;
}

double kernel_check_Bprime(std::int64_t n, std::size_t quad_N) {
  check_order(n);
  check_quadrature(n, quad_N);
  return trapezoid_over_circle(quad_N,
                               [n](double t) { return std::abs(fejer_kernel(n, t)); });
}

double kernel_mu(std::int64_t n, double delta) {
  check_order(n);
  if (!(delta > 0.0) || delta > kPi) {
    throw std::invalid_argument("mu_n(delta) needs 0 < delta <= pi");
  }
  const auto points = std::max<std::int64_t>(4096, 64 * (n + 1));
  const double h = (kPi - delta) / static_cast<double>(points);
  const auto at = [&](std::int64_t i) {
    return i == points ? kPi : delta + h * static_cast<double>(i);
  };
  std::int64_t best_i = 0;
  double best = fejer_kernel(n, delta);
  for (std::int64_t i = 1; i <= points; ++i) {
    const double v = fejer_kernel(n, at(i));
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  if (h == 0.0) return best;

  // Golden-section refinement around the best grid point.
  double lo = at(std::max<std::int64_t>(best_i - 1, 0));
  double hi = at(std::min(best_i + 1, points));
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = hi - g * (hi - lo);
  double b = lo + g * (hi - lo);
  double fa = fejer_kernel(n, a);
  double fb = fejer_kernel(n, b);
  for (int it = 0; it < 80; ++it) {
    if (fa < fb) {
      lo = a;
      a = b;
      fa = fb;
      b = lo + g * (hi - lo);
      fb = fejer_kernel(n, b);
    } else {
      hi = b;
      b = a;
      fb = fa;
      a = hi - g * (hi - lo);
      fa = fejer_kernel(n, a);
    }
  }
  return std::max({best, fa, fb});
}

}  // namespace tauber
