#include "tauber/fit.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tauber {

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("slope fit needs two or more paired points");
  }
  const double count = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("slope fit needs distinct x");
  return sxy / sxx;
}

double log_log_slope(std::span<const std::int64_t> points,
                     std::span<const double> values) {
  if (points.size() != values.size()) {
    throw std::invalid_argument("points and values differ in length");
  }
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (values[i] > 0.0 && std::isfinite(values[i]) && points[i] > 0) {
      lx.push_back(std::log(static_cast<double>(points[i])));
      ly.push_back(std::log(values[i]));
    }
  }
  if (lx.size() < 2) return -std::numeric_limits<double>::infinity();
  return least_squares_slope(lx, ly);
}

std::vector<std::int64_t> log_spaced(std::int64_t lo, std::int64_t hi,
                                     int per_octave) {
  if (lo < 1 || hi < lo || per_octave < 1) {
    throw std::invalid_argument("log_spaced needs 1 <= lo <= hi");
  }
  std::vector<std::int64_t> out{lo};
  const double step = std::pow(2.0, 1.0 / per_octave);
  double x = static_cast<double>(lo);
  while (true) {
    x *= step;
    const auto k = static_cast<std::int64_t>(std::llround(x));
    if (k >= hi) break;
    if (k > out.back()) out.push_back(k);
  }
  if (out.back() != hi) out.push_back(hi);
  return out;
}

std::vector<std::int64_t> geometric_grid(std::int64_t start, std::int64_t stop,
                                         std::int64_t factor) {
  if (start < 1 || stop < start || factor < 2) {
    throw std::invalid_argument("geometric grid needs 1 <= start <= stop, factor >= 2");
  }
  std::vector<std::int64_t> out;
  for (std::int64_t n = start; n <= stop; n *= factor) out.push_back(n);
  return out;
}

bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace tauber
