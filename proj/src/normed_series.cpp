#include "tauber/normed_series.hpp"

#include <cassert>

namespace tauber {

std::int64_t block_schedule(std::int64_t n, double eps, double q) {
  detail::require_nonnegative(n);
  if (!(eps > 0.0) || !(q > 1.0)) {
    throw std::invalid_argument("block schedule needs eps > 0 and q > 1");
  }
  const double scaled = static_cast<double>(n) * std::pow(eps, q);
  const auto m = static_cast<std::int64_t>(std::floor(scaled)) + 1;
  assert(n == 0 || static_cast<double>(n) / static_cast<double>(m) <
                       std::pow(eps, -q));
  return m;
}

}  // namespace tauber
