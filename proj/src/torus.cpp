#include "tauber/torus.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

#include "tauber/fit.hpp"
#include "tauber/normed_series.hpp"

namespace tauber {
namespace {

// FFTW planning is not thread safe; execution on a private plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// In-place unnormalized DFT with FFTW's sign convention.
void fft_inplace(std::vector<Complex>& data, int sign) {
  auto* buffer = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buffer, buffer, sign,
                            FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw std::runtime_error("FFTW planning failed");
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

void check_grid_size(std::size_t N) {
  if (N < 16 || !is_power_of_two(static_cast<std::int64_t>(N))) {
    throw std::invalid_argument("grid size must be a power of two >= 16, got " +
                                std::to_string(N));
  }
}

std::int64_t wrap_index(std::int64_t k, std::size_t N) {
  const auto n = static_cast<std::int64_t>(N);
  return ((k % n) + n) % n;
}

double sign_of_k(std::int64_t k) { return (k % 2 == 0) ? 1.0 : -1.0; }

// Coefficients c_{-n..n} fetched once for a batch of points.
std::vector<Complex> fetch(const CoeffTable& coeffs, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("summation index must be nonnegative");
  if (n > coeffs.k_max() && !coeffs.has_generator()) {
    throw std::out_of_range("n = " + std::to_string(n) + " exceeds k_max = " +
                            std::to_string(coeffs.k_max()) + " and no generator");
  }
  std::vector<Complex> c(static_cast<std::size_t>(2 * n + 1));
  for (std::int64_t k = -n; k <= n; ++k) c[static_cast<std::size_t>(k + n)] = coeffs.at(k);
  return c;
}

// sum_{k=0}^{n} w_k u_k(x), u_0 = c_0, u_k = c_k e^{ikx} + c_{-k} e^{-ikx}.
// e^{ikx} runs by recurrence, reseeded every 32 steps.
template <class Weight>
Complex grouped_sum(const std::vector<Complex>& c, std::int64_t n, double x,
                    Weight weight) {
  const auto at = [&](std::int64_t k) { return c[static_cast<std::size_t>(k + n)]; };
  Complex acc = weight(0) * at(0);
  const Complex step = std::polar(1.0, x);
  Complex e(1.0, 0.0);
  for (std::int64_t k = 1; k <= n; ++k) {
    e = (k % 32 == 0) ? std::polar(1.0, static_cast<double>(k) * x) : e * step;
    const Complex ck = at(k);
    const Complex cmk = at(-k);
    if (ck == Complex{} && cmk == Complex{}) continue;
    acc += weight(k) * (ck * e + cmk * std::conj(e));
  }
  return acc;
}

std::vector<Complex> partial_values(const std::vector<Complex>& c, std::int64_t n,
                                    std::span<const double> xs) {
  std::vector<Complex> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out[i] = grouped_sum(c, n, xs[i], [](std::int64_t) { return 1.0; });
  }
  return out;
}

std::vector<Complex> fejer_values(const std::vector<Complex>& c, std::int64_t n,
                                  std::span<const double> xs) {
  const double denom = static_cast<double>(n + 1);
  std::vector<Complex> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out[i] = grouped_sum(c, n, xs[i], [denom](std::int64_t k) {
      return 1.0 - static_cast<double>(k) / denom;
    });
  }
  return out;
}

}  // namespace

GridFunction::GridFunction(std::vector<Complex> samples) : samples_(std::move(samples)) {
  check_grid_size(samples_.size());
}

GridFunction GridFunction::sample(const Sampler& f, std::size_t N) {
  check_grid_size(N);
  std::vector<Complex> s(N);
  const double h = kTwoPi / static_cast<double>(N);
  for (std::size_t j = 0; j < N; ++j) s[j] = f(-kPi + h * static_cast<double>(j));
  return GridFunction(std::move(s));
}

CoeffTable::CoeffTable(std::int64_t k_max, std::vector<Complex> values,
                       Generator generator)
    : k_max_(k_max), values_(std::move(values)), generator_(std::move(generator)) {
  if (k_max_ < 0) throw std::invalid_argument("k_max must be nonnegative");
  if (values_.size() != static_cast<std::size_t>(2 * k_max_ + 1)) {
    throw std::invalid_argument("coefficient table needs 2*k_max+1 values");
  }
}

CoeffTable CoeffTable::from_generator(std::int64_t k_max, Generator generator) {
  if (!generator) throw std::invalid_argument("empty coefficient generator");
  if (k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
  std::vector<Complex> v(static_cast<std::size_t>(2 * k_max + 1));
  for (std::int64_t k = -k_max; k <= k_max; ++k) {
    v[static_cast<std::size_t>(k + k_max)] = generator(k);
  }
  return CoeffTable(k_max, std::move(v), std::move(generator));
}

Complex CoeffTable::at(std::int64_t k) const {
  if (k >= -k_max_ && k <= k_max_) return values_[static_cast<std::size_t>(k + k_max_)];
  if (generator_) return generator_(k);
  throw std::out_of_range("coefficient index " + std::to_string(k) +
                          " beyond k_max = " + std::to_string(k_max_));
}

bool CoeffTable::is_conjugate_symmetric(double tol) const {
  for (std::int64_t k = 0; k <= k_max_; ++k) {
    if (std::abs(at(-k) - std::conj(at(k))) > tol) return false;
  }
  return true;
}

Complex fourier_coeff(const GridFunction& f, std::int64_t k) {
  const auto N = static_cast<std::int64_t>(f.size());
  if (std::abs(k) > N / 2 - 1) {
    throw std::out_of_range("|k| = " + std::to_string(std::abs(k)) +
                            " aliases on an N = " + std::to_string(N) + " grid");
  }
  ComplexSum acc;
  for (std::size_t j = 0; j < f.size(); ++j) {
    acc.add(f[j] * std::polar(1.0, -static_cast<double>(k) * f.point(j)));
  }
  return acc.value() / static_cast<double>(N);
}

CoeffTable coeff_table(const GridFunction& f, std::int64_t k_max) {
  const auto N = f.size();
  if (k_max < 0 || k_max > static_cast<std::int64_t>(N) / 2 - 1) {
    throw std::out_of_range("k_max = " + std::to_string(k_max) +
                            " aliases on an N = " + std::to_string(N) + " grid");
  }
  std::vector<Complex> data(f.samples().begin(), f.samples().end());
  fft_inplace(data, FFTW_FORWARD);
  std::vector<Complex> values(static_cast<std::size_t>(2 * k_max + 1));
  const double inv = 1.0 / static_cast<double>(N);
  for (std::int64_t k = -k_max; k <= k_max; ++k) {
    values[static_cast<std::size_t>(k + k_max)] =
        sign_of_k(k) * inv * data[static_cast<std::size_t>(wrap_index(k, N))];
  }
  return CoeffTable(k_max, std::move(values));
}

GridFunction synthesize(const CoeffTable& coeffs, std::size_t N) {
  check_grid_size(N);
  const std::int64_t K = coeffs.k_max();
  if (K > static_cast<std::int64_t>(N) / 2 - 1) {
    throw std::out_of_range("k_max = " + std::to_string(K) +
                            " does not fit an N = " + std::to_string(N) + " grid");
  }
  std::vector<Complex> data(N);
  for (std::int64_t k = -K; k <= K; ++k) {
    data[static_cast<std::size_t>(wrap_index(k, N))] = sign_of_k(k) * coeffs.at(k);
  }
  fft_inplace(data, FFTW_BACKWARD);
  return GridFunction(std::move(data));
}

Complex partial_sum_at(const CoeffTable& coeffs, std::int64_t n, double x) {
  const double xs[] = {x};
  return partial_values(fetch(coeffs, n), n, xs)[0];
}

Complex fejer_mean_at(const CoeffTable& coeffs, std::int64_t n, double x) {
  const double xs[] = {x};
  return fejer_values(fetch(coeffs, n), n, xs)[0];
}

std::vector<Complex> partial_sum_on(const CoeffTable& coeffs, std::int64_t n,
                                    std::span<const double> xs) {
  return partial_values(fetch(coeffs, n), n, xs);
}

std::vector<Complex> fejer_mean_on(const CoeffTable& coeffs, std::int64_t n,
                                   std::span<const double> xs) {
  return fejer_values(fetch(coeffs, n), n, xs);
}

std::vector<double> grid_points_in_set(const ClosedArcSet& K, std::size_t grid_N) {
  check_grid_size(grid_N);
  const double h = kTwoPi / static_cast<double>(grid_N);
  std::vector<double> out;
  for (std::size_t j = 0; j < grid_N; ++j) {
    const double x = -kPi + h * static_cast<double>(j);
    if (K.distance(x) <= 0.5 * h * (1.0 + 1e-12)) out.push_back(x);
  }
  return out;
}

double sup_error_on_set(const Sampler& f, const Sampler& approx, const ClosedArcSet& K,
                        std::size_t grid_N) {
  if (K.empty()) throw std::invalid_argument("sup error needs a nonempty set");
  if (grid_N < 4096) throw std::invalid_argument("sup error needs grid_N >= 2^12");
  double err = 0.0;
  for (const double x : grid_points_in_set(K, grid_N)) {
    err = std::max(err, std::abs(f(x) - approx(x)));
  }
  return err;
}

std::vector<double> detect_jumps(const GridFunction& f) {
  const std::size_t N = f.size();
  std::vector<double> diffs(N);
  double scale = 0.0;
  for (std::size_t j = 0; j < N; ++j) {
    diffs[j] = std::abs(f[(j + 1) % N] - f[j]);
    scale = std::max(scale, std::abs(f[j]));
  }
  std::vector<double> sorted = diffs;
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(N / 2),
                   sorted.end());
  const double threshold = std::max(10.0 * sorted[N / 2], 1e-9 * scale);
  // A jump sampled at its midpoint value spans two flagged intervals, so
  // cyclic runs of flagged intervals count once, located at the run centre.
  std::vector<bool> flagged(N);
  for (std::size_t j = 0; j < N; ++j) flagged[j] = diffs[j] > threshold;
  std::size_t start = 0;
  while (start < N && flagged[start]) ++start;
  if (start == N) start = 0;
  std::vector<double> out;
  for (std::size_t i = 0; i < N;) {
    const std::size_t j = (start + i) % N;
    if (!flagged[j]) {
      ++i;
      continue;
    }
    std::size_t run = 0;
    while (i + run < N && flagged[(start + i + run) % N]) ++run;
    out.push_back(wrap_angle(f.point(j) + 0.5 * static_cast<double>(run) * f.step()));
    i += run;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ModulusResult modulus_over_space(const Sampler& f, const ClosedArcSet& A, double eps,
                                 std::size_t grid_N) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (A.empty()) throw std::invalid_argument("modulus needs a nonempty set");
  const auto g = GridFunction::sample(f, grid_N);
  const double h = g.step();

  ModulusResult result;
  for (const double jump : detect_jumps(g)) {
    if (A.distance(jump) <= h) {
      result.touches_jump = true;
      result.diagnostic = "set meets a detected jump near x = " + std::to_string(jump);
      return result;
    }
  }

  std::vector<std::size_t> inside;
  for (std::size_t j = 0; j < grid_N; ++j) {
    if (A.contains(g.point(j))) inside.push_back(j);
  }
  if (inside.empty()) throw std::invalid_argument("set contains no grid point");

  for (std::size_t s = 1; s <= grid_N / 2; ++s) {
    double worst = 0.0;
    for (const auto j : inside) {
      worst = std::max({worst, std::abs(g[j] - g[(j + s) % grid_N]),
                        std::abs(g[j] - g[(j + grid_N - s) % grid_N])});
    }
    if (worst >= eps) {
      result.delta = static_cast<double>(s - 1) * h;
      if (s == 1) result.diagnostic = "neighbouring grid points already differ by >= eps";
      return result;
    }
  }
  result.delta = kPi;
  return result;
}

}  // namespace tauber
