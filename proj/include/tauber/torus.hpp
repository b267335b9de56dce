#pragma once

// 2pi-periodic functions on the circle: samples, Fourier coefficients,
// symmetric partial sums S_n, Fejér means sigma_n, the Fejér kernel and its
// audits, sup errors on closed arc sets, and the modulus of continuity on a
// set over the whole circle.

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tauber/arcs.hpp"

namespace tauber {

using Complex = std::complex<double>;
using Sampler = std::function<Complex(double)>;

// Samples at x_j = -pi + 2 pi j / N, j = 0..N-1, with N a power of two >= 16.
class GridFunction {
 public:
  explicit GridFunction(std::vector<Complex> samples);
  static GridFunction sample(const Sampler& f, std::size_t N);

  std::size_t size() const { return samples_.size(); }
  double step() const { return kTwoPi / static_cast<double>(samples_.size()); }
  double point(std::size_t j) const {
    return -kPi + step() * static_cast<double>(j);
  }
  std::span<const Complex> samples() const { return samples_; }
  const Complex& operator[](std::size_t j) const { return samples_[j]; }

 private:
  std::vector<Complex> samples_;
};

// Fourier coefficients f^(k) for |k| <= k_max, optionally backed by a
// closed-form generator that answers beyond k_max.
class CoeffTable {
 public:
  using Generator = std::function<Complex(std::int64_t)>;

  // `values` holds k = -k_max .. k_max in order.
  CoeffTable(std::int64_t k_max, std::vector<Complex> values, Generator generator = {});
  static CoeffTable from_generator(std::int64_t k_max, Generator generator);

  std::int64_t k_max() const { return k_max_; }
  bool has_generator() const { return static_cast<bool>(generator_); }
  // Throws std::out_of_range for |k| > k_max without a generator.
  Complex at(std::int64_t k) const;
  std::span<const Complex> values() const { return values_; }
  // f^(-k) == conj(f^(k)) within tol for every stored k.
  bool is_conjugate_symmetric(double tol = 1e-12) const;

 private:
  std::int64_t k_max_;
  std::vector<Complex> values_;
  Generator generator_;
};

// Trapezoid rule (1/N) sum f(x_j) e^{-i k x_j}.  Needs |k| <= N/2 - 1.
Complex fourier_coeff(const GridFunction& f, std::int64_t k);

// All coefficients |k| <= k_max through one FFT.  Needs k_max <= N/2 - 1.
CoeffTable coeff_table(const GridFunction& f, std::int64_t k_max);

// Trigonometric polynomial sum_{|k|<=K} c_k e^{ikx} on an N-point grid.
// Needs K <= N/2 - 1.
GridFunction synthesize(const CoeffTable& coeffs, std::size_t N);

// Symmetric partial sum, grouped as u_0 = c_0, u_k = c_k e^{ikx} + c_{-k} e^{-ikx}.
Complex partial_sum_at(const CoeffTable& coeffs, std::int64_t n, double x);
// sum_{|k|<=n} (1 - |k|/(n+1)) c_k e^{ikx}.
Complex fejer_mean_at(const CoeffTable& coeffs, std::int64_t n, double x);

std::vector<Complex> partial_sum_on(const CoeffTable& coeffs, std::int64_t n,
                                    std::span<const double> xs);
std::vector<Complex> fejer_mean_on(const CoeffTable& coeffs, std::int64_t n,
                                   std::span<const double> xs);

// Fejér kernel sin^2((n+1)t/2) / (2 (n+1) sin^2(t/2)), with its Taylor limit
// near t = 0 mod 2pi.
double fejer_kernel(std::int64_t n, double t);
// (1/(n+1)) sum_{k=0}^n sin((k+1/2)t) / (2 sin(t/2)); undefined at t = 0.
double fejer_kernel_sum_form(std::int64_t n, double t);

// |(1/pi) int K_n - 1| by the trapezoid rule; quad_N a power of two >= 4(n+1).
double kernel_check_A(std::int64_t n, std::size_t quad_N = std::size_t{1} << 16);
// min K_n over the grid.
double kernel_check_B(std::int64_t n, std::size_t grid_N = std::size_t{1} << 14);
// int |K_n| over [-pi, pi].
double kernel_check_Bprime(std::int64_t n, std::size_t quad_N = std::size_t{1} << 16);
// mu_n(delta) = max K_n on [delta, pi], 0 < delta <= pi.
double kernel_mu(std::int64_t n, double delta);

// Grid points x_j (N-point grid) within half a step of K.
std::vector<double> grid_points_in_set(const ClosedArcSet& K, std::size_t grid_N);

// max over grid points in K of |f - approx|.  Needs grid_N >= 2^12, K nonempty.
double sup_error_on_set(const Sampler& f, const Sampler& approx,
                        const ClosedArcSet& K, std::size_t grid_N = 4096);

// Centres of runs of grid intervals whose first difference exceeds ten times
// the median first difference, as angles in [0, 2pi).
std::vector<double> detect_jumps(const GridFunction& f);

struct ModulusResult {
  double delta = 0.0;
  bool touches_jump = false;
  std::string diagnostic;
};

// Largest grid distance delta = s*h such that every grid x in A and grid x'
// anywhere on the circle with d(x, x') <= delta satisfy |f(x) - f(x')| < eps.
// pi when no pair ever fails, 0 when already neighbouring points fail or when
// A meets a detected jump.
ModulusResult modulus_over_space(const Sampler& f, const ClosedArcSet& A, double eps,
                                 std::size_t grid_N = 4096);

}  // namespace tauber
