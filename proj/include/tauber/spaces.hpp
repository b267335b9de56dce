#pragma once

// Computable norms on functions of the circle and numerical checks of the
// homogeneous-space axioms:
//
//   (H1) ||f||_{L1} <= c ||f||
//   (H2) ||f(. + a)|| = ||f||
//   (H3) ||f(. + a) - f|| -> 0 as a -> 0
//
// All integral norms carry the 1/(2pi) normalization, so ||1||_{Lp} = 1.
// Derivatives are spectral: f^(k) -> (ik)^j f^(k).

#include <string>
#include <string_view>
#include <vector>

#include "tauber/arcs.hpp"
#include "tauber/torus.hpp"

namespace tauber {

struct NormSpec {
  enum class Kind { kSupOnT, kSupOnSet, kLp, kSobolev, kCn };

  Kind kind = Kind::kSupOnT;
  double p = 1.0;   // Lp and Sobolev
  int order = 0;    // Sobolev and Cn
  ClosedArcSet set; // SupOnSet

  static NormSpec sup() { return {}; }
  static NormSpec sup_on(ClosedArcSet K);
  static NormSpec lp(double p);
  static NormSpec sobolev(int n, double p);
  static NormSpec cn(int n);

  // "sup", "sup@a:b,c:d", "L2", "L1.5", "W1,2", "C1".
  static NormSpec parse(std::string_view text);
  std::string to_string() const;

  bool needs_derivatives() const {
    return kind == Kind::kSobolev || kind == Kind::kCn;
  }
};

double norm(const GridFunction& f, const NormSpec& spec);
// Evaluated on a grid of size grid_N, or the smallest power of two
// >= max(16, 4(k_max+1)) when grid_N is 0.
double norm(const CoeffTable& coeffs, const NormSpec& spec, std::size_t grid_N = 0);

// Spectral tail above |k| = N/4 carries at most 1e-24 of the energy.
bool is_band_limited(const GridFunction& f);

// f(. + a).  Grid-aligned shifts rotate the samples exactly; other shifts go
// through the Fourier coefficients and need a band-limited f.
GridFunction translate(const GridFunction& f, double a);
CoeffTable translate(const CoeffTable& coeffs, double a);

struct HomogeneityReport {
  std::string spec;
  double h1_constant = 0.0;  // ||f||_{L1} / ||f||_spec
  bool h1_holds = false;     // with c = 1
  double h2_max_residual = 0.0;
  bool h2_holds = false;     // residual <= 1e-12
  std::vector<double> h3_shifts;
  std::vector<double> h3_profile;
  bool h3_decreasing = false;
};

// H2 over `shifts`; H3 over a = 2pi/2^j, j = j_min..j_max.
HomogeneityReport check_homogeneity(const GridFunction& f, const NormSpec& spec,
                                    const std::vector<double>& shifts,
                                    int j_min = 4, int j_max = 12);

// Least-squares slope of log ||e^{ikx}||_spec against log k over log-spaced
// k in [k_lo, k_hi].
double exp_norm_growth(const NormSpec& spec, std::int64_t k_lo = 8,
                       std::int64_t k_hi = 512);

}  // namespace tauber
