#pragma once

// Test functions on the circle with closed-form Fourier coefficients, and
// scalar series with known sums.  Every acceptance threshold lives here next
// to a note on where its value comes from.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tauber/arcs.hpp"
#include "tauber/conditions.hpp"
#include "tauber/normed_series.hpp"
#include "tauber/torus.hpp"

namespace tauber {

struct Discontinuity {
  double at = 0.0;    // angle in [0, 2pi)
  double jump = 0.0;  // f(at+) - f(at-)
};

struct Threshold {
  double value = 0.0;
  std::string note;
};

struct KnownProperties {
  bool hardy = false;          // |f^(k)| = O(1/|k|)
  bool tail_power_p2 = false;  // sum_{|k|>n} |f^(k)|^2 = O(1/n)
};

struct CatalogEntry {
  std::string name;
  std::string description;
  Sampler sampler;                  // midpoint value at jumps
  CoeffTable::Generator coefficient;
  std::vector<Discontinuity> discontinuities;
  bool real_valued = true;
  // Largest n with f in W^n_2 (capped at 8 for smooth entries).
  int sobolev_order = 0;
  // (n, p) -> bound for sum_{k>n} a_k^p, a_k = |f^(k)| + |f^(-k)|.
  std::function<double(std::int64_t, double)> pair_tail_bound;
  KnownProperties known;
  std::map<std::string, Threshold> thresholds;
  Threshold self_check_tolerance;

  bool continuous() const { return discontinuities.empty(); }
  // Threshold by key, falling back to "default".
  const Threshold& threshold(const std::string& key) const;
};

const std::vector<CatalogEntry>& catalog();
// Throws std::invalid_argument for an unknown name.
const CatalogEntry& catalog_entry(std::string_view name);

// Coefficient table |k| <= k_max backed by the closed form.
CoeffTable closed_form_coefficients(const CatalogEntry& entry, std::int64_t k_max);

// a_0 = |f^(0)|, a_k = |f^(k)| + |f^(-k)|: norms of the grouped terms
// u_k = f^(k) e^{ikx} + f^(-k) e^{-ikx} in C(T).
NormSequence pair_norms(const CatalogEntry& entry);

// Smallest circle distance from K to a discontinuity (inf if none).
double distance_to_discontinuities(const CatalogEntry& entry, const ClosedArcSet& K);

struct SelfCheck {
  double max_deviation = 0.0;
  bool passes = false;
};

// Trapezoid coefficients on an N grid vs the closed form for |k| <= 16.
SelfCheck self_check(const CatalogEntry& entry, std::size_t N = 4096);

struct ScalarSeriesEntry {
  std::string name;
  std::string description;
  ScalarSeries terms;
  NormSequence norms;
  // The recorded limit is only the (C,1) sum; the series itself diverges.
  bool limit_is_cesaro_sum_only = false;
};

// Known names: geometric, alternating, lacunary, alternating-harmonic, random.
// `seed` only affects "random".
ScalarSeriesEntry scalar_series(std::string_view name, std::uint64_t seed = 0);
std::vector<std::string> scalar_series_names();

}  // namespace tauber
