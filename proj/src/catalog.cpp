#include "tauber/catalog.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace tauber {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr Complex kI{0.0, 1.0};
constexpr int kLacunaryTerms = 80;

// sum_{k>n} k^{-s} <= int_n^inf x^{-s} dx for s > 1.
double power_tail(std::int64_t n, double s) {
  if (s <= 1.0) return kInf;
  return std::pow(static_cast<double>(n), 1.0 - s) / (s - 1.0);
}

// Smallest j >= 0 with 2^j > n.
int first_dyadic_above(std::int64_t n) {
  int j = 0;
  while ((std::int64_t{1} << j) <= n) ++j;
  return j;
}

// sum_{2^j > n} 2^{-j p/2}.
double lacunary_tail(std::int64_t n, double p) {
  const int j0 = first_dyadic_above(n);
  return std::pow(2.0, -0.5 * p * j0) / (1.0 - std::pow(2.0, -0.5 * p));
}

std::int64_t dyadic_exponent(std::int64_t k) {
  if (k <= 0 || (k & (k - 1)) != 0) return -1;
  std::int64_t j = 0;
  while ((std::int64_t{1} << j) < k) ++j;
  return j;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in [-1, 1), a fixed function of (seed, k, lane).
double hashed_uniform(std::uint64_t seed, std::int64_t k, std::uint64_t lane) {
  const auto bits = splitmix64(splitmix64(seed) ^ splitmix64(static_cast<std::uint64_t>(k) * 2 + lane));
  return static_cast<double>(bits >> 11) * 0x1.0p-52 - 1.0;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  const Threshold tight{1e-9, "exact trigonometric polynomial; only roundoff remains"};

  {
    CatalogEntry e;
    e.name = "const1";
    e.description = "f(x) = 1";
    e.sampler = [](double) { return Complex(1.0); };
    e.coefficient = [](std::int64_t k) { return k == 0 ? Complex(1.0) : Complex{}; };
    e.sobolev_order = 8;
    e.pair_tail_bound = [](std::int64_t, double) { return 0.0; };
    e.known = {true, true};
    e.thresholds["default"] = tight;
    e.self_check_tolerance = {1e-12, "trapezoid is exact for constants"};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "sine";
    e.description = "f(x) = sin x";
    e.sampler = [](double x) { return Complex(std::sin(x)); };
    e.coefficient = [](std::int64_t k) {
      if (k == 1) return -0.5 * kI;
      if (k == -1) return 0.5 * kI;
      return Complex{};
    };
    e.sobolev_order = 8;
    e.pair_tail_bound = [](std::int64_t, double) { return 0.0; };
    e.known = {true, true};
    e.thresholds["default"] = tight;
    e.thresholds["fejer_set"] = {0.01, "sigma_n = (1 - 1/(n+1)) sin x; error 1/(n+1)"};
    e.self_check_tolerance = {1e-12, "trapezoid is exact for sin x"};
    out.push_back(std::move(e));
  }
  {
    const double r = std::exp(-1.0);
    CatalogEntry e;
    e.name = "smooth";
    e.description = "Poisson kernel, f^(k) = e^{-|k|}";
    e.sampler = [r](double x) {
      return Complex((1.0 - r * r) / (1.0 - 2.0 * r * std::cos(x) + r * r));
    };
    e.coefficient = [](std::int64_t k) {
      return Complex(std::exp(-static_cast<double>(std::abs(k))));
    };
    e.sobolev_order = 8;
    e.pair_tail_bound = [](std::int64_t n, double p) {
      return std::pow(2.0, p) * std::exp(-p * static_cast<double>(n + 1)) /
             (1.0 - std::exp(-p));
    };
    e.known = {true, true};
    e.thresholds["default"] = {0.01, "sigma_n error <= sum |k| e^{-|k|} / (n+1) ~ 1.84/(n+1)"};
    e.thresholds["in_space"] = {1e-6, "coefficient tail sum_{|k|>64} e^{-|k|} ~ 1e-28"};
    e.self_check_tolerance = {1e-12, "aliasing of e^{-|k|} at N = 4096 is below roundoff"};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "triangle";
    e.description = "f(x) = |x| on [-pi, pi]";
    e.sampler = [](double x) { return Complex(std::abs(std::remainder(x, kTwoPi))); };
    e.coefficient = [](std::int64_t k) {
      if (k == 0) return Complex(0.5 * kPi);
      if (k % 2 == 0) return Complex{};
      const double kk = static_cast<double>(k);
      return Complex(-2.0 / (kPi * kk * kk));
    };
    e.sobolev_order = 1;
    e.pair_tail_bound = [](std::int64_t n, double p) {
      return std::pow(4.0 / kPi, p) * power_tail(n, 2.0 * p);
    };
    e.known = {true, true};
    e.thresholds["default"] = {0.01, "S_n error <= sum_{k>n} 4/(pi k^2) ~ 4/(pi n); sigma_n error O(log n / n)"};
    e.thresholds["in_space"] = {0.03, "W1,2 residual (sum_{|k|>n} k^2 |f^(k)|^2)^{1/2} ~ 2/(pi sqrt(n)) ~ 0.02 at n=1024"};
    e.self_check_tolerance = {1e-5, "aliasing error of O(1/N^2) coefficients"};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "sawtooth";
    e.description = "f(x) = (pi - x)/2 on (0, 2pi), f(0) = 0; sum sin(kx)/k";
    e.sampler = [](double x) {
      const double w = wrap_angle(x);
      return w == 0.0 ? Complex{} : Complex(0.5 * (kPi - w));
    };
    e.coefficient = [](std::int64_t k) {
      if (k == 0) return Complex{};
      return -0.5 * kI / static_cast<double>(k);
    };
    e.discontinuities = {{0.0, kPi}};
    e.pair_tail_bound = [](std::int64_t n, double p) { return power_tail(n, p); };
    e.known = {true, true};
    e.thresholds["default"] = {0.02, "S_n remainder on K at margin d <= 1/((n+1) sin(d/2)) ~ 0.002 for n=2048, d=0.5"};
    e.thresholds["hardy_set"] = e.thresholds["default"];
    e.thresholds["fejer_set"] = {0.02, "sigma_n error on K at margin 0.5 is O(1/(n d))"};
    e.self_check_tolerance = {1e-5, "midpoint value at the jump leaves O(k/N^2) aliasing"};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "squarewave";
    e.description = "f = 1 on (0, pi), -1 on (pi, 2pi), 0 at the jumps; (4/pi) sum_{k odd} sin(kx)/k";
    e.sampler = [](double x) {
      const double w = wrap_angle(x);
      if (w == 0.0 || w == kPi) return Complex{};
      return Complex(w < kPi ? 1.0 : -1.0);
    };
    e.coefficient = [](std::int64_t k) {
      if (k % 2 == 0) return Complex{};
      return -2.0 * kI / (kPi * static_cast<double>(k));
    };
    e.discontinuities = {{0.0, 2.0}, {kPi, -2.0}};
    e.pair_tail_bound = [](std::int64_t n, double p) {
      return std::pow(4.0 / kPi, p) * power_tail(n, p);
    };
    e.known = {true, true};
    e.thresholds["default"] = {0.01, "sigma_n error on K at margin d is ~ 2/(pi (n+1) d) ~ 0.002 for n=1024, d=0.3"};
    e.thresholds["fejer_set"] = e.thresholds["default"];
    e.thresholds["hardy_set"] = {0.01, "S_n error on K at margin 0.3 ~ 0.002 at n=1024"};
    e.thresholds["gibbs_floor"] = {0.17, "Gibbs overshoot (2/pi) Si(pi) - 1 ~ 0.179 for jump 2"};
    e.self_check_tolerance = {1e-5, "midpoint values at the jumps leave O(k/N^2) aliasing"};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "lacunary";
    e.description = "sum_{j>=0} 2^{-j/2} cos(2^j x)";
    e.sampler = [](double x) {
      double s = 0.0;
      for (int j = kLacunaryTerms; j >= 0; --j) {
        s += std::pow(2.0, -0.5 * j) * std::cos(std::ldexp(x, j));
      }
      return Complex(s);
    };
    e.coefficient = [](std::int64_t k) {
      const auto j = dyadic_exponent(std::abs(k));
      if (j < 0) return Complex{};
      return Complex(0.5 * std::pow(2.0, -0.5 * static_cast<double>(j)));
    };
    e.pair_tail_bound = [](std::int64_t n, double p) { return lacunary_tail(n, p); };
    e.known = {false, true};
    e.thresholds["default"] = {0.076, "sup_T |S_1024 - f| <= sum_{j>=11} 2^{-j/2} = 0.0754, +0.001"};
    e.self_check_tolerance = {0.06, "frequencies 2^j >= N alias onto k = 0: sum_{j>=12} 2^{-j/2} = 0.053"};
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const Threshold& CatalogEntry::threshold(const std::string& key) const {
  if (auto it = thresholds.find(key); it != thresholds.end()) return it->second;
  if (auto it = thresholds.find("default"); it != thresholds.end()) return it->second;
  throw std::logic_error("catalog entry " + name + " has no default threshold");
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw std::invalid_argument("unknown catalog entry '" + std::string(name) + "'");
}

CoeffTable closed_form_coefficients(const CatalogEntry& entry, std::int64_t k_max) {
  return CoeffTable::from_generator(k_max, entry.coefficient);
}

NormSequence pair_norms(const CatalogEntry& entry) {
  NormSequence seq;
  seq.term = [c = entry.coefficient](std::int64_t k) {
    if (k == 0) return std::abs(c(0));
    return std::abs(c(k)) + std::abs(c(-k));
  };
  seq.tail_bound = entry.pair_tail_bound;
  return seq;
}

double distance_to_discontinuities(const CatalogEntry& entry, const ClosedArcSet& K) {
  double d = kInf;
  for (const auto& jump : entry.discontinuities) d = std::min(d, K.distance(jump.at));
  return d;
}

SelfCheck self_check(const CatalogEntry& entry, std::size_t N) {
  const auto table = coeff_table(GridFunction::sample(entry.sampler, N), 16);
  SelfCheck out;
  for (std::int64_t k = -16; k <= 16; ++k) {
    out.max_deviation = std::max(out.max_deviation, std::abs(table.at(k) - entry.coefficient(k)));
  }
  out.passes = out.max_deviation <= entry.self_check_tolerance.value;
  return out;
}

std::vector<std::string> scalar_series_names() {
  return {"geometric", "alternating", "lacunary", "alternating-harmonic", "random"};
}

ScalarSeriesEntry scalar_series(std::string_view name, std::uint64_t seed) {
  ScalarSeriesEntry s;
  s.name = std::string(name);
  if (name == "geometric") {
    s.description = "u_k = 2^{-k}, sum 2";
    s.terms.term = [](std::int64_t k) { return Complex(std::ldexp(1.0, -static_cast<int>(std::min<std::int64_t>(k, 2000)))); };
    s.terms.limit = Complex(2.0);
    s.norms.tail_bound = [](std::int64_t n, double p) {
      return std::pow(2.0, -p * static_cast<double>(n + 1)) / (1.0 - std::pow(2.0, -p));
    };
  } else if (name == "alternating") {
    s.description = "u_k = (-1)^k, (C,1) sum 1/2, divergent";
    s.terms.term = [](std::int64_t k) { return Complex(k % 2 == 0 ? 1.0 : -1.0); };
    s.terms.limit = Complex(0.5);
    s.limit_is_cesaro_sum_only = true;
  } else if (name == "lacunary") {
    s.description = "u_k = 2^{-j/2} at k = 2^j, else 0; sum 1/(1 - 2^{-1/2})";
    s.terms.term = [](std::int64_t k) {
      const auto j = dyadic_exponent(k);
      return j < 0 ? Complex{} : Complex(std::pow(2.0, -0.5 * static_cast<double>(j)));
    };
    s.terms.limit = Complex(1.0 / (1.0 - std::sqrt(0.5)));
    s.norms.tail_bound = [](std::int64_t n, double p) { return lacunary_tail(n, p); };
  } else if (name == "alternating-harmonic") {
    s.description = "u_k = (-1)^k/(k+1), sum ln 2";
    s.terms.term = [](std::int64_t k) {
      return Complex((k % 2 == 0 ? 1.0 : -1.0) / static_cast<double>(k + 1));
    };
    s.terms.limit = Complex(std::numbers::ln2);
    s.norms.tail_bound = [](std::int64_t n, double p) { return power_tail(n, p); };
  } else if (name == "random") {
    s.description = "u_k = z_k/(k+1), z_k uniform in [-1,1]^2 from the seed; limit unknown";
    s.terms.term = [seed](std::int64_t k) {
      return Complex(hashed_uniform(seed, k, 0), hashed_uniform(seed, k, 1)) /
             static_cast<double>(k + 1);
    };
  } else {
    throw std::invalid_argument("unknown scalar series '" + std::string(name) + "'");
  }
  s.norms.term = [t = s.terms.term](std::int64_t k) { return std::abs(t(k)); };
  return s;
}

}  // namespace tauber
