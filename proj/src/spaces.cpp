#include "tauber/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "tauber/fit.hpp"
#include "tauber/normed_series.hpp"

namespace tauber {
namespace {

double parse_number(std::string_view text, std::string_view what) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw std::invalid_argument("bad " + std::string(what) + " '" + s + "' in norm spec");
  }
  return v;
}

int parse_order(std::string_view text) {
  const double v = parse_number(text, "order");
  if (v < 0 || v != std::floor(v) || v > 16) {
    throw std::invalid_argument("derivative order must be an integer in [0, 16]");
  }
  return static_cast<int>(v);
}

double lp_of(std::span<const Complex> samples, double p) {
  CompensatedSum acc;
  for (const auto& z : samples) acc.add(std::pow(std::abs(z), p));
  return std::pow(acc.value() / static_cast<double>(samples.size()), 1.0 / p);
}

double sup_of(std::span<const Complex> samples) {
  double m = 0.0;
  for (const auto& z : samples) m = std::max(m, std::abs(z));
  return m;
}

double sup_on_set(const GridFunction& f, const ClosedArcSet& K) {
  if (K.empty()) throw std::invalid_argument("sup over an empty set");
  const double h = f.step();
  double m = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (K.distance(f.point(j)) <= 0.5 * h * (1.0 + 1e-12)) m = std::max(m, std::abs(f[j]));
  }
  return m;
}

// Norm of a function of order zero (no derivatives involved).
double plain_norm(const GridFunction& f, const NormSpec& spec) {
  switch (spec.kind) {
    case NormSpec::Kind::kSupOnT:
      return sup_of(f.samples());
    case NormSpec::Kind::kSupOnSet:
      return sup_on_set(f, spec.set);
    case NormSpec::Kind::kLp:
      return lp_of(f.samples(), spec.p);
    default:
      throw std::logic_error("plain_norm called for a derivative norm");
  }
}

GridFunction derivative(const CoeffTable& coeffs, int order, std::size_t N) {
  const std::int64_t K = coeffs.k_max();
  std::vector<Complex> d(static_cast<std::size_t>(2 * K + 1));
  for (std::int64_t k = -K; k <= K; ++k) {
    d[static_cast<std::size_t>(k + K)] =
        std::pow(Complex(0.0, static_cast<double>(k)), order) * coeffs.at(k);
  }
  return synthesize(CoeffTable(K, std::move(d)), N);
}

double derivative_norm(const CoeffTable& coeffs, const NormSpec& spec, std::size_t N) {
  if (spec.kind == NormSpec::Kind::kSobolev) {
    CompensatedSum acc;
    for (int j = 0; j <= spec.order; ++j) {
      acc.add(std::pow(lp_of(derivative(coeffs, j, N).samples(), spec.p), spec.p));
    }
    return std::pow(acc.value(), 1.0 / spec.p);
  }
  double m = 0.0;
  for (int j = 0; j <= spec.order; ++j) {
    m = std::max(m, sup_of(derivative(coeffs, j, N).samples()));
  }
  return m;
}

std::size_t grid_for(std::int64_t k_max) {
  std::size_t N = 16;
  while (static_cast<std::int64_t>(N) < 4 * (k_max + 1)) N *= 2;
  return N;
}

bool grid_aligned(double a, double h, std::int64_t& steps) {
  const double s = a / h;
  const double r = std::nearbyint(s);
  if (std::abs(s - r) > 1e-9 * std::max(1.0, std::abs(s))) return false;
  steps = static_cast<std::int64_t>(r);
  return true;
}

}  // namespace

NormSpec NormSpec::sup_on(ClosedArcSet K) {
  if (K.empty()) throw std::invalid_argument("sup@K needs a nonempty set");
  NormSpec s;
  s.kind = Kind::kSupOnSet;
  s.set = std::move(K);
  return s;
}

NormSpec NormSpec::lp(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("Lp needs 1 <= p < inf");
  NormSpec s;
  s.kind = Kind::kLp;
  s.p = p;
  return s;
}

NormSpec NormSpec::sobolev(int n, double p) {
  if (n < 0) throw std::invalid_argument("Sobolev order must be nonnegative");
  NormSpec s = lp(p);
  s.kind = Kind::kSobolev;
  s.order = n;
  return s;
}

NormSpec NormSpec::cn(int n) {
  if (n < 0) throw std::invalid_argument("C^n order must be nonnegative");
  NormSpec s;
  s.kind = Kind::kCn;
  s.order = n;
  return s;
}

NormSpec NormSpec::parse(std::string_view text) {
  if (text == "sup") return sup();
  if (text.starts_with("sup@")) return sup_on(ClosedArcSet::parse(text.substr(4)));
  if (text.starts_with("L") && text.size() > 1) {
    return lp(parse_number(text.substr(1), "exponent"));
  }
  if (text.starts_with("W") && text.size() > 1) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("Sobolev spec must look like W1,2");
    }
    return sobolev(parse_order(text.substr(1, comma - 1)),
                   parse_number(text.substr(comma + 1), "exponent"));
  }
  if (text.starts_with("C") && text.size() > 1) return cn(parse_order(text.substr(1)));
  throw std::invalid_argument("unknown norm spec '" + std::string(text) +
                              "' (expected sup, sup@K, Lp, Wn,p or Cn)");
}

std::string NormSpec::to_string() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind) {
    case Kind::kSupOnT: os << "sup"; break;
    case Kind::kSupOnSet: os << "sup@" << set.to_string(); break;
    case Kind::kLp: os << 'L' << p; break;
    case Kind::kSobolev: os << 'W' << order << ',' << p; break;
    case Kind::kCn: os << 'C' << order; break;
  }
  return os.str();
}

namespace {

double unchecked_norm(const GridFunction& f, const NormSpec& spec) {
  if (!spec.needs_derivatives()) return plain_norm(f, spec);
  const auto N = f.size();
  return derivative_norm(coeff_table(f, static_cast<std::int64_t>(N) / 2 - 1), spec, N);
}

void require_no_jump(const GridFunction& f, const NormSpec& spec) {
  if (spec.needs_derivatives() && !detect_jumps(f).empty()) {
    throw std::domain_error(spec.to_string() +
                            " norm requested on a function with a detected jump");
  }
}

}  // namespace

double norm(const GridFunction& f, const NormSpec& spec) {
  require_no_jump(f, spec);
  return unchecked_norm(f, spec);
}

double norm(const CoeffTable& coeffs, const NormSpec& spec, std::size_t grid_N) {
  const std::size_t N = grid_N == 0 ? grid_for(coeffs.k_max()) : grid_N;
  if (spec.needs_derivatives()) return derivative_norm(coeffs, spec, N);
  return plain_norm(synthesize(coeffs, N), spec);
}

bool is_band_limited(const GridFunction& f) {
  const auto N = static_cast<std::int64_t>(f.size());
  const auto table = coeff_table(f, N / 2 - 1);
  double total = 0.0;
  double high = 0.0;
  for (std::int64_t k = -(N / 2 - 1); k <= N / 2 - 1; ++k) {
    const double e = std::norm(table.at(k));
    total += e;
    if (std::abs(k) > N / 4) high += e;
  }
  // Nyquist mode, which the table leaves out.
  ComplexSum alternating;
  for (std::size_t j = 0; j < f.size(); ++j) alternating.add(j % 2 == 0 ? f[j] : -f[j]);
  const double nyquist = std::norm(alternating.value() / static_cast<double>(N));
  return high + nyquist <= 1e-24 * (total + nyquist) + 1e-300;
}

GridFunction translate(const GridFunction& f, double a) {
  const std::size_t N = f.size();
  std::int64_t steps = 0;
  if (grid_aligned(a, f.step(), steps)) {
    const auto n = static_cast<std::int64_t>(N);
    const auto shift = static_cast<std::size_t>(((steps % n) + n) % n);
    std::vector<Complex> out(N);
    for (std::size_t j = 0; j < N; ++j) out[j] = f[(j + shift) % N];
    return GridFunction(std::move(out));
  }
  if (!is_band_limited(f)) {
    throw std::domain_error(
        "non-grid-aligned shift needs a band-limited function");
  }
  const auto coeffs = coeff_table(f, static_cast<std::int64_t>(N) / 2 - 1);
  return synthesize(translate(coeffs, a), N);
}

CoeffTable translate(const CoeffTable& coeffs, double a) {
  const std::int64_t K = coeffs.k_max();
  std::vector<Complex> v(static_cast<std::size_t>(2 * K + 1));
  for (std::int64_t k = -K; k <= K; ++k) {
    v[static_cast<std::size_t>(k + K)] =
        coeffs.at(k) * std::polar(1.0, static_cast<double>(k) * a);
  }
  return CoeffTable(K, std::move(v));
}

HomogeneityReport check_homogeneity(const GridFunction& f, const NormSpec& spec,
                                    const std::vector<double>& shifts, int j_min,
                                    int j_max) {
  HomogeneityReport r;
  r.spec = spec.to_string();
  // Translates and differences of f inherit its smoothness, so the jump gate
  // applies to f alone.  Differences can be flat on most of the circle, which
  // fools the median-based detector.
  require_no_jump(f, spec);
  const double base = unchecked_norm(f, spec);
  const double l1 = lp_of(f.samples(), 1.0);
  r.h1_constant = base > 0.0 ? l1 / base : (l1 == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  r.h1_holds = r.h1_constant <= 1.0 + 1e-12;

  for (const double a : shifts) {
    r.h2_max_residual = std::max(r.h2_max_residual, std::abs(unchecked_norm(translate(f, a), spec) - base));
  }
  r.h2_holds = r.h2_max_residual <= 1e-12;

  for (int j = j_min; j <= j_max; ++j) {
    const double a = kTwoPi / std::ldexp(1.0, j);
    const auto shifted = translate(f, a);
    std::vector<Complex> diff(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) diff[i] = shifted[i] - f[i];
    r.h3_shifts.push_back(a);
    r.h3_profile.push_back(unchecked_norm(GridFunction(std::move(diff)), spec));
  }
  const auto& prof = r.h3_profile;
  const bool strictly = std::adjacent_find(prof.begin(), prof.end(),
                                           [](double x, double y) { return y >= x; }) ==
                        prof.end();
  const bool vanishing = std::all_of(prof.begin(), prof.end(), [&](double v) {
    return v <= 1e-13 * std::max(1.0, base);
  });
  r.h3_decreasing = strictly || vanishing;
  return r;
}

double exp_norm_growth(const NormSpec& spec, std::int64_t k_lo, std::int64_t k_hi) {
  if (k_lo < 1 || k_hi <= k_lo) throw std::invalid_argument("need 1 <= k_lo < k_hi");
  const std::size_t N = grid_for(k_hi);
  const auto ks = log_spaced(k_lo, k_hi, 4);
  std::vector<double> values;
  for (const auto k : ks) {
    if (spec.needs_derivatives()) {
      const auto e = CoeffTable::from_generator(
          k, [k](std::int64_t m) { return m == k ? Complex(1.0) : Complex{}; });
      values.push_back(norm(e, spec, N));
    } else {
      values.push_back(norm(GridFunction::sample(
                                [k](double x) { return std::polar(1.0, static_cast<double>(k) * x); }, N),
                            spec));
    }
  }
  return log_log_slope(ks, values);
}

}  // namespace tauber
