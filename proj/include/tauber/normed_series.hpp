#pragma once

// Series in an abstract normed space: partial sums, Cesàro (C,1) means,
// delayed means and the block estimates used to pass from summability to
// convergence.
//
// A space is any type modelling `NormedSpace`: it owns the vector type, the
// linear operations, the norm, and a compensated accumulator for that vector
// type.  Two concrete spaces are provided: complex scalars, and complex
// functions sampled on a fixed point set with the sup norm (or a sup
// seminorm over a subset of the points).

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tauber {

using Complex = std::complex<double>;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class ComplexSum {
 public:
  void add(Complex z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

template <class S>
concept NormedSpace = requires(const S& space, const typename S::Vector& v,
                               typename S::Accumulator& acc, Complex c) {
  typename S::Vector;
  typename S::Accumulator;
  { space.zero() } -> std::same_as<typename S::Vector>;
  { space.add(v, v) } -> std::same_as<typename S::Vector>;
  { space.scale(c, v) } -> std::same_as<typename S::Vector>;
  { space.norm(v) } -> std::convertible_to<double>;
  { space.is_seminorm() } -> std::convertible_to<bool>;
  { space.accumulator() } -> std::same_as<typename S::Accumulator>;
  acc.add(v);
  { acc.value() } -> std::same_as<typename S::Vector>;
};

// Complex numbers with the modulus.  Real series embed with zero imaginary part.
class ScalarSpace {
 public:
  using Vector = Complex;
  using Accumulator = ComplexSum;

  Vector zero() const { return {}; }
  Vector add(const Vector& a, const Vector& b) const { return a + b; }
  Vector scale(Complex c, const Vector& v) const { return c * v; }
  double norm(const Vector& v) const { return std::abs(v); }
  bool is_seminorm() const { return false; }
  Accumulator accumulator() const { return {}; }
};

// Functions sampled at `dimension` fixed points, normed by the maximum
// modulus.  With a support mask the maximum runs over the masked points only,
// which is a seminorm on the full sample vector; that mode must be requested
// explicitly through `sup_seminorm`.
class SampledFunctionSpace {
 public:
  using Vector = std::vector<Complex>;

  class Accumulator {
   public:
    explicit Accumulator(std::size_t dimension) : parts_(dimension) {}
    void add(const Vector& v) {
      if (v.size() != parts_.size()) {
        throw std::invalid_argument("sampled vector has the wrong dimension");
      }
      for (std::size_t i = 0; i < v.size(); ++i) parts_[i].add(v[i]);
    }
    Vector value() const {
      Vector out(parts_.size());
      for (std::size_t i = 0; i < parts_.size(); ++i) out[i] = parts_[i].value();
      return out;
    }

   private:
    std::vector<ComplexSum> parts_;
  };

  static SampledFunctionSpace sup(std::size_t dimension) {
    return SampledFunctionSpace(dimension, {});
  }
  static SampledFunctionSpace sup_seminorm(std::size_t dimension,
                                           std::vector<bool> support) {
    if (support.size() != dimension) {
      throw std::invalid_argument("support mask has the wrong dimension");
    }
    return SampledFunctionSpace(dimension, std::move(support));
  }

  std::size_t dimension() const { return dimension_; }
  Vector zero() const { return Vector(dimension_); }
  Vector add(const Vector& a, const Vector& b) const {
    check(a);
    check(b);
    Vector out(dimension_);
    for (std::size_t i = 0; i < dimension_; ++i) out[i] = a[i] + b[i];
    return out;
  }
  Vector scale(Complex c, const Vector& v) const {
    check(v);
    Vector out(dimension_);
    for (std::size_t i = 0; i < dimension_; ++i) out[i] = c * v[i];
    return out;
  }
  double norm(const Vector& v) const {
    check(v);
    double m = 0.0;
    for (std::size_t i = 0; i < dimension_; ++i) {
      if (!support_.empty() && !support_[i]) continue;
      m = std::max(m, std::abs(v[i]));
    }
    return m;
  }
  bool is_seminorm() const { return !support_.empty(); }
  Accumulator accumulator() const { return Accumulator(dimension_); }

 private:
  SampledFunctionSpace(std::size_t dimension, std::vector<bool> support)
      : dimension_(dimension), support_(std::move(support)) {}
  void check(const Vector& v) const {
    if (v.size() != dimension_) {
      throw std::invalid_argument("sampled vector has the wrong dimension");
    }
  }

  std::size_t dimension_;
  std::vector<bool> support_;
};

static_assert(NormedSpace<ScalarSpace>);
static_assert(NormedSpace<SampledFunctionSpace>);

// Term generator k -> u_k (k >= 0) plus an optional known sum.  The generator
// must be deterministic.
template <NormedSpace Space>
struct SeriesTerms {
  std::function<typename Space::Vector(std::int64_t)> term;
  std::optional<typename Space::Vector> limit;
};

using ScalarSeries = SeriesTerms<ScalarSpace>;

namespace detail {
inline void require_nonnegative(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("series index must be nonnegative");
}
inline void require_block(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("block length m must be positive");
}
}  // namespace detail

// Single left-to-right pass producing S_n and sigma_n for n = 0, 1, 2, ...
template <NormedSpace Space>
class CesaroRunner {
 public:
  using Vector = typename Space::Vector;

  CesaroRunner(const Space& space, const SeriesTerms<Space>& terms)
      : space_(space),
        terms_(terms),
        partial_(space.accumulator()),
        running_(space.accumulator()) {}

  // Moves to the next index and returns it.
  std::int64_t advance() {
    ++index_;
    partial_.add(terms_.term(index_));
    current_partial_ = partial_.value();
    running_.add(current_partial_);
    return index_;
  }
  void advance_to(std::int64_t n) {
    while (index_ < n) advance();
  }
  std::int64_t index() const { return index_; }
  const Vector& partial_sum() const { return current_partial_; }
  Vector cesaro_mean() const {
    return space_.scale(Complex(1.0 / static_cast<double>(index_ + 1)),
                        running_.value());
  }

 private:
  const Space& space_;
  const SeriesTerms<Space>& terms_;
  typename Space::Accumulator partial_;
  typename Space::Accumulator running_;
  Vector current_partial_{};
  std::int64_t index_ = -1;
};

template <NormedSpace Space>
typename Space::Vector partial_sum(const Space& space,
                                   const SeriesTerms<Space>& terms,
                                   std::int64_t n) {
  detail::require_nonnegative(n);
  auto acc = space.accumulator();
  for (std::int64_t k = 0; k <= n; ++k) acc.add(terms.term(k));
  return acc.value();
}

template <NormedSpace Space>
typename Space::Vector cesaro_mean(const Space& space,
                                   const SeriesTerms<Space>& terms,
                                   std::int64_t n) {
  detail::require_nonnegative(n);
  CesaroRunner<Space> runner(space, terms);
  runner.advance_to(n);
  return runner.cesaro_mean();
}

// (S_n + ... + S_{n+m-1}) / m.  For m = 1 the result is S_n bit for bit.
template <NormedSpace Space>
typename Space::Vector delayed_mean(const Space& space,
                                    const SeriesTerms<Space>& terms,
                                    std::int64_t n, std::int64_t m) {
  detail::require_nonnegative(n);
  detail::require_block(m);
  auto partial = space.accumulator();
  auto block = space.accumulator();
  for (std::int64_t k = 0; k < n + m; ++k) {
    partial.add(terms.term(k));
    if (k >= n) block.add(partial.value());
  }
  if (m == 1) return block.value();
  return space.scale(Complex(1.0 / static_cast<double>(m)), block.value());
}

// norm(sigma_{n,m} - S_n - sum_{j=n+1}^{n+m} (1 - (j-n)/m) u_j).
template <NormedSpace Space>
double delayed_mean_decomposition_residual(const Space& space,
                                           const SeriesTerms<Space>& terms,
                                           std::int64_t n, std::int64_t m) {
  const auto sigma = delayed_mean(space, terms, n, m);
  auto rhs = space.accumulator();
  rhs.add(partial_sum(space, terms, n));
  for (std::int64_t j = n + 1; j < n + m; ++j) {
    const double w = 1.0 - static_cast<double>(j - n) / static_cast<double>(m);
    rhs.add(space.scale(Complex(w), terms.term(j)));
  }
  return space.norm(space.add(sigma, space.scale(Complex(-1.0), rhs.value())));
}

struct HolderBlock {
  double lhs = 0.0;           // norm(sigma_{n,m} - S_n)
  double weighted_rhs = 0.0;  // (sum w_j^q)^{1/q} (sum norm(u_j)^p)^{1/p}
  double rhs = 0.0;           // (m-1)^{1/q} (sum norm(u_j)^p)^{1/p}
};

// Both Hölder bounds on a delayed block; lhs <= weighted_rhs <= rhs.
template <NormedSpace Space>
HolderBlock holder_block_bound(const Space& space,
                               const SeriesTerms<Space>& terms, std::int64_t n,
                               std::int64_t m, double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("Hölder block bound needs 1 < p < inf");
  }
  if (n < 1 || m < 2) {
    throw std::invalid_argument("Hölder block bound needs n >= 1 and m >= 2");
  }
  const double q = p / (p - 1.0);
  const auto sigma = delayed_mean(space, terms, n, m);
  const auto sn = partial_sum(space, terms, n);
  HolderBlock out;
  out.lhs = space.norm(space.add(sigma, space.scale(Complex(-1.0), sn)));

  CompensatedSum weights_q;
  CompensatedSum norms_p;
  for (std::int64_t j = n + 1; j < n + m; ++j) {
    const double w = 1.0 - static_cast<double>(j - n) / static_cast<double>(m);
    weights_q.add(std::pow(w, q));
    norms_p.add(std::pow(space.norm(terms.term(j)), p));
  }
  const double block = std::pow(norms_p.value(), 1.0 / p);
  out.weighted_rhs = std::pow(weights_q.value(), 1.0 / q) * block;
  out.rhs = std::pow(static_cast<double>(m - 1), 1.0 / q) * block;
  return out;
}

// m(n) = floor(n eps^q) + 1, so that n/m < eps^{-q} for n >= 1.
std::int64_t block_schedule(std::int64_t n, double eps, double q);

struct ProbeRow {
  std::int64_t n = 0;
  double err_partial = 0.0;  // norm(S - S_n)
  double err_cesaro = 0.0;   // norm(S - sigma_n)
};

template <NormedSpace Space>
std::vector<ProbeRow> convergence_probe(const Space& space,
                                        const SeriesTerms<Space>& terms,
                                        const std::vector<std::int64_t>& n_grid) {
  if (!terms.limit) {
    throw std::invalid_argument("convergence probe needs a known limit");
  }
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    detail::require_nonnegative(n_grid[i]);
    if (i > 0 && n_grid[i] <= n_grid[i - 1]) {
      throw std::invalid_argument("n grid must be strictly increasing");
    }
  }
  const auto& limit = *terms.limit;
  const auto minus = [&](const typename Space::Vector& v) {
    return space.add(limit, space.scale(Complex(-1.0), v));
  };
  std::vector<ProbeRow> rows;
  rows.reserve(n_grid.size());
  CesaroRunner<Space> runner(space, terms);
  for (const auto n : n_grid) {
    runner.advance_to(n);
    rows.push_back({n, space.norm(minus(runner.partial_sum())),
                    space.norm(minus(runner.cesaro_mean()))});
  }
  return rows;
}

struct NormContractAudit {
  double max_scaling_residual = 0.0;  // relative
  double max_triangle_excess = 0.0;   // relative to norm(v) + norm(w)
  bool null_vectors_found = false;    // norm(v) == 0 with v != 0
  bool holds = true;
};

// Checks the norm contract on the given vectors and scalars.  A vanishing
// norm on a nonzero vector violates it unless the space is a seminorm.
template <NormedSpace Space>
NormContractAudit audit_norm_contract(
    const Space& space, const std::vector<typename Space::Vector>& vectors,
    const std::vector<Complex>& scalars,
    const std::function<bool(const typename Space::Vector&)>& is_zero) {
  NormContractAudit audit;
  for (const auto& v : vectors) {
    const double nv = space.norm(v);
    if (nv == 0.0 && !is_zero(v)) audit.null_vectors_found = true;
    for (const auto c : scalars) {
      const double expected = std::abs(c) * nv;
      const double got = space.norm(space.scale(c, v));
      const double scale = std::max(expected, 1e-300);
      audit.max_scaling_residual =
          std::max(audit.max_scaling_residual, std::abs(got - expected) / scale);
    }
    for (const auto& w : vectors) {
      const double bound = nv + space.norm(w);
      if (bound == 0.0) continue;
      const double excess = (space.norm(space.add(v, w)) - bound) / bound;
      audit.max_triangle_excess = std::max(audit.max_triangle_excess, excess);
    }
  }
  audit.holds = audit.max_scaling_residual <= 1e-12 &&
                audit.max_triangle_excess <= 1e-12 &&
                (space.is_seminorm() || !audit.null_vectors_found);
  return audit;
}

}  // namespace tauber
