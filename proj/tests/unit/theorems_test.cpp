#include "tauber/theorems.hpp"

#include <cmath>
#include <complex>

#include "gtest/gtest.h"
#include "tauber/report.hpp"

namespace tauber {
namespace {

const ClosedArcSet kSquareK = ClosedArcSet::parse("0.3:2.8416,3.4416:5.9832");
const ClosedArcSet kSawK = ClosedArcSet::parse("0.5:5.7831853071795862");

void expect_rederivable(const ExperimentReport& r) {
  EXPECT_EQ(derive_conclusion(r), r.conclusion);
  const auto back = experiment_from_json(to_json(r));
  EXPECT_EQ(derive_conclusion(back), r.conclusion);
}

// Oracle for the square wave: (4/pi) sum over odd k <= n of sin(kx)/k.
long double square_partial(std::int64_t n, long double x) {
  long double s = 0;
  for (std::int64_t k = 1; k <= n; k += 2) s += std::sin(k * x) / k;
  return 4 * s / 3.141592653589793238462643383279502884L;
}

TEST(Outcome, ExitCodes) {
  EXPECT_EQ(exit_code(Outcome::kConfirmed), 0);
  EXPECT_EQ(exit_code(Outcome::kHypothesisNotMet), 2);
  EXPECT_EQ(exit_code(Outcome::kRefuted), 2);
  EXPECT_EQ(exit_code(Outcome::kNotApplicable), 3);
  EXPECT_EQ(outcome_from_string("hypothesis not met"), Outcome::kHypothesisNotMet);
}

TEST(Tauberian, LacunarySeries) {
  const auto r = verify_tauberian(scalar_series("lacunary"));
  EXPECT_EQ(r.conclusion.outcome, Outcome::kConfirmed);
  ASSERT_EQ(r.table.back().n, 16384);
  // sum_{2^j > 2^14} 2^{-j/2}
  double tail = 0;
  for (int j = 15; j < 200; ++j) tail += std::pow(2.0, -0.5 * j);
  EXPECT_NEAR(r.table.back().err_partial, tail, 1e-12);
  EXPECT_LE(r.table.back().err_partial, 0.0262);
  ASSERT_FALSE(r.holder_audit.empty());
  for (const auto& a : r.holder_audit) {
    EXPECT_EQ(a.m, static_cast<std::int64_t>(std::floor(a.n * 0.25)) + 1);
    EXPECT_LE(a.lhs, a.weighted_rhs * (1 + 1e-12));
    EXPECT_LE(a.weighted_rhs, a.rhs * (1 + 1e-12));
  }
  expect_rederivable(r);
}

TEST(Tauberian, AlternatingSeriesIsNegativeControl) {
  const auto r = verify_tauberian(scalar_series("alternating"));
  EXPECT_EQ(r.conclusion.outcome, Outcome::kHypothesisNotMet);
  EXPECT_FALSE(r.conclusion.conditions_hold);
  EXPECT_TRUE(r.conclusion.cesaro_converges);
  EXPECT_FALSE(r.conclusion.partial_sums_converge);
  for (const auto& row : r.table) {
    EXPECT_LE(row.err_cesaro, 1.0 / static_cast<double>(row.n + 1));
    EXPECT_DOUBLE_EQ(row.err_partial, 0.5);
  }
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    TauberianOptions o;
    o.p = p;
    EXPECT_EQ(verify_tauberian(scalar_series("alternating"), o).conclusion.outcome,
              Outcome::kHypothesisNotMet);
  }
  expect_rederivable(r);
}

TEST(Tauberian, GeometricSeries) {
  TauberianOptions o;
  o.n_grid = {8, 64};
  const auto r = verify_tauberian(scalar_series("geometric"), o);
  EXPECT_EQ(r.conclusion.outcome, Outcome::kConfirmed);
  EXPECT_LT(r.table.back().err_partial, 1e-8);
  // 2 - sigma_n = (2/(n+1)) (1 - 2^{-(n+1)})
  EXPECT_NEAR(r.table.back().err_cesaro, 2.0 / 65.0 * (1 - std::pow(2.0, -65.0)), 1e-15);
}

TEST(Tauberian, UnknownLimitIsEstimated) {
  TauberianOptions o;
  o.n_grid = {64, 256, 1024};
  const auto r = verify_tauberian(scalar_series("random", 3), o);
  EXPECT_FALSE(r.diagnostics.empty());
  EXPECT_EQ(r.metrics.at("limit_estimate_n"), 16.0 * 1024);
  EXPECT_EQ(r.conclusion.outcome, Outcome::kConfirmed);
}

TEST(FejerOnSet, SquareWaveAwayFromJumps) {
  const auto r = verify_fejer_on_set(catalog_entry("squarewave"), kSquareK);
  EXPECT_EQ(r.conclusion.outcome, Outcome::kConfirmed);
  EXPECT_LT(r.table.back().err_cesaro, 0.01);
  for (std::size_t i = 1; i < r.table.size(); ++i) {
    EXPECT_LT(r.table[i].err_cesaro, r.table[i - 1].err_cesaro);
  }
  // The reported sup dominates the oracle at sampled points of K.
  const std::int64_t n = 1024;
  for (double x : {0.3, 1.0, 2.8416, 3.4416, 5.0, 5.9832}) {
    long double sigma = 0;
    for (std::int64_t j = 0; j <= n; ++j) sigma += square_partial(j, x);
    sigma /= n + 1;
    const long double f = x < kPi ? 1.0L : -1.0L;
    EXPECT_LE(static_cast<double>(std::abs(sigma - f)), r.table.back().err_cesaro * (1 + 1e-9) + 1e-12);
  }
  expect_rederivable(r);
}

TEST(FejerOnSet, ClassicalCaseOnWholeCircle) {
  const auto r = verify_fejer_on_set(catalog_entry("smooth"), ClosedArcSet::full());
  EXPECT_EQ(r.conclusion.outcome, Outcome::kConfirmed);
  EXPECT_LT(r.table.back().err_cesaro, r.table.front().err_cesaro / 8);
}

TEST(FejerOnSet, SetThroughJumpIsRejected) {
  const auto r = verify_fejer_on_set(catalog_entry("squarewave"), ClosedArcSet::full());
  EXPECT_EQ(r.conclusion.outcome, Outcome::kNotApplicable);
  EXPECT_TRUE(r.table.empty());
  EXPECT_FALSE(r.diagnostics.empty());
  expect_rederivable(r);
}

TEST(HardyOnSet, Sawtooth) {
  FourierOptions o;
  o.n_grid = {256, 512, 1024, 2048};
  const auto r = verify_hardy_on_set(catalog_entry("sawtooth"), 2.0, kSawK, o);
  EXPECT_EQ(r.conclusion.outcome, Outcome::kConfirmed);
  EXPECT_TRUE(r.verdicts[0].verdict.passes);
  EXPECT_LE(r.verdicts[0].verdict.constant_M, 1.05);
  EXPECT_LT(r.table.back().err_partial, 0.02);
  // Oracle: (pi - x)/2 - sum sin(kx)/k at the first grid point of K.
  const double h = 2 * kPi / 4096;
  const double x = -kPi + h * std::ceil((0.5 + kPi) / h);
  long double s = 0;
  for (std::int64_t k = 1; k <= 2048; ++k) s += std::sin(k * static_cast<long double>(x)) / k;
  EXPECT_LE(static_cast<double>(std::abs((kPi - x) / 2 - s)), r.table.back().err_partial + 1e-12);
  expect_rederivable(r);
}

TEST(HardyOnSet, LacunaryGeneralizesHardy) {
  const auto r = verify_hardy_on_set(catalog_entry("lacunary"), 2.0, ClosedArcSet::full());
  EXPECT_EQ(r.conclusion.outcome, Outcome::kConfirmed);
  EXPECT_FALSE(r.verdicts[1].verdict.passes);  // informational Hardy check
  EXPECT_TRUE(r.verdicts[0].verdict.passes);
  EXPECT_LE(r.table.back().err_partial, 0.076);
}

TEST(HardyOnSet, JumpInsideSetIsRejected) {
  const auto r = verify_hardy_on_set(catalog_entry("sawtooth"), 2.0, ClosedArcSet::parse("0:6.2832"));
  EXPECT_EQ(r.conclusion.outcome, Outcome::kNotApplicable);
  EXPECT_THROW(verify_hardy_on_set(catalog_entry("sawtooth"), 1.0, kSawK), std::invalid_argument);
}

TEST(InSpace, SmoothEntryInL2) {
  const auto r = verify_fourier_in_space(catalog_entry("smooth"), NormSpec::lp(2), 2.0);
  EXPECT_EQ(r.conclusion.outcome, Outcome::kConfirmed);
  EXPECT_LT(r.table.front().err_partial, 1e-6);
  EXPECT_EQ(r.metrics.at("alpha"), 0.0);
  expect_rederivable(r);
}

TEST(InSpace, LacunaryInSup) {
  const auto r = verify_fourier_in_space(catalog_entry("lacunary"), NormSpec::sup(), 2.0);
  EXPECT_EQ(r.conclusion.outcome, Outcome::kConfirmed);
  EXPECT_LE(r.table.back().err_partial, 0.076);
}

TEST(InSpace, SawtoothInSobolevFailsTheCondition) {
  const auto r = verify_fourier_in_space(catalog_entry("sawtooth"), NormSpec::sobolev(1, 2), 2.0);
  EXPECT_EQ(r.metrics.at("alpha"), 1.0);
  EXPECT_FALSE(r.verdicts[0].verdict.passes);
  EXPECT_EQ(r.conclusion.outcome, Outcome::kHypothesisNotMet);
  expect_rederivable(r);
}

TEST(InSpace, TriangleInSobolev) {
  const auto r = verify_fourier_in_space(catalog_entry("triangle"), NormSpec::sobolev(1, 2), 2.0);
  EXPECT_EQ(r.conclusion.outcome, Outcome::kConfirmed);
  // (sum_{|k|>n} k^2 |f^(k)|^2)^{1/2} with |f^(k)| = 2/(pi k^2), odd k
  long double tail = 0;
  for (std::int64_t k = 1025; k < 4000000; k += 2) {
    tail += 2 * (1.0L + static_cast<long double>(k) * k) * 4 / (kPi * kPi * std::pow(static_cast<long double>(k), 4));
  }
  EXPECT_NEAR(r.table.back().err_partial, std::sqrt(static_cast<double>(tail)), 0.02 * std::sqrt(static_cast<double>(tail)));
}

TEST(InSpace, DiscontinuousEntryIsNotInSup) {
  const auto r = verify_fourier_in_space(catalog_entry("sawtooth"), NormSpec::sup(), 2.0);
  EXPECT_EQ(r.conclusion.outcome, Outcome::kNotApplicable);
  EXPECT_THROW(verify_fourier_in_space(catalog_entry("sine"), NormSpec::sup_on(kSquareK), 2.0),
               std::invalid_argument);
}

TEST(Consistency, HardySetOnCircleAgreesWithSupSpace) {
  for (const char* name : {"lacunary", "smooth", "triangle", "sine"}) {
    const auto& e = catalog_entry(name);
    const auto a = verify_hardy_on_set(e, 2.0, ClosedArcSet::full());
    const auto b = verify_fourier_in_space(e, NormSpec::sup(), 2.0, {}, 0.0);
    EXPECT_EQ(a.verdicts[0].verdict.passes, b.verdicts[0].verdict.passes) << name;
    EXPECT_EQ(a.conclusion.conditions_hold, b.conclusion.conditions_hold) << name;
    ASSERT_EQ(a.table.size(), b.table.size());
    for (std::size_t i = 0; i < a.table.size(); ++i) {
      EXPECT_NEAR(a.table[i].err_partial, b.table[i].err_partial, 1e-10) << name;
    }
  }
}

TEST(Refinement, DoublingTheWindowKeepsVerdicts) {
  for (const auto& e : catalog()) {
    FourierOptions small;
    small.window = {64, 32768};
    FourierOptions large;
    large.window = {64, 65536};
    const auto a = verify_hardy_on_set(e, 2.0, ClosedArcSet::full(), small);
    const auto b = verify_hardy_on_set(e, 2.0, ClosedArcSet::full(), large);
    if (a.conclusion.conditions_hold) EXPECT_TRUE(b.conclusion.conditions_hold) << e.name;
  }
}

TEST(Gibbs, SquareWaveHasAFloor) {
  const auto r = gibbs_probe(catalog_entry("squarewave"));
  EXPECT_EQ(r.conclusion.outcome, Outcome::kConfirmed);
  EXPECT_GE(r.metrics.at("floor"), 0.17);
  EXPECT_GE(r.metrics.at("cesaro_jump_floor"), 0.99);
  expect_rederivable(r);
}

// Oracle: direct sums at the overshoot points, every n up to 2^12.
TEST(Gibbs, FloorMatchesDirectEvaluation) {
  double floor = 1e9;
  for (std::int64_t n = 1; n <= 4096; ++n) {
    double worst = 0;
    for (long double x : {kPi / (n + 1.0L), kPi / static_cast<long double>(n)}) {
      worst = std::max(worst, static_cast<double>(std::abs(square_partial(n, x) - 1)));
    }
    floor = std::min(floor, worst);
  }
  EXPECT_GE(floor, 0.17);
  EXPECT_NEAR(gibbs_probe(catalog_entry("squarewave")).metrics.at("floor"), floor, 1e-9);
}

TEST(Gibbs, SmoothEntryHasNoFloor) {
  const auto r = gibbs_probe(catalog_entry("smooth"));
  EXPECT_EQ(r.conclusion.outcome, Outcome::kConfirmed);
  EXPECT_TRUE(r.conclusion.partial_sums_converge);
  EXPECT_LT(r.metrics.at("floor"), 1e-10);
}

TEST(DeriveConclusion, FollowsTheTable) {
  auto r = verify_fejer_on_set(catalog_entry("squarewave"), kSquareK);
  ASSERT_EQ(r.conclusion.outcome, Outcome::kConfirmed);
  r.table[2].err_cesaro = 1.0;  // break monotonicity
  EXPECT_EQ(derive_conclusion(r).outcome, Outcome::kRefuted);
  r.theorem = "bogus";
  EXPECT_THROW(derive_conclusion(r), std::invalid_argument);
}

}  // namespace
}  // namespace tauber
