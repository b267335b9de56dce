#include "tauber/torus.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "tauber/catalog.hpp"

namespace tauber {
namespace {

using LComplex = std::complex<long double>;
constexpr long double kPiL = 3.141592653589793238462643383279502884L;

// Oracle: trapezoid rule evaluated directly in long double.
LComplex direct_coefficient(const GridFunction& f, std::int64_t k) {
  const auto N = static_cast<long double>(f.size());
  LComplex acc = 0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const long double x = -kPiL + 2 * kPiL * static_cast<long double>(j) / N;
    const LComplex e = std::polar(1.0L, -static_cast<long double>(k) * x);
    acc += LComplex(f[j].real(), f[j].imag()) * e;
  }
  return acc / N;
}

LComplex direct_partial_sum(const CoeffTable& c, std::int64_t n, double x) {
  LComplex acc = 0;
  for (std::int64_t k = -n; k <= n; ++k) {
    const auto ck = c.at(k);
    acc += LComplex(ck.real(), ck.imag()) *
           std::polar(1.0L, static_cast<long double>(k) * static_cast<long double>(x));
  }
  return acc;
}

double gap(Complex a, LComplex b) {
  return static_cast<double>(std::abs(LComplex(a.real(), a.imag()) - b));
}

CoeffTable random_table(std::mt19937_64& rng, std::int64_t K) {
  std::normal_distribution<double> g;
  std::vector<Complex> v(static_cast<std::size_t>(2 * K + 1));
  for (auto& z : v) z = {g(rng), g(rng)};
  return CoeffTable(K, v);
}

TEST(GridFunction, RejectsBadSizes) {
  EXPECT_THROW(GridFunction(std::vector<Complex>(8)), std::invalid_argument);
  EXPECT_THROW(GridFunction(std::vector<Complex>(48)), std::invalid_argument);
  EXPECT_NO_THROW(GridFunction(std::vector<Complex>(16)));
}

TEST(GridFunction, PointsStartAtMinusPi) {
  const auto f = GridFunction::sample([](double x) { return Complex(x); }, 16);
  EXPECT_DOUBLE_EQ(f.point(0), -kPi);
  EXPECT_NEAR(f.point(8), 0.0, 1e-15);
  EXPECT_NEAR(f.step(), kTwoPi / 16, 1e-16);
}

TEST(FourierCoeff, MatchesLongDoubleQuadrature) {
  for (const char* name : {"sawtooth", "squarewave", "triangle", "smooth"}) {
    const auto f = GridFunction::sample(catalog_entry(name).sampler, 1024);
    for (std::int64_t k = -20; k <= 20; ++k) {
      EXPECT_LT(gap(fourier_coeff(f, k), direct_coefficient(f, k)), 1e-14) << name << " k=" << k;
    }
  }
}

TEST(CoeffTable, FftAgreesWithDirectRule) {
  const auto f = GridFunction::sample(catalog_entry("sawtooth").sampler, 512);
  const auto t = coeff_table(f, 255);
  for (std::int64_t k = -255; k <= 255; ++k) {
    EXPECT_LT(gap(t.at(k), direct_coefficient(f, k)), 1e-14) << "k=" << k;
  }
}

TEST(CoeffTable, RecoversTrigonometricPolynomial) {
  std::mt19937_64 rng(41);
  const auto c = random_table(rng, 12);
  const auto g = synthesize(c, 64);
  const auto back = coeff_table(g, 12);
  for (std::int64_t k = -12; k <= 12; ++k) EXPECT_LT(std::abs(back.at(k) - c.at(k)), 1e-13);
  // Synthesis samples agree with direct evaluation.
  for (std::size_t j = 0; j < g.size(); j += 5) {
    EXPECT_LT(gap(g[j], direct_partial_sum(c, 12, g.point(j))), 1e-12);
  }
}

TEST(CoeffTable, AliasingIsRejected) {
  const auto f = GridFunction::sample([](double) { return Complex(1); }, 64);
  EXPECT_THROW(fourier_coeff(f, 32), std::out_of_range);
  EXPECT_THROW(coeff_table(f, 32), std::out_of_range);
  EXPECT_NO_THROW(coeff_table(f, 31));
}

TEST(CoeffTable, GeneratorAnswersBeyondTable) {
  const auto t = CoeffTable::from_generator(4, [](std::int64_t k) { return Complex(static_cast<double>(k)); });
  EXPECT_EQ(t.at(100), Complex(100.0));
  const CoeffTable plain(1, {Complex(1), Complex(2), Complex(1)});
  EXPECT_THROW(plain.at(2), std::out_of_range);
  EXPECT_TRUE(plain.is_conjugate_symmetric());
}

TEST(PartialSum, MatchesDirectSum) {
  std::mt19937_64 rng(43);
  const auto c = random_table(rng, 300);
  std::uniform_real_distribution<double> ux(-kPi, kPi);
  for (int i = 0; i < 20; ++i) {
    const double x = ux(rng);
    for (std::int64_t n : {0, 1, 17, 100, 300}) {
      const auto ref = direct_partial_sum(c, n, x);
      EXPECT_LT(gap(partial_sum_at(c, n, x), ref), 1e-11 * (1 + static_cast<double>(std::abs(ref))));
    }
  }
}

// Oracle: sigma_n is the average of S_0..S_n.
TEST(FejerMean, EqualsAverageOfPartialSums) {
  std::mt19937_64 rng(47);
  const auto c = random_table(rng, 80);
  for (double x : {-3.0, -0.7, 0.0, 1.3, 2.9}) {
    for (std::int64_t n : {0, 1, 5, 40, 80}) {
      LComplex avg = 0;
      for (std::int64_t j = 0; j <= n; ++j) avg += direct_partial_sum(c, j, x);
      avg /= static_cast<long double>(n + 1);
      EXPECT_LT(gap(fejer_mean_at(c, n, x), avg), 1e-11);
    }
  }
}

TEST(PartialSum, VectorFormMatchesPointForm) {
  const auto c = closed_form_coefficients(catalog_entry("squarewave"), 512);
  const std::vector<double> xs{-2.0, -0.01, 0.0, 0.3, 3.1};
  const auto s = partial_sum_on(c, 512, xs);
  const auto f = fejer_mean_on(c, 512, xs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    EXPECT_LT(std::abs(s[i] - partial_sum_at(c, 512, xs[i])), 1e-13);
    EXPECT_LT(std::abs(f[i] - fejer_mean_at(c, 512, xs[i])), 1e-13);
  }
  EXPECT_THROW(partial_sum_at(CoeffTable(1, {Complex(), Complex(1), Complex()}), 2, 0.0),
               std::out_of_range);
}

TEST(SetGrid, PointsWithinHalfStep) {
  const auto K = ClosedArcSet::parse("0.3:2.8416");
  const auto xs = grid_points_in_set(K, 4096);
  const double h = kTwoPi / 4096;
  EXPECT_NEAR(static_cast<double>(xs.size()), K.measure() / h, 2.0);
  for (double x : xs) EXPECT_LE(K.distance(x), 0.5 * h + 1e-12);
  EXPECT_EQ(grid_points_in_set(ClosedArcSet::full(), 4096).size(), 4096u);
}

TEST(SupErrorOnSet, SineApproximation) {
  const auto K = ClosedArcSet::full();
  const double e = sup_error_on_set([](double x) { return Complex(std::sin(x)); },
                                    [](double x) { return Complex(0.5 * std::sin(x)); }, K);
  EXPECT_NEAR(e, 0.5, 1e-6);
  EXPECT_THROW(sup_error_on_set([](double) { return Complex(); }, [](double) { return Complex(); },
                                K, 2048),
               std::invalid_argument);
}

TEST(DetectJumps, FindsSquareWaveJumps) {
  const auto g = GridFunction::sample(catalog_entry("squarewave").sampler, 4096);
  const auto jumps = detect_jumps(g);
  ASSERT_EQ(jumps.size(), 2u);
  const double h = g.step();
  int near0 = 0;
  int nearpi = 0;
  for (double x : jumps) {
    if (circle_distance(x, 0.0) <= h) ++near0;
    if (circle_distance(x, kPi) <= h) ++nearpi;
  }
  EXPECT_EQ(near0, 1);
  EXPECT_EQ(nearpi, 1);
  EXPECT_TRUE(detect_jumps(GridFunction::sample(catalog_entry("smooth").sampler, 4096)).empty());
}

// Oracle: exhaustive search over every (x in A, x') pair.
double brute_modulus(const Sampler& f, const ClosedArcSet& A, double eps, std::size_t N) {
  const auto g = GridFunction::sample(f, N);
  std::size_t s_min = N;
  for (std::size_t i = 0; i < N; ++i) {
    if (!A.contains(g.point(i))) continue;
    for (std::size_t j = 0; j < N; ++j) {
      const std::size_t d = std::min((i + N - j) % N, (j + N - i) % N);
      if (d == 0 || d >= s_min) continue;
      if (std::abs(g[i] - g[j]) >= eps) s_min = d;
    }
  }
  return s_min == N ? kPi : static_cast<double>(s_min - 1) * g.step();
}

TEST(Modulus, SineOnWholeCircle) {
  const Sampler f = [](double x) { return Complex(std::sin(x)); };
  const auto r = modulus_over_space(f, ClosedArcSet::full(), 0.1, 1024);
  EXPECT_DOUBLE_EQ(r.delta, brute_modulus(f, ClosedArcSet::full(), 0.1, 1024));
  EXPECT_GE(r.delta, 0.09);
  EXPECT_LE(r.delta, 0.11);
  EXPECT_FALSE(r.touches_jump);
}

TEST(Modulus, SquareWaveAwayFromJumps) {
  const auto& sq = catalog_entry("squarewave");
  const auto A = ClosedArcSet::parse("0.3:2.8416,3.4416:5.9832");
  const auto r = modulus_over_space(sq.sampler, A, 0.1, 1024);
  EXPECT_DOUBLE_EQ(r.delta, brute_modulus(sq.sampler, A, 0.1, 1024));
  EXPECT_GT(r.delta, 0.0);
  EXPECT_LE(r.delta, 0.3);
}

TEST(Modulus, SetTouchingJumpGivesZero) {
  const auto& sq = catalog_entry("squarewave");
  const auto r = modulus_over_space(sq.sampler, ClosedArcSet::full(), 0.1);
  EXPECT_EQ(r.delta, 0.0);
  EXPECT_TRUE(r.touches_jump);
}

TEST(Modulus, ConstantNeverFails) {
  const auto r = modulus_over_space([](double) { return Complex(1); }, ClosedArcSet::full(), 0.1, 256);
  EXPECT_DOUBLE_EQ(r.delta, kPi);
}

}  // namespace
}  // namespace tauber
