#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "diverse/errors.hpp"
#include "diverse/kernels.hpp"
#include "diverse/measures.hpp"
#include "test_support.hpp"

namespace diverse {
namespace {

using testing::disparity_from;
using testing::fixture_disparity;

PortfolioVector pv(std::vector<double> v) { return PortfolioVector(std::move(v)); }

TEST(PortfolioVector, DerivedQuantities) {
  const PortfolioVector v = pv({3, 1, 0, 0});
  EXPECT_EQ(v.size(), 4u);
  EXPECT_EQ(v.n_present(), 2u);
  EXPECT_EQ(v.total(), 4.0);
  const auto p = v.proportions();
  EXPECT_EQ(p, (std::vector<double>{0.75, 0.25, 0.0, 0.0}));
  EXPECT_EQ(v.positive_entries(), (std::vector<double>{3, 1}));
  EXPECT_TRUE(pv({0, 0}).proportions().empty());
}

TEST(PortfolioVector, RejectsInvalidEntries) {
  EXPECT_THROW(pv({}), DomainError);
  EXPECT_THROW(pv({1, -1}), DomainError);
  EXPECT_THROW(pv({1, NAN}), DomainError);
  EXPECT_THROW(pv({INFINITY}), DomainError);
}

TEST(Gini, Examples) {
  EXPECT_EQ(gini(pv({2, 2})), 0.0);
  // Double-sum oracle: sum |x_i - x_j| = 8, 2 n^2 mean = 36.
  EXPECT_NEAR(gini(pv({1, 2, 3})), 2.0 / 9.0, 1e-15);
  EXPECT_NEAR(oracle::gini_double_sum({1, 2, 3}), 2.0 / 9.0, 1e-15);
  EXPECT_NEAR(gini(pv({1, 3})), 0.25, 1e-15);
  EXPECT_NEAR(oracle::gini_double_sum({1, 3}), 0.25, 1e-15);
}

TEST(Gini, ZerosAreExcluded) {
  EXPECT_NEAR(gini(pv({0, 1, 0, 3, 0})), 0.25, 1e-15);
  EXPECT_EQ(gini(pv({0, 7, 0})), 0.0);
}

TEST(Gini, UndefinedOnEmptySupport) {
  try {
    gini(pv({0, 0, 0}));
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "gini undefined on empty support");
  }
}

TEST(Gini, MatchesDoubleSumOracleWithTies) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> len(1, 60);
  std::uniform_int_distribution<int> val(1, 5);
  for (int t = 0; t < 300; ++t) {
    oracle::Vec x(len(rng));
    for (double& v : x) v = val(rng);
    const double g = gini(PortfolioVector(x));
    EXPECT_NEAR(g, oracle::gini_double_sum(x), 1e-12);
    const double n = static_cast<double>(x.size());
    EXPECT_GE(g, 0.0);
    EXPECT_LE(g, (n - 1) / n);
  }
}

TEST(RelativeVariety, Examples) {
  std::vector<double> counts(654, 0.0);
  for (int i = 0; i < 131; ++i) counts[i * 5] = 1.0 + i;
  EXPECT_NEAR(relative_variety(pv(counts)), 131.0 / 654.0, 1e-15);
  EXPECT_EQ(relative_variety(pv(std::vector<double>(10, 0.0))), 0.0);
  EXPECT_EQ(relative_variety(pv({1, 2, 3, 4, 5})), 1.0);
}

TEST(GiniSimpson, Examples) {
  EXPECT_EQ(gini_simpson(pv({1, 0, 0})), 0.0);
  EXPECT_NEAR(gini_simpson(pv({1, 1})), 0.5, 1e-15);
  EXPECT_NEAR(gini_simpson(pv({3, 1, 0, 0})), 0.375, 1e-15);
  EXPECT_THROW(gini_simpson(pv({0, 0})), DomainError);
}

TEST(Shannon, Examples) {
  const ShannonEntropy uniform = shannon(pv({1, 1, 1, 1}));
  EXPECT_NEAR(uniform.bits, 2.0, 1e-15);
  EXPECT_EQ(uniform.max_bits, 2.0);
  const ShannonEntropy concentrated = shannon(pv({5, 0, 0, 0}));
  EXPECT_EQ(concentrated.bits, 0.0);
  EXPECT_EQ(concentrated.max_bits, 2.0);
  EXPECT_NEAR(shannon(pv({3, 1, 0, 0})).bits, 0.8112781244591328, 1e-12);
  EXPECT_THROW(shannon(pv({0})), DomainError);
}

TEST(RaoStirling, Examples) {
  const oracle::Mat zero(3, oracle::Vec(3, 0.0));
  EXPECT_EQ(rao_stirling(pv({1, 2, 3}), disparity_from(zero)), 0.0);

  const oracle::Mat d2 = {{0, 0.4}, {0.4, 0}};
  EXPECT_NEAR(rao_stirling(pv({1, 1}), disparity_from(d2)), 0.2, 1e-15);

  // Zero-proportion categories contribute nothing, whatever their disparity.
  for (double rest : {0.0, 0.3, 1.0}) {
    EXPECT_NEAR(rao_stirling(pv({3, 1, 0, 0}), disparity_from(fixture_disparity(rest))), 0.1875,
                1e-15);
  }
}

TEST(RaoStirling, Errors) {
  const DisparityMatrix d = disparity_from(fixture_disparity());
  EXPECT_THROW(rao_stirling(pv({1, 2, 3}), d), DimensionError);
  EXPECT_THROW(rao_stirling(pv({0, 0, 0, 0}), d), DomainError);
}

TEST(MeanDisparity, Examples) {
  const DisparityMatrix d = disparity_from(fixture_disparity());
  EXPECT_EQ(mean_disparity(pv({0, 0, 9, 0}), d), 0.0);
  EXPECT_NEAR(mean_disparity(pv({3, 1, 0, 0}), d), 0.5, 1e-15);
  const oracle::Mat ones = {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  EXPECT_EQ(mean_disparity(pv({1, 5, 2}), disparity_from(ones)), 1.0);
  EXPECT_EQ(mean_disparity(pv({0, 0, 0, 0}), d), 0.0);
  EXPECT_THROW(mean_disparity(pv({1, 2}), d), DimensionError);
}

TEST(Div, Examples) {
  for (double rest : {0.0, 0.6, 1.0}) {
    const DisparityMatrix d = disparity_from(fixture_disparity(rest));
    EXPECT_EQ(div(pv({2, 2, 0, 0}), d), 0.0);
    EXPECT_EQ(div(pv({0, 0, 0, 0}), d), 0.0);
  }
  const DisparityMatrix d = disparity_from(fixture_disparity());
  EXPECT_NEAR(div(pv({3, 1, 0, 0}), d), 0.0625, 1e-15);
  EXPECT_NEAR(oracle::div_formula({3, 1, 0, 0}, fixture_disparity()), 0.0625, 1e-15);
}

TEST(Div, IsExactProductOfIndependentlyRetrievedFactors) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 12;
    const oracle::Vec counts = oracle::random_counts(n, rng);
    const oracle::Mat dm = oracle::random_disparity(n, rng);
    const DisparityMatrix d = disparity_from(dm);
    const PortfolioVector v(counts);
    if (v.empty_support()) continue;
    const double product = relative_variety(v) * gini(v) * mean_disparity(v, d);
    EXPECT_EQ(div(v, d), product);
    const DivFactors f = div_factors(v, d);
    EXPECT_EQ(f.product(), product);
    EXPECT_NEAR(div(v, d), oracle::div_formula(counts, dm), 1e-12);
  }
}

TEST(CoefficientOfVariation, Examples) {
  EXPECT_EQ(coefficient_of_variation(pv({2, 2, 2})), 0.0);
  EXPECT_NEAR(coefficient_of_variation(pv({1, 3})), 0.5, 1e-15);
  EXPECT_NEAR(coefficient_of_variation(pv({1, 2, 3, 0})), 0.408248290463863, 1e-12);
  EXPECT_THROW(coefficient_of_variation(pv({0, 0})), DomainError);
}

TEST(IndicatorRecord, FixtureColumn) {
  const IndicatorRecord r =
      indicator_record(1, pv({3, 1, 0, 0}), disparity_from(fixture_disparity()));
  EXPECT_EQ(r.column_index, 1u);
  EXPECT_NEAR(r.rao_stirling, 0.1875, 1e-15);
  EXPECT_NEAR(r.div, 0.0625, 1e-15);
  EXPECT_NEAR(r.gini, 0.25, 1e-15);
  EXPECT_NEAR(r.gini_simpson, 0.375, 1e-15);
  EXPECT_NEAR(r.shannon, 0.8112781244591328, 1e-12);
  EXPECT_EQ(r.h_max, 2.0);
  EXPECT_EQ(r.variety_relative, 0.5);
  EXPECT_EQ(r.n_total, 4u);
  EXPECT_EQ(r.n_present, 2u);
  ASSERT_TRUE(r.coeff_variation.has_value());
  EXPECT_NEAR(*r.coeff_variation, 0.5, 1e-15);
}

TEST(IndicatorRecord, EmptyColumn) {
  const IndicatorRecord r =
      indicator_record(3, pv({0, 0, 0, 0}), disparity_from(fixture_disparity()));
  EXPECT_EQ(r.rao_stirling, 0.0);
  EXPECT_EQ(r.div, 0.0);
  EXPECT_EQ(r.gini, 0.0);
  EXPECT_EQ(r.gini_simpson, 0.0);
  EXPECT_EQ(r.shannon, 0.0);
  EXPECT_EQ(r.h_max, 2.0);
  EXPECT_EQ(r.variety_relative, 0.0);
  EXPECT_EQ(r.n_present, 0u);
  EXPECT_FALSE(r.coeff_variation.has_value());
}

TEST(IndicatorRecord, UniformWithFullDisparity) {
  const oracle::Mat ones = {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}};
  const IndicatorRecord r = indicator_record(1, pv({1, 1, 1, 1}), disparity_from(ones));
  EXPECT_NEAR(r.rao_stirling, 0.75, 1e-15);
  EXPECT_EQ(r.div, 0.0);
  EXPECT_NEAR(r.shannon, 2.0, 1e-15);
}

TEST(IndicatorRecord, DimensionMismatch) {
  EXPECT_THROW(indicator_record(1, pv({1, 2}), disparity_from(fixture_disparity())),
               DimensionError);
}

// Property checks over random portfolios.

struct Indicators {
  double rao, div, gini, gs, shannon, md, rv, cv;
};

Indicators all_of(const PortfolioVector& v, const DisparityMatrix& d) {
  return {rao_stirling(v, d),       div(v, d),          gini(v), gini_simpson(v),
          shannon(v).bits,          mean_disparity(v, d), relative_variety(v),
          coefficient_of_variation(v)};
}

void expect_close(const Indicators& a, const Indicators& b, double tol) {
  EXPECT_NEAR(a.rao, b.rao, tol);
  EXPECT_NEAR(a.div, b.div, tol);
  EXPECT_NEAR(a.gini, b.gini, tol);
  EXPECT_NEAR(a.gs, b.gs, tol);
  EXPECT_NEAR(a.shannon, b.shannon, tol);
  EXPECT_NEAR(a.md, b.md, tol);
  EXPECT_NEAR(a.rv, b.rv, tol);
  EXPECT_NEAR(a.cv, b.cv, tol);
}

TEST(MeasureProperties, ScaleAndPermutationInvariance) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 15;
    oracle::Vec counts = oracle::random_counts(n, rng);
    counts[t % n] += 1.0;  // nonempty support
    const oracle::Mat dm = oracle::random_disparity(n, rng);
    const DisparityMatrix d = disparity_from(dm);
    const Indicators base = all_of(PortfolioVector(counts), d);

    for (double lambda : {1e-6, 3.0, 1e6}) {
      oracle::Vec scaled = counts;
      for (double& x : scaled) x *= lambda;
      expect_close(all_of(PortfolioVector(scaled), d), base, 1e-12);
    }

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    oracle::Vec pc(n);
    oracle::Mat pd(n, oracle::Vec(n));
    for (std::size_t i = 0; i < n; ++i) {
      pc[i] = counts[perm[i]];
      for (std::size_t j = 0; j < n; ++j) pd[i][j] = dm[perm[i]][perm[j]];
    }
    expect_close(all_of(PortfolioVector(pc), disparity_from(pd)), base, 1e-12);
  }
}

TEST(MeasureProperties, BruteForceAgreementAndBounds) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + t % 8;
    oracle::Vec counts = oracle::random_counts(n, rng);
    counts[0] += 1.0;
    const oracle::Mat dm = oracle::random_disparity(n, rng);
    const PortfolioVector v(counts);
    const DisparityMatrix d = disparity_from(dm);
    const double nc = static_cast<double>(v.n_present());

    EXPECT_NEAR(rao_stirling(v, d), oracle::rao_stirling_pairs(counts, dm), 1e-12);
    EXPECT_NEAR(mean_disparity(v, d), oracle::mean_disparity_pairs(counts, dm), 1e-12);
    EXPECT_NEAR(div(v, d), oracle::div_formula(counts, dm), 1e-12);
    EXPECT_NEAR(gini_simpson(v), oracle::gini_simpson_direct(counts), 1e-12);
    EXPECT_NEAR(shannon(v).bits, oracle::shannon_direct(counts), 1e-12);

    const Indicators ind = all_of(v, d);
    for (double x : {ind.rao, ind.div, ind.md, ind.rv, ind.gs}) {
      EXPECT_GE(x, 0.0);
      EXPECT_LE(x, 1.0);
    }
    EXPECT_GE(ind.gini, 0.0);
    EXPECT_LE(ind.gini, (nc - 1) / nc);
    EXPECT_GE(ind.shannon, 0.0);
    EXPECT_LE(ind.shannon, std::log2(nc) + 1e-12);
    EXPECT_GE(ind.cv, 0.0);
  }
}

TEST(MeasureProperties, ConcentrationAndUniformLimits) {
  std::mt19937_64 rng(43);
  for (std::size_t n = 1; n <= 10; ++n) {
    const DisparityMatrix d = disparity_from(oracle::random_disparity(n, rng));
    oracle::Vec single(n, 0.0);
    single[n / 2] = 17.0;
    const PortfolioVector v(single);
    EXPECT_EQ(rao_stirling(v, d), 0.0);
    EXPECT_EQ(div(v, d), 0.0);
    EXPECT_EQ(gini_simpson(v), 0.0);
    EXPECT_EQ(shannon(v).bits, 0.0);

    oracle::Vec even(n, 0.0);
    for (std::size_t i = 0; i < n; i += 2) even[i] = 0.7;
    EXPECT_EQ(gini(PortfolioVector(even)), 0.0);
    EXPECT_EQ(div(PortfolioVector(even), d), 0.0);
  }
}

TEST(MeasureProperties, ScalarAndSimdPathsAgree) {
  if (!kernels::cpu_supports(kernels::Isa::avx2)) GTEST_SKIP();
  const kernels::Isa before = kernels::active_isa();
  std::mt19937_64 rng(44);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 40;
    oracle::Vec counts = oracle::random_counts(n, rng);
    counts[0] += 1.0;
    const DisparityMatrix d = disparity_from(oracle::random_disparity(n, rng));
    const PortfolioVector v(counts);
    kernels::select_isa(kernels::Isa::scalar);
    const Indicators scalar = all_of(v, d);
    kernels::select_isa(kernels::Isa::avx2);
    const Indicators simd = all_of(v, d);
    expect_close(scalar, simd, 1e-12);
  }
  kernels::select_isa(before);
}

}  // namespace
}  // namespace diverse
