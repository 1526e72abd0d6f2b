#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "test_support.hpp"
#include "trineq/sampling.hpp"

using namespace trineq;

TEST(SplitMix, ReferenceStream) {
  SplitMix64 g(0);
  EXPECT_EQ(g.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(g.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(g.next(), 0x06C45D188009454FULL);
}

TEST(SplitMix, UniformFromTopBits) {
  SplitMix64 a(99), b(99);
  for (int k = 0; k < 100; ++k) {
    const double u = a.uniform();
    EXPECT_EQ(u, static_cast<double>(b.next() >> 11) * 0x1.0p-53);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(SplitMix, GaussianBoxMullerPairs) {
  SplitMix64 g(5), raw(5);
  for (int k = 0; k < 20; ++k) {
    const double u1 = 1.0 - raw.uniform();
    const double u2 = raw.uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * M_PI * u2;
    EXPECT_NEAR(g.gaussian(), r * std::cos(th), 1e-15);
    EXPECT_NEAR(g.gaussian(), r * std::sin(th), 1e-15);
  }
}

TEST(SplitMix, GaussianMoments) {
  SplitMix64 g(123);
  const int n = 200000;
  double s = 0.0, s2 = 0.0;
  for (int k = 0; k < n; ++k) {
    const double v = g.gaussian();
    s += v;
    s2 += v * v;
  }
  EXPECT_NEAR(s / n, 0.0, 0.01);
  EXPECT_NEAR(s2 / n, 1.0, 0.01);
}

TEST(DeriveSeed, DistinctAndDeterministic) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 50; ++s) EXPECT_TRUE(seen.insert(derive_seed(42, s)).second);
  EXPECT_EQ(derive_seed(42, 3), derive_seed(42, 3));
  SplitMix64 g(42 ^ (3 * 0xD1B54A32D192ED03ULL));
  EXPECT_EQ(derive_seed(42, 3), g.next());
}

TEST(Sample, DeterministicPerSeed) {
  for (SampleKind kind : {SampleKind::psd, SampleKind::pd, SampleKind::density, SampleKind::observable,
                          SampleKind::loewner_chain, SampleKind::unit_trace_pair}) {
    const SampleSpec spec{3, kind, 1.0, 1};
    const auto a = sample(spec);
    const auto b = sample(spec);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t j = 0; j < a.size(); ++j) EXPECT_TRUE(a[j] == b[j]);
    SampleSpec other = spec;
    other.seed = 2;
    EXPECT_FALSE(sample(other)[0] == a[0]);
  }
}

TEST(Sample, KindConstraints) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Index n = 2 + static_cast<Index>(seed % 5);
    const double scale = 0.5 + static_cast<double>(seed % 3);
    EXPECT_TRUE(classify_psd(sample({n, SampleKind::psd, scale, seed})[0]).is_psd());

    const HermMatrix pd = sample({n, SampleKind::pd, scale, seed})[0];
    EXPECT_GE(eig_hermitian(pd).eigenvalues[0], 1e-6 * scale);

    const HermMatrix rho = sample({n, SampleKind::density, 1.0, seed})[0];
    EXPECT_NEAR(rho.trace(), 1.0, 1e-12);
    EXPECT_TRUE(classify_psd(rho).is_psd());

    const auto chain = sample({n, SampleKind::loewner_chain, scale, seed});
    ASSERT_EQ(chain.size(), 2u);
    EXPECT_TRUE(loewner_leq(HermMatrix::identity(n), chain[1]).is_psd());
    EXPECT_TRUE(loewner_leq(chain[1], chain[0]).is_psd());

    const auto pair = sample({n, SampleKind::unit_trace_pair, 1.0, seed});
    ASSERT_EQ(pair.size(), 2u);
    for (const auto& m : pair) {
      EXPECT_NEAR(m.trace(), 1.0, 1e-12);
      EXPECT_TRUE(classify_psd(m).is_psd());
    }
    EXPECT_EQ(sample({n, SampleKind::observable, scale, seed})[0].dim(), n);
  }
}

TEST(Sample, FactorBuilders) {
  oracle::Gen gen(80);
  const oracle::Mat g = gen.gaussian(3);
  const HermMatrix p = psd_from_factor(g, 2.0);
  EXPECT_LE(testing_support::max_abs_diff(p, oracle::Mat(2.0 * g * g.adjoint() / 3.0)), 1e-14);
  const HermMatrix pd = pd_from_factor(g, 2.0);
  EXPECT_LE(testing_support::max_abs_diff(pd, oracle::Mat(p.matrix() + 2.0 * kPdShift * oracle::Mat::Identity(3, 3))),
            1e-14);
  const HermMatrix o = observable_from_factor(g, 0.5);
  EXPECT_LE(testing_support::max_abs_diff(o, oracle::Mat(0.25 * (g + g.adjoint()))), 1e-15);
  EXPECT_NEAR(density_from_factor(oracle::Mat::Zero(3, 3)).matrix()(0, 0).real(), 1.0 / 3.0, 1e-15);
}

TEST(Sample, KindNames) {
  for (SampleKind kind : {SampleKind::psd, SampleKind::pd, SampleKind::density, SampleKind::observable,
                          SampleKind::loewner_chain, SampleKind::unit_trace_pair}) {
    EXPECT_EQ(parse_sample_kind(to_string(kind)), kind);
  }
  EXPECT_FALSE(parse_sample_kind("banana").has_value());
}
