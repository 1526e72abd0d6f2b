#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"
#include "trineq/quantities.hpp"

using namespace trineq;
using testing_support::density;
using testing_support::herm;
using testing_support::max_abs_diff;
using testing_support::observable;

namespace {

const Complex I1{0.0, 1.0};

DensityMatrix cex_rho() { return DensityMatrix(HermMatrix::diagonal({0.75, 0.25})); }
Observable cex_a() { return Observable(HermMatrix::from_rows({{0.0, I1}, {-I1, 0.0}})); }
Observable cex_b() { return Observable(HermMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}})); }

DensityMatrix pure_state(oracle::Gen& gen, int n) {
  oracle::Mat v(n, 1);
  for (int j = 0; j < n; ++j) v(j, 0) = oracle::cd(gen.normal(), gen.normal());
  v /= v.norm();
  return density(oracle::Mat(v * v.adjoint()));
}

std::vector<ScalarFnSpec> fn_catalogue() {
  return {ScalarFnSpec::power(0.0), ScalarFnSpec::power(0.3), ScalarFnSpec::power(1.0),
          ScalarFnSpec::mix(0.2), ScalarFnSpec::mix(0.5)};
}

}  // namespace

TEST(Density, Validation) {
  EXPECT_NO_THROW(DensityMatrix(HermMatrix::diagonal({0.5, 0.5})));
  EXPECT_THROW(DensityMatrix(HermMatrix::diagonal({0.6, 0.5})), DomainError);
  EXPECT_THROW(DensityMatrix(HermMatrix::diagonal({1.5, -0.5})), DomainError);
}

TEST(ScalarFn, ParseAndEvaluate) {
  const ScalarFnSpec p = ScalarFnSpec::parse("power:0.25");
  EXPECT_EQ(p.kind(), ScalarFnSpec::Kind::power);
  EXPECT_DOUBLE_EQ(p(16.0), 2.0);
  const ScalarFnSpec m = ScalarFnSpec::parse("mix:0.5");
  EXPECT_DOUBLE_EQ(m(9.0), 3.0);
  EXPECT_DOUBLE_EQ(ScalarFnSpec::mix(0.0)(4.0), 2.5);
  EXPECT_THROW(ScalarFnSpec::parse("power"), DomainError);
  EXPECT_THROW(ScalarFnSpec::parse("power:x"), DomainError);
  EXPECT_THROW(ScalarFnSpec::parse("log:0.5"), DomainError);
  EXPECT_THROW(ScalarFnSpec::power(1.5), DomainError);
  EXPECT_THROW(ScalarFnSpec::mix(-0.1), DomainError);
  EXPECT_EQ(ScalarFnSpec::parse(p.name()).param(), 0.25);
}

TEST(Tsallis, Examples) {
  oracle::Gen gen(40);
  const HermMatrix x = herm(gen.pd(3));
  EXPECT_NEAR(tsallis_rel_entropy(x, x, Deformation(0.3)), 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(tsallis_rel_entropy(HermMatrix::diagonal({2.0, 1.0}), HermMatrix::identity(2), Deformation(1.0)), 1.0);
  for (int k = 0; k < 30; ++k) {
    const int n = 2 + k % 4;
    EXPECT_GE(tsallis_rel_entropy(herm(gen.density(n)), herm(gen.density(n)), Deformation(gen.uniform(0.05, 1.0))),
              -1e-12);
  }
}

TEST(Tsallis, MatchesEigenRoute) {
  oracle::Gen gen(41);
  for (int k = 0; k < 40; ++k) {
    const int n = 2 + k % 5;
    const oracle::Mat x = gen.psd(n), y = gen.psd(n);
    const double nu = gen.uniform(0.05, 1.0);
    EXPECT_NEAR(tsallis_rel_entropy(herm(x), herm(y), Deformation(nu)), oracle::tsallis(x, y, nu), 1e-9);
  }
}

TEST(Umegaki, Examples) {
  oracle::Gen gen(42);
  const HermMatrix x = herm(gen.pd(3));
  EXPECT_NEAR(umegaki_rel_entropy(x, x), 0.0, 1e-12);
  EXPECT_NEAR(umegaki_rel_entropy(HermMatrix::diagonal({0.5, 0.5}), HermMatrix::diagonal({0.75, 0.25})),
              0.5 * std::log(4.0 / 3.0), 1e-15);
  const HermMatrix a = herm(gen.pd(3, 0.3)), b = herm(gen.pd(3, 0.3));
  EXPECT_LT(std::abs(tsallis_rel_entropy(a, b, Deformation(1e-6)) - umegaki_rel_entropy(a, b)), 1e-4);
  EXPECT_THROW(umegaki_rel_entropy(HermMatrix::diagonal({0.0, 1.0}), HermMatrix::identity(2)), SingularityError);
}

TEST(TsallisOperator, Examples) {
  oracle::Gen gen(43);
  const HermMatrix x = herm(gen.pd(3));
  EXPECT_LE(max_abs_diff(tsallis_rel_operator_entropy(x, x, Deformation(0.4)), oracle::Mat::Zero(3, 3)), 1e-12);
  EXPECT_LE(max_abs_diff(tsallis_rel_operator_entropy(HermMatrix::identity(2), HermMatrix::diagonal({4.0, 9.0}),
                                                      Deformation(0.5)),
                         oracle::diag({2.0, 4.0})),
            1e-14);
  for (int k = 0; k < 30; ++k) {
    const int n = 2 + k % 4;
    const HermMatrix a = herm(gen.pd(n)), b = herm(gen.pd(n));
    const Deformation nu(gen.uniform(0.05, 1.0));
    const double upper = -tsallis_rel_operator_entropy(a, b, nu).trace();
    const double d = tsallis_rel_entropy(a, b, nu);
    EXPECT_GE(upper - d, -1e-9 * std::max({1.0, std::abs(upper), std::abs(d)}));
  }
  EXPECT_THROW(tsallis_rel_operator_entropy(HermMatrix::diagonal({0.0, 1.0}), HermMatrix::identity(2), Deformation(0.5)),
               SingularityError);
}

TEST(Variance, Examples) {
  oracle::Gen gen(44);
  const DensityMatrix rho = density(gen.density(3));
  EXPECT_NEAR(variance(rho, Observable(HermMatrix::identity(3))), 0.0, 1e-14);
  EXPECT_NEAR(variance(DensityMatrix(HermMatrix::diagonal({1.0, 0.0})), Observable(HermMatrix::diagonal({2.0, -5.0}))),
              0.0, 1e-15);
  EXPECT_NEAR(variance(DensityMatrix(HermMatrix::diagonal({0.5, 0.5})), Observable(HermMatrix::diagonal({1.0, -1.0}))),
              1.0, 1e-15);
}

TEST(Variance, FormsAgree) {
  oracle::Gen gen(45);
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + k % 4;
    const DensityMatrix rho = density(gen.density(n));
    const Observable a = observable(gen.hermitian(n)), b = observable(gen.hermitian(n));
    EXPECT_GE(variance(rho, a), -1e-12);
    EXPECT_NEAR(variance(rho, a), variance_centered(rho, a), 1e-10);
    EXPECT_LE(std::abs(covariance(rho, a, b) - covariance_centered(rho, a, b)), 1e-10);
    EXPECT_LE(std::abs(covariance(rho, a, a) - variance(rho, a)), 1e-12);
  }
}

TEST(WySkew, Examples) {
  oracle::Gen gen(46);
  EXPECT_NEAR(wy_skew(DensityMatrix(HermMatrix::diagonal({0.3, 0.7})), Observable(HermMatrix::diagonal({1.0, 4.0}))),
              0.0, 1e-14);
  EXPECT_NEAR(wy_skew(cex_rho(), cex_a()), 1.0 - std::sqrt(3.0) / 2.0, 1e-14);
  for (int k = 0; k < 20; ++k) {
    const int n = 2 + k % 4;
    const DensityMatrix rho = pure_state(gen, n);
    const Observable h = observable(gen.hermitian(n));
    EXPECT_NEAR(wy_skew(rho, h), variance(rho, h), 1e-10);
  }
}

TEST(WySkew, FormsAgreeAndNonnegative) {
  oracle::Gen gen(47);
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + k % 4;
    const DensityMatrix rho = density(gen.density(n));
    const Observable h = observable(gen.hermitian(n));
    const double i = wy_skew(rho, h);
    EXPECT_GE(i, -1e-12);
    EXPECT_NEAR(i, wy_skew_commutator_form(rho, h), 1e-10);
    const double alpha = gen.uniform(0.0, 1.0);
    EXPECT_NEAR(wyd_skew(rho, h, alpha), wyd_skew_commutator_form(rho, h, alpha), 1e-10);
  }
}

TEST(WydSkew, ReductionsAndSymmetry) {
  oracle::Gen gen(48);
  for (int k = 0; k < 30; ++k) {
    const int n = 2 + k % 4;
    const DensityMatrix rho = density(gen.density(n));
    const Observable h = observable(gen.hermitian(n));
    EXPECT_NEAR(wyd_skew(rho, h, 0.5), wy_skew(rho, h), 1e-12);
    EXPECT_NEAR(wyd_skew(rho, h, 0.0), 0.0, 1e-12);
    EXPECT_NEAR(wyd_skew(rho, h, 1.0), 0.0, 1e-12);
    const double a = gen.uniform(0.0, 1.0);
    EXPECT_NEAR(wyd_skew(rho, h, a), wyd_skew(rho, h, 1.0 - a), 1e-12);
  }
  const DensityMatrix diag_rho(HermMatrix::diagonal({0.2, 0.3, 0.5}));
  for (double a : {0.0, 0.25, 0.7, 1.0})
    EXPECT_NEAR(wyd_skew(diag_rho, Observable(HermMatrix::diagonal({1.0, -2.0, 3.0})), a), 0.0, 1e-15);
}

TEST(WydSkew, SingularEndpointIsDomainError) {
  const DensityMatrix rho(HermMatrix::diagonal({1.0, 0.0}));
  EXPECT_THROW(wyd_skew(rho, cex_a(), 0.0), SingularityError);
  EXPECT_THROW(wyd_skew(rho, cex_a(), 1.0), SingularityError);
  EXPECT_NO_THROW(wyd_skew(rho, cex_a(), 0.5));
  EXPECT_THROW(wyd_skew(rho, cex_a(), 1.5), DomainError);
}

TEST(JAndU, ExamplesAndRelations) {
  oracle::Gen gen(49);
  const DensityMatrix rho = density(gen.density(3));
  const Observable id(HermMatrix::identity(3));
  EXPECT_NEAR(u_quantity(rho, id), 0.0, 1e-7);
  EXPECT_NEAR(j_quantity(rho, id), 0.0, 1e-14);
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + k % 4;
    const DensityMatrix r = density(gen.density(n));
    const Observable h = observable(gen.hermitian(n));
    const double v = variance(r, h), i = wy_skew(r, h), j = j_quantity(r, h);
    EXPECT_GE(j, -1e-12);
    EXPECT_NEAR(v, 0.5 * (i + j), 1e-10);
    EXPECT_NEAR(u_quantity(r, h), std::sqrt(i * j), 1e-9);
    EXPECT_LE(u_quantity(r, h), v + 1e-12);
    EXPECT_NEAR(u_quantity_alpha(r, h, 0.5), u_quantity(r, h), 1e-12);
    EXPECT_NEAR(j_quantity(r, h, JConvention::literal), -j, 1e-12);
  }
}

TEST(Corr, Examples) {
  EXPECT_NEAR(corr(cex_rho(), cex_a().matrix().matrix(), cex_a().matrix().matrix()).real(), 1.0 - std::sqrt(3.0) / 2.0,
              1e-15);
  oracle::Gen gen(50);
  for (int k = 0; k < 20; ++k) {
    const int n = 2 + k % 4;
    const DensityMatrix rho = pure_state(gen, n);
    const Observable a = observable(gen.hermitian(n)), b = observable(gen.hermitian(n));
    EXPECT_LE(std::abs(corr(rho, a.matrix().matrix(), b.matrix().matrix()) - covariance(rho, a, b)), 1e-10);
  }
  const DensityMatrix d(HermMatrix::diagonal({0.4, 0.6}));
  EXPECT_LE(std::abs(corr(d, oracle::diag({1.0, 2.0}), oracle::diag({3.0, -1.0}))), 1e-15);
  EXPECT_THROW(corr(d, oracle::Mat::Identity(3, 3), oracle::Mat::Identity(2, 2)), DimensionError);
}

TEST(Corr, SesquilinearAndConsistent) {
  oracle::Gen gen(51);
  for (int k = 0; k < 30; ++k) {
    const int n = 2 + k % 4;
    const DensityMatrix rho = density(gen.density(n));
    const oracle::Mat x = gen.gaussian(n), y = gen.gaussian(n), z = gen.gaussian(n);
    const oracle::cd c(gen.normal(), gen.normal());
    const Complex lin = corr(rho, x, c * y + z);
    EXPECT_LE(std::abs(lin - (c * corr(rho, x, y) + corr(rho, x, z))), 1e-10);
    const Complex anti = corr(rho, c * x, y);
    EXPECT_LE(std::abs(anti - std::conj(c) * corr(rho, x, y)), 1e-10);
    const Observable h = observable(gen.hermitian(n));
    EXPECT_NEAR(corr(rho, h.matrix().matrix(), h.matrix().matrix()).real(), wy_skew(rho, h), 1e-12);
    const double a = gen.uniform(0.0, 1.0);
    EXPECT_LE(std::abs(fg_corr(rho, x, y, ScalarFnSpec::power(a), ScalarFnSpec::power(1 - a)) - corr_alpha(rho, x, y, a)),
              1e-12);
  }
}

TEST(FgSkew, ReductionsAndForms) {
  oracle::Gen gen(52);
  for (int k = 0; k < 30; ++k) {
    const int n = 2 + k % 4;
    const DensityMatrix rho = density(gen.density(n));
    const Observable h = observable(gen.hermitian(n));
    const double a = gen.uniform(0.0, 1.0);
    EXPECT_NEAR(fg_skew(rho, h, ScalarFnSpec::power(a), ScalarFnSpec::power(1 - a)), wyd_skew(rho, h, a), 1e-12);
    for (const auto& f : fn_catalogue()) {
      for (const auto& g : fn_catalogue()) {
        const double v = fg_skew(rho, h, f, g);
        EXPECT_GE(v, -1e-12);
        EXPECT_NEAR(v, fg_skew_commutator_form(rho, h, f, g), 1e-10);
        EXPECT_NEAR(v, fg_corr(rho, h.matrix().matrix(), h.matrix().matrix(), f, g).real(), 1e-12);
      }
    }
  }
  const DensityMatrix d(HermMatrix::diagonal({0.4, 0.6}));
  EXPECT_NEAR(fg_skew(d, Observable(HermMatrix::diagonal({1.0, 3.0})), ScalarFnSpec::mix(0.2), ScalarFnSpec::power(0.7)),
              0.0, 1e-15);
}

TEST(KSkew, ReductionsAndSymmetry) {
  oracle::Gen gen(53);
  for (int k = 0; k < 30; ++k) {
    const int n = 2 + k % 4;
    const DensityMatrix rho = density(gen.density(n));
    const Observable h = observable(gen.hermitian(n));
    EXPECT_NEAR(k_skew(rho, h, 0.5), wy_skew(rho, h), 1e-12);
    const double a = gen.uniform(0.0, 1.0);
    EXPECT_NEAR(k_skew(rho, h, a), k_skew(rho, h, 1.0 - a), 1e-12);
    EXPECT_NEAR(k_skew(rho, h, a), fg_skew(rho, h, ScalarFnSpec::mix(a), ScalarFnSpec::mix(a)), 1e-12);
    const oracle::Mat x = gen.gaussian(n), y = gen.gaussian(n);
    EXPECT_LE(std::abs(corr_k(rho, x, y, a) - fg_corr(rho, x, y, ScalarFnSpec::mix(a), ScalarFnSpec::mix(a))), 1e-12);
  }
  EXPECT_NEAR(k_skew(DensityMatrix(HermMatrix::diagonal({0.4, 0.6})), Observable(HermMatrix::diagonal({1.0, 3.0})), 0.3),
              0.0, 1e-15);
}

TEST(LQuantity, Reductions) {
  oracle::Gen gen(54);
  for (int k = 0; k < 30; ++k) {
    const int n = 2 + k % 4;
    const DensityMatrix rho = density(gen.density(n));
    const Observable h = observable(gen.hermitian(n));
    const double a = gen.uniform(0.0, 1.0);
    EXPECT_NEAR(l_quantity(rho.matrix(), rho.matrix(), h, a), wyd_skew(rho, h, a), 1e-12);
    const HermMatrix x = herm(gen.psd(n)), y = herm(gen.psd(n));
    const double nu = gen.uniform(0.05, 1.0);
    EXPECT_NEAR(l_quantity(x, y, Observable(HermMatrix::identity(n)), 1.0 - nu) / nu,
                tsallis_rel_entropy(x, y, Deformation(nu)), 1e-12 * std::max(1.0, 1.0 / nu));
  }
  const HermMatrix x = HermMatrix::diagonal({0.5, 2.0});
  EXPECT_NEAR(l_quantity(x, x, Observable(HermMatrix::diagonal({1.0, -1.0})), 0.3), 0.0, 1e-15);
  EXPECT_THROW(l_quantity(x, x, Observable(HermMatrix::identity(2)), 1.2), DomainError);
}

TEST(Invariance, UnitaryCovariance) {
  oracle::Gen gen(55);
  for (int k = 0; k < 20; ++k) {
    const int n = 2 + k % 4;
    const oracle::Mat w = gen.unitary(n);
    const oracle::Mat x = gen.pd(n), y = gen.pd(n), r = gen.density(n), h = gen.hermitian(n);
    const Deformation nu(gen.uniform(0.05, 1.0));
    EXPECT_NEAR(tsallis_rel_entropy(herm(x), herm(y), nu),
                tsallis_rel_entropy(herm(w * x * w.adjoint()), herm(w * y * w.adjoint()), nu), 1e-9);
    const DensityMatrix rho = density(r), rho_w = density(oracle::Mat(w * r * w.adjoint()));
    const Observable ob = observable(h), ob_w = observable(w * h * w.adjoint());
    const double a = gen.uniform(0.0, 1.0);
    EXPECT_NEAR(wyd_skew(rho, ob, a), wyd_skew(rho_w, ob_w, a), 1e-9);
    EXPECT_NEAR(k_skew(rho, ob, a), k_skew(rho_w, ob_w, a), 1e-9);
    for (const auto& f : fn_catalogue())
      EXPECT_NEAR(fg_skew(rho, ob, f, ScalarFnSpec::mix(0.3)), fg_skew(rho_w, ob_w, f, ScalarFnSpec::mix(0.3)), 1e-9);
  }
}

TEST(Invariance, ShiftOfObservable) {
  oracle::Gen gen(56);
  for (int k = 0; k < 30; ++k) {
    const int n = 2 + k % 4;
    const DensityMatrix rho = density(gen.density(n));
    const oracle::Mat h = gen.hermitian(n);
    const double a = gen.uniform(0.0, 1.0);
    for (double c : {-3.0, 0.7}) {
      const Observable h0 = observable(h);
      const Observable hc = observable(h + c * oracle::Mat::Identity(n, n));
      EXPECT_NEAR(wyd_skew(rho, h0, a), wyd_skew(rho, hc, a), 1e-10);
      EXPECT_NEAR(k_skew(rho, h0, a), k_skew(rho, hc, a), 1e-10);
      for (const auto& f : fn_catalogue())
        for (const auto& g : fn_catalogue()) EXPECT_NEAR(fg_skew(rho, h0, f, g), fg_skew(rho, hc, f, g), 1e-10);
    }
  }
}

TEST(Invariance, FgCorrPositivityAlongLines) {
  oracle::Gen gen(57);
  for (int k = 0; k < 30; ++k) {
    const int n = 2 + k % 4;
    const DensityMatrix rho = density(gen.density(n));
    const oracle::Mat a = gen.hermitian(n), b = gen.hermitian(n);
    for (const auto& f : fn_catalogue()) {
      for (const auto& g : fn_catalogue()) {
        const double t = gen.uniform(-3.0, 3.0);
        const oracle::Mat m = t * a + b;
        EXPECT_GE(fg_corr(rho, m, m, f, g).real(), -1e-12);
      }
    }
  }
}

TEST(Oracle, DiagonalStateQuantities) {
  oracle::Gen gen(58);
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 4;
    const oracle::Vec p = gen.probabilities(n);
    const DensityMatrix rho = density(p);
    const oracle::Mat h = gen.hermitian(n), b = gen.hermitian(n);
    const Observable oh = observable(h), ob = observable(b);
    const double a = gen.uniform(0.0, 1.0);
    EXPECT_NEAR(variance(rho, oh), oracle::variance(p, h), 1e-12);
    EXPECT_LE(std::abs(covariance(rho, oh, ob) - oracle::covariance(p, h, b)), 1e-12);
    EXPECT_NEAR(wyd_skew(rho, oh, a), oracle::wyd_skew(p, h, a), 1e-12);
    EXPECT_NEAR(j_quantity(rho, oh), oracle::j_quantity(p, h), 1e-12);
    EXPECT_NEAR(u_quantity_alpha(rho, oh, a), oracle::u_quantity(p, h, a), 1e-9);
    EXPECT_LE(std::abs(corr_alpha(rho, h, b, a) - oracle::corr_alpha(p, h, b, a)), 1e-12);
    EXPECT_LE(std::abs(fg_corr(rho, h, b, ScalarFnSpec::mix(a), ScalarFnSpec::power(0.4)) -
                       oracle::corr_fg(p, h, b, oracle::mix(a), oracle::power(0.4))),
              1e-12);
    const oracle::Vec x = gen.positive(n), y = gen.positive(n);
    EXPECT_NEAR(l_quantity(HermMatrix::diagonal(x), HermMatrix::diagonal(y), oh, a), oracle::l_quantity(x, y, h, a), 1e-11);
  }
}

TEST(Oracle, NonDiagonalStateViaEigenbasis) {
  oracle::Gen gen(59);
  for (int k = 0; k < 40; ++k) {
    const int n = 2 + k % 4;
    const oracle::Mat r = gen.density(n), a = gen.hermitian(n), b = gen.hermitian(n);
    const oracle::Basis basis = oracle::to_eigenbasis(r, a, b);
    const DensityMatrix rho = density(r);
    const Observable oa = observable(a);
    const double al = gen.uniform(0.0, 1.0);
    EXPECT_NEAR(wyd_skew(rho, oa, al), oracle::wyd_skew(basis.p, basis.a, al), 1e-10);
    EXPECT_NEAR(j_quantity(rho, oa), oracle::j_quantity(basis.p, basis.a), 1e-10);
    EXPECT_LE(std::abs(corr_alpha(rho, a, b, al) - oracle::corr_alpha(basis.p, basis.a, basis.b, al)), 1e-10);
  }
}
