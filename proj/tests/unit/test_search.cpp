#include <gtest/gtest.h>

#include "trineq/search.hpp"

using namespace trineq;

TEST(Search, MonotoneHistoryAndReplay) {
  for (InequalityId id : {InequalityId::cmp_upper_bounds, InequalityId::ul_wy_known_false, InequalityId::prop31_peierls_bogoliubov,
                          InequalityId::thm32_lower, InequalityId::audenaert_raw, InequalityId::thm42_fg}) {
    const SearchRecord r = minimize_gap(id, {2, SampleKind::observable, 1.0, 11}, 600);
    EXPECT_EQ(r.evaluations, 600u);
    ASSERT_FALSE(r.best_history.empty());
    for (std::size_t k = 1; k < r.best_history.size(); ++k) EXPECT_LE(r.best_history[k], r.best_history[k - 1]);
    EXPECT_EQ(r.best_history.back(), r.best_gap);
    EXPECT_NEAR(replay(r), r.best_gap, 1e-12) << to_string(id);
  }
}

TEST(Search, Deterministic) {
  const SampleSpec spec{3, SampleKind::observable, 1.0, 5};
  const SearchRecord a = minimize_gap(InequalityId::cmp_upper_bounds, spec, 500);
  const SearchRecord b = minimize_gap(InequalityId::cmp_upper_bounds, spec, 500);
  EXPECT_EQ(a.best_gap, b.best_gap);
  EXPECT_EQ(a.best_history, b.best_history);
  SearchParams p;
  p.workers = 3;
  const SearchRecord c = minimize_gap(InequalityId::cmp_upper_bounds, spec, 600, p);
  const SearchRecord d = minimize_gap(InequalityId::cmp_upper_bounds, spec, 600, p);
  EXPECT_EQ(c.best_gap, d.best_gap);
  EXPECT_EQ(c.seed, d.seed);
  EXPECT_EQ(c.evaluations, 600u);
  EXPECT_NEAR(replay(c), c.best_gap, 1e-12);
}

TEST(Search, InputsRespectKinds) {
  const SearchRecord chain = minimize_gap(InequalityId::thm32_lower, {2, SampleKind::observable, 1.0, 3}, 300);
  const HermMatrix& x = chain.best_inputs.matrix("x");
  const HermMatrix& y = chain.best_inputs.matrix("y");
  EXPECT_TRUE(loewner_leq(HermMatrix::identity(2), y).is_psd());
  EXPECT_TRUE(loewner_leq(y, x).is_psd());

  const SearchRecord unc = minimize_gap(InequalityId::heisenberg, {3, SampleKind::observable, 1.0, 3}, 300);
  EXPECT_NEAR(unc.best_inputs.matrix("rho").trace(), 1.0, 1e-12);

  const SearchRecord pair = minimize_gap(InequalityId::prop31_peierls_bogoliubov, {2, SampleKind::unit_trace_pair, 1.0, 3}, 300);
  EXPECT_NEAR(pair.best_inputs.matrix("x").trace(), 1.0, 1e-12);
  EXPECT_NEAR(pair.best_inputs.matrix("y").trace(), 1.0, 1e-12);
}

TEST(Search, GridParameterIsRecorded) {
  SearchParams p;
  p.nu_grid = {0.2, 0.9};
  const SearchRecord r = minimize_gap(InequalityId::cmp_lower_bounds, {2, SampleKind::observable, 1.0, 9}, 400, p);
  ASSERT_TRUE(r.best_inputs.nu.has_value());
  EXPECT_TRUE(*r.best_inputs.nu == 0.2 || *r.best_inputs.nu == 0.9);
}

TEST(Search, Errors) {
  EXPECT_THROW(minimize_gap(InequalityId::prop22_upper, {}, 0), DomainError);
  EXPECT_THROW(minimize_gap(InequalityId::lemma34_variational_i, {}, 10), DomainError);
  EXPECT_THROW(minimize_gap(InequalityId::lemma34_variational_ii, {}, 10), DomainError);
}

TEST(Search, RediscoversCounterexampleQuickly) {
  SearchParams p;
  p.nu_grid = {0.5};
  const SearchRecord r = minimize_gap(InequalityId::cmp_upper_bounds, {2, SampleKind::observable, 1.0, 7}, 5000, p);
  EXPECT_LT(r.best_gap, -0.1);
}
