#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "test_support.hpp"
#include "trineq/reference_cases.hpp"

using namespace trineq;

TEST(Registry, NamesAndLookup) {
  EXPECT_EQ(reference_cases().size(), 7u);
  for (const auto& c : reference_cases()) {
    EXPECT_EQ(find_reference_case(c.name).id, c.id);
    const CaseInputs in = reference_inputs(c.name);
    for (const auto& key : required_matrices(c.id)) EXPECT_TRUE(in.matrices.count(key)) << c.name << " " << key;
  }
  EXPECT_THROW(find_reference_case("nope"), DomainError);
  EXPECT_THROW(reference_inputs("nope"), DomainError);
}

TEST(Reproduce, AllPass) {
  for (const auto& rep : reproduce_all()) {
    EXPECT_TRUE(rep.pass()) << rep.name;
    for (const auto& f : rep.facts) EXPECT_TRUE(f.pass) << rep.name << " " << f.label << " " << f.computed;
  }
}

TEST(Reproduce, PrintedValues) {
  EXPECT_NEAR(reproduce("p2_counterexample").report.gap, -0.510619, 1e-5);
  EXPECT_NEAR(reproduce("p3_comparison_nu01").report.gap, 0.508133, 1e-5);
  EXPECT_NEAR(reproduce("p3_comparison_nu09").report.gap, -1.1696, 1e-3);
  const Reproduction cex = reproduce("cex41");
  EXPECT_NEAR(cex.report.lhs, std::pow(1.0 - std::sqrt(3.0) / 2.0, 2), 1e-10);
  EXPECT_NEAR(cex.report.rhs, 0.25, 1e-10);
  EXPECT_FALSE(cex.report.holds);
  EXPECT_LT(reproduce("remark_I_i").report.gap, -1e-6);
  EXPECT_LT(reproduce("remark_I_ii").report.gap, -1e-6);
  bool found = false;
  for (const auto& f : reproduce("remark_II").facts) {
    if (std::abs(f.computed + 20.9667) < 1e-3) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(Fixtures, RationalEntriesMatchSource) {
  const CaseInputs r2 = reference_inputs("remark_II");
  EXPECT_EQ(r2.matrix("x")(0, 0).real(), 10.0 / 15.0);
  EXPECT_EQ(r2.matrix("x")(0, 1).real(), -3.0 / 15.0);
  EXPECT_EQ(r2.matrix("y")(1, 1).real(), 2.0 / 10.0);
  const CaseInputs r1 = reference_inputs("remark_I_ii");
  EXPECT_EQ(r1.matrix("x")(1, 1).real(), 5.0 / 9.0);
  EXPECT_EQ(r1.matrix("y")(0, 0).real(), 1.0 / 3.0);

  std::ifstream in(testing_support::data_file("remark_II_x.json"));
  ASSERT_TRUE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find("rational"), std::string::npos);
}
