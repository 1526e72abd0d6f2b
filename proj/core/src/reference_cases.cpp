#include "trineq/reference_cases.hpp"

#include <array>
#include <cmath>
#include <cstdio>

namespace trineq {

namespace {

using I = InequalityId;
using E = Expectation;

constexpr std::array<ReferenceCase, 7> kCases{{
    {"p2_counterexample", I::cmp_upper_bounds, E::violated,
     "Tr[X #_nu Y] vs (1/2)Tr[X+Y-|X-Y|], X=[[10,7],[7,5]], Y=[[16,6],[6,3]], nu=1/2"},
    {"p3_comparison_nu01", I::cmp_lower_bounds, E::holds,
     "lower-bound comparison, X=[[10,5],[5,5]], Y=diag(1,2), nu=0.1"},
    {"p3_comparison_nu09", I::cmp_lower_bounds, E::violated,
     "lower-bound comparison, X=[[10,5],[5,5]], Y=diag(1,2), nu=0.9"},
    {"remark_I_i", I::op_lb_matrix, E::violated,
     "min eigenvalue of X - Y + I - Y^-1/2 X Y^-1/2, X=[[2,1],[1,4]], Y=diag(1,2)"},
    {"remark_I_ii", I::op_lb_matrix, E::violated,
     "min eigenvalue of X - Y + I - Y^-1/2 X Y^-1/2, X=(1/9)[[2,1],[1,5]], Y=(1/3)diag(1,2)"},
    {"remark_II", I::thm32_lower, E::violated,
     "Tr[X - Y + I - Y^-1/2 X Y^-1/2], X=(1/15)[[10,-3],[-3,10]], Y=(1/10)[[1,1],[1,2]]"},
    {"cex41", I::ul_wy_known_false, E::violated,
     "I(A) I(B) vs (1/4)|Tr[rho[A,B]]|^2, rho=diag(3/4,1/4), A=[[0,i],[-i,0]], B=[[0,1],[1,0]]"},
}};

HermMatrix rows(std::initializer_list<std::initializer_list<Complex>> r) {
  return HermMatrix::from_rows(r);
}

ReferenceFact value_fact(std::string label, double expected, std::string text, double computed,
                         double tol) {
  ReferenceFact f;
  f.label = std::move(label);
  f.expected = expected;
  f.expected_text = std::move(text);
  f.computed = computed;
  f.difference = std::abs(computed - expected);
  f.tolerance = tol;
  f.pass = f.difference <= tol;
  return f;
}

ReferenceFact negative_fact(std::string label, double computed, double bound) {
  ReferenceFact f;
  f.label = std::move(label);
  char buf[32];
  std::snprintf(buf, sizeof buf, "< %g", bound);
  f.expected_text = buf;
  f.computed = computed;
  f.tolerance = bound;
  f.pass = computed < bound;
  return f;
}

}  // namespace

std::span<const ReferenceCase> reference_cases() { return kCases; }

const ReferenceCase& find_reference_case(std::string_view name) {
  for (const auto& c : kCases) {
    if (c.name == name) return c;
  }
  throw DomainError("unknown reference case '" + std::string(name) + "'");
}

CaseInputs reference_inputs(std::string_view name) {
  find_reference_case(name);
  CaseInputs in;
  if (name == "p2_counterexample") {
    in.set("x", rows({{10, 7}, {7, 5}}));
    in.set("y", rows({{16, 6}, {6, 3}}));
    in.nu = 0.5;
  } else if (name == "p3_comparison_nu01" || name == "p3_comparison_nu09") {
    in.set("x", rows({{10, 5}, {5, 5}}));
    in.set("y", HermMatrix::diagonal({1.0, 2.0}));
    in.nu = name == "p3_comparison_nu01" ? 0.1 : 0.9;
  } else if (name == "remark_I_i") {
    in.set("x", rows({{2, 1}, {1, 4}}));
    in.set("y", HermMatrix::diagonal({1.0, 2.0}));
    in.nu = 1.0;
  } else if (name == "remark_I_ii") {
    in.set("x", (1.0 / 9.0) * rows({{2, 1}, {1, 5}}));
    in.set("y", (1.0 / 3.0) * HermMatrix::diagonal({1.0, 2.0}));
    in.nu = 1.0;
  } else if (name == "remark_II") {
    in.set("x", (1.0 / 15.0) * rows({{10, -3}, {-3, 10}}));
    in.set("y", (1.0 / 10.0) * rows({{1, 1}, {1, 2}}));
    in.nu = 1.0;
    in.hypothesis = HypothesisPolicy::skip;
  } else if (name == "cex41") {
    in.set("rho", HermMatrix::diagonal({0.75, 0.25}));
    in.set("a", rows({{0, Complex(0, 1)}, {Complex(0, -1), 0}}));
    in.set("b", rows({{0, 1}, {1, 0}}));
  }
  return in;
}

bool Reproduction::pass() const {
  for (const auto& f : facts) {
    if (!f.pass) return false;
  }
  return !facts.empty() && !report.unexpected();
}

Reproduction reproduce(std::string_view name) {
  const ReferenceCase& c = find_reference_case(name);
  const CaseInputs in = reference_inputs(name);
  Reproduction out;
  out.name = std::string(name);
  out.report = evaluate_gap(c.id, in);
  out.report.expectation = c.expectation;
  out.report.provenance.case_name = out.name;

  const double gap = out.report.gap;
  if (name == "p2_counterexample") {
    out.facts.push_back(value_fact("gap", -0.510619, "-0.510619", gap, 1e-5));
  } else if (name == "p3_comparison_nu01") {
    out.facts.push_back(value_fact("gap", 0.508133, "0.508133", gap, 1e-5));
  } else if (name == "p3_comparison_nu09") {
    out.facts.push_back(value_fact("gap", -1.1696, "-1.1696", gap, 1e-3));
  } else if (name == "remark_I_i" || name == "remark_I_ii") {
    out.facts.push_back(negative_fact("min eigenvalue", gap, -1e-6));
  } else if (name == "remark_II") {
    const double tr = op_lb_trace(in.matrix("x"), in.matrix("y"), Deformation(1.0));
    out.facts.push_back(value_fact("trace", -20.9667, "-20.9667", tr, 1e-3));
  } else if (name == "cex41") {
    const double lhs_exact = std::pow(1.0 - std::sqrt(3.0) / 2.0, 2);
    out.facts.push_back(value_fact("I(A)I(B)", lhs_exact, "(1-sqrt(3)/2)^2", out.report.lhs, 1e-10));
    out.facts.push_back(value_fact("|Tr[rho[A,B]]|^2/4", 0.25, "1/4", out.report.rhs, 1e-10));
  }
  return out;
}

std::vector<Reproduction> reproduce_all() {
  std::vector<Reproduction> out;
  for (const auto& c : kCases) out.push_back(reproduce(c.name));
  return out;
}

}  // namespace trineq
