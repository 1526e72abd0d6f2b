#pragma once

// Trace inequalities as signed-gap predicates.
//
// Every gap is oriented so that gap >= -tolerance exactly when the
// inequality holds on the given inputs. The default tolerance is
// 1e-9 * max(1, |lhs|, |rhs|).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trineq/deformed.hpp"
#include "trineq/matrix.hpp"
#include "trineq/quantities.hpp"

namespace trineq {

enum class InequalityId {
  prop22_upper,
  furuta_upper_chain,
  prop23_audenaert_upper,
  audenaert_raw,
  cmp_upper_bounds,
  prop31_peierls_bogoliubov,
  thm32_lower,
  op_lb_matrix,
  lemma33_golden_thompson,
  lemma34_variational_i,
  lemma34_variational_ii,
  cmp_lower_bounds,
  heisenberg,
  schrodinger,
  luo_u,
  yanagi_u_alpha,
  furuichi_schrodinger_u,
  wy_corr_bound,
  wyd_corr_bound_alpha,
  thm42_fg,
  cor43_k,
  ul_wy_known_false,
};

std::span<const InequalityId> all_inequalities();
std::string_view to_string(InequalityId id);
// Exact name, or a prefix that matches exactly one name at an underscore
// boundary ("prop22" -> prop22_upper).
std::optional<InequalityId> parse_inequality_id(std::string_view text);

// False for the comparisons that are known to fail on some inputs:
// cmp_upper_bounds, cmp_lower_bounds, op_lb_matrix, ul_wy_known_false.
bool is_proved(InequalityId id);

enum class Expectation { holds, violated, none };
std::string_view to_string(Expectation e);

inline constexpr double kDefaultRelTol = 1e-9;
inline constexpr double kVariationalRelTol = 1e-8;

struct Provenance {
  std::string case_name;              // reference case name or "random#<index>"
  std::optional<std::uint64_t> seed;  // sub-seed for sampled inputs
  Index dim = 0;
  std::string params;                 // e.g. "nu=0.3"
};

struct GapTerm {
  std::string name;
  double value = 0.0;
};

struct GapReport {
  InequalityId id = InequalityId::prop22_upper;
  Provenance provenance;
  double lhs = 0.0;  // sides as displayed
  double rhs = 0.0;
  double gap = 0.0;  // positive = satisfied with slack
  double rel_tol = kDefaultRelTol;
  double tolerance = 0.0;
  bool holds = true;
  Expectation expectation = Expectation::none;
  // False when the inputs fall outside the inequality's scope (e.g. h = 1 in
  // the Kantorovich chain); such reports never count as violations.
  bool applicable = true;
  std::string note;
  std::vector<GapTerm> detail;

  // Holds-expected but violated, violated-expected but holds, or an error.
  bool unexpected() const;
  double term(std::string_view name) const;
};

// Displayed "lhs >= rhs": gap = lhs - rhs.
GapReport make_geq_report(InequalityId id, double lhs, double rhs, double rel_tol = kDefaultRelTol);
// Displayed "lhs <= rhs": gap = rhs - lhs.
GapReport make_leq_report(InequalityId id, double lhs, double rhs, double rel_tol = kDefaultRelTol);
// Recomputes tolerance and verdict for a new relative tolerance factor.
void retolerance(GapReport& report, double rel_tol);

// D_nu(X|Y) <= -Tr[X ln_nu(X^{-1/2} Y X^{-1/2})].
GapReport gap_prop22(const HermMatrix& x, const HermMatrix& y, Deformation nu);

// Both links of
//   D_nu <= -Tr[X ln_nu(X^{-1/2} Y X^{-1/2})]
//        <= ((1 - K(nu,h))/nu) Tr[X]^{1-nu} Tr[Y]^nu + D_nu.
// HypothesisError when h <= 1 + 1e-9.
std::pair<GapReport, GapReport> gap_furuta_chain(const HermMatrix& x, const HermMatrix& y,
                                                 Deformation nu);

// Tr[A^s B^{1-s}] >= (1/2) Tr[A + B - |A - B|].
GapReport gap_audenaert(const HermMatrix& a, const HermMatrix& b, double s);
// D_nu(X|Y) <= Tr[(X - Y)_+] / nu.
GapReport gap_prop23(const HermMatrix& x, const HermMatrix& y, Deformation nu);
// Tr[X #_nu Y] >= (1/2) Tr[X + Y - |X - Y|]; refuted, no expectation.
GapReport gap_cmp_upper(const HermMatrix& x, const HermMatrix& y, Deformation nu);
// D_nu(X|Y) >= (Tr[X] - Tr[X]^{1-nu} Tr[Y]^nu) / nu.
GapReport gap_prop31(const HermMatrix& x, const HermMatrix& y, Deformation nu);

enum class HypothesisPolicy { enforce, skip };

// D_nu(X|Y) >= Tr[X^{1-nu} ln_nu(Y^{-1/2} X Y^{-1/2})] under I <= Y <= X.
// With HypothesisPolicy::enforce a failed order link raises HypothesisError
// naming the link.
GapReport gap_thm32(const HermMatrix& x, const HermMatrix& y, Deformation nu,
                    HypothesisPolicy policy = HypothesisPolicy::enforce);
// X^nu - Y^nu + I - (Y^{-1/2} X Y^{-1/2})^nu.
HermMatrix op_lb_matrix(const HermMatrix& x, const HermMatrix& y, Deformation nu);
double min_eig_op_lb(const HermMatrix& x, const HermMatrix& y, Deformation nu);
// Tr[X^{1-nu} op_lb_matrix]; equals nu times the thm32 gap.
double op_lb_trace(const HermMatrix& x, const HermMatrix& y, Deformation nu);
// The matrix inequality op_lb_matrix >= 0: gap = min eigenvalue. Refuted.
GapReport gap_op_lb_matrix(const HermMatrix& x, const HermMatrix& y, Deformation nu);

// Tr[exp_nu(X + Y)] <= Tr[exp_nu(X) exp_nu(Y)].
GapReport gap_lemma33(const HermMatrix& x, const HermMatrix& y, Deformation nu);

// Variational check outcome: the dominance report (gap = min over candidates
// of closed form minus candidate value) plus the maximizer sub-check.
struct VariationalReport {
  GapReport dominance;
  double closed_form = 0.0;
  std::optional<double> maximizer_value;  // absent when the maximizer is not admissible
  double maximizer_error = 0.0;
  double maximizer_tolerance = 0.0;
  bool maximizer_matches = true;
  int candidates = 0;

  bool holds() const { return dominance.holds && maximizer_matches; }
};

// d ln_nu(Tr[exp_nu(A + ln_nu Y)] / d) = max { Tr[X^{1-nu} A] - D_nu(X|Y) : X >= 0, Tr X = d }.
VariationalReport check_variational_i(const HermMatrix& a, const HermMatrix& y, double d,
                                      Deformation nu, int samples, std::uint64_t seed);
// D_nu(X|exp_nu(B)) = max { Tr[X^{1-nu} A] - d ln_nu(Tr[exp_nu(A + B)] / d) : A >= 0 }, d = Tr X.
VariationalReport check_variational_ii(const HermMatrix& x, const HermMatrix& b, Deformation nu,
                                       int samples, std::uint64_t seed);

// F(X) = Tr[X^{1-nu} A] - D_nu(X|Y) and its claimed maximum over Tr X = d.
double variational_objective_i(const HermMatrix& x, const HermMatrix& a, const HermMatrix& y,
                               Deformation nu);
double variational_closed_form_i(const HermMatrix& a, const HermMatrix& y, double d, Deformation nu);
// G(A) = Tr[X^{1-nu} A] - d ln_nu(Tr[exp_nu(A + B)] / d) and D_nu(X|exp_nu(B)).
double variational_objective_ii(const HermMatrix& a, const HermMatrix& x, const HermMatrix& b,
                                Deformation nu);
double variational_closed_form_ii(const HermMatrix& x, const HermMatrix& b, Deformation nu);

// Tr[X^{1-nu}(Y^{-1/2} X Y^{-1/2})^nu] + Tr[X]^{1-nu} Tr[Y]^nu >= Tr[X^{1-nu}] + Tr[X].
// Refuted for some nu.
GapReport gap_cmp_lower(const HermMatrix& x, const HermMatrix& y, Deformation nu);

// The uncertainty-type ids: heisenberg, schrodinger, luo_u, yanagi_u_alpha,
// furuichi_schrodinger_u, wy_corr_bound, wyd_corr_bound_alpha,
// ul_wy_known_false. alpha is required for the alpha-indexed ids.
GapReport gap_uncertainty(InequalityId id, const DensityMatrix& rho, const Observable& a,
                          const Observable& b, std::optional<double> alpha = std::nullopt);
bool is_uncertainty_id(InequalityId id);

// I_{(f,g)}(A) I_{(f,g)}(B) >= |Re Corr_{(f,g)}(A,B)|^2.
GapReport gap_thm42(const DensityMatrix& rho, const Observable& a, const Observable& b,
                    const ScalarFnSpec& f, const ScalarFnSpec& g);
// thm42 with f = g = mix(alpha).
GapReport gap_cor43(const DensityMatrix& rho, const Observable& a, const Observable& b,
                    double alpha);

// Pairs exercised for thm42 at a given alpha:
// (power(a), power(1-a)), (mix(a), mix(a)), (power(a), power(a)), (power(a), mix(a)).
std::vector<std::pair<ScalarFnSpec, ScalarFnSpec>> builtin_monotonic_pairs(double alpha);

}  // namespace trineq
