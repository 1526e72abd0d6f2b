#include "trineq/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

namespace trineq {

const HermMatrix& CaseInputs::matrix(std::string_view key) const {
  const auto it = matrices.find(key);
  if (it == matrices.end()) throw DomainError("missing input matrix --" + std::string(key));
  return it->second;
}

double CaseInputs::param(std::string_view key) const {
  const std::optional<double>* slot = nullptr;
  if (key == "nu") slot = &nu;
  else if (key == "alpha") slot = &alpha;
  else if (key == "s") slot = &s;
  else if (key == "t") slot = &t;
  else if (key == "d") slot = &d;
  if (slot == nullptr || !slot->has_value()) {
    throw DomainError("missing parameter --" + std::string(key));
  }
  return **slot;
}

std::vector<std::string> required_matrices(InequalityId id) {
  using I = InequalityId;
  switch (id) {
    case I::audenaert_raw: return {"a", "b"};
    case I::lemma34_variational_i: return {"a", "y"};
    case I::lemma34_variational_ii: return {"x", "b"};
    case I::thm42_fg:
    case I::cor43_k: return {"rho", "a", "b"};
    default:
      if (is_uncertainty_id(id)) return {"rho", "a", "b"};
      return {"x", "y"};
  }
}

std::vector<std::string> required_params(InequalityId id) {
  using I = InequalityId;
  switch (id) {
    case I::audenaert_raw: return {"s"};
    case I::lemma34_variational_i: return {"nu", "d"};
    case I::yanagi_u_alpha:
    case I::wyd_corr_bound_alpha:
    case I::cor43_k: return {"alpha"};
    case I::thm42_fg: return {};
    default:
      if (is_uncertainty_id(id)) return {};
      return {"nu"};
  }
}

namespace {

DensityMatrix rho_of(const CaseInputs& in) { return DensityMatrix(in.matrix("rho")); }
Observable obs(const CaseInputs& in, std::string_view key) { return Observable(in.matrix(key)); }
Deformation nu_of(const CaseInputs& in) { return Deformation(in.param("nu")); }

double ratio(const GapReport& r) { return r.gap / r.tolerance; }

GapReport fold_variational(const VariationalReport& v) {
  GapReport r = v.dominance;
  if (!v.maximizer_matches) r.holds = false;
  r.detail.push_back({"maximizer_error", v.maximizer_error});
  return r;
}

}  // namespace

GapReport evaluate_gap(InequalityId id, const CaseInputs& in) {
  using I = InequalityId;
  switch (id) {
    case I::prop22_upper: return gap_prop22(in.matrix("x"), in.matrix("y"), nu_of(in));
    case I::furuta_upper_chain: {
      auto [lower, upper] = gap_furuta_chain(in.matrix("x"), in.matrix("y"), nu_of(in));
      GapReport r = ratio(lower) <= ratio(upper) ? lower : upper;
      r.detail.push_back({"lower_gap", lower.gap});
      r.detail.push_back({"upper_gap", upper.gap});
      return r;
    }
    case I::prop23_audenaert_upper: return gap_prop23(in.matrix("x"), in.matrix("y"), nu_of(in));
    case I::audenaert_raw: return gap_audenaert(in.matrix("a"), in.matrix("b"), in.param("s"));
    case I::cmp_upper_bounds: return gap_cmp_upper(in.matrix("x"), in.matrix("y"), nu_of(in));
    case I::prop31_peierls_bogoliubov: return gap_prop31(in.matrix("x"), in.matrix("y"), nu_of(in));
    case I::thm32_lower: return gap_thm32(in.matrix("x"), in.matrix("y"), nu_of(in), in.hypothesis);
    case I::op_lb_matrix: return gap_op_lb_matrix(in.matrix("x"), in.matrix("y"), nu_of(in));
    case I::lemma33_golden_thompson: return gap_lemma33(in.matrix("x"), in.matrix("y"), nu_of(in));
    case I::lemma34_variational_i:
      return fold_variational(check_variational_i(in.matrix("a"), in.matrix("y"), in.param("d"),
                                                  nu_of(in), in.samples, in.seed));
    case I::lemma34_variational_ii:
      return fold_variational(
          check_variational_ii(in.matrix("x"), in.matrix("b"), nu_of(in), in.samples, in.seed));
    case I::cmp_lower_bounds: return gap_cmp_lower(in.matrix("x"), in.matrix("y"), nu_of(in));
    case I::thm42_fg: {
      if (in.f && in.g) return gap_thm42(rho_of(in), obs(in, "a"), obs(in, "b"), *in.f, *in.g);
      if (in.f || in.g) throw DomainError("thm42_fg needs both --f and --g");
      const double a = in.param("alpha");
      return gap_thm42(rho_of(in), obs(in, "a"), obs(in, "b"), ScalarFnSpec::power(a),
                       ScalarFnSpec::power(1.0 - a));
    }
    case I::cor43_k: return gap_cor43(rho_of(in), obs(in, "a"), obs(in, "b"), in.param("alpha"));
    default:
      return gap_uncertainty(id, rho_of(in), obs(in, "a"), obs(in, "b"), in.alpha);
  }
}

namespace {

using QuantityFn = std::function<QuantityValue(const CaseInputs&)>;

const std::vector<std::pair<std::string_view, QuantityFn>>& catalogue() {
  static const std::vector<std::pair<std::string_view, QuantityFn>> table = {
      {"tsallis", [](const CaseInputs& in) -> QuantityValue {
         return tsallis_rel_entropy(in.matrix("x"), in.matrix("y"), nu_of(in));
       }},
      {"umegaki", [](const CaseInputs& in) -> QuantityValue {
         return umegaki_rel_entropy(in.matrix("x"), in.matrix("y"));
       }},
      {"tsallis-operator", [](const CaseInputs& in) -> QuantityValue {
         return tsallis_rel_operator_entropy(in.matrix("x"), in.matrix("y"), nu_of(in));
       }},
      {"power-mean", [](const CaseInputs& in) -> QuantityValue {
         return power_mean(in.matrix("x"), in.matrix("y"), in.param("nu"));
       }},
      {"ln-nu", [](const CaseInputs& in) -> QuantityValue { return ln_nu_op(in.matrix("x"), nu_of(in)); }},
      {"exp-nu", [](const CaseInputs& in) -> QuantityValue { return exp_nu_op(in.matrix("x"), nu_of(in)); }},
      {"frac-power", [](const CaseInputs& in) -> QuantityValue {
         return frac_power(in.matrix("x"), in.param("t"));
       }},
      {"expectation", [](const CaseInputs& in) -> QuantityValue {
         return expectation(rho_of(in), obs(in, "h"));
       }},
      {"variance", [](const CaseInputs& in) -> QuantityValue { return variance(rho_of(in), obs(in, "h")); }},
      {"covariance", [](const CaseInputs& in) -> QuantityValue {
         return covariance(rho_of(in), obs(in, "a"), obs(in, "b"));
       }},
      {"wy-skew", [](const CaseInputs& in) -> QuantityValue {
         return wy_skew(rho_of(in), obs(in, in.matrices.count("h") ? "h" : "a"));
       }},
      {"wyd-skew", [](const CaseInputs& in) -> QuantityValue {
         return wyd_skew(rho_of(in), obs(in, in.matrices.count("h") ? "h" : "a"), in.param("alpha"));
       }},
      {"j", [](const CaseInputs& in) -> QuantityValue { return j_quantity(rho_of(in), obs(in, "h")); }},
      {"u", [](const CaseInputs& in) -> QuantityValue { return u_quantity(rho_of(in), obs(in, "h")); }},
      {"u-alpha", [](const CaseInputs& in) -> QuantityValue {
         return u_quantity_alpha(rho_of(in), obs(in, "h"), in.param("alpha"));
       }},
      {"corr", [](const CaseInputs& in) -> QuantityValue {
         return corr(rho_of(in), in.matrix("a").matrix(), in.matrix("b").matrix());
       }},
      {"corr-alpha", [](const CaseInputs& in) -> QuantityValue {
         return corr_alpha(rho_of(in), in.matrix("a").matrix(), in.matrix("b").matrix(), in.param("alpha"));
       }},
      {"fg-skew", [](const CaseInputs& in) -> QuantityValue {
         if (!in.f || !in.g) throw DomainError("fg-skew needs --f and --g");
         return fg_skew(rho_of(in), obs(in, "h"), *in.f, *in.g);
       }},
      {"fg-corr", [](const CaseInputs& in) -> QuantityValue {
         if (!in.f || !in.g) throw DomainError("fg-corr needs --f and --g");
         return fg_corr(rho_of(in), in.matrix("a").matrix(), in.matrix("b").matrix(), *in.f, *in.g);
       }},
      {"k-skew", [](const CaseInputs& in) -> QuantityValue {
         return k_skew(rho_of(in), obs(in, "h"), in.param("alpha"));
       }},
      {"corr-k", [](const CaseInputs& in) -> QuantityValue {
         return corr_k(rho_of(in), in.matrix("a").matrix(), in.matrix("b").matrix(), in.param("alpha"));
       }},
      {"l", [](const CaseInputs& in) -> QuantityValue {
         return l_quantity(in.matrix("x"), in.matrix("y"), obs(in, "h"), in.param("t"));
       }},
  };
  return table;
}

}  // namespace

std::vector<std::string_view> quantity_names() {
  std::vector<std::string_view> out;
  for (const auto& [name, fn] : catalogue()) out.push_back(name);
  return out;
}

QuantityValue evaluate_quantity(std::string_view name, const CaseInputs& in) {
  for (const auto& [key, fn] : catalogue()) {
    if (key == name) return fn(in);
  }
  throw DomainError("unknown quantity '" + std::string(name) + "'");
}

}  // namespace trineq
