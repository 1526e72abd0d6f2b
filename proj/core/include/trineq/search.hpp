#pragma once

// Gradient-free gap minimization: random restarts plus multiplicative
// entrywise perturbation of the factors that generate each input matrix.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "trineq/evaluate.hpp"
#include "trineq/sampling.hpp"

namespace trineq {

struct SearchParams {
  std::vector<double> nu_grid;     // empty: {0.5}
  std::vector<double> alpha_grid;  // empty: {0.5}; also the s grid for audenaert_raw
  std::optional<ScalarFnSpec> f, g;
  unsigned workers = 1;
  // Evaluations without improvement before the current point is replaced by
  // a fresh sample; 0 picks max(100, budget / 20).
  std::size_t restart_after = 0;
};

struct SearchRecord {
  InequalityId id = InequalityId::prop22_upper;
  double best_gap = 0.0;
  CaseInputs best_inputs;
  std::size_t evaluations = 0;
  std::uint64_t seed = 0;            // seed of the worker that found best_gap
  std::vector<double> best_history;  // running minimum after each evaluation of that worker
};

// Input matrices follow the id: pd pairs for prop22/furuta/cmp_upper, psd
// pairs for prop23/prop31/lemma33/audenaert, Loewner chains for
// thm32/op_lb_matrix/cmp_lower, (density, observable, observable) for the
// uncertainty family. spec.kind = unit_trace_pair, psd or pd overrides the
// pair kind (loewner_chain forces chains); density and observable keep the
// defaults. Factor Frobenius norms are capped at 4 * dim.
// DomainError for budget 0 and for the variational ids.
SearchRecord minimize_gap(InequalityId id, const SampleSpec& spec, std::size_t budget,
                          const SearchParams& params = {});

// evaluate_gap on the recorded inputs.
double replay(const SearchRecord& record);

}  // namespace trineq
