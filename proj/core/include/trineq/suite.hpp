#pragma once

// Seeded property suite over every inequality id.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "trineq/inequalities.hpp"

namespace trineq {

std::vector<double> default_nu_grid();     // 0.1, 0.2, ..., 1.0
std::vector<double> default_alpha_grid();  // 0, 0.1, ..., 1

struct RunConfig {
  std::uint64_t seed = 42;
  int samples = 100;
  std::vector<Index> dims{2, 3};
  std::vector<double> nu_grid = default_nu_grid();
  std::vector<double> alpha_grid = default_alpha_grid();
  std::optional<double> rel_tol;  // overrides every report's relative tolerance
  bool include_reference_cases = true;
  bool include_trivial_cases = true;
  int variational_candidates = 20;
  unsigned threads = 1;
  std::vector<InequalityId> ids;  // empty: all

  // DomainError on dims outside {2..6}, nu outside (0,1], alpha outside
  // [0,1], negative samples.
  void validate() const;
};

// Reports in (id, case-index) order: reference cases, trivial cases, then one
// report per random sample holding the worst gap over the parameter grid.
// Deterministic for a fixed config regardless of thread count.
std::vector<GapReport> run_suite(const RunConfig& config);
std::vector<GapReport> run_suite_for(InequalityId id, const RunConfig& config);

struct SuiteSummary {
  std::size_t reports = 0;
  std::size_t violations = 0;  // applicable reports that do not hold
  std::size_t unexpected = 0;
  std::size_t not_applicable = 0;
  std::size_t errors = 0;
  bool ok() const { return unexpected == 0; }
};

SuiteSummary summarize(std::span<const GapReport> reports);

}  // namespace trineq
