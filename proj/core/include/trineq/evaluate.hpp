#pragma once

// Name-keyed evaluation of gaps and quantities from a bag of inputs, shared
// by the command line, the search loop and replay.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trineq/inequalities.hpp"

namespace trineq {

struct CaseInputs {
  // Keys: "x", "y", "rho", "a", "b", "h".
  std::map<std::string, HermMatrix, std::less<>> matrices;
  std::optional<double> nu, alpha, s, t, d;
  std::optional<ScalarFnSpec> f, g;
  HypothesisPolicy hypothesis = HypothesisPolicy::enforce;
  int samples = 200;       // variational candidates
  std::uint64_t seed = 0;  // variational candidate stream

  // DomainError naming the missing input.
  const HermMatrix& matrix(std::string_view key) const;
  double param(std::string_view key) const;
  void set(std::string key, HermMatrix m) { matrices.insert_or_assign(std::move(key), std::move(m)); }
};

// Matrices an id reads, in a stable order.
std::vector<std::string> required_matrices(InequalityId id);
// Scalar parameters an id reads ("nu", "alpha", "s", "d").
std::vector<std::string> required_params(InequalityId id);

// Furuta chain: the link with the smaller gap/tolerance ratio, both gaps in
// the detail. Variational ids: the dominance report, with a failed maximizer
// check folded into holds. thm42 uses (f, g) when given, otherwise
// (power(alpha), power(1 - alpha)).
GapReport evaluate_gap(InequalityId id, const CaseInputs& in);

using QuantityValue = std::variant<double, Complex, HermMatrix>;

// Catalogue of quantity names accepted by evaluate_quantity.
std::vector<std::string_view> quantity_names();
QuantityValue evaluate_quantity(std::string_view name, const CaseInputs& in);

}  // namespace trineq
