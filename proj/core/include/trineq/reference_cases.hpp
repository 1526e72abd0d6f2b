#pragma once

// Registry of fixed matrices whose inequality values are known in closed or
// printed form, and their reproduction.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trineq/evaluate.hpp"

namespace trineq {

struct ReferenceCase {
  std::string_view name;
  InequalityId id;
  Expectation expectation;
  std::string_view summary;
};

std::span<const ReferenceCase> reference_cases();
const ReferenceCase& find_reference_case(std::string_view name);  // DomainError if unknown
CaseInputs reference_inputs(std::string_view name);

// One checked number. Values with an expected number compare |computed -
// expected| <= tolerance; sign facts check computed < bound.
struct ReferenceFact {
  std::string label;
  std::optional<double> expected;
  std::string expected_text;
  double computed = 0.0;
  double difference = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Reproduction {
  std::string name;
  GapReport report;
  std::vector<ReferenceFact> facts;
  bool pass() const;
};

Reproduction reproduce(std::string_view name);
std::vector<Reproduction> reproduce_all();

}  // namespace trineq
