#pragma once

// Consistency checks binding the catalog, the cohomology rules and the root
// system engine to frozen reference values.

#include <string>
#include <vector>

#include "json.hpp"

#include "orbitcoh/catalog.hpp"

namespace orbitcoh::validate {

struct CheckResult {
  std::string check_id;
  std::string description;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;  // sorted by check_id

  bool passed() const;
  std::vector<const CheckResult*> failures() const;
  nlohmann::json to_json() const;
};

/// Runs every registered check. Never throws on bad data: a check that hits
/// an exception is reported as failed with the message as detail. Load the
/// catalog with Integrity::kLenient to let count and duplicate problems
/// surface here instead of at load time.
ValidationReport validate_all(const catalog::Catalog& catalog);

/// One clause of a classification theorem as frozen in the registry.
struct ClauseFact {
  const char* algebra;
  int clause;
  int size;  // orbits covered by the clause, listed or not
  int dim_z_k;
  catalog::ComponentGroup component_group;
  bool exact;  // H^2 stated as a value (true) or as a bound (false)
  int h2;
};

const std::vector<ClauseFact>& clause_registry();

}  // namespace orbitcoh::validate
