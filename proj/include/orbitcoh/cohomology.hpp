#pragma once

// Dimension rules for H^1 and H^2 of nilpotent orbits.
//
// H^2(O_X) is isomorphic to the K/K^0-fixed part of (z(k) n [m,m])^*, so
// dim H^2 <= dim z(k) always. The orbit type decides how much more is known:
//
//   type I    z(k) != 0, K/K^0 trivial, m semisimple   H^2 = dim z(k)
//   type II   z(k) != 0 otherwise                      H^2 <= dim z(k)
//   type III  z(k) == 0                                H^2 = 0
//
// H^1 is 1 exactly when k + [m,m] is a proper subspace of m, which needs a
// center in m; only E6(-14) and E7(-25) have one.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitcoh/catalog.hpp"

namespace orbitcoh::cohomology {

enum class OrbitType { kI, kII, kIII };

std::string to_string(OrbitType t);

/// Exact value or upper bound. A bound is never reported as a value.
struct CohomologyValue {
  enum class Kind { kExact, kUpperBound };

  Kind kind = Kind::kExact;
  int n = 0;

  static CohomologyValue exact(int n) { return {Kind::kExact, n}; }
  static CohomologyValue upper_bound(int n) { return {Kind::kUpperBound, n}; }

  bool is_exact() const { return kind == Kind::kExact; }
  /// "exact 3" / "upper-bound 1"
  std::string to_string() const;
  std::string kind_name() const { return is_exact() ? "exact" : "upper-bound"; }

  friend bool operator==(const CohomologyValue&, const CohomologyValue&) = default;
};

/// An unknown component group is treated like a nontrivial one: the bound
/// still holds but exactness cannot be claimed.
OrbitType classify(int dim_z_k, catalog::ComponentGroup component_group, bool m_semisimple);

CohomologyValue h2(const catalog::OrbitRecord& record, const catalog::RealFormDescriptor& algebra);
CohomologyValue h2_remainder(const catalog::RemainderClass& rc,
                             const catalog::RealFormDescriptor& algebra);

CohomologyValue h1(const catalog::OrbitRecord& record, const catalog::RealFormDescriptor& algebra);
CohomologyValue h1_remainder(const catalog::RemainderClass& rc,
                             const catalog::RealFormDescriptor& algebra);

struct OrbitCohomology {
  CohomologyValue h1;
  CohomologyValue h2;
};

/// The zero orbit is a point.
OrbitCohomology zero_orbit_cohomology();

/// Cohomology of the orbit with the given characteristic. The all-zero label
/// is the zero orbit; other labels go through Catalog::lookup and may throw
/// UnlistedLabel.
OrbitCohomology query(const catalog::Catalog& catalog, std::string_view algebra,
                      const catalog::OrbitLabel& label);

struct TableRow {
  std::string label;  // characteristic, or "(N unlisted)" for a remainder class
  bool remainder = false;
  int count = 1;
  int dim_z_k = 0;
  catalog::ComponentGroup component_group = catalog::ComponentGroup::kUnknown;
  OrbitType type = OrbitType::kIII;
  CohomologyValue h2;
  CohomologyValue h1;
  std::string provenance;
};

/// Explicit records in dataset order, then remainder classes.
std::vector<TableRow> theorem_table(const catalog::Catalog& catalog, std::string_view algebra);

struct Summary {
  int orbits = 0;
  int type_i = 0;
  int type_ii = 0;
  int type_iii = 0;
  int exact = 0;
  int upper_bound = 0;
  int h1_nonzero = 0;
  int explicit_records = 0;
  int remainder_orbits = 0;
};

/// Aggregates over one algebra, or over the whole catalog when `algebra` is empty.
Summary summary(const catalog::Catalog& catalog, std::optional<std::string_view> algebra);

}  // namespace orbitcoh::cohomology
