#include "orbitcoh/cohomology.hpp"

#include "orbitcoh/error.hpp"

namespace orbitcoh::cohomology {

using catalog::ComponentGroup;

namespace {

void check_owner(const std::string& owner, const catalog::RealFormDescriptor& algebra) {
  if (owner != algebra.name) {
    throw InconsistentInput("record of " + owner + " evaluated against " + algebra.name);
  }
}

CohomologyValue h2_rule(int dim_z_k, ComponentGroup group, bool m_semisimple) {
  switch (classify(dim_z_k, group, m_semisimple)) {
    case OrbitType::kI: return CohomologyValue::exact(dim_z_k);
    case OrbitType::kII: return CohomologyValue::upper_bound(dim_z_k);
    case OrbitType::kIII: return CohomologyValue::exact(0);
  }
  return CohomologyValue::exact(0);
}

CohomologyValue h1_rule(int h1_dim, const std::string& what,
                        const catalog::RealFormDescriptor& algebra) {
  if (algebra.m_semisimple()) {
    if (h1_dim != 0) {
      throw InconsistentInput(what + " has h1 = " + std::to_string(h1_dim) + " but " +
                              algebra.name + " has a semisimple maximal compact subalgebra");
    }
    return CohomologyValue::exact(0);
  }
  return CohomologyValue::exact(h1_dim);
}

}  // namespace

std::string to_string(OrbitType t) {
  switch (t) {
    case OrbitType::kI: return "I";
    case OrbitType::kII: return "II";
    case OrbitType::kIII: return "III";
  }
  return "?";
}

std::string CohomologyValue::to_string() const { return kind_name() + " " + std::to_string(n); }

OrbitType classify(int dim_z_k, ComponentGroup component_group, bool m_semisimple) {
  if (dim_z_k == 0) return OrbitType::kIII;
  if (component_group == ComponentGroup::kTrivial && m_semisimple) return OrbitType::kI;
  return OrbitType::kII;
}

CohomologyValue h2(const catalog::OrbitRecord& record, const catalog::RealFormDescriptor& algebra) {
  check_owner(record.algebra, algebra);
  return h2_rule(record.dim_z_k, record.component_group, algebra.m_semisimple());
}

CohomologyValue h2_remainder(const catalog::RemainderClass& rc,
                             const catalog::RealFormDescriptor& algebra) {
  check_owner(rc.algebra, algebra);
  return h2_rule(rc.dim_z_k, rc.component_group, algebra.m_semisimple());
}

CohomologyValue h1(const catalog::OrbitRecord& record, const catalog::RealFormDescriptor& algebra) {
  check_owner(record.algebra, algebra);
  return h1_rule(record.h1_dim, algebra.name + " orbit " + record.label.to_string(), algebra);
}

CohomologyValue h1_remainder(const catalog::RemainderClass& rc,
                             const catalog::RealFormDescriptor& algebra) {
  check_owner(rc.algebra, algebra);
  return h1_rule(rc.h1_dim, algebra.name + " remainder " + rc.provenance, algebra);
}

OrbitCohomology zero_orbit_cohomology() {
  return {CohomologyValue::exact(0), CohomologyValue::exact(0)};
}

OrbitCohomology query(const catalog::Catalog& catalog, std::string_view algebra,
                      const catalog::OrbitLabel& label) {
  const auto& block = catalog.algebra(algebra);
  if (static_cast<int>(label.entries.size()) == block.descriptor.label_length && label.is_zero()) {
    return zero_orbit_cohomology();
  }
  const auto& record = catalog.lookup(algebra, label);
  return {h1(record, block.descriptor), h2(record, block.descriptor)};
}

std::vector<TableRow> theorem_table(const catalog::Catalog& catalog, std::string_view algebra) {
  const auto& block = catalog.algebra(algebra);
  const auto& d = block.descriptor;
  std::vector<TableRow> rows;
  for (const auto& r : block.records) {
    TableRow row;
    row.label = r.label.to_string();
    row.dim_z_k = r.dim_z_k;
    row.component_group = r.component_group;
    row.type = classify(r.dim_z_k, r.component_group, d.m_semisimple());
    row.h2 = h2(r, d);
    row.h1 = h1(r, d);
    row.provenance = r.provenance;
    rows.push_back(std::move(row));
  }
  for (const auto& rc : block.remainders) {
    TableRow row;
    row.label = "(" + std::to_string(rc.count) + " unlisted)";
    row.remainder = true;
    row.count = rc.count;
    row.dim_z_k = rc.dim_z_k;
    row.component_group = rc.component_group;
    row.type = classify(rc.dim_z_k, rc.component_group, d.m_semisimple());
    row.h2 = h2_remainder(rc, d);
    row.h1 = h1_remainder(rc, d);
    row.provenance = rc.provenance;
    rows.push_back(std::move(row));
  }
  return rows;
}

Summary summary(const catalog::Catalog& catalog, std::optional<std::string_view> algebra) {
  Summary s;
  auto add = [&s](const TableRow& row) {
    s.orbits += row.count;
    (row.remainder ? s.remainder_orbits : s.explicit_records) += row.count;
    switch (row.type) {
      case OrbitType::kI: s.type_i += row.count; break;
      case OrbitType::kII: s.type_ii += row.count; break;
      case OrbitType::kIII: s.type_iii += row.count; break;
    }
    (row.h2.is_exact() ? s.exact : s.upper_bound) += row.count;
    if (row.h1.n != 0) s.h1_nonzero += row.count;
  };
  if (algebra) {
    for (const auto& row : theorem_table(catalog, *algebra)) add(row);
  } else {
    for (const auto& b : catalog.algebras()) {
      for (const auto& row : theorem_table(catalog, b.descriptor.name)) add(row);
    }
  }
  return s;
}

}  // namespace orbitcoh::cohomology
