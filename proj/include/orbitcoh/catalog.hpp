#pragma once

// The orbit catalog: the twelve non-compact non-complex real exceptional Lie
// algebras and their nonzero nilpotent orbits, keyed by characteristic.
//
// Orbits the classification only counts ("the remaining N orbits") are kept
// as RemainderClass blocks. Their labels are not known to the catalog and
// lookups of such labels report UnlistedLabel.

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "orbitcoh/rootsys.hpp"

namespace orbitcoh::catalog {

/// Triviality of K/K^0. kUnknown marks clauses whose source data does not
/// state the component group; it never enters an exact H^2 value.
enum class ComponentGroup { kTrivial, kNonTrivial, kUnknown };

std::string to_string(ComponentGroup g);
ComponentGroup parse_component_group(std::string_view text);

/// Largest |entry| accepted in a characteristic.
inline constexpr int kMaxLabelEntry = 10;

struct OrbitLabel {
  std::vector<int> entries;

  /// Single-digit entries are concatenated; negative or multi-digit entries
  /// are set off by a space: "1011101", "40000 -2", "400004 -10".
  std::string to_string() const;
  bool is_zero() const;

  friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
  friend auto operator<=>(const OrbitLabel&, const OrbitLabel&) = default;
};

struct RealFormDescriptor {
  std::string name;  // "E6(-14)"
  rootsys::CartanType complex_type = rootsys::CartanType::make(rootsys::Family::A, 1);
  std::vector<std::string> compact_summands;  // simple types of [m, m]
  int dim_center_m = 0;
  bool inner = true;
  int label_length = 0;
  int total_nonzero_orbits = 0;

  bool m_semisimple() const { return dim_center_m == 0; }
};

struct OrbitRecord {
  std::string algebra;
  OrbitLabel label;
  int dim_z_k = 0;
  ComponentGroup component_group = ComponentGroup::kUnknown;
  int h1_dim = 0;
  std::string provenance;  // "<algebra>#<clause>"
  std::string note;
};

struct RemainderClass {
  std::string algebra;
  int count = 0;
  int dim_z_k = 0;
  ComponentGroup component_group = ComponentGroup::kUnknown;
  int h1_dim = 0;
  std::string provenance;
};

struct AlgebraBlock {
  RealFormDescriptor descriptor;
  std::vector<OrbitRecord> records;
  std::vector<RemainderClass> remainders;

  /// Explicit records plus remainder counts.
  int orbit_count() const;
};

/// Strict loading rejects duplicate labels and count mismatches; lenient
/// loading checks only the schema so that validation can report them.
enum class Integrity { kStrict, kLenient };

class Catalog {
 public:
  static Catalog parse(std::string_view json_text, Integrity integrity = Integrity::kStrict);
  static Catalog load_file(const std::filesystem::path& path,
                           Integrity integrity = Integrity::kStrict);
  static Catalog load_embedded(Integrity integrity = Integrity::kStrict);
  /// The file named by $ORBITCOH_DATA when set, the embedded dataset otherwise.
  static Catalog load_default(Integrity integrity = Integrity::kStrict);

  const std::vector<AlgebraBlock>& algebras() const { return blocks_; }
  /// Accepts the canonical name or an underscore alias ("E6_m14", "E7_7").
  const AlgebraBlock& algebra(std::string_view name) const;
  const RealFormDescriptor& descriptor(std::string_view name) const {
    return algebra(name).descriptor;
  }

  int orbit_count(std::string_view name) const;
  int total_orbit_count() const;

  /// nullptr when the label is well-formed but not an explicit record.
  const OrbitRecord* find(std::string_view name, const OrbitLabel& label) const;
  /// Throws UnknownAlgebra, LabelLengthMismatch or UnlistedLabel.
  const OrbitRecord& lookup(std::string_view name, const OrbitLabel& label) const;

  OrbitLabel normalize_label(std::string_view text, std::string_view name) const;

  nlohmann::json to_json() const;

 private:
  explicit Catalog(std::vector<AlgebraBlock> blocks) : blocks_(std::move(blocks)) {}

  std::vector<AlgebraBlock> blocks_;
};

/// Resolves "E6_m14" / "E7_7" style aliases to "E6(-14)" / "E7(7)".
/// Names that are already canonical are returned unchanged.
std::string canonical_algebra_name(std::string_view name);

/// File-system friendly alias of a canonical name: "E6(-14)" -> "E6_m14".
std::string algebra_alias(std::string_view name);

/// Parses a characteristic without length checking. Accepts "1011101",
/// "40000 -2", "110001~1", "4,0,0,0,0,4,-10" and the Unicode minus sign.
std::vector<int> parse_label_entries(std::string_view text);

nlohmann::json to_json(const AlgebraBlock& block);
nlohmann::json to_json(const OrbitRecord& record);
nlohmann::json to_json(const RemainderClass& remainder);

}  // namespace orbitcoh::catalog
