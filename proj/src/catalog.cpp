#include "orbitcoh/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "embedded_dataset.hpp"
#include "orbitcoh/error.hpp"

namespace orbitcoh::catalog {

using nlohmann::json;

namespace {

[[noreturn]] void corrupt(const std::string& where, const std::string& what) {
  throw CatalogCorrupt(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) corrupt(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) corrupt(where, std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer()) corrupt(where, std::string("field '") + key + "' is not an integer");
  return v.get<int>();
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) corrupt(where, std::string("field '") + key + "' is not a string");
  return v.get<std::string>();
}

ComponentGroup group_field(const json& obj, const std::string& where) {
  const std::string text = string_field(obj, "component_group", where);
  try {
    return parse_component_group(text);
  } catch (const Error&) {
    corrupt(where, "unknown component_group '" + text + "'");
  }
}

OrbitRecord parse_record(const json& j, const std::string& algebra, const std::string& where) {
  OrbitRecord r;
  r.algebra = algebra;
  const json& label = field(j, "label", where);
  if (!label.is_array()) corrupt(where, "label is not an array");
  for (const auto& e : label) {
    if (!e.is_number_integer()) corrupt(where, "label entry is not an integer");
    r.label.entries.push_back(e.get<int>());
  }
  r.dim_z_k = int_field(j, "dim_z_k", where);
  r.component_group = group_field(j, where);
  r.h1_dim = int_field(j, "h1", where);
  r.provenance = string_field(j, "provenance", where);
  if (j.contains("note")) r.note = string_field(j, "note", where);
  return r;
}

RemainderClass parse_remainder(const json& j, const std::string& algebra, const std::string& where) {
  RemainderClass r;
  r.algebra = algebra;
  r.count = int_field(j, "count", where);
  r.dim_z_k = int_field(j, "dim_z_k", where);
  r.component_group = group_field(j, where);
  r.h1_dim = int_field(j, "h1", where);
  r.provenance = string_field(j, "provenance", where);
  return r;
}

AlgebraBlock parse_block(const json& j, std::size_t index) {
  std::string where = "algebra block " + std::to_string(index);
  AlgebraBlock b;
  RealFormDescriptor& d = b.descriptor;
  d.name = string_field(j, "name", where);
  where = d.name;
  try {
    d.complex_type = rootsys::CartanType::parse(string_field(j, "complex_type", where));
  } catch (const InvalidCartanType& e) {
    corrupt(where, e.what());
  }
  const json& summands = field(j, "compact_summands", where);
  if (!summands.is_array()) corrupt(where, "compact_summands is not an array");
  for (const auto& s : summands) {
    if (!s.is_string()) corrupt(where, "compact summand is not a string");
    d.compact_summands.push_back(s.get<std::string>());
  }
  d.dim_center_m = int_field(j, "dim_center_m", where);
  const json& inner = field(j, "inner", where);
  if (!inner.is_boolean()) corrupt(where, "inner is not a boolean");
  d.inner = inner.get<bool>();
  d.label_length = int_field(j, "label_length", where);
  d.total_nonzero_orbits = int_field(j, "total", where);

  const json& records = field(j, "records", where);
  if (!records.is_array()) corrupt(where, "records is not an array");
  for (std::size_t i = 0; i < records.size(); ++i) {
    b.records.push_back(parse_record(records[i], d.name, where + " record " + std::to_string(i)));
  }
  const json& remainders = field(j, "remainders", where);
  if (!remainders.is_array()) corrupt(where, "remainders is not an array");
  for (std::size_t i = 0; i < remainders.size(); ++i) {
    b.remainders.push_back(
        parse_remainder(remainders[i], d.name, where + " remainder " + std::to_string(i)));
  }
  return b;
}

void check_integrity(const std::vector<AlgebraBlock>& blocks) {
  std::set<std::string> names;
  for (const auto& b : blocks) {
    const auto& d = b.descriptor;
    if (!names.insert(d.name).second) corrupt(d.name, "duplicate algebra block");
    if (d.label_length <= 0) corrupt(d.name, "label_length must be positive");
    if (d.dim_center_m < 0 || d.dim_center_m > 1) corrupt(d.name, "dim_center_m must be 0 or 1");
    std::set<OrbitLabel> labels;
    for (const auto& r : b.records) {
      const std::string where = d.name + " label " + r.label.to_string();
      if (static_cast<int>(r.label.entries.size()) != d.label_length) {
        corrupt(where, "label length " + std::to_string(r.label.entries.size()) +
                           " differs from label_length " + std::to_string(d.label_length));
      }
      for (const int e : r.label.entries) {
        if (std::abs(e) > kMaxLabelEntry) corrupt(where, "label entry out of bounds");
      }
      if (!labels.insert(r.label).second) corrupt(where, "duplicate label");
      if (r.dim_z_k < 0) corrupt(where, "negative dim_z_k");
      if (r.h1_dim < 0 || r.h1_dim > 1) corrupt(where, "h1 must be 0 or 1");
    }
    for (const auto& r : b.remainders) {
      const std::string where = d.name + " remainder " + r.provenance;
      if (r.count <= 0) corrupt(where, "count must be positive");
      if (r.dim_z_k < 0) corrupt(where, "negative dim_z_k");
      if (r.h1_dim < 0 || r.h1_dim > 1) corrupt(where, "h1 must be 0 or 1");
    }
    if (b.orbit_count() != d.total_nonzero_orbits) {
      corrupt(d.name, "records and remainders account for " + std::to_string(b.orbit_count()) +
                          " orbits, total says " + std::to_string(d.total_nonzero_orbits));
    }
  }
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::string to_string(ComponentGroup g) {
  switch (g) {
    case ComponentGroup::kTrivial: return "trivial";
    case ComponentGroup::kNonTrivial: return "nontrivial";
    case ComponentGroup::kUnknown: return "unknown";
  }
  return "unknown";
}

ComponentGroup parse_component_group(std::string_view text) {
  if (text == "trivial") return ComponentGroup::kTrivial;
  if (text == "nontrivial") return ComponentGroup::kNonTrivial;
  if (text == "unknown") return ComponentGroup::kUnknown;
  throw Error("unknown component group '" + std::string(text) + "'");
}

std::string OrbitLabel::to_string() const {
  std::string out;
  for (const int e : entries) {
    if (e < 0 || e > 9) {
      if (!out.empty()) out += ' ';
      out += std::to_string(e);
    } else {
      out += static_cast<char>('0' + e);
    }
  }
  return out;
}

bool OrbitLabel::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](int e) { return e == 0; });
}

int AlgebraBlock::orbit_count() const {
  int n = static_cast<int>(records.size());
  for (const auto& r : remainders) n += r.count;
  return n;
}

Catalog Catalog::parse(std::string_view json_text, Integrity integrity) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw CatalogCorrupt(std::string("dataset is not valid JSON: ") + e.what());
  }
  if (!root.is_array()) throw CatalogCorrupt("dataset: top level must be a list of algebra blocks");
  std::vector<AlgebraBlock> blocks;
  for (std::size_t i = 0; i < root.size(); ++i) blocks.push_back(parse_block(root[i], i));
  if (integrity == Integrity::kStrict) check_integrity(blocks);
  return Catalog(std::move(blocks));
}

Catalog Catalog::load_file(const std::filesystem::path& path, Integrity integrity) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CatalogCorrupt("cannot open dataset file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), integrity);
}

Catalog Catalog::load_embedded(Integrity integrity) {
  return parse(detail::kEmbeddedDataset, integrity);
}

Catalog Catalog::load_default(Integrity integrity) {
  if (const char* path = std::getenv("ORBITCOH_DATA"); path != nullptr && *path != '\0') {
    return load_file(path, integrity);
  }
  return load_embedded(integrity);
}

const AlgebraBlock& Catalog::algebra(std::string_view name) const {
  const std::string canonical = canonical_algebra_name(name);
  for (const auto& b : blocks_) {
    if (b.descriptor.name == canonical) return b;
  }
  throw UnknownAlgebra("unknown algebra '" + std::string(name) + "'");
}

int Catalog::orbit_count(std::string_view name) const { return algebra(name).orbit_count(); }

int Catalog::total_orbit_count() const {
  int n = 0;
  for (const auto& b : blocks_) n += b.orbit_count();
  return n;
}

const OrbitRecord* Catalog::find(std::string_view name, const OrbitLabel& label) const {
  const AlgebraBlock& b = algebra(name);
  if (static_cast<int>(label.entries.size()) != b.descriptor.label_length) {
    throw LabelLengthMismatch(b.descriptor.name + " labels have " +
                              std::to_string(b.descriptor.label_length) + " entries, got " +
                              std::to_string(label.entries.size()));
  }
  for (const auto& r : b.records) {
    if (r.label == label) return &r;
  }
  return nullptr;
}

const OrbitRecord& Catalog::lookup(std::string_view name, const OrbitLabel& label) const {
  if (const OrbitRecord* r = find(name, label)) return *r;
  const AlgebraBlock& b = algebra(name);
  std::ostringstream os;
  os << "label " << label.to_string() << " is not an explicitly listed orbit of "
     << b.descriptor.name << ".";
  if (!b.remainders.empty()) {
    int unlisted = 0;
    for (const auto& rc : b.remainders) unlisted += rc.count;
    os << " The catalog counts " << unlisted
       << " further orbits whose labels are not enumerated; if this label is one of them, "
          "see the remainder rows of 'table "
       << b.descriptor.name << "'.";
  }
  throw UnlistedLabel(os.str());
}

OrbitLabel Catalog::normalize_label(std::string_view text, std::string_view name) const {
  const AlgebraBlock& b = algebra(name);
  OrbitLabel label{parse_label_entries(text)};
  if (static_cast<int>(label.entries.size()) != b.descriptor.label_length) {
    throw LabelParseError("'" + std::string(text) + "' has " +
                          std::to_string(label.entries.size()) + " entries; " +
                          b.descriptor.name + " labels have " +
                          std::to_string(b.descriptor.label_length));
  }
  return label;
}

json Catalog::to_json() const {
  json out = json::array();
  for (const auto& b : blocks_) out.push_back(catalog::to_json(b));
  return out;
}

std::string canonical_algebra_name(std::string_view name) {
  const auto underscore = name.find('_');
  if (underscore == std::string_view::npos) return std::string(name);
  std::string_view head = name.substr(0, underscore);
  std::string_view tail = name.substr(underscore + 1);
  std::string sign;
  if (!tail.empty() && (tail.front() == 'm' || tail.front() == '-')) {
    sign = "-";
    tail.remove_prefix(1);
  }
  if (tail.empty() || !std::all_of(tail.begin(), tail.end(), is_digit)) return std::string(name);
  return std::string(head) + "(" + sign + std::string(tail) + ")";
}

std::string algebra_alias(std::string_view name) {
  std::string out;
  for (std::size_t i = 0; i < name.size(); ++i) {
    const char c = name[i];
    if (c == '(') {
      out += '_';
      if (i + 1 < name.size() && name[i + 1] == '-') {
        out += 'm';
        ++i;
      }
    } else if (c != ')') {
      out += c;
    }
  }
  return out;
}

std::vector<int> parse_label_entries(std::string_view raw) {
  // Unicode minus (U+2212) and the tilde spacer are folded to ASCII first.
  std::string text;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw.substr(i, 3) == "\xE2\x88\x92") {
      text += '-';
      i += 2;
    } else if (raw[i] == '~' || raw[i] == '\t') {
      text += ' ';
    } else {
      text += raw[i];
    }
  }
  auto fail = [&](const std::string& why) -> LabelParseError {
    return LabelParseError("cannot parse label '" + std::string(raw) + "': " + why);
  };

  std::vector<int> entries;
  auto push_integer = [&](std::string_view tok) {
    bool negative = false;
    if (!tok.empty() && (tok.front() == '-' || tok.front() == '+')) {
      negative = tok.front() == '-';
      tok.remove_prefix(1);
    }
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), is_digit) || tok.size() > 3) {
      throw fail("bad entry");
    }
    int v = 0;
    for (const char c : tok) v = v * 10 + (c - '0');
    if (v > kMaxLabelEntry) throw fail("entry " + std::string(tok) + " out of bounds");
    entries.push_back(negative ? -v : v);
  };

  const bool comma_form = text.find(',') != std::string::npos;
  std::istringstream in(text);
  if (comma_form) {
    std::string tok;
    while (std::getline(in, tok, ',')) {
      const auto first = tok.find_first_not_of(' ');
      const auto last = tok.find_last_not_of(' ');
      if (first == std::string::npos) throw fail("empty entry");
      const std::string_view trimmed = std::string_view(tok).substr(first, last - first + 1);
      if (trimmed.find(' ') != std::string_view::npos) throw fail("space inside entry");
      push_integer(trimmed);
    }
  } else {
    // An unsigned run of digits is a run of single-digit entries; a signed
    // token is one entry. Only signed final entries reach two digits.
    std::string tok;
    while (in >> tok) {
      if (tok.front() == '-' || tok.front() == '+') {
        push_integer(tok);
        continue;
      }
      for (const char c : tok) {
        if (!is_digit(c)) throw fail(std::string("unexpected character '") + c + "'");
        entries.push_back(c - '0');
      }
    }
  }
  if (entries.empty()) throw fail("no entries");
  return entries;
}

json to_json(const OrbitRecord& r) {
  json j{{"label", r.label.entries},
         {"dim_z_k", r.dim_z_k},
         {"component_group", to_string(r.component_group)},
         {"h1", r.h1_dim},
         {"provenance", r.provenance}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json to_json(const RemainderClass& r) {
  return json{{"count", r.count},
              {"dim_z_k", r.dim_z_k},
              {"component_group", to_string(r.component_group)},
              {"h1", r.h1_dim},
              {"provenance", r.provenance}};
}

json to_json(const AlgebraBlock& b) {
  const auto& d = b.descriptor;
  json records = json::array();
  for (const auto& r : b.records) records.push_back(to_json(r));
  json remainders = json::array();
  for (const auto& r : b.remainders) remainders.push_back(to_json(r));
  return json{{"name", d.name},
              {"complex_type", d.complex_type.to_string()},
              {"compact_summands", d.compact_summands},
              {"dim_center_m", d.dim_center_m},
              {"inner", d.inner},
              {"label_length", d.label_length},
              {"total", d.total_nonzero_orbits},
              {"records", records},
              {"remainders", remainders}};
}

}  // namespace orbitcoh::catalog
