#include "orbitcoh/validate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "orbitcoh/cohomology.hpp"
#include "orbitcoh/error.hpp"
#include "orbitcoh/rootsys.hpp"

namespace orbitcoh::validate {

using catalog::Catalog;
using catalog::ComponentGroup;
using cohomology::CohomologyValue;

namespace {

constexpr auto T = ComponentGroup::kTrivial;
constexpr auto N = ComponentGroup::kNonTrivial;
constexpr auto U = ComponentGroup::kUnknown;

struct AlgebraFact {
  const char* name;
  const char* complex_type;
  std::vector<const char*> compact_summands;
  int dim_center_m;
  bool inner;
  int total;
  int signature;  // dim p - dim m
};

// Orbit totals, inner/outer type and the maximal compact subalgebra of each
// real form.
const std::vector<AlgebraFact>& algebra_registry() {
  static const std::vector<AlgebraFact> facts = {
      {"G2(2)", "G2", {"A1", "A1"}, 0, true, 5, 2},
      {"F4(4)", "F4", {"C3", "A1"}, 0, true, 26, 4},
      {"F4(-20)", "F4", {"B4"}, 0, true, 2, -20},
      {"E6(6)", "E6", {"C4"}, 0, false, 23, 6},
      {"E6(2)", "E6", {"A5", "A1"}, 0, true, 37, 2},
      {"E6(-14)", "E6", {"D5"}, 1, true, 12, -14},
      {"E6(-26)", "E6", {"F4"}, 0, false, 2, -26},
      {"E7(7)", "E7", {"A7"}, 0, true, 94, 7},
      {"E7(-5)", "E7", {"D6", "A1"}, 0, true, 37, -5},
      {"E7(-25)", "E7", {"E6"}, 1, true, 22, -25},
      {"E8(8)", "E8", {"D8"}, 0, true, 115, 8},
      {"E8(-24)", "E8", {"E7", "A1"}, 0, true, 36, -24},
  };
  return facts;
}

// Orbits with H^1 = 1; every other orbit has H^1 = 0.
const std::vector<std::pair<const char*, std::vector<int>>>& h1_registry() {
  static const std::vector<std::pair<const char*, std::vector<int>>> labels = {
      {"E6(-14)", {4, 0, 0, 0, 0, -2}},
      {"E7(-25)", {0, 0, 0, 0, 0, 0, 2}},
      {"E7(-25)", {0, 0, 0, 0, 0, 0, -2}},
      {"E7(-25)", {0, 0, 0, 0, 0, 2, -2}},
      {"E7(-25)", {2, 0, 0, 0, 0, 0, -2}},
      {"E7(-25)", {2, 0, 0, 0, 0, 2, -2}},
      {"E7(-25)", {4, 0, 0, 0, 0, 0, -2}},
      {"E7(-25)", {0, 0, 0, 0, 0, 4, -6}},
      {"E7(-25)", {2, 0, 0, 0, 0, 2, -6}},
      {"E7(-25)", {4, 0, 0, 0, 0, 4, -6}},
      {"E7(-25)", {4, 0, 0, 0, 0, 4, -10}},
  };
  return labels;
}

std::string tag_of(const std::string& algebra, int clause) {
  return algebra + "#" + std::to_string(clause);
}

std::string two_digits(std::size_t i) {
  return (i < 9 ? "0" : "") + std::to_string(i + 1);
}

class Registry {
 public:
  void add(std::string id, std::string description, std::function<std::string()> body) {
    entries_.push_back({std::move(id), std::move(description), std::move(body)});
  }

  ValidationReport run() const {
    ValidationReport report;
    for (const auto& e : entries_) {
      CheckResult r{e.id, e.description, false, ""};
      try {
        r.detail = e.body();
        r.passed = r.detail.empty();
      } catch (const std::exception& ex) {
        r.detail = std::string("exception: ") + ex.what();
      }
      report.checks.push_back(std::move(r));
    }
    std::stable_sort(report.checks.begin(), report.checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
    return report;
  }

 private:
  struct Entry {
    std::string id;
    std::string description;
    std::function<std::string()> body;  // empty string on success
  };
  std::vector<Entry> entries_;
};

// Collects failure messages; the check passes when nothing was recorded.
class Problems {
 public:
  template <typename T>
  Problems& operator<<(const T& v) {
    current_ << v;
    return *this;
  }
  void flush() {
    if (!current_.str().empty()) {
      if (!all_.empty()) all_ += "; ";
      all_ += current_.str();
      current_.str("");
    }
  }
  std::string str() {
    flush();
    return all_;
  }

 private:
  std::ostringstream current_;
  std::string all_;
};

const catalog::AlgebraBlock* find_block(const Catalog& c, const std::string& name) {
  for (const auto& b : c.algebras()) {
    if (b.descriptor.name == name) return &b;
  }
  return nullptr;
}

int rank_of(const std::string& type) { return rootsys::CartanType::parse(type).rank(); }
int dim_of(const std::string& type) {
  return rootsys::algebra_dimension(rootsys::CartanType::parse(type));
}

}  // namespace

const std::vector<ClauseFact>& clause_registry() {
  // {algebra, clause, orbits in clause, dim z(k), K/K^0, H^2 exact?, H^2 value or bound}
  static const std::vector<ClauseFact> facts = {
      {"G2(2)", 1, 2, 1, T, true, 1},
      {"G2(2)", 2, 3, 0, U, true, 0},
      {"F4(4)", 1, 5, 1, T, true, 1},
      {"F4(4)", 2, 5, 1, N, false, 1},
      {"F4(4)", 3, 2, 2, N, false, 2},
      {"F4(4)", 4, 14, 0, U, true, 0},
      {"F4(-20)", 1, 2, 0, U, true, 0},
      {"E6(6)", 1, 3, 1, T, true, 1},
      {"E6(6)", 2, 5, 1, N, false, 1},
      {"E6(6)", 3, 15, 0, U, true, 0},
      {"E6(2)", 1, 8, 0, U, true, 0},
      {"E6(2)", 2, 9, 2, T, true, 2},
      {"E6(2)", 3, 3, 2, N, false, 2},
      {"E6(2)", 4, 1, 1, N, false, 1},
      {"E6(2)", 5, 16, 1, T, true, 1},
      {"E6(-14)", 1, 1, 0, U, true, 0},
      {"E6(-14)", 2, 11, 1, U, false, 1},
      {"E6(-26)", 1, 2, 0, U, true, 0},
      {"E7(7)", 1, 1, 3, T, true, 3},
      {"E7(7)", 2, 9, 2, T, true, 2},
      {"E7(7)", 3, 24, 1, T, true, 1},
      {"E7(7)", 4, 11, 1, N, false, 1},
      {"E7(7)", 5, 8, 2, N, false, 2},
      {"E7(7)", 6, 2, 3, N, false, 3},
      {"E7(7)", 7, 39, 0, U, true, 0},
      {"E7(-5)", 1, 2, 2, T, true, 2},
      {"E7(-5)", 2, 12, 1, T, true, 1},
      {"E7(-5)", 3, 2, 2, N, false, 2},
      {"E7(-5)", 4, 4, 1, N, false, 1},
      {"E7(-5)", 5, 17, 0, U, true, 0},
      {"E7(-25)", 1, 10, 0, T, true, 0},
      {"E7(-25)", 2, 12, 1, T, false, 1},
      {"E8(8)", 1, 4, 2, T, true, 2},
      {"E8(8)", 2, 26, 1, T, true, 1},
      {"E8(8)", 3, 1, 3, N, false, 3},
      {"E8(8)", 4, 8, 2, N, false, 2},
      {"E8(8)", 5, 24, 1, N, false, 1},
      {"E8(8)", 6, 52, 0, U, true, 0},
      {"E8(-24)", 1, 13, 1, T, true, 1},
      {"E8(-24)", 2, 2, 1, N, false, 1},
      {"E8(-24)", 3, 21, 0, U, true, 0},
  };
  return facts;
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<const CheckResult*> ValidationReport::failures() const {
  std::vector<const CheckResult*> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(&c);
  }
  return out;
}

nlohmann::json ValidationReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    list.push_back({{"check_id", c.check_id},
                    {"description", c.description},
                    {"status", c.passed ? "pass" : "fail"},
                    {"detail", c.detail}});
  }
  return {{"status", passed() ? "pass" : "fail"}, {"checks", list}};
}

ValidationReport validate_all(const Catalog& cat) {
  Registry reg;
  const auto& algebras = algebra_registry();

  for (std::size_t i = 0; i < algebras.size(); ++i) {
    const AlgebraFact& fact = algebras[i];
    const std::string name = fact.name;
    const std::string nn = two_digits(i);

    reg.add("a-" + nn, "total nonzero orbits of " + name, [&cat, &fact, name] {
      Problems p;
      const auto* b = find_block(cat, name);
      if (b == nullptr) return std::string(name + " missing from dataset");
      if (b->descriptor.total_nonzero_orbits != fact.total) {
        p << name << " total is " << b->descriptor.total_nonzero_orbits << ", expected "
          << fact.total;
      }
      return p.str();
    });

    reg.add("b-" + nn, "partition of " + name + " into clauses", [&cat, &fact, name] {
      Problems p;
      const auto* b = find_block(cat, name);
      if (b == nullptr) return std::string(name + " missing from dataset");
      if (b->orbit_count() != b->descriptor.total_nonzero_orbits) {
        p << name << ": " << b->records.size() << " records + remainders = " << b->orbit_count()
          << " != total " << b->descriptor.total_nonzero_orbits;
        p.flush();
      }
      std::map<std::string, int> per_tag;
      for (const auto& r : b->records) per_tag[r.provenance] += 1;
      for (const auto& r : b->remainders) per_tag[r.provenance] += r.count;
      int clause_sum = 0;
      for (const auto& c : clause_registry()) {
        if (name != c.algebra) continue;
        clause_sum += c.size;
        const std::string tag = tag_of(name, c.clause);
        if (per_tag[tag] != c.size) {
          p << tag << " covers " << per_tag[tag] << " orbits, expected " << c.size;
          p.flush();
        }
      }
      if (clause_sum != fact.total) p << name << " clause sizes sum to " << clause_sum;
      return p.str();
    });

    reg.add("d-" + nn, "label length and uniqueness for " + name, [&cat, &fact, name] {
      Problems p;
      const auto* b = find_block(cat, name);
      if (b == nullptr) return std::string(name + " missing from dataset");
      const auto& d = b->descriptor;
      if (d.inner != fact.inner) {
        p << name << " inner flag is " << d.inner;
        p.flush();
      }
      const int expected = d.inner ? d.complex_type.rank() : 4;
      if (d.label_length != expected) {
        p << name << " label_length " << d.label_length << ", expected " << expected;
        p.flush();
      }
      std::set<catalog::OrbitLabel> seen;
      for (const auto& r : b->records) {
        if (static_cast<int>(r.label.entries.size()) != expected) {
          p << name << " label " << r.label.to_string() << " has length " << r.label.entries.size();
          p.flush();
        }
        if (!seen.insert(r.label).second) {
          p << name << " duplicate label " << r.label.to_string();
          p.flush();
        }
      }
      return p.str();
    });

    reg.add("j-" + nn, "clause data and stated H^2 for " + name, [&cat, name] {
      Problems p;
      const auto* b = find_block(cat, name);
      if (b == nullptr) return std::string(name + " missing from dataset");
      std::map<std::string, const ClauseFact*> by_tag;
      for (const auto& c : clause_registry()) {
        if (name == c.algebra) by_tag[tag_of(name, c.clause)] = &c;
      }
      auto check = [&](const std::string& what, const std::string& tag, int dim_z_k,
                       ComponentGroup group, const CohomologyValue& h2) {
        const auto it = by_tag.find(tag);
        if (it == by_tag.end()) {
          p << what << " cites unknown clause " << tag;
          p.flush();
          return;
        }
        const ClauseFact& c = *it->second;
        if (dim_z_k != c.dim_z_k) p << what << " dim_z_k " << dim_z_k << " != " << c.dim_z_k << " ";
        if (group != c.component_group) {
          p << what << " component_group " << catalog::to_string(group) << " != "
            << catalog::to_string(c.component_group) << " ";
        }
        const CohomologyValue stated =
            c.exact ? CohomologyValue::exact(c.h2) : CohomologyValue::upper_bound(c.h2);
        if (h2 != stated) p << what << " H^2 " << h2.to_string() << " != stated " << stated.to_string();
        p.flush();
      };
      for (const auto& r : b->records) {
        check(name + " " + r.label.to_string(), r.provenance, r.dim_z_k, r.component_group,
              cohomology::h2(r, b->descriptor));
      }
      for (const auto& r : b->remainders) {
        check(name + " remainder", r.provenance, r.dim_z_k, r.component_group,
              cohomology::h2_remainder(r, b->descriptor));
      }
      return p.str();
    });

    reg.add("k-" + nn, "maximal compact subalgebra of " + name, [&cat, &fact, name] {
      Problems p;
      const auto* b = find_block(cat, name);
      if (b == nullptr) return std::string(name + " missing from dataset");
      const auto& d = b->descriptor;
      if (d.complex_type.to_string() != fact.complex_type) {
        p << name << " complex type " << d.complex_type.to_string();
        p.flush();
      }
      if (d.dim_center_m != fact.dim_center_m) {
        p << name << " dim_center_m " << d.dim_center_m << " != " << fact.dim_center_m;
        p.flush();
      }
      if (d.compact_summands != std::vector<std::string>(fact.compact_summands.begin(),
                                                          fact.compact_summands.end())) {
        p << name << " compact summands differ";
        p.flush();
      }
      // rank m_C == rank g_C exactly for inner forms; dim p - dim m is the
      // index in the name.
      int rank_m = d.dim_center_m;
      int dim_m = d.dim_center_m;
      for (const auto& s : d.compact_summands) {
        rank_m += rank_of(s);
        dim_m += dim_of(s);
      }
      const int rank_g = d.complex_type.rank();
      if ((rank_m == rank_g) != d.inner) {
        p << name << " rank m_C = " << rank_m << " vs rank g_C = " << rank_g
          << " contradicts inner = " << d.inner;
        p.flush();
      }
      const int dim_p = rootsys::algebra_dimension(d.complex_type) - dim_m;
      if (dim_p - dim_m != fact.signature) {
        p << name << " dim p - dim m = " << dim_p - dim_m << ", expected " << fact.signature;
      }
      return p.str();
    });
  }

  reg.add("c", "H^2 never exceeds dim z(k); exact exactly for types I and III", [&cat] {
    Problems p;
    for (const auto& row_block : cat.algebras()) {
      for (const auto& row : cohomology::theorem_table(cat, row_block.descriptor.name)) {
        const bool exact_type = row.type != cohomology::OrbitType::kII;
        if (row.h2.n > row.dim_z_k || row.h2.n < 0 || row.h2.is_exact() != exact_type) {
          p << row_block.descriptor.name << " " << row.label << " reports " << row.h2.to_string()
            << " with dim z(k) = " << row.dim_z_k;
          p.flush();
        }
      }
    }
    return p.str();
  });

  reg.add("e", "H^1 is nonzero exactly on the registered orbits", [&cat] {
    Problems p;
    std::set<std::pair<std::string, catalog::OrbitLabel>> expected;
    for (const auto& [alg, entries] : h1_registry()) expected.insert({alg, catalog::OrbitLabel{entries}});
    std::set<std::pair<std::string, catalog::OrbitLabel>> found;
    for (const auto& b : cat.algebras()) {
      const auto& d = b.descriptor;
      for (const auto& r : b.records) {
        if (r.h1_dim == 0) continue;
        found.insert({d.name, r.label});
        if (d.dim_center_m == 0) {
          p << d.name << " " << r.label.to_string() << " has h1 = 1 but m is semisimple";
          p.flush();
        }
        if (r.dim_z_k != 0) {
          p << d.name << " " << r.label.to_string() << " has h1 = 1 and dim z(k) = " << r.dim_z_k;
          p.flush();
        }
      }
      for (const auto& r : b.remainders) {
        if (r.h1_dim != 0) {
          p << d.name << " remainder " << r.provenance << " has h1 = " << r.h1_dim;
          p.flush();
        }
      }
    }
    for (const auto& e : expected) {
      if (!found.count(e)) {
        p << e.first << " " << e.second.to_string() << " should have h1 = 1";
        p.flush();
      }
    }
    for (const auto& f : found) {
      if (!expected.count(f)) {
        p << f.first << " " << f.second.to_string() << " should have h1 = 0";
        p.flush();
      }
    }
    return p.str();
  });

  const std::vector<std::pair<const char*, std::size_t>> root_counts = {
      {"G2", 12}, {"F4", 48}, {"E6", 72}, {"E7", 126}, {"E8", 240}};
  for (std::size_t i = 0; i < root_counts.size(); ++i) {
    const auto [type, count] = root_counts[i];
    reg.add("f-" + two_digits(i), std::string("root count of ") + type, [type = type, count = count] {
      const auto t = rootsys::CartanType::parse(type);
      const auto rs = rootsys::build_root_system(t);
      Problems p;
      if (rs.roots().size() != count) p << type << " has " << rs.roots().size() << " roots";
      if (static_cast<int>(rs.roots().size()) != rootsys::algebra_dimension(t) - t.rank()) {
        p << " (dim - rank mismatch)";
      }
      return p.str();
    });
  }

  reg.add("g", "E6 folding conventions give F4 and C4", [] {
    using rootsys::FoldingConvention;
    using rootsys::FoldingSpec;
    const auto a = rootsys::fold_e6(FoldingSpec::standard(FoldingConvention::kOrbitSum));
    const auto b = rootsys::fold_e6(FoldingSpec::standard(FoldingConvention::kOrbitRestriction));
    const std::set<std::string> got{a.to_string(), b.to_string()};
    if (got != std::set<std::string>{"F4", "C4"}) {
      return "folds gave " + a.to_string() + " and " + b.to_string();
    }
    return std::string();
  });

  reg.add("h", "E6(6) label 2000 uses the corrected centralizer (type III)", [&cat] {
    const auto* b = find_block(cat, "E6(6)");
    if (b == nullptr) return std::string("E6(6) missing from dataset");
    for (const auto& r : b->records) {
      if (r.label == catalog::OrbitLabel{{2, 0, 0, 0}}) {
        const auto type = cohomology::classify(r.dim_z_k, r.component_group,
                                               b->descriptor.m_semisimple());
        if (r.dim_z_k != 0 || type != cohomology::OrbitType::kIII) {
          return "label 2000 has dim z(k) = " + std::to_string(r.dim_z_k) + ", type " +
                 cohomology::to_string(type);
        }
        return std::string();
      }
    }
    return std::string("label 2000 not present");
  });

  reg.add("i", "every clause is cited and every citation is a known clause", [&cat] {
    Problems p;
    std::set<std::string> known;
    for (const auto& c : clause_registry()) known.insert(tag_of(c.algebra, c.clause));
    std::set<std::string> cited;
    for (const auto& b : cat.algebras()) {
      for (const auto& r : b.records) cited.insert(r.provenance);
      for (const auto& r : b.remainders) cited.insert(r.provenance);
      for (const auto& r : b.records) {
        if (r.provenance.rfind(b.descriptor.name + "#", 0) != 0) {
          p << b.descriptor.name << " " << r.label.to_string() << " cites " << r.provenance;
          p.flush();
        }
      }
    }
    for (const auto& k : known) {
      if (!cited.count(k)) {
        p << k << " is not cited";
        p.flush();
      }
    }
    for (const auto& c : cited) {
      if (!known.count(c)) {
        p << c << " is not a known clause";
        p.flush();
      }
    }
    return p.str();
  });

  return reg.run();
}

}  // namespace orbitcoh::validate
