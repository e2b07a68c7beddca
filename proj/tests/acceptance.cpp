// Acceptance suite: one PASS/FAIL line per criterion, with the measured
// runtime next to its pinned budget. Exit status is nonzero if any
// criterion fails.
//
// Tolerances: every count and value comparison is exact (zero tolerance).
// Time budgets: orbit_count 1 ms per call, theorem tables 1 s total,
// root engine 5 s total, mutation sweep 60 s.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "mutation.hpp"
#include "orbitcoh/catalog.hpp"
#include "orbitcoh/cohomology.hpp"
#include "orbitcoh/error.hpp"
#include "orbitcoh/render.hpp"
#include "orbitcoh/rootsys.hpp"
#include "orbitcoh/validate.hpp"

namespace fs = std::filesystem;
using namespace orbitcoh;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kOrbitCountBudgetMs = 1.0;
constexpr double kTableBudgetMs = 1000.0;
constexpr double kRootBudgetMs = 5000.0;
constexpr double kMutationBudgetMs = 60000.0;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string ms(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f ms", v);
  return buf;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* const kAlgebras[] = {"G2(2)",  "F4(4)",  "F4(-20)", "E6(6)", "E6(2)",  "E6(-14)",
                                 "E6(-26)", "E7(7)", "E7(-5)",  "E7(-25)", "E8(8)", "E8(-24)"};

// 1. Orbit totals.
Outcome orbit_totals(const catalog::Catalog& c) {
  const std::map<std::string, int> expected = {
      {"G2(2)", 5},   {"F4(4)", 26},   {"F4(-20)", 2}, {"E6(6)", 23},
      {"E6(2)", 37},  {"E6(-14)", 12}, {"E6(-26)", 2}, {"E7(7)", 94},
      {"E7(-5)", 37}, {"E7(-25)", 22}, {"E8(8)", 115}, {"E8(-24)", 36}};
  Outcome o;
  double worst = 0;
  for (const auto& [name, n] : expected) {
    const auto t0 = Clock::now();
    const int got = c.orbit_count(name);
    worst = std::max(worst, ms_since(t0));
    o.require(got == n, name + " has " + std::to_string(got) + ", expected " + std::to_string(n));
  }
  o.require(worst < kOrbitCountBudgetMs, "slowest call " + ms(worst));
  if (o.passed) o.detail = "12/12 totals exact; slowest call " + ms(worst) + " < 1 ms";
  return o;
}

// 2. Every explicit row reproduces its clause, and all twelve tables match the goldens.
Outcome theorem_reproduction(const catalog::Catalog& c) {
  Outcome o;
  const auto t0 = Clock::now();
  int rows_checked = 0;
  std::map<std::pair<std::string, int>, const validate::ClauseFact*> clauses;
  for (const auto& f : validate::clause_registry()) clauses[{f.algebra, f.clause}] = &f;
  for (const char* name : kAlgebras) {
    const auto csv = render::table(c, name, render::OutputFormat::kCsv);
    const auto golden =
        slurp(fs::path(GOLDEN_DIR) / (catalog::algebra_alias(name) + ".csv"));
    o.require(!golden.empty(), std::string("missing golden for ") + name);
    o.require(csv == golden, std::string("table diff for ") + name);
    for (const auto& row : cohomology::theorem_table(c, name)) {
      const auto hash = row.provenance.find('#');
      const int clause = std::stoi(row.provenance.substr(hash + 1));
      const auto it = clauses.find({name, clause});
      if (it == clauses.end()) {
        o.require(false, row.provenance + " has no clause");
        continue;
      }
      const auto& fact = *it->second;
      const auto expected = fact.exact ? cohomology::CohomologyValue::exact(fact.h2)
                                       : cohomology::CohomologyValue::upper_bound(fact.h2);
      o.require(row.h2 == expected, std::string(name) + " " + row.label + ": " +
                                        row.h2.to_string() + " vs clause " + expected.to_string());
      ++rows_checked;
    }
  }
  const double elapsed = ms_since(t0);
  o.require(elapsed < kTableBudgetMs, "took " + ms(elapsed));
  if (o.passed) {
    o.detail = std::to_string(rows_checked) + " rows match their clause; 12/12 golden diffs empty; " +
               ms(elapsed) + " < 1 s";
  }
  return o;
}

// 3. Vanishing for F4(-20) and E6(-26).
Outcome vanishing(const catalog::Catalog& c) {
  Outcome o;
  int orbits = 0;
  for (const char* name : {"F4(-20)", "E6(-26)"}) {
    for (const auto& row : cohomology::theorem_table(c, name)) {
      orbits += row.count;
      o.require(row.h2 == cohomology::CohomologyValue::exact(0),
                std::string(name) + " " + row.label + " gives " + row.h2.to_string());
    }
  }
  o.require(orbits == 4, "expected 4 orbits, saw " + std::to_string(orbits));
  if (o.passed) o.detail = "4/4 orbits exact 0";
  return o;
}

// 4. The H^2 bound and where the maximal dim z(k) is attained.
Outcome bound_and_maximum(const catalog::Catalog& c) {
  Outcome o;
  int orbits = 0;
  int max_dim = 0;
  std::set<std::string> at_max;
  for (const auto& b : c.algebras()) {
    for (const auto& row : cohomology::theorem_table(c, b.descriptor.name)) {
      orbits += row.count;
      o.require(row.h2.n <= row.dim_z_k,
                b.descriptor.name + " " + row.label + " exceeds dim z(k)");
      const std::string key = b.descriptor.name + " " + row.label;
      if (row.dim_z_k > max_dim) {
        max_dim = row.dim_z_k;
        at_max.clear();
      }
      if (row.dim_z_k == max_dim) at_max.insert(key);
    }
  }
  o.require(orbits == 411, "bound checked on " + std::to_string(orbits) + " orbits");
  o.require(max_dim == 3, "max dim z(k) is " + std::to_string(max_dim));
  const std::set<std::string> expected = {"E7(7) 1011101", "E8(8) 00100101"};
  if (at_max != expected) {
    std::string seen;
    for (const auto& k : at_max) seen += (seen.empty() ? "" : ", ") + k;
    o.require(false, "max attained at {" + seen + "}, expected exactly {E7(7) 1011101, E8(8) 00100101}");
  }
  if (o.passed) o.detail = "bound holds on 411/411; max dim z(k) = 3 at the two expected labels";
  else o.detail = "bound holds on 411/411; max dim z(k) = 3; " + o.detail;
  return o;
}

// 5. H^1 support.
Outcome h1_suite(const catalog::Catalog& c) {
  Outcome o;
  int total = 0;
  for (const auto& b : c.algebras()) {
    int n = 0;
    for (const auto& row : cohomology::theorem_table(c, b.descriptor.name)) {
      if (row.h1.n != 0) n += row.count;
      o.require(row.h1.is_exact() && (row.h1.n == 0 || row.h1.n == 1),
                b.descriptor.name + " " + row.label + " h1 " + row.h1.to_string());
    }
    const std::string& name = b.descriptor.name;
    const int expected = name == "E6(-14)" ? 1 : name == "E7(-25)" ? 10 : 0;
    o.require(n == expected, name + " has " + std::to_string(n) + " orbits with H^1 = 1");
    total += n;
  }
  o.require(total == 11, "catalog-wide " + std::to_string(total));
  if (o.passed) o.detail = "11 orbits with H^1 = 1 (E6(-14): 1, E7(-25): 10); all others 0";
  return o;
}

// 6. Summary statistics and per-clause partition sums.
Outcome summary_statistics(const catalog::Catalog& c) {
  // Orbits per clause, recounted from the classification statements.
  const std::map<std::string, std::vector<int>> partitions = {
      {"G2(2)", {2, 3}},
      {"F4(4)", {5, 5, 2, 14}},
      {"F4(-20)", {2}},
      {"E6(6)", {3, 5, 15}},
      {"E6(2)", {8, 9, 3, 1, 16}},
      {"E6(-14)", {1, 11}},
      {"E6(-26)", {2}},
      {"E7(7)", {1, 9, 24, 11, 8, 2, 39}},
      {"E7(-5)", {2, 12, 2, 4, 17}},
      {"E7(-25)", {10, 12}},
      {"E8(8)", {4, 26, 1, 8, 24, 52}},
      {"E8(-24)", {13, 2, 21}}};
  Outcome o;
  const auto s = cohomology::summary(c, std::nullopt);
  o.require(s.orbits == 411, "total " + std::to_string(s.orbits));
  o.require(s.type_ii == 101, "type II " + std::to_string(s.type_ii));
  o.require(s.upper_bound == 101, "upper bounds " + std::to_string(s.upper_bound));
  o.require(s.exact == 310, "exact " + std::to_string(s.exact));
  for (const auto& [name, sizes] : partitions) {
    std::map<int, int> seen;
    for (const auto& row : cohomology::theorem_table(c, name)) {
      seen[std::stoi(row.provenance.substr(row.provenance.find('#') + 1))] += row.count;
    }
    int sum = 0;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      sum += sizes[k];
      const int clause = static_cast<int>(k) + 1;
      o.require(seen[clause] == sizes[k], name + " clause " + std::to_string(clause) + " has " +
                                              std::to_string(seen[clause]));
    }
    o.require(seen.size() == sizes.size(), name + " has extra clauses");
    o.require(sum == c.orbit_count(name), name + " partition sums to " + std::to_string(sum));
  }
  if (o.passed) o.detail = "411 orbits, 101 upper-bound, 310 exact; 12/12 partitions verified";
  return o;
}

// 7. Root engine.
Outcome root_engine() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::map<std::string, std::size_t> counts = {
      {"G2", 12}, {"F4", 48}, {"E6", 72}, {"E7", 126}, {"E8", 240}};
  for (const auto& [name, n] : counts) {
    const auto rs = rootsys::build_root_system(rootsys::CartanType::parse(name));
    o.require(rs.roots().size() == n, name + " has " + std::to_string(rs.roots().size()));
  }
  int round_trips = 0;
  for (const char f : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
    for (int n = 1; n <= 8; ++n) {
      rootsys::CartanType t = rootsys::CartanType::make(rootsys::Family::A, 1);
      try {
        t = rootsys::CartanType::make(static_cast<rootsys::Family>(f), n);
      } catch (const InvalidCartanType&) {
        continue;
      }
      const bool ok = rootsys::identify_cartan_type(rootsys::cartan_matrix(t)) == t;
      o.require(ok, "round trip fails for " + t.to_string());
      ++round_trips;
    }
  }
  std::multiset<std::string> folds;
  for (const auto conv :
       {rootsys::FoldingConvention::kOrbitSum, rootsys::FoldingConvention::kOrbitRestriction}) {
    folds.insert(rootsys::fold_e6(rootsys::FoldingSpec::standard(conv)).to_string());
  }
  o.require(folds == std::multiset<std::string>{"C4", "F4"}, "fold outcomes differ from {F4, C4}");
  const double elapsed = ms_since(t0);
  o.require(elapsed < kRootBudgetMs, "took " + ms(elapsed));
  if (o.passed) {
    o.detail = "root counts exact; " + std::to_string(round_trips) +
               " round trips; folds {F4, C4}; " + ms(elapsed) + " < 5 s";
  }
  return o;
}

// 8. Every single-field mutation is detected.
Outcome fault_injection(const catalog::Catalog& c) {
  Outcome o;
  const auto t0 = Clock::now();
  int n = 0;
  int caught = 0;
  testing::for_each_mutation(c.to_json(), [&](const testing::Mutation& m) {
    ++n;
    bool hit = false;
    try {
      const auto mutated = catalog::Catalog::parse(m.dataset.dump(), catalog::Integrity::kLenient);
      hit = !validate::validate_all(mutated).passed();
    } catch (const CatalogCorrupt&) {
      hit = true;
    }
    if (hit) ++caught;
    else o.require(false, "missed: " + m.description);
  });
  const double elapsed = ms_since(t0);
  o.require(elapsed < kMutationBudgetMs, "took " + ms(elapsed));
  if (o.passed) {
    o.detail = std::to_string(caught) + "/" + std::to_string(n) + " mutations caught; " +
               ms(elapsed) + " < 60 s";
  }
  return o;
}

}  // namespace

int main() {
  const auto catalog = catalog::Catalog::load_embedded();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 orbit totals", [&] { return orbit_totals(catalog); }},
      {"2 theorem reproduction", [&] { return theorem_reproduction(catalog); }},
      {"3 vanishing for F4(-20), E6(-26)", [&] { return vanishing(catalog); }},
      {"4 H^2 bound and maximum", [&] { return bound_and_maximum(catalog); }},
      {"5 H^1 suite", [&] { return h1_suite(catalog); }},
      {"6 summary statistics", [&] { return summary_statistics(catalog); }},
      {"7 root engine", [] { return root_engine(); }},
      {"8 fault injection", [&] { return fault_injection(catalog); }},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.passed) ++failures;
    std::printf("%s  criterion %s: %s\n", o.passed ? "PASS" : "FAIL", name, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
