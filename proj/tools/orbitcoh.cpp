// orbitcoh: query the nilpotent orbit catalog and the cohomology rules.
//
// Exit codes: 0 success, 2 usage or unknown input, 3 label not listed,
// 4 validation failure or corrupt dataset.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "orbitcoh/catalog.hpp"
#include "orbitcoh/cohomology.hpp"
#include "orbitcoh/error.hpp"
#include "orbitcoh/render.hpp"
#include "orbitcoh/rootsys.hpp"
#include "orbitcoh/validate.hpp"

namespace {

using namespace orbitcoh;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitUnlisted = 3;
constexpr int kExitInvalid = 4;

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (const int x : v) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

std::string render_value(const cohomology::CohomologyValue& v, render::OutputFormat format) {
  switch (format) {
    case render::OutputFormat::kJson:
      return nlohmann::json{{"kind", v.kind_name()}, {"n", v.n}}.dump() + "\n";
    case render::OutputFormat::kCsv:
      return "kind,n\n" + v.kind_name() + "," + std::to_string(v.n) + "\n";
    case render::OutputFormat::kTable:
      break;
  }
  return v.to_string() + "\n";
}

// Each "--orbits" group is a comma list, groups separated by ';': "1,6;3,5;2;4".
std::vector<std::vector<int>> parse_orbits(const std::string& text) {
  std::vector<std::vector<int>> orbits;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::vector<int> orbit;
    std::stringstream nodes(group);
    std::string node;
    while (std::getline(nodes, node, ',')) {
      try {
        orbit.push_back(std::stoi(node));
      } catch (const std::exception&) {
        throw InvalidFolding("cannot parse node '" + node + "' in --orbits");
      }
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of nilpotent orbits in real exceptional Lie algebras", "orbitcoh"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_text = "table";
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  std::string algebra;
  std::vector<std::string> label_parts;

  auto* list_cmd = app.add_subcommand("list", "List the orbits of one real form");
  list_cmd->add_option("algebra", algebra, "Real form, e.g. E7(7) or E7_7")->required();

  auto* h2_cmd = app.add_subcommand("h2", "dim H^2 of one orbit");
  auto* h1_cmd = app.add_subcommand("h1", "dim H^1 of one orbit");
  for (auto* cmd : {h2_cmd, h1_cmd}) {
    cmd->add_option("algebra", algebra, "Real form")->required();
    cmd->add_option("label", label_parts, "Characteristic, e.g. 1011101 or \"40000 -2\"")
        ->required()
        ->allow_extra_args();
  }

  auto* table_cmd = app.add_subcommand("table", "Every orbit of a real form with its type, H^2 and H^1");
  table_cmd->add_option("algebra", algebra, "Real form")->required();

  std::string summary_scope;
  auto* summary_cmd = app.add_subcommand("summary", "Counts by type and by exact / bounded result");
  summary_cmd->add_option("algebra", summary_scope, "Real form (default: all)");

  auto* validate_cmd = app.add_subcommand("validate", "Run the consistency checks");

  std::string type_text;
  bool roots_count = false;
  bool roots_highest = false;
  bool roots_cartan = false;
  bool roots_extended = false;
  auto* roots_cmd = app.add_subcommand("roots", "Root system of a simple type");
  roots_cmd->add_option("type", type_text, "Cartan type, e.g. E8")->required();
  roots_cmd->add_flag("--count", roots_count, "Print only the number of roots");
  roots_cmd->add_flag("--highest", roots_highest, "Print only the highest root");
  roots_cmd->add_flag("--cartan", roots_cartan, "Print only the Cartan matrix");
  roots_cmd->add_flag("--extended", roots_extended, "Print only alpha_0, the negative highest root");

  std::string convention_text = "orbit-sum";
  std::string orbits_text;
  auto* fold_cmd = app.add_subcommand("fold", "Fold the E6 Dynkin diagram");
  fold_cmd->add_option("type", type_text, "Source type (E6)")->required();
  fold_cmd->add_option("--convention", convention_text, "orbit-sum or orbit-restriction")
      ->check(CLI::IsMember({"orbit-sum", "orbit-restriction"}));
  fold_cmd->add_option("--orbits", orbits_text, "Node partition, e.g. \"1,6;3,5;2;4\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const auto format = render::parse_format(format_text);

    if (*roots_cmd) {
      const auto rs = rootsys::build_root_system(rootsys::CartanType::parse(type_text));
      if (roots_count) {
        std::cout << rs.roots().size() << "\n";
      } else if (roots_highest) {
        std::cout << join_ints(rs.highest_root()) << "\n";
      } else if (roots_extended) {
        std::cout << join_ints(rootsys::extended_basis(rs).alpha_0) << "\n";
      } else if (roots_cartan) {
        for (const auto& row : rs.cartan_matrix()) std::cout << join_ints(row) << "\n";
      } else {
        std::cout << "type " << rs.cartan_type().to_string() << "\n"
                  << "rank " << rs.rank() << "\n"
                  << "roots " << rs.roots().size() << "\n"
                  << "positive_roots " << rs.positive_roots().size() << "\n"
                  << "highest_root " << join_ints(rs.highest_root()) << "\n";
      }
      return kExitOk;
    }

    if (*fold_cmd) {
      rootsys::FoldingSpec spec =
          rootsys::FoldingSpec::standard(rootsys::parse_folding_convention(convention_text));
      spec.source = rootsys::CartanType::parse(type_text);
      if (!orbits_text.empty()) spec.node_orbits = parse_orbits(orbits_text);
      std::cout << rootsys::fold_e6(spec).to_string() << "\n";
      return kExitOk;
    }

    if (*validate_cmd) {
      const auto catalog = catalog::Catalog::load_default(catalog::Integrity::kLenient);
      const auto report = validate::validate_all(catalog);
      std::cout << render::validation(report, format);
      return report.passed() ? kExitOk : kExitInvalid;
    }

    const auto catalog = catalog::Catalog::load_default();

    if (*list_cmd) {
      std::cout << render::list(catalog, algebra, format);
    } else if (*table_cmd) {
      std::cout << render::table(catalog, algebra, format);
    } else if (*summary_cmd) {
      std::optional<std::string_view> scope;
      if (!summary_scope.empty()) scope = summary_scope;
      std::cout << render::summary(catalog, scope, format);
    } else if (*h2_cmd || *h1_cmd) {
      const auto label = catalog.normalize_label(join(label_parts), algebra);
      const auto result = cohomology::query(catalog, algebra, label);
      std::cout << render_value(*h2_cmd ? result.h2 : result.h1, format);
    }
    return kExitOk;
  } catch (const UnlistedLabel& e) {
    std::cerr << "unlisted: " << e.what() << "\n";
    return kExitUnlisted;
  } catch (const CatalogCorrupt& e) {
    std::cerr << "corrupt dataset: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InconsistentInput& e) {
    std::cerr << "inconsistent dataset: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
