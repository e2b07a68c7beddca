#include "orbitcoh/render.hpp"

#include <algorithm>
#include <sstream>

#include "orbitcoh/cohomology.hpp"
#include "orbitcoh/error.hpp"

namespace orbitcoh::render {

using nlohmann::json;

namespace {

std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string csv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "table") return OutputFormat::kTable;
  if (text == "json") return OutputFormat::kJson;
  if (text == "csv") return OutputFormat::kCsv;
  throw Error("unknown output format '" + std::string(text) + "' (expected table, json or csv)");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::kTable: return "table";
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
  }
  return "table";
}

std::string pad_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], display_width(row[i]));
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - display_width(row[i]) + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

std::string list(const catalog::Catalog& catalog, std::string_view algebra, OutputFormat format) {
  const auto& block = catalog.algebra(algebra);
  if (format == OutputFormat::kJson) return dump(catalog::to_json(block));

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"label", "dim_z_k", "component_group", "h1", "provenance"});
  for (const auto& r : block.records) {
    rows.push_back({r.label.to_string(), std::to_string(r.dim_z_k),
                    catalog::to_string(r.component_group), std::to_string(r.h1_dim), r.provenance});
  }
  for (const auto& r : block.remainders) {
    rows.push_back({"(" + std::to_string(r.count) + " unlisted)", std::to_string(r.dim_z_k),
                    catalog::to_string(r.component_group), std::to_string(r.h1_dim), r.provenance});
  }
  if (format == OutputFormat::kCsv) return csv(rows);
  std::ostringstream os;
  os << block.descriptor.name << ": " << block.orbit_count() << " nonzero nilpotent orbits ("
     << block.records.size() << " listed)\n";
  return os.str() + pad_columns(rows);
}

std::string table(const catalog::Catalog& catalog, std::string_view algebra, OutputFormat format) {
  const auto& block = catalog.algebra(algebra);
  const auto rows = cohomology::theorem_table(catalog, algebra);

  if (format == OutputFormat::kJson) {
    json j = catalog::to_json(block);
    std::size_t i = 0;
    for (auto& rec : j["records"]) {
      const auto& row = rows[i++];
      rec["type"] = cohomology::to_string(row.type);
      rec["h2_kind"] = row.h2.kind_name();
      rec["h2_n"] = row.h2.n;
    }
    for (auto& rem : j["remainders"]) {
      const auto& row = rows[i++];
      rem["type"] = cohomology::to_string(row.type);
      rem["h2_kind"] = row.h2.kind_name();
      rem["h2_n"] = row.h2.n;
    }
    return dump(j);
  }

  if (format == OutputFormat::kCsv) {
    std::vector<std::vector<std::string>> out;
    out.push_back({"label", "dim_z_k", "component_group", "type", "h2_kind", "h2_n", "h1", "provenance"});
    for (const auto& row : rows) {
      out.push_back({row.label, std::to_string(row.dim_z_k), catalog::to_string(row.component_group),
                     cohomology::to_string(row.type), row.h2.kind_name(), std::to_string(row.h2.n),
                     std::to_string(row.h1.n), row.provenance});
    }
    return csv(out);
  }

  std::vector<std::vector<std::string>> out;
  out.push_back({"label", "dim z(k)", "K/K0", "type", "H2", "bound", "H1", "clause"});
  for (const auto& row : rows) {
    out.push_back({row.label, std::to_string(row.dim_z_k), catalog::to_string(row.component_group),
                   cohomology::to_string(row.type), std::to_string(row.h2.n),
                   row.h2.is_exact() ? "" : "≤", std::to_string(row.h1.n), row.provenance});
  }
  std::ostringstream os;
  os << block.descriptor.name << " (m " << (block.descriptor.m_semisimple() ? "semisimple" : "not semisimple")
     << ", " << block.orbit_count() << " nonzero orbits)\n";
  return os.str() + pad_columns(out);
}

std::string summary(const catalog::Catalog& catalog, std::optional<std::string_view> algebra,
                    OutputFormat format) {
  std::vector<std::string> scopes;
  if (algebra) {
    scopes.push_back(catalog.algebra(*algebra).descriptor.name);
  } else {
    for (const auto& b : catalog.algebras()) scopes.push_back(b.descriptor.name);
  }
  std::vector<std::pair<std::string, cohomology::Summary>> parts;
  for (const auto& s : scopes) parts.emplace_back(s, cohomology::summary(catalog, s));
  if (!algebra) parts.emplace_back("all", cohomology::summary(catalog, std::nullopt));

  const std::vector<std::string> header = {"algebra", "orbits", "listed", "type_I", "type_II",
                                           "type_III", "exact", "upper_bound", "h1_nonzero"};
  auto cells = [](const std::string& name, const cohomology::Summary& s) {
    return std::vector<std::string>{name, std::to_string(s.orbits), std::to_string(s.explicit_records),
                                    std::to_string(s.type_i), std::to_string(s.type_ii),
                                    std::to_string(s.type_iii), std::to_string(s.exact),
                                    std::to_string(s.upper_bound), std::to_string(s.h1_nonzero)};
  };

  if (format == OutputFormat::kJson) {
    json arr = json::array();
    for (const auto& [name, s] : parts) {
      const auto c = cells(name, s);
      json obj = json::object();
      obj["algebra"] = name;
      for (std::size_t i = 1; i < header.size(); ++i) obj[header[i]] = std::stoi(c[i]);
      arr.push_back(obj);
    }
    return dump(arr);
  }
  std::vector<std::vector<std::string>> rows{header};
  for (const auto& [name, s] : parts) rows.push_back(cells(name, s));
  return format == OutputFormat::kCsv ? csv(rows) : pad_columns(rows);
}

std::string validation(const validate::ValidationReport& report, OutputFormat format) {
  if (format == OutputFormat::kJson) return dump(report.to_json());
  std::vector<std::vector<std::string>> rows;
  if (format == OutputFormat::kCsv) {
    rows.push_back({"check_id", "status", "description", "detail"});
    for (const auto& c : report.checks) {
      std::string detail = c.detail;
      std::replace(detail.begin(), detail.end(), ',', ';');
      rows.push_back({c.check_id, c.passed ? "pass" : "fail", c.description, detail});
    }
    return csv(rows);
  }
  std::string out;
  for (const auto& c : report.checks) {
    out += (c.passed ? "PASS  " : "FAIL  ") + c.check_id + "  " + c.description + "\n";
    if (!c.passed) out += "      " + c.detail + "\n";
  }
  out += std::string("validation: ") + (report.passed() ? "pass" : "FAIL") + " (" +
         std::to_string(report.checks.size() - report.failures().size()) + "/" +
         std::to_string(report.checks.size()) + " checks)\n";
  return out;
}

}  // namespace orbitcoh::render
