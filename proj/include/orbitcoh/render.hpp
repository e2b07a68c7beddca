#pragma once

// Text renderings shared by the command-line tool and the golden tests.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitcoh/catalog.hpp"
#include "orbitcoh/validate.hpp"

namespace orbitcoh::render {

enum class OutputFormat { kTable, kJson, kCsv };

OutputFormat parse_format(std::string_view text);
std::string to_string(OutputFormat f);

/// Left-aligned columns separated by two spaces; widths count code points.
std::string pad_columns(const std::vector<std::vector<std::string>>& rows);

std::string list(const catalog::Catalog& catalog, std::string_view algebra, OutputFormat format);
std::string table(const catalog::Catalog& catalog, std::string_view algebra, OutputFormat format);
std::string summary(const catalog::Catalog& catalog, std::optional<std::string_view> algebra,
                    OutputFormat format);
std::string validation(const validate::ValidationReport& report, OutputFormat format);

}  // namespace orbitcoh::render
