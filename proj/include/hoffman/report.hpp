#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hoffman/enumeration.hpp"

namespace hoffman {

inline constexpr int kReportSchema = 1;

/// {"schema", "n", "chi", "tolerance", "graphs", "disc", "counts"}.
nlohmann::json to_json(const EnumerationReport& report);

struct TableRow {
  int n = 0;
  Counts counts;
  bool incomplete = false;  // deferred cases exist, counts are lower bounds
};

/// One row per n in the style of the published tables: "-" where a column
/// cannot apply (no graphs at all; regular graphs when chi does not divide n)
/// and a "≥" prefix on every number of an incomplete row.
std::string render_table(int chi, const std::vector<TableRow>& rows);

std::vector<std::string> table_cells(int chi, const TableRow& row);

}  // namespace hoffman
