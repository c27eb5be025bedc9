#include "hoffman/report.hpp"

#include <sstream>

#include "hoffman/graph6.hpp"

namespace hoffman {

nlohmann::json to_json(const EnumerationReport& report) {
  using nlohmann::json;
  json graphs = json::array();
  for (const auto& g : report.graphs)
    graphs.push_back({{"graph6", to_graph6(g.graph)},
                      {"coloring", g.coloring.classes},
                      {"lambda_max", g.lambda_max},
                      {"lambda_min", g.lambda_min},
                      {"alpha", g.alpha},
                      {"regular", g.regular},
                      {"outperforming", g.outperforming}});
  json disc = json::array();
  for (const auto& d : report.disc)
    disc.push_back({{"partition", d.partition.parts},
                    {"lambda_max", d.lambda_max},
                    {"part_graph6", to_graph6(d.part)}});
  return {{"schema", kReportSchema},
          {"n", report.n},
          {"chi", report.chi},
          {"tolerance", report.tolerance},
          {"graphs", graphs},
          {"disc", disc},
          {"counts",
           {{"total", report.counts.total},
            {"regular", report.counts.regular},
            {"irregular", report.counts.irregular},
            {"outperforming", report.counts.outperforming}}}};
}

std::vector<std::string> table_cells(int chi, const TableRow& row) {
  const std::string ge = row.incomplete ? "≥" : "";
  auto num = [&](int v) { return ge + std::to_string(v); };
  const auto& c = row.counts;
  if (c.total == 0 && !row.incomplete) return {std::to_string(row.n), "0", "-", "-", "-"};
  return {std::to_string(row.n), num(c.total), row.n % chi == 0 ? num(c.regular) : "-", num(c.irregular),
          num(c.outperforming)};
}

std::string render_table(int chi, const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "| #vertices | #graphs | #regulars | #irregulars | #outperforming |\n";
  out << "|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    out << '|';
    for (const auto& cell : table_cells(chi, r)) out << ' ' << cell << " |";
    out << '\n';
  }
  return out.str();
}

}  // namespace hoffman
