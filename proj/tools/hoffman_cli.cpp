// Command-line front end.
//
// Exit codes: 0 success; 1 internal or input failure; 2 enumeration finished
// with deferred cases (counts are lower bounds); 3 verify found a graph that
// is not Hoffman colourable; 64 invalid usage.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hoffman/coloring.hpp"
#include "hoffman/constructions.hpp"
#include "hoffman/enumeration.hpp"
#include "hoffman/graph6.hpp"
#include "hoffman/hoffman.hpp"
#include "hoffman/report.hpp"

using namespace hoffman;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitIncomplete = 2;
constexpr int kExitNotColorable = 3;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::optional<int> vertices;
  std::optional<int> colors;
  std::optional<int> max_vertices;
  std::optional<int> k;
  std::string as;
  double tolerance = kHoffmanTolerance;
  std::string input;
  std::string output;
  std::string format;
  int jobs = 0;
  bool progress = false;
};

class Output {
public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary);
    if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

std::vector<Graph> read_input(const Config& cfg) {
  if (cfg.input.empty()) throw UsageError("--input is required");
  try {
    if (cfg.input == "-") return read_graph6_lines(std::cin);
    std::ifstream in(cfg.input);
    if (!in) throw InputError("cannot open " + cfg.input);
    return read_graph6_lines(in);
  } catch (const Error& e) {
    throw InputError(cfg.input + ": " + e.what());
  }
}

void require_format(const Config& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw UsageError("--format " + cfg.format + " is not available for this command");
}

EnumerationOptions enum_options(const Config& cfg) {
  EnumerationOptions o;
  o.tol = cfg.tolerance;
  o.jobs = cfg.jobs;
  o.progress = cfg.progress;
  return o;
}

int cmd_enumerate(Config cfg) {
  if (!cfg.vertices || !cfg.colors) throw UsageError("enumerate needs --vertices and --colors");
  if (cfg.format.empty()) cfg.format = "json";
  require_format(cfg, {"json", "graph6"});
  const auto r = enumerate_hoffman(*cfg.vertices, *cfg.colors, enum_options(cfg));
  Output out(cfg.output);
  if (cfg.format == "json") {
    out.stream() << to_json(r).dump(2) << '\n';
  } else {
    for (const auto& g : r.graphs) out.stream() << to_graph6(g.graph) << '\n';
  }
  if (!r.disc.empty()) {
    std::cerr << r.disc.size() << " deferred case(s); counts are lower bounds\n";
    return kExitIncomplete;
  }
  return kExitOk;
}

int cmd_verify(Config cfg) {
  if (cfg.format.empty()) cfg.format = "json";
  require_format(cfg, {"json"});
  const auto graphs = read_input(cfg);
  json out = json::array();
  bool all = true;
  for (const auto& g : graphs) {
    json v{{"graph6", to_graph6(g)}};
    try {
      const auto verdict = is_hoffman_colorable(g, cfg.tolerance);
      v["bound"] = verdict.bound;
      v["chi"] = verdict.chi;
      v["colorable"] = verdict.colorable;
      if (verdict.colorable) {
        const auto s = check_hoffman_structure(g, optimal_coloring(g).coloring, cfg.tolerance);
        v["structure"] = {{"weight_regular", s.weight_regular},
                          {"intersection_numbers", s.intersection_numbers},
                          {"equal_norms", s.equal_norms},
                          {"regularity_residual", s.regularity_residual},
                          {"intersection_residual", s.intersection_residual},
                          {"norm_residual", s.norm_residual}};
      }
      all = all && verdict.colorable;
    } catch (const Error& e) {
      v["colorable"] = false;
      v["error"] = e.what();
      all = false;
    }
    out.push_back(std::move(v));
  }
  Output o(cfg.output);
  o.stream() << out.dump(2) << '\n';
  return all ? kExitOk : kExitNotColorable;
}

json coloring_json(const Coloring& c) { return c.classes; }

int cmd_classify(Config cfg) {
  if (cfg.as != "line" && cfg.as != "cone") throw UsageError("classify needs --as line or --as cone");
  if (cfg.as == "cone" && !cfg.k) throw UsageError("--as cone needs --k");
  if (cfg.as == "line" && cfg.k) throw UsageError("--k only applies to --as cone");
  if (cfg.format.empty()) cfg.format = "json";
  require_format(cfg, {"json"});
  const auto graphs = read_input(cfg);
  json out = json::array();
  for (const auto& g : graphs) {
    json v{{"graph6", to_graph6(g)}};
    try {
      if (cfg.as == "line") {
        const auto l = classify_line_graph(g);
        v["colorable"] = l.colorable;
        v["case"] = to_string(l.which);
        if (l.witness) v["edge_coloring"] = *l.witness;
      } else {
        const auto c = classify_cone(g, *cfg.k, cfg.tolerance);
        v["k"] = *cfg.k;
        v["colorable"] = c.colorable;
        v["required_class_size"] = c.required_class_size;
        v["direct_colorable"] = c.direct_colorable;
        v["cone_spectrum"] = c.spectrum_of_cone.values;
        if (c.witness) v["witness"] = coloring_json(*c.witness);
      }
    } catch (const Error& e) {
      v["error"] = e.what();
    }
    out.push_back(std::move(v));
  }
  Output o(cfg.output);
  o.stream() << out.dump(2) << '\n';
  return kExitOk;
}

int cmd_tables(Config cfg) {
  if (!cfg.colors || !cfg.max_vertices) throw UsageError("tables needs --colors and --max-vertices");
  if (cfg.format.empty()) cfg.format = "markdown";
  require_format(cfg, {"markdown", "json"});
  const int chi = *cfg.colors;
  if (chi < 2) throw UsageError("--colors must be at least 2");
  std::vector<TableRow> rows;
  json reports = json::array();
  for (int n = chi; n <= *cfg.max_vertices; ++n) {
    const auto r = enumerate_hoffman(n, chi, enum_options(cfg));
    std::cerr << "n=" << n << ": " << r.counts.total << " graph(s)" << (r.disc.empty() ? "" : ", deferred cases")
              << '\n';
    rows.push_back({n, r.counts, !r.disc.empty()});
    if (cfg.format == "json") reports.push_back(to_json(r));
  }
  Output o(cfg.output);
  if (cfg.format == "markdown")
    o.stream() << render_table(chi, rows);
  else
    o.stream() << reports.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hoffman colourable graphs: enumeration, verification and classification"};
  app.require_subcommand(1);
  Config cfg;
  if (const char* env = std::getenv("HOFFMAN_TOL")) {
    char* end = nullptr;
    cfg.tolerance = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(cfg.tolerance > 0)) {
      std::cerr << "HOFFMAN_TOL must be a positive number\n";
      return kExitUsage;
    }
  }

  auto common = [&](CLI::App* sub) {
    sub->add_option("--tolerance", cfg.tolerance, "Numerical tolerance (default 1e-6, or HOFFMAN_TOL)")
        ->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", cfg.output, "Output file (default standard output)");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"graph6", "json", "markdown"}));
  };
  auto enumerating = [&](CLI::App* sub) {
    sub->add_option("--jobs", cfg.jobs, "Worker threads (default: available parallelism)")->check(CLI::NonNegativeNumber);
    sub->add_flag("--progress", cfg.progress, "Per-task progress on standard error");
  };

  auto* en = app.add_subcommand("enumerate", "All connected Hoffman colourable graphs with n vertices and chi colours");
  en->add_option("-n,--vertices", cfg.vertices, "Number of vertices");
  en->add_option("-c,--colors", cfg.colors, "Chromatic number");
  common(en);
  enumerating(en);

  auto* ve = app.add_subcommand("verify", "Hoffman colourability of graph6 inputs");
  ve->add_option("-i,--input", cfg.input, "graph6 file, one graph per line ('-' for standard input)");
  common(ve);

  auto* cl = app.add_subcommand("classify", "Cone or line graph classification of graph6 inputs");
  cl->add_option("-i,--input", cfg.input, "graph6 file, one graph per line ('-' for standard input)");
  cl->add_option("--as", cfg.as, "line or cone")->check(CLI::IsMember({"line", "cone"}));
  cl->add_option("--k", cfg.k, "Cone size")->check(CLI::PositiveNumber);
  common(cl);

  auto* ta = app.add_subcommand("tables", "Count table for chi colours and n = chi..max");
  ta->add_option("-c,--colors", cfg.colors, "Chromatic number");
  ta->add_option("--max-vertices", cfg.max_vertices, "Largest number of vertices");
  common(ta);
  enumerating(ta);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (en->parsed()) return cmd_enumerate(cfg);
    if (ve->parsed()) return cmd_verify(cfg);
    if (cl->parsed()) return cmd_classify(cfg);
    return cmd_tables(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const Error& e) {
    // Library precondition failures (for example n < chi) are usage errors.
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << '\n';
    return kExitFailure;
  }
}
