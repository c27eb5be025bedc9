#pragma once

#include <array>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hoffman/graph.hpp"
#include "hoffman/hoffman.hpp"
#include "hoffman/spectra.hpp"

namespace hoffman {

/// Connected bipartite graph with sides A = {0..a-1} and B = {a..a+b-1}.
struct BipartitePart {
  Graph graph;
  int a = 0;
  int b = 0;
  double lambda_max = 0.0;
  std::array<std::vector<double>, 2> side_weights;  // Perron weights per side, unit norm, descending
  std::string form;                                 // side-aware canonical form
};

/// All connected bipartite graphs with sides of sizes a and b, up to
/// isomorphisms that keep the sides (or swap them when a == b), whose largest
/// eigenvalue is at most lambda_bound. Sorted by lambda_max, then by form.
std::vector<BipartitePart> generate_bipartite_parts(int a, int b,
                                                    double lambda_bound = std::numeric_limits<double>::infinity());

/// Caches generated parts and answers the "is there a disconnected part with
/// all components at lambda = nu" question used for deferred cases.
/// Thread-safe.
class PartLibrary {
public:
  explicit PartLibrary(double tol = kEigenTolerance) : tol_(tol) {}

  /// Connected parts at (a, b) with lambda_max <= bound.
  std::vector<BipartitePart> connected(int a, int b, double bound);

  /// Distinct largest eigenvalues among connected parts at (a, b), up to bound.
  std::vector<double> lambdas(int a, int b, double bound);

  /// A bipartite graph with sides (a, b), at least two components, no
  /// isolated vertices, and lambda_max = nu on every component.
  std::optional<Graph> disconnected_witness(int a, int b, double nu);

  /// Every nu <= bound for which disconnected_witness(a, b, nu) exists.
  std::vector<double> disconnected_lambdas(int a, int b, double bound);

  double tolerance() const { return tol_; }

private:
  const std::vector<BipartitePart>& ensure(int a, int b, double bound);

  double tol_;
  std::mutex mu_;
  std::map<std::pair<int, int>, std::pair<double, std::vector<BipartitePart>>> cache_;
};

/// True when two eigenvalues agree: within tol, or settled exactly on the
/// characteristic polynomials when they are within 10 tol.
bool same_lambda(double x, const Graph& gx, double y, const Graph& gy, double tol);

struct PartitionLambda {
  IntegerPartition partition;
  double lambda = 0.0;
};

/// Keeps the (partition, lambda) pairs for which every pair of class sizes
/// has at least one part with that lambda. `by_lambda` maps each lambda to
/// the parts sharing it; parts of either orientation count.
std::vector<PartitionLambda> filter_partitions(
    int n, int chi, const std::vector<IntegerPartition>& partitions,
    const std::vector<std::pair<double, std::vector<BipartitePart>>>& by_lambda);

/// Parts for a gluing: parts[p] belongs to the p-th class pair (i, j), i < j,
/// in lexicographic order, with side A on class i.
struct CompatibleCollection {
  IntegerPartition class_sizes;
  std::vector<BipartitePart> parts;
  double shared_lambda = 0.0;
};

/// Every graph obtained by identifying the copies of each class across the
/// parts so that identified vertices carry equal Perron weight. Deduplicated
/// by coloured canonical form. Exponential; meant for small cross-checks.
std::vector<std::pair<Graph, Coloring>> assemble(const CompatibleCollection& collection,
                                                 double tol = kHoffmanTolerance);

/// lambda_min(g) >= -nu - tol; with lambda_max = (chi-1) nu certified by
/// construction this is Hoffman colourability.
bool final_check(const Graph& g, const Coloring& c, double nu, double tol = kHoffmanTolerance);

struct FoundGraph {
  Graph graph;  // canonically labelled
  Coloring coloring;
  std::string form;
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  int alpha = 0;
  bool regular = false;
  bool outperforming = false;
};

struct DiscCase {
  IntegerPartition partition;
  double lambda_max = 0.0;
  Graph part;  // one disconnected bipartite part that makes the case conceivable
};

struct Counts {
  int total = 0;
  int regular = 0;
  int irregular = 0;
  int outperforming = 0;
};

struct EnumerationReport {
  int n = 0;
  int chi = 0;
  double tolerance = kHoffmanTolerance;
  std::vector<FoundGraph> graphs;  // sorted by form
  std::vector<DiscCase> disc;
  Counts counts;
};

struct EnumerationOptions {
  double tol = kHoffmanTolerance;
  int jobs = 0;  // 0: OpenMP default
  bool progress = false;
};

/// Every connected Hoffman colourable graph on n vertices with chromatic
/// number chi, up to isomorphism. OpenMP-parallel over search templates.
EnumerationReport enumerate_hoffman(int n, int chi, const EnumerationOptions& opts = {});

/// Single-threaded reference; same output as enumerate_hoffman.
EnumerationReport enumerate_hoffman_serial(int n, int chi, const EnumerationOptions& opts = {});

Counts classify_counts(const EnumerationReport& report);

/// Fills lambda, alpha, regular and outperforming for a graph of chromatic number chi.
FoundGraph describe(const Graph& g, const Coloring& c, int chi);

}  // namespace hoffman
