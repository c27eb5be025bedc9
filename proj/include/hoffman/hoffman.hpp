#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hoffman/coloring.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/spectra.hpp"

namespace hoffman {

/// |h(G) - chi(G)| below this counts as equality. Looser than the eigenvalue
/// tolerance because h combines two eigenvalues.
inline constexpr double kHoffmanTolerance = 1e-6;

struct ComponentSummary {
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  int chi = 1;
};

struct HoffmanVerdict {
  double bound = 0.0;
  int chi = 0;
  bool colorable = false;
  std::vector<ComponentSummary> per_component;
};

/// Connected inputs: h(G) = chi(G) within tol. Disconnected inputs: every
/// component must itself be Hoffman colorable and all components must share
/// lambda_max, lambda_min and chi. Throws on edgeless graphs.
HoffmanVerdict is_hoffman_colorable(const Graph& g, double tol = kHoffmanTolerance);

/// Same decision, but chi is never computed exactly: a non-integral bound
/// rejects at once and otherwise one k-colouring test settles it. For scans.
bool hoffman_colorable_quick(const Graph& g, double tol = kHoffmanTolerance);

struct WeightQuotient {
  int size = 0;
  Eigen::MatrixXd entries;          // b*_ij
  std::vector<double> class_norms;  // ||y_i|| for the unit Perron vector y
  bool weight_regular = false;
  double regularity_residual = 0.0;  // max_ij ||A_ij y_j - b*_ij y_i||_inf
};

/// Weight-intersection numbers of a proper colouring with respect to the
/// Perron vector. Throws when g has no positive eigenvector.
WeightQuotient weight_quotient(const Graph& g, const Coloring& c, double tol = kHoffmanTolerance);

struct StructureReport {
  bool weight_regular = false;
  bool intersection_numbers = false;  // every b*_ij (i != j) equals -lambda_min
  bool equal_norms = false;
  double regularity_residual = 0.0;
  double intersection_residual = 0.0;
  double norm_residual = 0.0;
  double lambda_min = 0.0;
  WeightQuotient quotient;

  bool all() const { return weight_regular && intersection_numbers && equal_norms; }
};

/// The three necessary conditions of a Hoffman colouring.
StructureReport check_hoffman_structure(const Graph& g, const Coloring& c,
                                        double tol = kHoffmanTolerance);

struct Decomposition {
  Graph graph;
  Coloring coloring;
  std::vector<int> vertices;  // vertex i of `graph` is vertices[i] in the source

  bool colorable = false;       // H is Hoffman colorable with |C| colours
  bool lambda_max_ok = false;   // lambda_max(H) = (|C|-1)/(chi-1) lambda_max(G)
  bool perron_ok = false;       // restricted Perron vector is an eigenvector of H
  bool lambda_min_ok = false;   // lambda_min(H) = lambda_min(G)
  double lambda_max_residual = 0.0;
  double perron_residual = 0.0;
  double lambda_min_residual = 0.0;

  bool all() const { return colorable && lambda_max_ok && perron_ok && lambda_min_ok; }
};

/// Induced subgraph on the classes listed in `colors`, together with the four
/// properties it must have when c is a Hoffman colouring of g.
/// Throws when fewer than two colours are given or c is not a Hoffman colouring.
Decomposition decompose(const Graph& g, const Coloring& c, std::span<const int> colors,
                        double tol = kHoffmanTolerance);

struct Composition {
  Graph graph;  // template vertices first, then the new class
  Coloring coloring;
  bool colorable = false;
  Spectrum spectrum;
  std::vector<double> new_weights;  // y, on the scale of the template's unit Perron vector
  double weight_deviation = 0.0;    // largest disagreement on y between classes
  std::vector<std::string> failures;  // precondition failures, one per class at most
};

/// Adds an independent class of `new_class` vertices to a Hoffman coloured
/// template. cross_edges holds (new vertex index, template vertex) pairs. The
/// result is colourable iff every precondition holds and lambda_min(G) equals
/// lambda_min(T). Throws when the template colouring is not a Hoffman colouring.
Composition compose_and_check(const Graph& t, const Coloring& tc, int new_class,
                              std::span<const std::pair<int, int>> cross_edges,
                              double tol = kHoffmanTolerance);

}  // namespace hoffman
