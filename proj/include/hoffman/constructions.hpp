#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hoffman/graph.hpp"
#include "hoffman/hoffman.hpp"
#include "hoffman/spectra.hpp"

namespace hoffman {

// ---- cones ----

/// g plus k new pairwise non-adjacent vertices n..n+k-1, each joined to all of g.
Graph k_cone(const Graph& g, int k);

struct ConeVerdict {
  bool colorable = false;           // decided by the cone classification
  double required_class_size = 0;   // lambda_min(g)^2 / k
  Spectrum spectrum_of_cone;
  std::optional<Coloring> witness;  // base colouring with all classes of the required size
  bool direct_colorable = false;    // is_hoffman_colorable on the cone itself
};

/// The k-cone over g is Hoffman colorable iff g is regular, Hoffman colorable
/// and has an optimal colouring whose classes all have lambda_min^2 / k vertices.
ConeVerdict classify_cone(const Graph& g, int k, double tol = kHoffmanTolerance);

/// {chi nu, 0^(k-1), -nu} plus Spec(g) with one copy of (chi-1) nu removed.
/// Throws unless g is regular, Hoffman colorable and has classes of size nu^2/k.
Spectrum cone_spectrum_formula(const Graph& g, int k, double tol = kHoffmanTolerance);

// ---- line graphs ----

/// Vertices are the edges of g in lexicographic order.
Graph line_graph(const Graph& g);

int edge_chromatic_number(const Graph& g);

/// Colour of every edge of g (in g.edges() order) with chi'(g) colours.
std::vector<int> optimal_edge_coloring(const Graph& g);

using Matching = std::vector<std::pair<int, int>>;

/// Partition of E(g) into perfect matchings, when g is regular of class 1.
std::optional<std::vector<Matching>> is_one_factorable(const Graph& g);

struct AlternatingComponent {
  std::pair<int, int> colors;  // the two edge colours, first < second
  std::vector<int> vertices;   // in path or cycle order
  int vertex_count = 0;
  int edge_count = 0;
  bool cycle = false;          // otherwise a path
};

/// For every pair of colours used, the components of the two-coloured
/// subgraph. `ecoloring` gives a colour per edge in g.edges() order.
std::vector<AlternatingComponent> maximal_alternating_paths(const Graph& g,
                                                            const std::vector<int>& ecoloring);

enum class LineCase { OneFactorable, Star, Path, Triangle, SporadicNet, NotColorable };

const char* to_string(LineCase c);

struct LineGraphVerdict {
  bool colorable = false;
  LineCase which = LineCase::NotColorable;
  std::optional<std::vector<int>> witness;  // an optimal edge colouring
};

/// L(g) is Hoffman colorable iff g is 1-factorable, a star, a path, K3, or
/// the net (a triangle with one pendant edge at every corner).
LineGraphVerdict classify_line_graph(const Graph& g);

/// Triangle 0-1-2 with pendant vertices 3, 4, 5 on 0, 1, 2.
Graph net_graph();

// ---- colour complements and nu-equitable colourings ----

Graph color_complement(const Graph& g, const Coloring& c);

/// nu when every vertex has exactly nu neighbours in each other class.
std::optional<int> nu_equitable(const Graph& g, const Coloring& c);

/// nu >= m (c-1) / c for a nu-equitable colouring with classes of size m.
/// Throws when the classes differ in size or the colouring is not equitable.
bool nu_equitable_sufficiency(const Graph& g, const Coloring& c);

struct ColoredGraph {
  Graph graph;
  Coloring coloring;
};

/// K_{m,...,m} with c classes minus one perfect matching in every bipartite
/// part. Vertex i*m + a is element a of class i. Without `matchings` the pair
/// (i, j), i < j, loses the edges {(i,a), (j,a)}; otherwise matchings[p] is a
/// permutation sigma for the p-th pair in lexicographic order and the edges
/// {(i,a), (j,sigma[a])} are removed.
ColoredGraph multipartite_minus_matchings(int c, int m,
                                          const std::optional<std::vector<std::vector<int>>>& matchings = std::nullopt);

}  // namespace hoffman
