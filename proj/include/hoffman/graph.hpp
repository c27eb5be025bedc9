#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hoffman {

inline constexpr int kMaxVertices = 64;

using VertexMask = std::uint64_t;

inline VertexMask bit(int v) { return VertexMask{1} << v; }

/// Raised on violated preconditions throughout the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on at most 64 vertices, one adjacency bitset per
/// vertex. Symmetric and loop-free by construction.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);
  Graph(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  int size() const;  // number of edges

  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexMask neighbors(int v) const { return rows_[v]; }
  int degree(int v) const;
  VertexMask all_vertices() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  /// Relabel: vertex v of this graph becomes vertex perm[v].
  Graph permuted(std::span<const int> perm) const;

  /// Induced subgraph on `vertices`, in the given order.
  Graph induced(std::span<const int> vertices) const;

  bool operator==(const Graph& other) const = default;

private:
  int n_ = 0;
  std::vector<VertexMask> rows_;
};

/// Ordered list of disjoint non-empty vertex classes covering the vertex set.
struct Coloring {
  std::vector<std::vector<int>> classes;

  int num_classes() const { return static_cast<int>(classes.size()); }
  /// Color index of every vertex; -1 for uncovered ones.
  std::vector<int> color_of(int n) const;
  VertexMask class_mask(int i) const;

  /// Builds a coloring from a per-vertex color vector with colors 0..k-1.
  static Coloring from_colors(std::span<const int> colors);

  bool operator==(const Coloring&) const = default;
};

/// True when the classes partition V(g) and each is independent.
bool is_proper(const Graph& g, const Coloring& c);

struct IntegerPartition {
  std::vector<int> parts;  // non-increasing
  int sum = 0;

  bool operator==(const IntegerPartition&) const = default;
};

/// All partitions of n into exactly k positive parts, non-increasing parts,
/// emitted in lexicographically descending order.
std::vector<IntegerPartition> integer_partitions(int n, int k);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Exact independence number by bitset branch and bound.
int independence_number(const Graph& g);

/// Common degree, or nullopt when degrees differ.
std::optional<int> is_regular(const Graph& g);

bool is_bipartite(const Graph& g);

// Named graphs used by tests, the CLI, and constructions.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph empty_graph(int n);
Graph petersen_graph();
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace hoffman
