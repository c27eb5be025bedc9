#pragma once

// Brute-force generators and oracles shared by the unit tests and the
// acceptance binary.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "hoffman/canonical.hpp"
#include "hoffman/graph.hpp"

namespace hoffman::testing {

/// All connected graphs on exactly n vertices with at most max_edges edges,
/// one per isomorphism class. Grows graphs by attaching a new vertex to a
/// non-empty subset; every connected graph has a vertex whose removal keeps it
/// connected, so nothing is missed, and the edge bound is hereditary.
inline std::vector<Graph> connected_graphs(int n, int max_edges = 1 << 20) {
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    std::unordered_set<std::string> seen;
    for (const auto& g : level)
      for (VertexMask s = 1; s < bit(k - 1); ++s) {
        if (g.size() + std::popcount(s) > max_edges) continue;
        Graph h(k);
        for (auto [u, v] : g.edges()) h.add_edge(u, v);
        for (VertexMask m = s; m; m &= m - 1) h.add_edge(k - 1, std::countr_zero(m));
        if (seen.insert(canonical_form(h)).second) next.push_back(h);
      }
    level = std::move(next);
  }
  return level;
}

/// Isomorphism by trying every bijection that preserves degrees.
inline bool brute_isomorphic(const Graph& g, const Graph& h) {
  const int n = g.order();
  if (n != h.order() || g.size() != h.size()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = g.degree(v) == h.degree(perm[v]);
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) ok = g.adjacent(u, v) == h.adjacent(perm[u], perm[v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// The nine-vertex irregular example: class {0..4} of degree-2 and one
/// degree-4 vertex, classes {5, 8} and {6, 7}.
inline Graph figure_one_graph() {
  return Graph(9, {{0, 5}, {0, 6}, {1, 5}, {1, 7}, {2, 6}, {2, 8}, {3, 7}, {3, 8},
                   {4, 5}, {4, 6}, {4, 7}, {4, 8}, {5, 6}, {5, 7}, {6, 8}, {7, 8}});
}

inline Coloring figure_one_coloring() { return Coloring{{{0, 1, 2, 3, 4}, {5, 8}, {6, 7}}}; }

/// Tree with a MAP on five vertices and one on four (vertex i is label i+1).
inline Graph figure_five_tree() {
  return Graph(10, {{0, 2}, {4, 7}, {0, 3}, {4, 2}, {5, 8}, {1, 6}, {5, 2}, {0, 1}, {4, 9}});
}

/// Edge colours for figure_five_tree in Graph::edges() order: 0 red, 1 blue, 2 green.
inline std::vector<int> figure_five_coloring(const Graph& g) {
  const std::vector<std::pair<std::pair<int, int>, int>> colored{
      {{0, 2}, 0}, {{4, 7}, 0}, {{0, 3}, 1}, {{2, 4}, 1}, {{5, 8}, 1},
      {{1, 6}, 1}, {{2, 5}, 2}, {{0, 1}, 2}, {{4, 9}, 2}};
  std::vector<int> out;
  for (auto e : g.edges())
    for (const auto& [edge, c] : colored)
      if (edge == e) out.push_back(c);
  return out;
}

/// Power iteration on A + I (shifted so the dominant eigenvalue is unique).
inline std::vector<double> power_iteration(const Graph& g, int iters = 20000) {
  const int n = g.order();
  std::vector<double> x(n, 1.0), y(n);
  for (int it = 0; it < iters; ++it) {
    for (int v = 0; v < n; ++v) {
      y[v] = x[v];
      for (int w = 0; w < n; ++w)
        if (g.adjacent(v, w)) y[v] += x[w];
    }
    double norm = 0.0;
    for (double t : y) norm += t * t;
    norm = std::sqrt(norm);
    for (int v = 0; v < n; ++v) x[v] = y[v] / norm;
  }
  return x;
}

}  // namespace hoffman::testing
