#include "hoffman/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace hoffman {

namespace {

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) throw Error("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxVertices)
    throw Error("graph order " + std::to_string(n) + " outside [0, 64]");
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::size() const {
  int twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  return twice / 2;
}

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

VertexMask Graph::all_vertices() const {
  return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::permuted(std::span<const int> perm) const {
  Graph h(n_);
  for (int u = 0; u < n_; ++u) {
    VertexMask row = rows_[u];
    while (row) {
      int v = std::countr_zero(row);
      row &= row - 1;
      h.rows_[perm[u]] |= bit(perm[v]);
    }
  }
  return h;
}

Graph Graph::induced(std::span<const int> vertices) const {
  const int m = static_cast<int>(vertices.size());
  Graph h(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (adjacent(vertices[i], vertices[j])) h.add_edge(i, j);
  return h;
}

std::vector<int> Coloring::color_of(int n) const {
  std::vector<int> out(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < num_classes(); ++i)
    for (int v : classes[i])
      if (v >= 0 && v < n) out[v] = i;
  return out;
}

VertexMask Coloring::class_mask(int i) const {
  VertexMask m = 0;
  for (int v : classes[i]) m |= bit(v);
  return m;
}

Coloring Coloring::from_colors(std::span<const int> colors) {
  Coloring c;
  for (std::size_t v = 0; v < colors.size(); ++v) {
    const int col = colors[v];
    if (col < 0) throw Error("negative color");
    if (static_cast<std::size_t>(col) >= c.classes.size()) c.classes.resize(col + 1);
    c.classes[col].push_back(static_cast<int>(v));
  }
  for (const auto& cls : c.classes)
    if (cls.empty()) throw Error("color indices are not contiguous");
  return c;
}

bool is_proper(const Graph& g, const Coloring& c) {
  VertexMask seen = 0;
  for (const auto& cls : c.classes) {
    if (cls.empty()) return false;
    VertexMask m = 0;
    for (int v : cls) {
      if (v < 0 || v >= g.order() || ((seen | m) & bit(v))) return false;
      m |= bit(v);
    }
    for (int v : cls)
      if (g.neighbors(v) & m) return false;
    seen |= m;
  }
  return seen == g.all_vertices();
}

std::vector<IntegerPartition> integer_partitions(int n, int k) {
  if (k < 1 || n < k) throw Error("integer_partitions requires n >= k >= 1");
  std::vector<IntegerPartition> out;
  std::vector<int> parts;
  // Largest part first, descending, so output is lexicographically descending.
  auto rec = [&](auto&& self, int remaining, int slots, int max_part) -> void {
    if (slots == 0) {
      if (remaining == 0) out.push_back({parts, n});
      return;
    }
    const int hi = std::min(max_part, remaining - (slots - 1));
    const int lo = (remaining + slots - 1) / slots;
    for (int p = hi; p >= lo; --p) {
      parts.push_back(p);
      self(self, remaining - p, slots - 1, p);
      parts.pop_back();
    }
  };
  rec(rec, n, k, n);
  return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> out;
  VertexMask unseen = g.all_vertices();
  while (unseen) {
    VertexMask comp = bit(std::countr_zero(unseen));
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= g.neighbors(v);
      }
      frontier = next & ~comp;
      comp |= next;
    }
    unseen &= ~comp;
    std::vector<int> vs;
    while (comp) {
      vs.push_back(std::countr_zero(comp));
      comp &= comp - 1;
    }
    out.push_back(std::move(vs));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

namespace {

// Maximum clique on the complement graph, greedy-colouring bound (MCQ style).
struct CliqueSearch {
  std::vector<VertexMask> adj;
  int best = 0;

  void expand(int size, VertexMask cand) {
    if (!cand) {
      best = std::max(best, size);
      return;
    }
    std::vector<int> order;
    std::vector<int> bound;
    VertexMask uncolored = cand;
    int color = 0;
    while (uncolored) {
      ++color;
      VertexMask avail = uncolored;
      while (avail) {
        int v = std::countr_zero(avail);
        avail &= ~bit(v) & ~adj[v];
        uncolored &= ~bit(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[i] <= best) return;
      int v = order[i];
      expand(size + 1, cand & adj[v]);
      cand &= ~bit(v);
    }
  }
};

}  // namespace

int independence_number(const Graph& g) {
  if (g.order() == 0) throw Error("independence number of the empty vertex set");
  CliqueSearch s;
  s.adj.resize(g.order());
  const VertexMask all = g.all_vertices();
  for (int v = 0; v < g.order(); ++v) s.adj[v] = all & ~g.neighbors(v) & ~bit(v);
  s.expand(0, all);
  return s.best;
}

std::optional<int> is_regular(const Graph& g) {
  if (g.order() == 0) return 0;
  const int d = g.degree(0);
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      VertexMask row = g.neighbors(u);
      while (row) {
        int v = std::countr_zero(row);
        row &= row - 1;
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          stack.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error("cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

}  // namespace hoffman
