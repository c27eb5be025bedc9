#include "hoffman/coloring.hpp"

#include <algorithm>
#include <bit>

namespace hoffman {

namespace {

struct MaxClique {
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
        const int v = std::countr_zero(avail);
        avail &= ~bit(v) & ~adj[v];
        uncolored &= ~bit(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[i] <= best) return;
      const int v = order[i];
      expand(size + 1, cand & adj[v]);
      cand &= ~bit(v);
    }
  }
};

// Backtracking k-colouring with DSATUR vertex choice: most saturated first,
// ties by degree, then by index.
class DsaturSearch {
public:
  DsaturSearch(const Graph& g, int k) : g_(g), k_(k), color_(g.order(), -1), classes_(k, 0) {}

  bool run() { return step(0, 0); }
  const std::vector<int>& colors() const { return color_; }

private:
  bool step(int colored, int used) {
    const int n = g_.order();
    if (colored == n) return true;
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color_[v] >= 0) continue;
      int sat = 0;
      for (int c = 0; c < used; ++c)
        if (classes_[c] & g_.neighbors(v)) ++sat;
      const int deg = g_.degree(v);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    if (pick_sat >= k_) return false;
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (classes_[c] & g_.neighbors(pick)) continue;
      color_[pick] = c;
      classes_[c] |= bit(pick);
      if (step(colored + 1, std::max(used, c + 1))) return true;
      classes_[c] &= ~bit(pick);
      color_[pick] = -1;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> color_;
  std::vector<VertexMask> classes_;
};

std::vector<int> greedy_dsatur(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  std::vector<VertexMask> classes;
  for (int step = 0; step < n; ++step) {
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      int sat = 0;
      for (auto m : classes)
        if (m & g.neighbors(v)) ++sat;
      if (sat > pick_sat || (sat == pick_sat && g.degree(v) > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = g.degree(v);
      }
    }
    int c = 0;
    while (c < static_cast<int>(classes.size()) && (classes[c] & g.neighbors(pick))) ++c;
    if (c == static_cast<int>(classes.size())) classes.push_back(0);
    classes[c] |= bit(pick);
    color[pick] = c;
  }
  return color;
}

}  // namespace

int clique_number(const Graph& g) {
  if (g.order() == 0) return 0;
  MaxClique s;
  s.adj.resize(g.order());
  for (int v = 0; v < g.order(); ++v) s.adj[v] = g.neighbors(v);
  s.expand(0, g.all_vertices());
  return s.best;
}

std::optional<Coloring> k_coloring(const Graph& g, int k) {
  if (g.order() == 0) return Coloring{};
  if (k < 1) return std::nullopt;
  DsaturSearch s(g, k);
  if (!s.run()) return std::nullopt;
  return Coloring::from_colors(s.colors());
}

OptimalColoring optimal_coloring(const Graph& g) {
  if (g.order() == 0) throw Error("chromatic number of the empty vertex set");
  const int lower = clique_number(g);
  auto best = greedy_dsatur(g);
  int upper = *std::max_element(best.begin(), best.end()) + 1;
  for (int k = lower; k < upper; ++k) {
    DsaturSearch s(g, k);
    if (s.run()) {
      best = s.colors();
      upper = k;
      break;
    }
  }
  return {upper, Coloring::from_colors(best)};
}

int chromatic_number(const Graph& g) { return optimal_coloring(g).chi; }

namespace {

struct ColoringEnumerator {
  const Graph& g;
  int k;
  int class_size;  // 0 means unconstrained
  const std::function<bool(const Coloring&)>& visit;
  std::vector<int> color;
  std::vector<VertexMask> classes;
  std::vector<int> counts;
  bool stop = false;

  bool rec(int v, int used) {
    const int n = g.order();
    if (v == n) {
      if (used != k) return true;
      return visit(Coloring::from_colors(color));
    }
    if (n - v < k - used) return true;
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (classes[c] & g.neighbors(v)) continue;
      if (class_size > 0 && counts[c] >= class_size) continue;
      color[v] = c;
      classes[c] |= bit(v);
      ++counts[c];
      const bool go = rec(v + 1, std::max(used, c + 1));
      --counts[c];
      classes[c] &= ~bit(v);
      if (!go) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_coloring(const Graph& g, int k, const std::function<bool(const Coloring&)>& visit) {
  if (k < 1 || g.order() < k) return;
  ColoringEnumerator e{g, k, 0, visit, std::vector<int>(g.order(), -1),
                       std::vector<VertexMask>(k, 0), std::vector<int>(k, 0)};
  e.rec(0, 0);
}

std::optional<Coloring> equal_class_coloring(const Graph& g, int k, int class_size) {
  if (k < 1 || class_size < 1 || k * class_size != g.order()) return std::nullopt;
  std::optional<Coloring> found;
  const std::function<bool(const Coloring&)> visit = [&](const Coloring& c) {
    found = c;
    return false;
  };
  ColoringEnumerator e{g, k, class_size, visit, std::vector<int>(g.order(), -1),
                       std::vector<VertexMask>(k, 0), std::vector<int>(k, 0)};
  e.rec(0, 0);
  return found;
}

}  // namespace hoffman
