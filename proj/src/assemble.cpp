#include <algorithm>
#include <cmath>
#include <functional>
#include <unordered_set>

#include "hoffman/canonical.hpp"
#include "hoffman/enumeration.hpp"

namespace hoffman {

namespace {

// Perron weights of one side of a part, unit norm on that side.
std::vector<double> side_weights_in_order(const BipartitePart& p, int side) {
  const auto x = perron_vector(p.graph).vector;
  const int lo = side == 0 ? 0 : p.a;
  const int hi = side == 0 ? p.a : p.a + p.b;
  std::vector<double> w(x.begin() + lo, x.begin() + hi);
  double sq = 0.0;
  for (double v : w) sq += v * v;
  for (double& v : w) v /= std::sqrt(sq);
  return w;
}

// Rounds to 12 significant digits so equal weights land in one group.
double weight_key(double w) {
  if (w == 0.0) return 0.0;
  const double scale = std::pow(10.0, 11 - static_cast<int>(std::floor(std::log10(std::abs(w)))));
  return std::round(w * scale) / scale;
}

}  // namespace

std::vector<std::pair<Graph, Coloring>> assemble(const CompatibleCollection& col, double tol) {
  const auto& sizes = col.class_sizes.parts;
  const int chi = static_cast<int>(sizes.size());
  if (static_cast<int>(col.parts.size()) != chi * (chi - 1) / 2) throw Error("need one part per class pair");
  std::vector<int> offset(chi + 1, 0);
  for (int i = 0; i < chi; ++i) offset[i + 1] = offset[i] + sizes[i];
  const int n = offset[chi];
  if (n > kMaxVertices) throw Error("assembly exceeds 64 vertices");

  struct Slot {
    int part;
    int side;
    int cls;
  };
  std::vector<Slot> slots;
  std::vector<std::pair<int, int>> pair_of;
  for (int i = 0, p = 0; i < chi; ++i)
    for (int j = i + 1; j < chi; ++j, ++p) {
      const auto& part = col.parts[p];
      if (part.a != sizes[i] || part.b != sizes[j]) throw Error("part sides do not match class sizes");
      pair_of.push_back({i, j});
      slots.push_back({p, 0, i});
      slots.push_back({p, 1, j});
    }

  // Reference weights per class from the first slot touching it.
  std::vector<std::vector<double>> ref(chi);
  std::vector<std::vector<double>> slot_w(slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    slot_w[s] = side_weights_in_order(col.parts[slots[s].part], slots[s].side);
    for (double& w : slot_w[s]) w = weight_key(w);
    if (ref[slots[s].cls].empty()) ref[slots[s].cls] = slot_w[s];
  }
  for (std::size_t s = 0; s < slots.size(); ++s) {
    auto a = slot_w[s], b = ref[slots[s].cls];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t k = 0; k < a.size(); ++k)
      if (std::abs(a[k] - b[k]) > tol) return {};
  }

  // maps[s][v] = position within the class of side vertex v of slot s.
  std::vector<std::vector<int>> maps(slots.size());
  std::vector<std::pair<Graph, Coloring>> out;
  std::unordered_set<std::string> seen;
  std::vector<int> colors(n);
  for (int i = 0; i < chi; ++i)
    for (int v = offset[i]; v < offset[i + 1]; ++v) colors[v] = i;
  const Coloring coloring = Coloring::from_colors(colors);

  std::function<void(std::size_t)> place = [&](std::size_t s) {
    if (s == slots.size()) {
      Graph g(n);
      for (std::size_t p = 0; p < col.parts.size(); ++p) {
        const auto& part = col.parts[p];
        const auto [i, j] = pair_of[p];
        for (auto [u, v] : part.graph.edges()) {
          // u on side A (class i), v on side B (class j)
          const int gu = offset[i] + maps[2 * p][u];
          const int gv = offset[j] + maps[2 * p + 1][v - part.a];
          g.add_edge(gu, gv);
        }
      }
      if (seen.insert(canonical_form(g, coloring)).second) out.push_back({g, coloring});
      return;
    }
    const int cls = slots[s].cls;
    const int m = sizes[cls];
    const bool first_use = std::none_of(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(s),
                                        [&](const Slot& o) { return o.cls == cls; });
    if (first_use) {
      maps[s].resize(m);
      for (int v = 0; v < m; ++v) maps[s][v] = v;
      place(s + 1);
      return;
    }
    // Bijections from this side onto the class that preserve weights.
    std::vector<int> target(m);
    std::vector<bool> used(m, false);
    std::function<void(int)> assign = [&](int v) {
      if (v == m) {
        maps[s] = target;
        place(s + 1);
        return;
      }
      for (int q = 0; q < m; ++q) {
        if (used[q] || std::abs(slot_w[s][v] - ref[cls][q]) > tol) continue;
        used[q] = true;
        target[v] = q;
        assign(v + 1);
        used[q] = false;
      }
    };
    assign(0);
  };
  place(0);
  return out;
}

}  // namespace hoffman
