#include "hoffman/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <set>

#include "hoffman/canonical.hpp"
#include "hoffman/coloring.hpp"

namespace hoffman {

Graph k_cone(const Graph& g, int k) {
  if (k < 1) throw Error("cone size must be positive");
  const int n = g.order();
  if (n + k > kMaxVertices) throw Error("cone exceeds 64 vertices");
  Graph out(n + k);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int w = n; w < n + k; ++w)
    for (int v = 0; v < n; ++v) out.add_edge(w, v);
  return out;
}

namespace {

// Hoffman colouring of g with every class of size lambda_min^2 / k, if the
// cone conditions hold.
std::optional<Coloring> cone_witness(const Graph& g, int k, double lmin, double tol) {
  if (!is_regular(g)) return std::nullopt;
  const auto hv = is_hoffman_colorable(g, tol);
  if (!hv.colorable) return std::nullopt;
  const double want = lmin * lmin / k;
  const double r = std::round(want);
  if (r < 1 || std::abs(want - r) > tol) return std::nullopt;
  const int size = static_cast<int>(r);
  if (size * hv.chi != g.order()) return std::nullopt;
  return equal_class_coloring(g, hv.chi, size);
}

}  // namespace

ConeVerdict classify_cone(const Graph& g, int k, double tol) {
  if (g.size() == 0) throw Error("cone classification needs a base with an edge");
  ConeVerdict v;
  const double lmin = smallest_eigenvalue(g);
  v.required_class_size = lmin * lmin / k;
  const Graph cone = k_cone(g, k);
  v.spectrum_of_cone = spectrum(cone);
  v.direct_colorable = is_hoffman_colorable(cone, tol).colorable;
  v.witness = cone_witness(g, k, lmin, tol);
  v.colorable = v.witness.has_value();
  return v;
}

Spectrum cone_spectrum_formula(const Graph& g, int k, double tol) {
  if (g.size() == 0) throw Error("cone spectrum formula needs a base with an edge");
  const Spectrum base = spectrum(g);
  const double nu = -base.min();
  if (!cone_witness(g, k, base.min(), tol))
    throw Error("cone spectrum formula requires a regular Hoffman colorable base with classes of size nu^2/k");
  const int chi = chromatic_number(g);
  Spectrum out;
  out.tol = base.tol;
  out.values = {chi * nu, -nu};
  out.values.insert(out.values.end(), k - 1, 0.0);
  const double drop = (chi - 1) * nu;
  bool removed = false;
  for (double x : base.values) {
    if (!removed && std::abs(x - drop) <= tol) {
      removed = true;
      continue;
    }
    out.values.push_back(x);
  }
  if (!removed) throw Error("base spectrum lacks (chi-1) nu");
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

Graph line_graph(const Graph& g) {
  const auto e = g.edges();
  if (e.empty()) throw Error("line graph of an edgeless graph");
  if (e.size() > static_cast<std::size_t>(kMaxVertices)) throw Error("line graph exceeds 64 vertices");
  const int m = static_cast<int>(e.size());
  Graph l(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (e[i].first == e[j].first || e[i].first == e[j].second || e[i].second == e[j].first ||
          e[i].second == e[j].second)
        l.add_edge(i, j);
  return l;
}

int edge_chromatic_number(const Graph& g) { return chromatic_number(line_graph(g)); }

std::vector<int> optimal_edge_coloring(const Graph& g) {
  const Graph l = line_graph(g);
  return optimal_coloring(l).coloring.color_of(l.order());
}

std::optional<std::vector<Matching>> is_one_factorable(const Graph& g) {
  const auto d = is_regular(g);
  if (!d || *d == 0 || g.order() % 2 != 0) return std::nullopt;
  const auto c = k_coloring(line_graph(g), *d);
  if (!c) return std::nullopt;
  const auto e = g.edges();
  std::vector<Matching> out(c->num_classes());
  for (int i = 0; i < c->num_classes(); ++i)
    for (int idx : c->classes[i]) out[i].push_back(e[idx]);
  return out;
}

std::vector<AlternatingComponent> maximal_alternating_paths(const Graph& g,
                                                            const std::vector<int>& ecoloring) {
  const auto e = g.edges();
  if (ecoloring.size() != e.size()) throw Error("edge colouring length mismatch");
  const int n = g.order();
  std::vector<std::vector<std::pair<int, int>>> inc(n);  // (neighbour, colour)
  for (std::size_t i = 0; i < e.size(); ++i) {
    inc[e[i].first].push_back({e[i].second, ecoloring[i]});
    inc[e[i].second].push_back({e[i].first, ecoloring[i]});
  }
  for (int v = 0; v < n; ++v) {
    std::set<int> seen;
    for (auto [w, col] : inc[v])
      if (!seen.insert(col).second) throw Error("improper edge colouring at vertex " + std::to_string(v));
  }
  const std::set<int> colors(ecoloring.begin(), ecoloring.end());
  std::vector<AlternatingComponent> out;
  for (auto a = colors.begin(); a != colors.end(); ++a)
    for (auto b = std::next(a); b != colors.end(); ++b) {
      std::vector<std::vector<int>> adj(n);
      for (int v = 0; v < n; ++v)
        for (auto [w, col] : inc[v])
          if (col == *a || col == *b) adj[v].push_back(w);
      std::vector<bool> done(n, false);
      auto walk = [&](int start) {
        AlternatingComponent comp;
        comp.colors = {*a, *b};
        int prev = -1, cur = start;
        while (cur >= 0 && !done[cur]) {
          done[cur] = true;
          comp.vertices.push_back(cur);
          int next = -1;
          for (int w : adj[cur])
            if (w != prev && !done[w]) {
              next = w;
              break;
            }
          prev = cur;
          cur = next;
        }
        comp.vertex_count = static_cast<int>(comp.vertices.size());
        int deg_sum = 0;
        for (int v : comp.vertices) deg_sum += static_cast<int>(adj[v].size());
        comp.edge_count = deg_sum / 2;
        comp.cycle = comp.edge_count == comp.vertex_count;
        return comp;
      };
      // Paths from an endpoint first, then whatever is left are cycles.
      for (int v = 0; v < n; ++v)
        if (!done[v] && adj[v].size() == 1) out.push_back(walk(v));
      for (int v = 0; v < n; ++v)
        if (!done[v] && adj[v].size() == 2) out.push_back(walk(v));
    }
  return out;
}

const char* to_string(LineCase c) {
  switch (c) {
    case LineCase::OneFactorable: return "OneFactorable";
    case LineCase::Star: return "Star";
    case LineCase::Path: return "Path";
    case LineCase::Triangle: return "Triangle";
    case LineCase::SporadicNet: return "SporadicNet";
    case LineCase::NotColorable: return "NotColorable";
  }
  return "?";
}

Graph net_graph() { return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}}); }

LineGraphVerdict classify_line_graph(const Graph& g) {
  if (g.size() < 2) throw Error("line graph classification needs at least two edges");
  if (!is_connected(g)) throw Error("line graph classification needs a connected graph");
  LineGraphVerdict v;
  v.colorable = true;
  const int n = g.order();
  int max_deg = 0;
  for (int u = 0; u < n; ++u) max_deg = std::max(max_deg, g.degree(u));
  const bool tree = g.size() == n - 1;
  if (auto f = is_one_factorable(g)) {
    v.which = LineCase::OneFactorable;
    const auto e = g.edges();
    std::vector<int> col(e.size(), 0);
    for (std::size_t i = 0; i < f->size(); ++i)
      for (auto edge : (*f)[i])
        col[std::find(e.begin(), e.end(), edge) - e.begin()] = static_cast<int>(i);
    v.witness = std::move(col);
    return v;
  }
  if (tree && max_deg == n - 1) {
    v.which = LineCase::Star;
  } else if (tree && max_deg <= 2) {
    v.which = LineCase::Path;
  } else if (n == 3 && g.size() == 3) {
    v.which = LineCase::Triangle;
  } else if (n == 6 && g.size() == 6 && canonical_form(g) == canonical_form(net_graph())) {
    v.which = LineCase::SporadicNet;
  } else {
    v.which = LineCase::NotColorable;
    v.colorable = false;
    return v;
  }
  v.witness = optimal_edge_coloring(g);
  return v;
}

Graph color_complement(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) throw Error("colouring is not proper");
  const int n = g.order();
  const auto col = c.color_of(n);
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (col[u] != col[v] && !g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

std::optional<int> nu_equitable(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) throw Error("colouring is not proper");
  if (c.num_classes() < 2) return std::nullopt;
  const auto col = c.color_of(g.order());
  std::optional<int> nu;
  for (int u = 0; u < g.order(); ++u)
    for (int j = 0; j < c.num_classes(); ++j) {
      if (j == col[u]) continue;
      const int k = std::popcount(g.neighbors(u) & c.class_mask(j));
      if (!nu) nu = k;
      else if (*nu != k) return std::nullopt;
    }
  return nu;
}

bool nu_equitable_sufficiency(const Graph& g, const Coloring& c) {
  const auto nu = nu_equitable(g, c);
  if (!nu) throw Error("colouring is not nu-equitable");
  const int m = static_cast<int>(c.classes.front().size());
  for (const auto& cls : c.classes)
    if (static_cast<int>(cls.size()) != m) throw Error("colour classes differ in size");
  const int k = c.num_classes();
  return *nu * k >= m * (k - 1);
}

ColoredGraph multipartite_minus_matchings(int c, int m,
                                          const std::optional<std::vector<std::vector<int>>>& matchings) {
  if (c < 2 || m < 1 || c * m > kMaxVertices) throw Error("invalid class count or class size");
  const int pairs = c * (c - 1) / 2;
  if (matchings) {
    if (static_cast<int>(matchings->size()) != pairs) throw Error("need one matching per pair of classes");
    for (const auto& sigma : *matchings) {
      auto sorted = sigma;
      std::sort(sorted.begin(), sorted.end());
      for (int a = 0; a < m; ++a)
        if (static_cast<int>(sorted.size()) != m || sorted[a] != a)
          throw Error("matching is not a permutation of the class");
    }
  }
  ColoredGraph out{Graph(c * m), {}};
  out.coloring.classes.resize(c);
  for (int i = 0; i < c; ++i)
    for (int a = 0; a < m; ++a) out.coloring.classes[i].push_back(i * m + a);
  int p = 0;
  for (int i = 0; i < c; ++i)
    for (int j = i + 1; j < c; ++j, ++p)
      for (int a = 0; a < m; ++a) {
        const int skip = matchings ? (*matchings)[p][a] : a;
        for (int b = 0; b < m; ++b)
          if (b != skip) out.graph.add_edge(i * m + a, j * m + b);
      }
  return out;
}

}  // namespace hoffman
