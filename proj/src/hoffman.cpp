#include "hoffman/hoffman.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace hoffman {

namespace {

ComponentSummary summarize(const Graph& h) {
  if (h.size() == 0) return {0.0, 0.0, 1};
  const auto ev = eigenvalues(h);
  return {ev.front(), ev.back(), chromatic_number(h)};
}

bool same_summary(const ComponentSummary& a, const ComponentSummary& b, double tol) {
  return a.chi == b.chi && std::abs(a.lambda_max - b.lambda_max) <= tol &&
         std::abs(a.lambda_min - b.lambda_min) <= tol;
}

bool meets_bound(const ComponentSummary& s, double tol) {
  if (s.lambda_min >= 0) return false;
  return std::abs(1.0 - s.lambda_max / s.lambda_min - s.chi) <= tol;
}

void require_proper(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) throw Error("colouring is not proper");
}

}  // namespace

HoffmanVerdict is_hoffman_colorable(const Graph& g, double tol) {
  if (g.size() == 0) throw Error("Hoffman colourability is undefined for an edgeless graph");
  HoffmanVerdict v;
  v.bound = hoffman_bound(g);
  v.chi = chromatic_number(g);
  const auto comps = connected_components(g);
  if (comps.size() == 1) {
    const auto ev = eigenvalues(g);
    v.per_component.push_back({ev.front(), ev.back(), v.chi});
    v.colorable = std::abs(v.bound - v.chi) <= tol;
    return v;
  }
  bool ok = true;
  for (const auto& comp : comps) {
    v.per_component.push_back(summarize(g.induced(comp)));
    ok = ok && meets_bound(v.per_component.back(), tol) &&
         same_summary(v.per_component.back(), v.per_component.front(), tol);
  }
  v.colorable = ok;
  return v;
}

bool hoffman_colorable_quick(const Graph& g, double tol) {
  if (g.size() == 0) throw Error("Hoffman colourability is undefined for an edgeless graph");
  const auto comps = connected_components(g);
  double lmax0 = 0.0, lmin0 = 0.0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Graph h = comps.size() == 1 ? g : g.induced(comps[i]);
    if (h.size() == 0) return false;
    const auto ev = eigenvalues(h);
    if (i == 0) {
      lmax0 = ev.front();
      lmin0 = ev.back();
    } else if (std::abs(ev.front() - lmax0) > tol || std::abs(ev.back() - lmin0) > tol) {
      return false;
    }
    const double bound = 1.0 - ev.front() / ev.back();
    const double k = std::round(bound);
    if (std::abs(bound - k) > tol) return false;
    // chi >= bound always, so a k-colouring pins chi = k.
    if (!k_coloring(h, static_cast<int>(k))) return false;
  }
  return true;
}

WeightQuotient weight_quotient(const Graph& g, const Coloring& c, double tol) {
  require_proper(g, c);
  const auto y = perron_vector(g).vector;
  const int k = c.num_classes();
  WeightQuotient q;
  q.size = k;
  q.entries = Eigen::MatrixXd::Zero(k, k);
  q.class_norms.assign(k, 0.0);
  for (int i = 0; i < k; ++i) {
    double sq = 0.0;
    for (int u : c.classes[i]) sq += y[u] * y[u];
    q.class_norms[i] = std::sqrt(sq);
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      const VertexMask vj = c.class_mask(j);
      double num = 0.0;
      for (int u : c.classes[i]) {
        VertexMask nb = g.neighbors(u) & vj;
        double s = 0.0;
        while (nb) {
          s += y[std::countr_zero(nb)];
          nb &= nb - 1;
        }
        num += y[u] * s;
      }
      const double b = num / (q.class_norms[i] * q.class_norms[i]);
      q.entries(i, j) = b;
      for (int u : c.classes[i]) {
        VertexMask nb = g.neighbors(u) & vj;
        double s = 0.0;
        while (nb) {
          s += y[std::countr_zero(nb)];
          nb &= nb - 1;
        }
        q.regularity_residual = std::max(q.regularity_residual, std::abs(s - b * y[u]));
      }
    }
  q.weight_regular = q.regularity_residual <= tol;
  return q;
}

StructureReport check_hoffman_structure(const Graph& g, const Coloring& c, double tol) {
  StructureReport r;
  r.quotient = weight_quotient(g, c, tol);
  r.lambda_min = smallest_eigenvalue(g);
  const int k = r.quotient.size;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j)
        r.intersection_residual =
            std::max(r.intersection_residual, std::abs(r.quotient.entries(i, j) + r.lambda_min));
  const auto [lo, hi] = std::minmax_element(r.quotient.class_norms.begin(), r.quotient.class_norms.end());
  r.norm_residual = *hi - *lo;
  r.regularity_residual = r.quotient.regularity_residual;
  r.weight_regular = r.quotient.weight_regular;
  r.intersection_numbers = r.intersection_residual <= tol;
  r.equal_norms = r.norm_residual <= tol;
  return r;
}

Decomposition decompose(const Graph& g, const Coloring& c, std::span<const int> colors, double tol) {
  if (colors.size() < 2) throw Error("decomposition needs at least two colours");
  require_proper(g, c);
  std::vector<bool> seen(c.num_classes(), false);
  for (int i : colors) {
    if (i < 0 || i >= c.num_classes() || seen[i]) throw Error("invalid colour subset");
    seen[i] = true;
  }
  const auto verdict = is_hoffman_colorable(g, tol);
  if (!verdict.colorable || verdict.chi != c.num_classes())
    throw Error("colouring is not a Hoffman colouring");

  Decomposition d;
  std::vector<int> colour_of_pos;
  for (std::size_t k = 0; k < colors.size(); ++k)
    for (int v : c.classes[colors[k]]) {
      d.vertices.push_back(v);
      colour_of_pos.push_back(static_cast<int>(k));
    }
  d.graph = g.induced(d.vertices);
  d.coloring = Coloring::from_colors(colour_of_pos);

  const int sub = static_cast<int>(colors.size());
  const auto ev_g = eigenvalues(g);
  const double lmax_g = ev_g.front();
  const double lmin_g = ev_g.back();
  if (d.graph.size() == 0) return d;
  const auto ev_h = eigenvalues(d.graph);

  const auto hv = is_hoffman_colorable(d.graph, tol);
  d.colorable = hv.colorable && hv.chi == sub;

  const double expected = static_cast<double>(sub - 1) / (verdict.chi - 1) * lmax_g;
  d.lambda_max_residual = std::abs(ev_h.front() - expected);
  d.lambda_max_ok = d.lambda_max_residual <= tol;

  d.lambda_min_residual = std::abs(ev_h.back() - lmin_g);
  d.lambda_min_ok = d.lambda_min_residual <= tol;

  const auto x = perron_vector(g).vector;
  Eigen::VectorXd xc(d.vertices.size());
  for (std::size_t i = 0; i < d.vertices.size(); ++i) xc(i) = x[d.vertices[i]];
  const Eigen::VectorXd r = adjacency_matrix(d.graph) * xc - ev_h.front() * xc;
  d.perron_residual = r.lpNorm<Eigen::Infinity>() / xc.norm();
  d.perron_ok = d.perron_residual <= tol;
  return d;
}

namespace {

// Multiplicative union-find: value(a) = factor(a) * value(root(a)).
struct RatioForest {
  std::vector<int> parent;
  std::vector<double> factor;

  int add() {
    parent.push_back(static_cast<int>(parent.size()));
    factor.push_back(1.0);
    return parent.back();
  }
  std::pair<int, double> find(int a) {
    double f = 1.0;
    while (parent[a] != a) {
      f *= factor[a];
      a = parent[a];
    }
    return {a, f};
  }
  // value(a) = ratio * value(b); the first relation between two trees wins.
  void relate(int a, int b, double ratio) {
    const auto [ra, fa] = find(a);
    const auto [rb, fb] = find(b);
    if (ra == rb) return;
    parent[ra] = rb;
    factor[ra] = ratio * fb / fa;
  }
};

// Positive lambda_max eigenvector of the template used for the composition.
// A connected template has only one; for a disconnected one the component
// scalings are free, so they are fitted to the bipartite parts with the new
// class (the checks afterwards reject any inconsistency).
std::vector<double> template_weights(const Graph& t, const Coloring& tc, const Graph& g, int new_class,
                                     double nu, double tol) {
  auto x = perron_vector(t).vector;
  const auto comps = connected_components(t);
  if (comps.size() == 1) return x;
  const int n = t.order();
  std::vector<int> comp_of(n);
  for (std::size_t r = 0; r < comps.size(); ++r)
    for (int v : comps[r]) comp_of[v] = static_cast<int>(r);

  RatioForest f;
  for (std::size_t r = 0; r < comps.size(); ++r) f.add();  // component scalings
  for (int w = 0; w < new_class; ++w) f.add();              // new weights
  for (int i = 0; i < tc.num_classes(); ++i) {
    std::vector<int> verts = tc.classes[i];
    for (int w = 0; w < new_class; ++w) verts.push_back(n + w);
    const Graph h = g.induced(verts);
    const int side = static_cast<int>(tc.classes[i].size());
    for (const auto& comp : connected_components(h)) {
      if (comp.size() < 2) continue;
      const auto p = perron_vector(h.induced(comp));
      if (std::abs(p.eigenvalue - nu) > tol) continue;
      const int s = f.add();  // scale of p inside the composed Perron vector
      for (std::size_t k = 0; k < comp.size(); ++k) {
        if (comp[k] < side) {
          const int v = verts[comp[k]];
          f.relate(comp_of[v], s, p.vector[k] / x[v]);
        } else {
          f.relate(static_cast<int>(comps.size()) + comp[k] - side, s, p.vector[k]);
        }
      }
    }
  }
  double norm = 0.0;
  for (int v = 0; v < n; ++v) {
    x[v] *= f.find(comp_of[v]).second;
    norm += x[v] * x[v];
  }
  for (double& v : x) v /= std::sqrt(norm);
  return x;
}

}  // namespace

Composition compose_and_check(const Graph& t, const Coloring& tc, int new_class,
                              std::span<const std::pair<int, int>> cross_edges, double tol) {
  require_proper(t, tc);
  if (new_class < 1) throw Error("new class must be non-empty");
  const int n = t.order();
  if (n + new_class > kMaxVertices) throw Error("composed graph exceeds 64 vertices");
  const auto verdict = is_hoffman_colorable(t, tol);
  const int c = tc.num_classes();
  if (!verdict.colorable || verdict.chi != c)
    throw Error("template colouring is not a Hoffman colouring");

  Composition out;
  out.graph = Graph(n + new_class);
  for (auto [u, v] : t.edges()) out.graph.add_edge(u, v);
  for (auto [w, u] : cross_edges) {
    if (w < 0 || w >= new_class || u < 0 || u >= n) throw Error("cross edge out of range");
    out.graph.add_edge(n + w, u);
  }
  out.coloring = tc;
  out.coloring.classes.emplace_back();
  for (int w = 0; w < new_class; ++w) out.coloring.classes.back().push_back(n + w);

  const auto ev_t = eigenvalues(t);
  const double nu = -ev_t.back();
  const auto x = template_weights(t, tc, out.graph, new_class, nu, tol);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::vector<double>> y(c, std::vector<double>(new_class, nan));

  for (int i = 0; i < c && out.failures.empty(); ++i) {
    std::vector<int> verts = tc.classes[i];
    for (int w = 0; w < new_class; ++w) verts.push_back(n + w);
    const Graph h = out.graph.induced(verts);
    const int side = static_cast<int>(tc.classes[i].size());
    std::string failure;
    for (const auto& comp : connected_components(h)) {
      const bool has_old = std::any_of(comp.begin(), comp.end(), [&](int p) { return p < side; });
      const bool has_new = std::any_of(comp.begin(), comp.end(), [&](int p) { return p >= side; });
      if (!has_old || !has_new) {
        failure = "class " + std::to_string(i) + ": a vertex has no neighbour across the part";
        break;
      }
      const auto p = perron_vector(h.induced(comp));
      if (std::abs(p.eigenvalue - nu) > tol) {
        failure = "class " + std::to_string(i) + ": bipartite part has lambda_max " +
                  std::to_string(p.eigenvalue) + ", expected " + std::to_string(nu);
        break;
      }
      double dot = 0.0, sq = 0.0;
      for (std::size_t k = 0; k < comp.size(); ++k)
        if (comp[k] < side) {
          dot += x[verts[comp[k]]] * p.vector[k];
          sq += p.vector[k] * p.vector[k];
        }
      const double scale = dot / sq;
      double dev = 0.0;
      for (std::size_t k = 0; k < comp.size(); ++k) {
        if (comp[k] < side)
          dev = std::max(dev, std::abs(x[verts[comp[k]]] - scale * p.vector[k]));
        else
          y[i][comp[k] - side] = scale * p.vector[k];
      }
      if (dev > tol) {
        failure = "class " + std::to_string(i) +
                  ": template weights are not a Perron restriction of the bipartite part";
        break;
      }
    }
    if (!failure.empty()) out.failures.push_back(failure);
  }

  if (out.failures.empty()) {
    out.new_weights.assign(new_class, 0.0);
    for (int w = 0; w < new_class; ++w) {
      for (int i = 0; i < c; ++i) {
        out.new_weights[w] += y[i][w] / c;
        for (int j = i + 1; j < c; ++j)
          out.weight_deviation = std::max(out.weight_deviation, std::abs(y[i][w] - y[j][w]));
      }
    }
    if (out.weight_deviation > tol)
      out.failures.push_back("new class weights disagree between bipartite parts (deviation " +
                             std::to_string(out.weight_deviation) + ")");
  }

  out.spectrum = spectrum(out.graph);
  out.colorable = out.failures.empty() && std::abs(out.spectrum.min() - ev_t.back()) <= tol;
  return out;
}

}  // namespace hoffman
