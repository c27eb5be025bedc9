#include "hoffman/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>

#include "hoffman/graph6.hpp"

namespace hoffman {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  std::uint64_t x = v + 0x9e3779b97f4a7c15ULL + h;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31) ^ (h << 1);
}

// Partition cells are identified by the position of their first vertex, so a
// vertex colour is an isomorphism-invariant quantity.
class Search {
public:
  Search(const Graph& g, std::span<const int> colors) : n_(g.order()), adj_(n_) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
    initial_.assign(n_, 0);
    if (!colors.empty()) {
      if (static_cast<int>(colors.size()) != n_) throw Error("colour vector length mismatch");
      std::vector<int> idx(n_);
      std::iota(idx.begin(), idx.end(), 0);
      std::stable_sort(idx.begin(), idx.end(),
                       [&](int a, int b) { return colors[a] < colors[b]; });
      for (int p = 0; p < n_; ++p) {
        const int v = idx[p];
        initial_[v] = (p > 0 && colors[idx[p - 1]] == colors[v]) ? initial_[idx[p - 1]] : p;
      }
    }
  }

  void run() {
    std::vector<int> color = initial_;
    std::vector<std::uint64_t> trace{refine(color)};
    std::vector<int> path;
    descend(color, trace, path);
  }

  const std::vector<int>& best_lab() const { return best_lab_; }
  const std::vector<VertexMask>& best_rows() const { return best_rows_; }
  std::vector<std::vector<int>> generators() const { return generators_; }

private:
  std::uint64_t refine(std::vector<int>& color) const {
    std::array<VertexMask, kMaxVertices> mask{};
    std::vector<int> idx(n_);
    std::vector<int> next(n_);
    std::vector<std::uint64_t> sig(n_);
    std::vector<int> starts;
    std::uint64_t trace = 0;
    for (;;) {
      mask.fill(0);
      for (int v = 0; v < n_; ++v) mask[color[v]] |= bit(v);
      starts.clear();
      for (int c = 0; c < n_; ++c)
        if (mask[c]) starts.push_back(c);
      const int cells = static_cast<int>(starts.size());
      if (cells == n_) return mix(trace, static_cast<std::uint64_t>(cells));
      for (int v = 0; v < n_; ++v) {
        std::uint64_t h = 0;
        for (int c : starts) {
          const int k = std::popcount(adj_[v] & mask[c]);
          if (k) h = mix(h, (static_cast<std::uint64_t>(c) << 8) | static_cast<std::uint64_t>(k));
        }
        sig[v] = h;
      }
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (color[a] != color[b]) return color[a] < color[b];
        return sig[a] < sig[b];
      });
      int after = 0;
      for (int p = 0; p < n_; ++p) {
        const int v = idx[p];
        if (p > 0 && color[idx[p - 1]] == color[v] && sig[idx[p - 1]] == sig[v]) {
          next[v] = next[idx[p - 1]];
        } else {
          next[v] = p;
          ++after;
          trace = mix(trace, mix(static_cast<std::uint64_t>(p), sig[v]));
        }
      }
      color.swap(next);
      if (after == cells) return mix(trace, static_cast<std::uint64_t>(after));
    }
  }

  static void individualize(std::vector<int>& color, int v) {
    const int c = color[v];
    for (int& col : color)
      if (col == c) col = c + 1;
    color[v] = c;
  }

  static int compare(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                     std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
      if (i >= a.size() || i >= b.size()) return a.size() < b.size() ? -1 : (a.size() > b.size());
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  bool orbit_pruned(int w, const std::vector<int>& tried, const std::vector<int>& path) const {
    if (generators_.empty()) return false;
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gamma : generators_) {
      bool fixes = true;
      for (int p : path)
        if (gamma[p] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      any = true;
      for (int v = 0; v < n_; ++v) parent[find(v)] = find(gamma[v]);
    }
    if (!any) return false;
    const int rw = find(w);
    for (int t : tried)
      if (find(t) == rw) return true;
    return false;
  }

  void leaf(const std::vector<int>& color, const std::vector<std::uint64_t>& trace) {
    std::vector<int> lab(n_);
    for (int v = 0; v < n_; ++v) lab[color[v]] = v;
    std::vector<VertexMask> rows(n_, 0);
    for (int p = 0; p < n_; ++p) {
      VertexMask r = adj_[lab[p]];
      VertexMask out = 0;
      while (r) {
        out |= bit(color[std::countr_zero(r)]);
        r &= r - 1;
      }
      rows[p] = out;
    }
    if (!have_best_) {
      have_best_ = true;
      best_trace_ = first_trace_ = trace;
      best_rows_ = first_rows_ = rows;
      best_lab_ = first_lab_ = lab;
      return;
    }
    auto record = [&](const std::vector<int>& ref) {
      std::vector<int> gamma(n_);
      bool identity = true;
      for (int p = 0; p < n_; ++p) {
        gamma[ref[p]] = lab[p];
        identity &= ref[p] == lab[p];
      }
      if (!identity) generators_.push_back(std::move(gamma));
    };
    if (trace == first_trace_ && rows == first_rows_) {
      record(first_lab_);
      return;
    }
    int cmp = compare(trace, best_trace_, std::max(trace.size(), best_trace_.size()));
    if (cmp == 0) cmp = rows == best_rows_ ? 0 : (rows < best_rows_ ? -1 : 1);
    if (cmp > 0) {
      best_trace_ = trace;
      best_rows_ = std::move(rows);
      best_lab_ = std::move(lab);
    } else if (cmp == 0) {
      record(best_lab_);
    }
  }

  void descend(const std::vector<int>& color, std::vector<std::uint64_t>& trace,
               std::vector<int>& path) {
    if (have_best_ && compare(trace, best_trace_, trace.size()) < 0) return;

    std::array<int, kMaxVertices> size{};
    for (int v = 0; v < n_; ++v) ++size[color[v]];
    int target = -1;
    for (int c = 0; c < n_; ++c)
      if (size[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      leaf(color, trace);
      return;
    }
    std::vector<int> members;
    for (int v = 0; v < n_; ++v)
      if (color[v] == target) members.push_back(v);

    std::vector<int> tried;
    std::vector<int> child;
    for (int w : members) {
      if (!tried.empty() && orbit_pruned(w, tried, path)) continue;
      tried.push_back(w);
      child = color;
      individualize(child, w);
      trace.push_back(refine(child));
      path.push_back(w);
      descend(child, trace, path);
      path.pop_back();
      trace.pop_back();
    }
  }

  int n_;
  std::vector<VertexMask> adj_;
  std::vector<int> initial_;

  bool have_best_ = false;
  std::vector<std::uint64_t> best_trace_, first_trace_;
  std::vector<VertexMask> best_rows_, first_rows_;
  std::vector<int> best_lab_, first_lab_;
  std::vector<std::vector<int>> generators_;
};

std::string encode_rows(int n, const std::vector<VertexMask>& rows) {
  Graph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((rows[u] >> v) & 1U) h.add_edge(u, v);
  if (n <= 62) return to_graph6(h);
  std::string out = "~" + std::to_string(n) + ":";
  static constexpr char hex[] = "0123456789abcdef";
  for (auto r : rows)
    for (int s = 60; s >= 0; s -= 4) out.push_back(hex[(r >> s) & 0xF]);
  return out;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors) {
  CanonicalLabeling out;
  const int n = g.order();
  if (n == 0) {
    out.form = encode_rows(0, {});
    return out;
  }
  Search s(g, colors);
  s.run();
  out.order = s.best_lab();
  out.generators = s.generators();
  out.form = encode_rows(n, s.best_rows());
  if (!colors.empty()) {
    out.form.push_back('|');
    for (int p = 0; p < n; ++p) {
      if (p) out.form.push_back(',');
      out.form += std::to_string(colors[out.order[p]]);
    }
  }
  return out;
}

std::string canonical_form(const Graph& g, const std::optional<Coloring>& partition) {
  if (!partition) return canonical_labeling(g).form;
  std::vector<int> colors = partition->color_of(g.order());
  return canonical_labeling(g, colors).form;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_form(g) == canonical_form(h);
}

Graph canonical_graph(const Graph& g) {
  auto lab = canonical_labeling(g);
  std::vector<int> pos(g.order());
  for (int p = 0; p < g.order(); ++p) pos[lab.order[p]] = p;
  return g.permuted(pos);
}

std::vector<std::vector<int>> automorphism_orbits(const Graph& g, std::span<const int> colors) {
  const int n = g.order();
  std::vector<int> base(n, 0);
  if (!colors.empty()) base.assign(colors.begin(), colors.end());
  int marker = 0;
  for (int c : base) marker = std::max(marker, c + 1);
  std::vector<std::string> key(n);
  for (int v = 0; v < n; ++v) {
    auto cols = base;
    cols[v] = marker;
    key[v] = canonical_labeling(g, cols).form;
  }
  std::vector<std::vector<int>> orbits;
  std::vector<bool> done(n, false);
  for (int v = 0; v < n; ++v) {
    if (done[v]) continue;
    std::vector<int> orbit;
    for (int u = v; u < n; ++u)
      if (!done[u] && key[u] == key[v]) {
        orbit.push_back(u);
        done[u] = true;
      }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace hoffman
