#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <iostream>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include <Eigen/Eigenvalues>
#include <omp.h>

#include "hoffman/canonical.hpp"
#include "hoffman/coloring.hpp"
#include "hoffman/enumeration.hpp"

namespace hoffman {

namespace {

constexpr double kSumEps = 1e-7;  // sums of Perron weights scaled to max 1
// Search levels that may branch on candidate orbits under the template's
// automorphisms; in practice the stabiliser turns trivial well before this.
constexpr int kSymmetryDepth = kMaxVertices;

// A Hoffman coloured graph built so far: classes 0..k-1, Perron vector with max 1.
struct Template {
  Graph g;
  std::vector<int> cls;
  std::vector<int> sizes;
  std::vector<double> x;
};

// Canonical form of (graph, class partition) up to renaming classes of equal
// size: one extra vertex per class, joined to its members and coloured by size.
CanonicalLabeling template_labeling(const Template& t) {
  const int n = t.g.order();
  const int k = static_cast<int>(t.sizes.size());
  Graph h(n + k);
  for (auto [u, v] : t.g.edges()) h.add_edge(u, v);
  std::vector<int> colors(n + k, 0);
  for (int v = 0; v < n; ++v) h.add_edge(v, n + t.cls[v]);
  for (int c = 0; c < k; ++c) colors[n + c] = 1 + t.sizes[c];
  return canonical_labeling(h, colors);
}

std::string template_key(const Template& t) { return template_labeling(t).form; }

Coloring template_coloring(const Template& t) { return Coloring::from_colors(t.cls); }

std::vector<double> max_normalized_perron(const Graph& g) {
  auto x = perron_vector(g).vector;
  const double m = *std::max_element(x.begin(), x.end());
  for (double& v : x) v /= m;
  return x;
}

struct Candidate {
  VertexMask set = 0;
  double sigma = 0.0;
};

// Finds every multiset of s neighbourhoods for a new class such that the new
// vertices w get weight sigma(w)/nu and the extended vector is an eigenvector:
// each neighbourhood has the same x-sum sigma in every old class, and every
// old vertex u is covered with total sigma equal to nu^2 x(u).
//
// The extended graph is an induced subgraph of the final one, so by
// interlacing A + (nu + tol) I stays positive semidefinite on it. With M that
// matrix on the template (positive definite) and B the neighbourhood
// indicators of the new vertices, this is the Schur complement
// (nu + tol) I - B^T M^-1 B being PSD, checked incrementally by Cholesky.
class CoverSearch {
public:
  CoverSearch(const Template& t, int s, double nu, double tol)
      : t_(t), s_(s), nu2_(nu * nu), shift_(nu + tol) {
    build_candidates();
    drop_indefinite();
    const int n = t_.g.order();
    deficit_.resize(n);
    for (int u = 0; u < n; ++u) deficit_[u] = nu2_ * t_.x[u];
    // sum over w of sigma(w)^2 equals nu^2 ||x_i||^2 for every class i.
    target_sq_ = 0.0;
    for (int u = 0; u < n; ++u)
      if (t_.cls[u] == 0) target_sq_ += t_.x[u] * t_.x[u];
    target_sq_ *= nu2_;
    forbidden_.assign(cands_.size(), 0);
    by_vertex_.assign(n, {});
    for (std::size_t c = 0; c < cands_.size(); ++c) {
      for (VertexMask m = cands_[c].set; m; m &= m - 1) by_vertex_[std::countr_zero(m)].push_back(static_cast<int>(c));
      by_set_.emplace(cands_[c].set, static_cast<int>(c));
    }
    for (const auto& c : cands_) {
      sigma_min_ = std::min(sigma_min_, c.sigma);
      sigma_max_ = std::max(sigma_max_, c.sigma);
    }
  }

  template <class F>
  void run(F&& emit) {
    if (cands_.empty() || s_ < 1) return;
    chosen_.clear();
    chol_.assign(static_cast<std::size_t>(s_ + 1) * kMaxVertices, 0.0);
    chosen_sq_ = 0.0;
    dfs(emit, static_cast<bool>(stabilizer_));
  }

  // Template automorphisms fixing the chosen candidates map solutions of a
  // subtree to solutions of the same subtree. While that group is
  // non-trivial the branching takes one candidate per orbit and bans the whole orbit
  // afterwards. Generators act on template vertices.
  using Stabilizer = std::function<std::vector<std::vector<int>>(const std::vector<int>& chosen)>;
  void use_symmetry(Stabilizer f, int depth) {
    stabilizer_ = std::move(f);
    sym_depth_ = depth;
  }

  const std::vector<Candidate>& candidates() const { return cands_; }

private:
  std::vector<std::vector<int>> candidate_orbits(const std::vector<int>& pool,
                                                const std::vector<std::vector<int>>& gens) const {
    const int m = static_cast<int>(pool.size());
    std::unordered_map<VertexMask, int> index;
    for (int i = 0; i < m; ++i) index.emplace(cands_[pool[i]].set, i);
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    for (const auto& perm : gens)
      for (int i = 0; i < m; ++i) {
        VertexMask image = 0;
        for (VertexMask r = cands_[pool[i]].set; r; r &= r - 1) image |= bit(perm[std::countr_zero(r)]);
        auto it = index.find(image);
        if (it == index.end()) continue;
        const int x = find(i), y = find(it->second);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    std::vector<std::vector<int>> orbits;
    std::vector<int> slot(m, -1);
    for (int i = 0; i < m; ++i) {
      const int root = find(i);
      if (slot[root] < 0) {
        slot[root] = static_cast<int>(orbits.size());
        orbits.emplace_back();
      }
      orbits[slot[root]].push_back(pool[i]);
    }
    return orbits;
  }

  struct Subset {
    VertexMask set;
    double sum;
    double min_x;
  };

  void build_candidates() {
    const int k = static_cast<int>(t_.sizes.size());
    const int cap = static_cast<int>(std::floor(nu2_ + 1e-9));
    std::vector<std::vector<Subset>> per(k);
    std::vector<std::vector<int>> members(k);
    for (int v = 0; v < t_.g.order(); ++v) members[t_.cls[v]].push_back(v);
    for (int i = 0; i < k; ++i) {
      const int m = static_cast<int>(members[i].size());
      for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << m); ++pick) {
        if (std::popcount(pick) > cap) continue;
        Subset sub{0, 0.0, 2.0};
        for (std::uint64_t p = pick; p; p &= p - 1) {
          const int v = members[i][std::countr_zero(p)];
          sub.set |= bit(v);
          sub.sum += t_.x[v];
          sub.min_x = std::min(sub.min_x, t_.x[v]);
        }
        // A new vertex w needs sigma(w) <= nu^2 x(u) for each neighbour u.
        if (sub.sum <= nu2_ * sub.min_x + kSumEps) per[i].push_back(sub);
      }
      std::sort(per[i].begin(), per[i].end(), [](const Subset& a, const Subset& b) { return a.sum < b.sum; });
    }
    // Join subsets with equal sums across all classes.
    std::vector<Candidate> out;
    for (const auto& first : per[0]) {
      std::vector<std::pair<std::size_t, std::size_t>> ranges(k);
      bool ok = true;
      for (int i = 1; i < k && ok; ++i) {
        auto lo = std::lower_bound(per[i].begin(), per[i].end(), first.sum - kSumEps,
                                   [](const Subset& a, double v) { return a.sum < v; });
        auto hi = std::upper_bound(per[i].begin(), per[i].end(), first.sum + kSumEps,
                                   [](double v, const Subset& a) { return v < a.sum; });
        ranges[i] = {static_cast<std::size_t>(lo - per[i].begin()), static_cast<std::size_t>(hi - per[i].begin())};
        ok = lo < hi;
      }
      if (!ok) continue;
      std::vector<std::size_t> idx(k);
      for (int i = 1; i < k; ++i) idx[i] = ranges[i].first;
      for (;;) {
        VertexMask set = first.set;
        double min_x = first.min_x;
        for (int i = 1; i < k; ++i) {
          set |= per[i][idx[i]].set;
          min_x = std::min(min_x, per[i][idx[i]].min_x);
        }
        if (first.sum <= nu2_ * min_x + kSumEps) out.push_back({set, first.sum});
        int i = k - 1;
        while (i >= 1 && ++idx[i] == ranges[i].second) {
          idx[i] = ranges[i].first;
          --i;
        }
        if (i < 1) break;
      }
    }
    cands_ = std::move(out);
  }

  void drop_indefinite() {
    const int n = t_.g.order();
    Eigen::MatrixXd m = adjacency_matrix(t_.g);
    m.diagonal().array() += shift_;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    const Eigen::VectorXd mu = es.eigenvalues();
    if (mu.minCoeff() <= 0.0) {  // the template itself already fails
      cands_.clear();
      return;
    }
    const Eigen::MatrixXd inv = es.eigenvectors() * mu.cwiseInverse().asDiagonal() * es.eigenvectors().transpose();
    std::vector<Candidate> kept;
    for (const auto& c : cands_) {
      std::vector<double> q(n, 0.0);
      for (VertexMask r = c.set; r; r &= r - 1) {
        const int u = std::countr_zero(r);
        for (int v = 0; v < n; ++v) q[v] += inv(v, u);
      }
      double g = 0.0;
      for (VertexMask r = c.set; r; r &= r - 1) g += q[std::countr_zero(r)];
      if (shift_ - g <= 0.0) continue;
      kept.push_back(c);
      q_.push_back(std::move(q));
    }
    cands_ = std::move(kept);
  }

  // b_a^T M^-1 b_c
  double gram(int a, int c) const {
    double g = 0.0;
    for (VertexMask r = cands_[a].set; r; r &= r - 1) g += q_[c][std::countr_zero(r)];
    return g;
  }

  // Next Cholesky row (into l) when c joins the chosen vertices; false when
  // the Schur complement would stop being positive definite.
  bool cholesky_row(int c, double* l) const {
    const std::size_t t = chosen_.size();
    double rest = shift_ - gram(c, c);
    for (std::size_t i = 0; i < t; ++i) {
      double v = -gram(chosen_[i], c);
      for (std::size_t k = 0; k < i; ++k) v -= chol_[i * kMaxVertices + k] * l[k];
      l[i] = v / chol_[i * kMaxVertices + i];
      rest -= l[i] * l[i];
    }
    if (rest <= 0.0) return false;
    l[t] = std::sqrt(rest);
    return true;
  }

  bool admissible(int c) const {
    double l[kMaxVertices];
    return !forbidden_[c] && fits(c) && cholesky_row(c, l);
  }

  bool fits(int c) const {
    const double sg = cands_[c].sigma;
    for (VertexMask m = cands_[c].set; m; m &= m - 1)
      if (deficit_[std::countr_zero(m)] < sg - kSumEps) return false;
    return true;
  }

  void apply(int c, double sign) {
    for (VertexMask m = cands_[c].set; m; m &= m - 1) deficit_[std::countr_zero(m)] -= sign * cands_[c].sigma;
  }

  template <class F>
  void dfs(F& emit, bool sym) {
    const int depth = static_cast<int>(chosen_.size());
    const int n = t_.g.order();
    const int left = s_ - depth;
    const double q = target_sq_ - chosen_sq_;
    double top = 0.0;
    VertexMask open = 0;
    for (int u = 0; u < n; ++u)
      if (deficit_[u] > kSumEps) {
        open |= bit(u);
        top = std::max(top, deficit_[u]);
      }
    if (left == 0 || open == 0) {
      if (left == 0 && open == 0) emit(chosen_, cands_);
      return;
    }
    if (top > left * sigma_max_ + kSumEps) return;
    if (q < left * sigma_min_ * sigma_min_ - kSumEps || q > left * sigma_max_ * sigma_max_ + kSumEps) return;
    if (left == 1) {
      // The last vertex must take exactly the open deficits.
      const auto it = by_set_.find(open);
      if (it == by_set_.end()) return;
      const int c = it->second;
      for (VertexMask m = open; m; m &= m - 1)
        if (std::abs(deficit_[std::countr_zero(m)] - cands_[c].sigma) > kSumEps) return;
      if (forbidden_[c] || !cholesky_row(c, &chol_[depth * kMaxVertices])) return;
      chosen_.push_back(c);
      emit(chosen_, cands_);
      chosen_.pop_back();
      return;
    }

    int best_u = -1;
    int best_count = INT_MAX;
    for (int u = 0; u < n; ++u) {
      if (deficit_[u] <= kSumEps) continue;
      int count = 0;
      for (int c : by_vertex_[u])
        if (admissible(c) && ++count >= best_count) break;
      if (count == 0) return;
      if (count < best_count) {
        best_count = count;
        best_u = u;
      }
    }

    std::vector<std::vector<int>> orbits;
    if (sym && depth < sym_depth_) {
      // Orbits over every open candidate, not only those through best_u:
      // pinning best_u shrinks the group too much to pay off.
      const auto gens = stabilizer_(chosen_);
      if (gens.empty()) {
        sym = false;
      } else {
        std::vector<int> pool;
        for (int c = 0; c < static_cast<int>(cands_.size()); ++c)
          if (!forbidden_[c]) pool.push_back(c);
        orbits = candidate_orbits(pool, gens);
      }
    }
    if (orbits.empty())
      for (int c : by_vertex_[best_u]) orbits.push_back({c});
    const bool deeper_sym = sym && depth + 1 < sym_depth_;

    std::vector<int> banned;
    for (const auto& orbit : orbits) {
      const int c = orbit.front();
      if (forbidden_[c]) continue;
      if (fits(c)) {
        if (cholesky_row(c, &chol_[depth * kMaxVertices])) {
          apply(c, 1.0);
          chosen_.push_back(c);
          chosen_sq_ += cands_[c].sigma * cands_[c].sigma;
          dfs(emit, deeper_sym);
          chosen_sq_ -= cands_[c].sigma * cands_[c].sigma;
          chosen_.pop_back();
          apply(c, -1.0);
        }
      }
      // Later branches never use this orbit, so each multiset is produced
      // once up to the symmetries in use.
      for (int o : orbit) {
        if (forbidden_[o]) continue;
        forbidden_[o] = 1;
        banned.push_back(o);
      }
    }
    for (int c : banned) forbidden_[c] = 0;
  }

  const Template& t_;
  int s_;
  double nu2_;
  double shift_;
  std::vector<Candidate> cands_;
  std::vector<std::vector<double>> q_;     // M^-1 b_c per candidate
  std::vector<double> chol_;  // Cholesky rows of the Schur complement, one per depth
  std::vector<std::vector<int>> by_vertex_;
  std::unordered_map<VertexMask, int> by_set_;
  std::vector<double> deficit_;
  std::vector<char> forbidden_;
  std::vector<int> chosen_;
  double target_sq_ = 0.0;
  double chosen_sq_ = 0.0;
  double sigma_min_ = std::numeric_limits<double>::infinity();
  double sigma_max_ = 0.0;
  Stabilizer stabilizer_;
  int sym_depth_ = 0;
};

struct SizePair {
  int big = 0;
  int small = 0;
  bool operator==(const SizePair&) const = default;
};

SizePair make_pair_of(int a, int b) { return {std::max(a, b), std::min(a, b)}; }

struct Task {
  IntegerPartition partition;
  SizePair start;
  double nu = 0.0;
  std::vector<BipartitePart> parts;
  std::vector<int> order;            // sizes of the classes still to add
  std::vector<SizePair> must_split;  // pairs whose parts must be disconnected
};

// Extends one template by a class of size s; results are pushed in search order.
void extend(const Template& t, int s, const Task& task, double tol, std::vector<Template>& out) {
  CoverSearch search(t, s, task.nu, tol);
  const int n = t.g.order();
  const int k = static_cast<int>(t.sizes.size());
  if (!template_labeling(t).generators.empty()) {
    // Marker vertices pin the chosen candidates.
    search.use_symmetry(
        [&](const std::vector<int>& chosen) {
          const auto& cands = search.candidates();
          const int k0 = static_cast<int>(t.sizes.size());
          const int m = n + k0 + static_cast<int>(chosen.size());
          Graph h(m);
          for (auto [a, b] : t.g.edges()) h.add_edge(a, b);
          std::vector<int> colors(m, 0);
          for (int v = 0; v < n; ++v) h.add_edge(v, n + t.cls[v]);
          for (int c = 0; c < k0; ++c) colors[n + c] = 1 + t.sizes[c];
          for (std::size_t i = 0; i < chosen.size(); ++i) {
            const int w = n + k0 + static_cast<int>(i);
            colors[w] = n + 2;
            for (VertexMask r = cands[chosen[i]].set; r; r &= r - 1) h.add_edge(w, std::countr_zero(r));
          }
          auto gens = canonical_labeling(h, colors).generators;
          for (auto& g : gens) g.resize(n);
          return gens;
        },
        kSymmetryDepth);
  }
  search.run([&](const std::vector<int>& chosen, const std::vector<Candidate>& cands) {
    Template next;
    next.g = Graph(n + s);
    for (auto [u, v] : t.g.edges()) next.g.add_edge(u, v);
    for (int w = 0; w < s; ++w)
      for (VertexMask m = cands[chosen[w]].set; m; m &= m - 1) next.g.add_edge(n + w, std::countr_zero(m));
    next.cls = t.cls;
    next.cls.insert(next.cls.end(), s, k);
    next.sizes = t.sizes;
    next.sizes.push_back(s);
    for (int j = 0; j < k; ++j) {
      const SizePair p = make_pair_of(t.sizes[j], s);
      if (std::find(task.must_split.begin(), task.must_split.end(), p) == task.must_split.end()) continue;
      std::vector<int> verts;
      for (int v = 0; v < n + s; ++v)
        if (next.cls[v] == j || next.cls[v] == k) verts.push_back(v);
      if (is_connected(next.g.induced(verts))) return;
    }
    const auto ev = eigenvalues(next.g);
    if (ev.back() < -task.nu - tol) return;
    if (std::abs(ev.front() - k * task.nu) > tol) return;
    next.x = max_normalized_perron(next.g);
    out.push_back(std::move(next));
  });
}

std::vector<Template> start_templates(const Task& task) {
  std::vector<Template> out;
  std::unordered_set<std::string> seen;
  for (const auto& p : task.parts) {
    Template t;
    t.g = p.graph;
    t.cls.assign(p.a + p.b, 1);
    std::fill(t.cls.begin(), t.cls.begin() + p.a, 0);
    t.sizes = {p.a, p.b};
    t.x = max_normalized_perron(t.g);
    if (seen.insert(template_key(t)).second) out.push_back(std::move(t));
  }
  return out;
}

std::vector<Template> expand_level(const std::vector<Template>& level, int s, const Task& task, double tol,
                                   bool parallel, int jobs) {
  std::vector<std::vector<Template>> produced(level.size());
  if (parallel) {
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = 0; i < level.size(); ++i) extend(level[i], s, task, tol, produced[i]);
  } else {
    for (std::size_t i = 0; i < level.size(); ++i) extend(level[i], s, task, tol, produced[i]);
  }
  // Keys are computed in parallel too; the merge itself stays in input order.
  std::vector<std::vector<std::string>> keys(level.size());
  if (parallel) {
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t i = 0; i < level.size(); ++i)
      for (const auto& t : produced[i]) keys[i].push_back(template_key(t));
  } else {
    for (std::size_t i = 0; i < level.size(); ++i)
      for (const auto& t : produced[i]) keys[i].push_back(template_key(t));
  }
  std::vector<Template> next;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < level.size(); ++i)
    for (std::size_t j = 0; j < produced[i].size(); ++j)
      if (seen.insert(keys[i][j]).second) next.push_back(std::move(produced[i][j]));
  return next;
}

std::vector<SizePair> size_pairs(const IntegerPartition& p) {
  std::vector<SizePair> out;
  for (std::size_t i = 0; i < p.parts.size(); ++i)
    for (std::size_t j = i + 1; j < p.parts.size(); ++j) {
      const SizePair q = make_pair_of(p.parts[i], p.parts[j]);
      if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    }
  std::sort(out.begin(), out.end(), [](const SizePair& a, const SizePair& b) {
    if (a.big * a.small != b.big * b.small) return a.big * a.small < b.big * b.small;
    return a.big < b.big;
  });
  return out;
}

std::vector<double> intersect(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  std::vector<double> out;
  for (double x : a)
    if (std::any_of(b.begin(), b.end(), [&](double y) { return std::abs(x - y) <= tol; })) out.push_back(x);
  return out;
}

// Largest admissible nu: chi (chi-1) nu^2 <= 2|E| <= n^2 (chi-1)/chi gives
// nu <= n/chi, and nu = lambda_max of the part on the two smallest classes.
double nu_cap(const IntegerPartition& p) {
  const int chi = static_cast<int>(p.parts.size());
  const double a = p.parts[chi - 2], b = p.parts[chi - 1];
  return std::min(static_cast<double>(p.sum) / chi, std::sqrt(a * b));
}

std::vector<FoundGraph> bipartite_report(int n) {
  std::vector<FoundGraph> out;
  for (int a = 1; a <= n / 2; ++a)
    for (const auto& p : generate_bipartite_parts(a, n - a)) {
      std::vector<int> col(n, 1);
      std::fill(col.begin(), col.begin() + a, 0);
      out.push_back(describe(p.graph, Coloring::from_colors(col), 2));
    }
  return out;
}

EnumerationReport run(int n, int chi, const EnumerationOptions& opts, bool parallel) {
  if (chi < 2 || chi > n || n > kMaxVertices) throw Error("need 2 <= chi <= n <= 64");
  EnumerationReport report;
  report.n = n;
  report.chi = chi;
  report.tolerance = opts.tol;
  std::map<std::string, FoundGraph> found;

  auto keep = [&](FoundGraph f) {
    auto it = found.find(f.form);
    if (it == found.end()) {
      found.emplace(f.form, std::move(f));
    } else if (f.coloring.color_of(n) < it->second.coloring.color_of(n)) {
      it->second = std::move(f);
    }
  };

  if (chi == 2) {
    if (n >= 2)
      for (auto& f : bipartite_report(n)) keep(std::move(f));
  } else {
    PartLibrary lib;
    const double lt = lib.tolerance();
    std::vector<Task> tasks;
    for (const auto& p : integer_partitions(n, chi)) {
      const double cap = nu_cap(p);
      const auto pairs = size_pairs(p);
      std::vector<double> split_ok;  // nu admitting disconnected parts at every earlier pair
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (k > 0) {
          const auto d = lib.disconnected_lambdas(pairs[k - 1].big, pairs[k - 1].small, cap);
          split_ok = k == 1 ? d : intersect(split_ok, d, lt);
          if (split_ok.empty()) break;
        }
        const double bound = k == 0 ? cap : *std::max_element(split_ok.begin(), split_ok.end());
        auto parts = lib.connected(pairs[k].big, pairs[k].small, bound);
        std::vector<Task> local;
        for (auto& part : parts) {
          if (k > 0 && intersect({part.lambda_max}, split_ok, lt).empty()) continue;
          if (local.empty() || std::abs(local.back().nu - part.lambda_max) > lt) {
            Task t;
            t.partition = p;
            t.start = pairs[k];
            t.nu = part.lambda_max;
            t.must_split.assign(pairs.begin(), pairs.begin() + static_cast<std::ptrdiff_t>(k));
            std::vector<int> rest = p.parts;
            rest.erase(std::find(rest.begin(), rest.end(), pairs[k].big));
            rest.erase(std::find(rest.begin(), rest.end(), pairs[k].small));
            std::sort(rest.begin(), rest.end());
            t.order = rest;
            local.push_back(std::move(t));
          }
          local.back().parts.push_back(std::move(part));
        }
        for (auto& t : local) tasks.push_back(std::move(t));
      }

      // Deferred: a colouring whose bipartite parts are all disconnected is
      // invisible to the search above.
      std::vector<double> all_split;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto d = lib.disconnected_lambdas(pairs[k].big, pairs[k].small, cap);
        all_split = k == 0 ? d : intersect(all_split, d, lt);
        if (all_split.empty()) break;
      }
      for (double nu : all_split)
        report.disc.push_back({p, nu, *lib.disconnected_witness(pairs[0].big, pairs[0].small, nu)});
    }

    for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
      const Task& task = tasks[ti];
      const double started = omp_get_wtime();
      auto level = start_templates(task);
      if (opts.progress) {
        std::cerr << "[" << n << "," << chi << "] task " << ti + 1 << "/" << tasks.size() << " partition";
        for (int s : task.partition.parts) std::cerr << ' ' << s;
        std::cerr << " start " << task.start.big << 'x' << task.start.small << " nu " << task.nu << ": "
                  << level.size() << " parts";
      }
      for (int s : task.order) {
        level = expand_level(level, s, task, opts.tol, parallel, opts.jobs);
        if (opts.progress) std::cerr << " -> " << level.size();
        if (level.empty()) break;
      }
      if (opts.progress) std::cerr << " (" << omp_get_wtime() - started << " s)\n";
      for (const auto& t : level) keep(describe(t.g, template_coloring(t), chi));
    }
  }

  for (auto& [form, f] : found) report.graphs.push_back(std::move(f));
  report.counts = classify_counts(report);
  return report;
}

}  // namespace

bool final_check(const Graph& g, const Coloring& c, double nu, double tol) {
  if (!is_proper(g, c)) return false;
  return smallest_eigenvalue(g) >= -nu - tol;
}

FoundGraph describe(const Graph& g, const Coloring& c, int chi) {
  FoundGraph f;
  const auto lab = canonical_labeling(g);
  const int n = g.order();
  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[lab.order[p]] = p;
  f.graph = g.permuted(pos);
  const auto col = c.color_of(n);
  std::vector<int> relabeled(n);
  for (int v = 0; v < n; ++v) relabeled[pos[v]] = col[v];
  // Renumber classes by first appearance so equal colourings compare equal.
  std::vector<int> rename(c.num_classes(), -1);
  int next = 0;
  for (int& x : relabeled) {
    if (rename[x] < 0) rename[x] = next++;
    x = rename[x];
  }
  f.coloring = Coloring::from_colors(relabeled);
  f.form = lab.form;
  const auto ev = eigenvalues(g);
  f.lambda_max = ev.front();
  f.lambda_min = ev.back();
  f.alpha = independence_number(g);
  f.regular = is_regular(g).has_value();
  f.outperforming = chi > (n + f.alpha - 1) / f.alpha;
  return f;
}

Counts classify_counts(const EnumerationReport& report) {
  Counts c;
  for (const auto& g : report.graphs) {
    ++c.total;
    if (g.regular) ++c.regular;
    else ++c.irregular;
    if (g.outperforming) ++c.outperforming;
  }
  return c;
}

EnumerationReport enumerate_hoffman(int n, int chi, const EnumerationOptions& opts) {
  return run(n, chi, opts, true);
}

EnumerationReport enumerate_hoffman_serial(int n, int chi, const EnumerationOptions& opts) {
  return run(n, chi, opts, false);
}

}  // namespace hoffman
