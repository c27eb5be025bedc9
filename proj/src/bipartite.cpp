#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>

#include <Eigen/Eigenvalues>

#include "hoffman/canonical.hpp"
#include "hoffman/enumeration.hpp"

namespace hoffman {

namespace {

constexpr double kBoundSlack = 1e-9;

// lambda_max of the bipartite graph whose big-side vertices have the given
// neighbourhoods in a small side of size s: sqrt of lambda_max(M^T M).
double rows_lambda(const std::vector<VertexMask>& rows, int s) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(s, s);
  for (VertexMask r : rows)
    for (VertexMask p = r; p; p &= p - 1)
      for (VertexMask q = r; q; q &= q - 1) m(std::countr_zero(p), std::countr_zero(q)) += 1.0;
  if (s == 1) return std::sqrt(m(0, 0));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues()(s - 1)));
}

// Big side first (0..k-1), then the small side.
Graph rows_graph(const std::vector<VertexMask>& rows, int s) {
  const int k = static_cast<int>(rows.size());
  Graph g(k + s);
  for (int i = 0; i < k; ++i)
    for (VertexMask r = rows[i]; r; r &= r - 1) g.add_edge(i, k + std::countr_zero(r));
  return g;
}

std::vector<int> side_colors(int first, int second) {
  std::vector<int> c(first + second, 1);
  std::fill(c.begin(), c.begin() + first, 0);
  return c;
}

BipartitePart make_part(const Graph& g, int a, int b) {
  BipartitePart p;
  p.graph = g;
  p.a = a;
  p.b = b;
  const auto perron = perron_vector(g);
  p.lambda_max = perron.eigenvalue;
  for (int side = 0; side < 2; ++side) {
    auto& w = p.side_weights[side];
    const int lo = side == 0 ? 0 : a;
    const int hi = side == 0 ? a : a + b;
    w.assign(perron.vector.begin() + lo, perron.vector.begin() + hi);
    double sq = 0.0;
    for (double x : w) sq += x * x;
    for (double& x : w) x /= std::sqrt(sq);
    std::sort(w.begin(), w.end(), std::greater<>());
  }
  if (a == b) {
    p.form = canonical_form(g);
  } else {
    const auto col = side_colors(a, b);
    p.form = canonical_labeling(g, col).form;
  }
  return p;
}

}  // namespace

std::vector<BipartitePart> generate_bipartite_parts(int a, int b, double lambda_bound) {
  if (a < 1 || b < 1) throw Error("bipartite sides must be non-empty");
  if (a + b > kMaxVertices) throw Error("bipartite part exceeds 64 vertices");
  const int s = std::min(a, b);
  const int t = std::max(a, b);
  const double bound = lambda_bound + kBoundSlack;
  const VertexMask full = (s == 64) ? ~VertexMask{0} : (bit(s) - 1);

  // Add big-side vertices one at a time; lambda only grows, so prune on it.
  std::vector<std::vector<VertexMask>> level{{}};
  for (int k = 1; k <= t; ++k) {
    std::vector<std::vector<VertexMask>> next;
    std::unordered_set<std::string> seen;
    const auto colors = side_colors(k, s);
    for (const auto& rep : level) {
      auto rows = rep;
      rows.push_back(0);
      for (VertexMask S = 1; S <= full; ++S) {
        rows.back() = S;
        if (rows_lambda(rows, s) > bound) continue;
        const bool last = k == t;
        const Graph g = rows_graph(rows, s);
        if (last && !is_connected(g)) continue;
        std::string key = (last && a == b) ? canonical_form(g) : canonical_labeling(g, colors).form;
        if (seen.insert(std::move(key)).second) next.push_back(rows);
      }
    }
    level = std::move(next);
  }

  std::vector<BipartitePart> out;
  for (const auto& rows : level) {
    const Graph g = rows_graph(rows, s);  // big side first
    if (a >= b) {
      out.push_back(make_part(g, a, b));
    } else {
      // Put the small side first so that side A has size a.
      std::vector<int> perm(a + b);
      for (int v = 0; v < t; ++v) perm[v] = s + v;
      for (int v = 0; v < s; ++v) perm[t + v] = v;
      out.push_back(make_part(g.permuted(perm), a, b));
    }
  }
  std::sort(out.begin(), out.end(), [](const BipartitePart& x, const BipartitePart& y) {
    if (std::abs(x.lambda_max - y.lambda_max) > 1e-12) return x.lambda_max < y.lambda_max;
    return x.form < y.form;
  });
  return out;
}

bool same_lambda(double x, const Graph& gx, double y, const Graph& gy, double tol) {
  return same_eigenvalue(x, gx, y, gy, tol);
}

const std::vector<BipartitePart>& PartLibrary::ensure(int a, int b, double bound) {
  // slot.first is the bound generated so far; no part has lambda <= 0.
  auto& slot = cache_[{a, b}];
  if (slot.first < bound) {
    const double cap = std::sqrt(static_cast<double>(a) * b);  // lambda(K_{a,b})
    if (bound >= cap) {
      slot.second = generate_bipartite_parts(a, b, cap);
      slot.first = std::numeric_limits<double>::infinity();
    } else {
      slot.second = generate_bipartite_parts(a, b, bound);
      slot.first = bound;
    }
  }
  return slot.second;
}

std::vector<BipartitePart> PartLibrary::connected(int a, int b, double bound) {
  std::lock_guard lock(mu_);
  std::vector<BipartitePart> out;
  for (const auto& p : ensure(a, b, bound))
    if (p.lambda_max <= bound + kBoundSlack) out.push_back(p);
  return out;
}

std::vector<double> PartLibrary::lambdas(int a, int b, double bound) {
  std::vector<double> out;
  for (const auto& p : connected(a, b, bound))
    if (out.empty() || p.lambda_max - out.back() > tol_) out.push_back(p.lambda_max);
  return out;
}

std::optional<Graph> PartLibrary::disconnected_witness(int a, int b, double nu) {
  if (a < 2 || b < 2) return std::nullopt;
  // comp[i][j]: a connected part with sides (i, j) and lambda = nu.
  std::vector<std::vector<std::optional<Graph>>> comp(a, std::vector<std::optional<Graph>>(b));
  for (int i = 1; i < a; ++i)
    for (int j = 1; j < b; ++j) {
      if (nu > std::sqrt(static_cast<double>(i) * j) + tol_) continue;
      for (const auto& p : connected(i, j, nu + 10 * tol_))
        if (std::abs(p.lambda_max - nu) <= 10 * tol_) {
          comp[i][j] = p.graph;
          break;
        }
    }
  // reach[i][j]: sides (i, j) covered by one or more components; `last` records one of them.
  std::vector<std::vector<std::pair<int, int>>> last(a + 1, std::vector<std::pair<int, int>>(b + 1, {-1, -1}));
  std::vector<std::vector<int>> count(a + 1, std::vector<int>(b + 1, 0));
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int ci = 1; ci <= i && count[i][j] < 2; ++ci)
        for (int cj = 1; cj <= j && count[i][j] < 2; ++cj) {
          if (ci >= a || cj >= b || !comp[ci][cj]) continue;
          const int ri = i - ci, rj = j - cj;
          int k = 0;
          if (ri == 0 && rj == 0) k = 1;
          else if (ri > 0 && rj > 0 && count[ri][rj] > 0) k = count[ri][rj] + 1;
          if (k > count[i][j]) {
            count[i][j] = std::min(k, 2);
            last[i][j] = {ci, cj};
          }
        }
  if (count[a][b] < 2) return std::nullopt;

  Graph out(a + b);
  int i = a, j = b, offa = 0, offb = 0;
  while (i > 0) {
    const auto [ci, cj] = last[i][j];
    const Graph& c = *comp[ci][cj];
    for (auto [u, v] : c.edges()) {
      auto place = [&](int w) { return w < ci ? offa + w : a + offb + (w - ci); };
      out.add_edge(place(u), place(v));
    }
    offa += ci;
    offb += cj;
    i -= ci;
    j -= cj;
  }
  return out;
}

std::vector<double> PartLibrary::disconnected_lambdas(int a, int b, double bound) {
  std::vector<double> cand;
  for (int i = 1; i < a; ++i)
    for (int j = 1; j < b; ++j)
      for (double l : lambdas(i, j, bound)) cand.push_back(l);
  std::sort(cand.begin(), cand.end());
  std::vector<double> out;
  for (double l : cand) {
    if (!out.empty() && l - out.back() <= tol_) continue;
    if (disconnected_witness(a, b, l)) out.push_back(l);
  }
  return out;
}

std::vector<PartitionLambda> filter_partitions(
    int n, int chi, const std::vector<IntegerPartition>& partitions,
    const std::vector<std::pair<double, std::vector<BipartitePart>>>& by_lambda) {
  std::vector<PartitionLambda> out;
  for (const auto& [lambda, parts] : by_lambda)
    for (const auto& p : partitions) {
      if (p.sum != n || static_cast<int>(p.parts.size()) != chi) continue;
      bool ok = true;
      for (int i = 0; i < chi && ok; ++i)
        for (int j = i + 1; j < chi && ok; ++j) {
          const int x = p.parts[i], y = p.parts[j];
          ok = std::any_of(parts.begin(), parts.end(), [&](const BipartitePart& q) {
            return (q.a == x && q.b == y) || (q.a == y && q.b == x);
          });
        }
      if (ok) out.push_back({p, lambda});
    }
  return out;
}

}  // namespace hoffman
