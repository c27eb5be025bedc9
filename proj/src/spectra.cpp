#include "hoffman/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace hoffman {

bool Spectrum::matches(const Spectrum& other, double tolerance) const {
  if (values.size() != other.values.size()) return false;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (std::abs(values[i] - other.values[i]) > tolerance) return false;
  return true;
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const int n = g.order();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
  return a;
}

Spectrum spectrum(const Graph& g, double tol) {
  if (g.order() < 1) throw Error("spectrum of the empty graph");
  const Eigen::MatrixXd a = adjacency_matrix(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success)
    throw Error("symmetric eigensolver did not converge within its iteration budget (" +
                std::to_string(static_cast<int>(solver.info())) + ")");
  const int n = g.order();
  for (int k = 0; k < n; ++k) {
    const double residual =
        (a * solver.eigenvectors().col(k) - solver.eigenvalues()(k) * solver.eigenvectors().col(k))
            .norm();
    if (residual > tol * n)
      throw Error("eigenpair residual " + std::to_string(residual) + " exceeds tolerance");
  }
  Spectrum s;
  s.tol = tol;
  s.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(s.values.begin(), s.values.end(), std::greater<>());
  return s;
}

std::vector<double> eigenvalues(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g), Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double largest_eigenvalue(const Graph& g) { return eigenvalues(g).front(); }
double smallest_eigenvalue(const Graph& g) { return eigenvalues(g).back(); }

namespace {

// Perron pair of a connected graph.
PerronData connected_perron(const Graph& g) {
  const int n = g.order();
  if (n == 1) return {0.0, {1.0}};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g));
  if (solver.info() != Eigen::Success) throw Error("symmetric eigensolver did not converge");
  Eigen::VectorXd v = solver.eigenvectors().col(n - 1);
  if (v.sum() < 0) v = -v;
  PerronData out;
  out.eigenvalue = solver.eigenvalues()(n - 1);
  out.vector.assign(v.data(), v.data() + n);
  return out;
}

}  // namespace

PerronData perron_vector(const Graph& g, double tol) {
  const int n = g.order();
  if (n < 1) throw Error("Perron vector of the empty graph");
  const auto comps = connected_components(g);
  std::vector<PerronData> parts;
  for (const auto& comp : comps) parts.push_back(connected_perron(g.induced(comp)));
  const double lmax = parts.front().eigenvalue;
  for (const auto& p : parts)
    if (std::abs(p.eigenvalue - lmax) > tol)
      throw Error("no positive eigenvector: components have different largest eigenvalues");

  PerronData out;
  out.eigenvalue = lmax;
  out.vector.assign(n, 0.0);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t i = 0; i < comps[c].size(); ++i) out.vector[comps[c][i]] = parts[c].vector[i];
  const double norm = std::sqrt(std::inner_product(out.vector.begin(), out.vector.end(),
                                                   out.vector.begin(), 0.0));
  for (double& x : out.vector) {
    x /= norm;
    if (!(x > 0.0)) throw Error("no positive eigenvector: non-positive Perron entry");
  }
  return out;
}

double hoffman_bound(const Graph& g) {
  if (g.size() == 0) throw Error("Hoffman bound is undefined for an edgeless graph");
  const auto ev = eigenvalues(g);
  return 1.0 - ev.front() / ev.back();
}

double ratio_bound(const Graph& g) {
  if (!is_regular(g)) throw Error("ratio bound requires a regular graph");
  if (g.size() == 0) throw Error("ratio bound is undefined for an edgeless graph");
  const auto ev = eigenvalues(g);
  return g.order() * (-ev.back()) / (ev.front() - ev.back());
}

std::vector<BigInt> characteristic_polynomial(const Graph& g) {
  // Faddeev-LeVerrier in exact integer arithmetic.
  const int n = g.order();
  using Mat = std::vector<std::vector<BigInt>>;
  Mat a(n, std::vector<BigInt>(n, 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  std::vector<BigInt> coeff(n + 1, 0);
  coeff[0] = 1;
  Mat m(n, std::vector<BigInt>(n, 0));  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{k-1} I
    Mat next(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        BigInt s = 0;
        for (int l = 0; l < n; ++l)
          if (a[i][l] != 0) s += m[l][j];
        next[i][j] = s;
      }
    for (int i = 0; i < n; ++i) next[i][i] += coeff[k - 1];
    BigInt tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (a[i][l] != 0) tr += next[l][i];
    coeff[k] = -tr / k;
    m = std::move(next);
  }
  return coeff;
}

namespace {

using Poly = std::vector<BigInt>;  // highest degree first

void trim(Poly& p) {
  std::size_t z = 0;
  while (z + 1 < p.size() && p[z] == 0) ++z;
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(z));
}

BigInt content(const Poly& p) {
  BigInt c = 0;
  for (const auto& x : p) c = boost::multiprecision::gcd(c, boost::multiprecision::abs(x));
  return c == 0 ? BigInt(1) : c;
}

Poly primitive(Poly p) {
  trim(p);
  const BigInt c = content(p);
  for (auto& x : p) x /= c;
  if (p.front() < 0)
    for (auto& x : p) x = -x;
  return p;
}

// Pseudo-remainder of a by b.
Poly prem(Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() - 1 >= db && !(a.size() == 1 && a[0] == 0)) {
    const BigInt lead = a.front();
    for (auto& x : a) x *= b.front();
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= lead * b[i];
    a.erase(a.begin());
    if (a.empty()) a.push_back(0);
    trim(a);
    if (db == 0) break;
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  a = primitive(a);
  b = primitive(b);
  while (!(b.size() == 1 && b[0] == 0)) {
    if (b.size() == 1) return {1};
    Poly r = prem(a, b);
    a = b;
    b = (r.size() == 1 && r[0] == 0) ? r : primitive(r);
  }
  return primitive(a);
}

Poly derivative(const Poly& p) {
  Poly d;
  const std::size_t deg = p.size() - 1;
  for (std::size_t i = 0; i < deg; ++i) d.push_back(p[i] * static_cast<int>(deg - i));
  if (d.empty()) d.push_back(0);
  return d;
}

long double evaluate(const Poly& p, long double x) {
  long double acc = 0;
  for (const auto& c : p) acc = acc * x + static_cast<long double>(c);
  return acc;
}

}  // namespace

bool same_eigenvalue(double la, const Graph& a, double lb, const Graph& b, double tol) {
  const double gap = std::abs(la - lb);
  if (gap <= tol) return true;
  if (gap > 10 * tol) return false;
  Poly g = poly_gcd(characteristic_polynomial(a), characteristic_polynomial(b));
  if (g.size() <= 1) return false;
  // Square-free part so that a shared root shows up as a sign change.
  Poly sf = g;
  Poly gd = poly_gcd(g, derivative(g));
  if (gd.size() > 1) {
    // sf = g / gd by exact polynomial long division.
    Poly q(g.size() - gd.size() + 1, 0);
    Poly r = g;
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] = r[i] / gd.front();
      for (std::size_t j = 0; j < gd.size(); ++j) r[i + j] -= q[i] * gd[j];
    }
    sf = primitive(q);
  }
  const long double lo = std::min(la, lb) - 10.0L * tol;
  const long double hi = std::max(la, lb) + 10.0L * tol;
  const long double flo = evaluate(sf, lo);
  const long double fhi = evaluate(sf, hi);
  return (flo <= 0 && fhi >= 0) || (flo >= 0 && fhi <= 0);
}

bool same_largest_eigenvalue(const Graph& a, const Graph& b, double tol) {
  return same_eigenvalue(largest_eigenvalue(a), a, largest_eigenvalue(b), b, tol);
}

}  // namespace hoffman
