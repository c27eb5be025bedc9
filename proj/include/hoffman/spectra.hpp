#pragma once

#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "hoffman/graph.hpp"

namespace hoffman {

/// Default tolerance for eigenvalue equality.
inline constexpr double kEigenTolerance = 1e-9;

/// Adjacency eigenvalues, sorted descending.
struct Spectrum {
  std::vector<double> values;
  double tol = kEigenTolerance;

  double max() const { return values.front(); }
  double min() const { return values.back(); }
  /// Multiset equality within `tol`.
  bool matches(const Spectrum& other, double tolerance) const;
};

struct PerronData {
  double eigenvalue = 0.0;
  std::vector<double> vector;  // strictly positive, unit Euclidean norm
};

Eigen::MatrixXd adjacency_matrix(const Graph& g);

/// Full symmetric eigensolve with a residual check on every eigenpair.
Spectrum spectrum(const Graph& g, double tol = kEigenTolerance);

/// Eigenvalues only, descending; no residual verification. Used in hot loops.
std::vector<double> eigenvalues(const Graph& g);

double largest_eigenvalue(const Graph& g);
double smallest_eigenvalue(const Graph& g);

/// Unit positive eigenvector for the largest eigenvalue. Disconnected inputs
/// are accepted when every component has the same largest eigenvalue; the
/// component vectors are then weighted equally.
PerronData perron_vector(const Graph& g, double tol = kEigenTolerance);

/// h(G) = 1 - lambda_max / lambda_min. Requires at least one edge.
double hoffman_bound(const Graph& g);

/// n (-lambda_min) / (lambda_max - lambda_min) for regular graphs with an edge.
double ratio_bound(const Graph& g);

using BigInt = boost::multiprecision::cpp_int;

/// Integer coefficients of det(xI - A), highest degree first.
std::vector<BigInt> characteristic_polynomial(const Graph& g);

/// Decides whether the largest eigenvalues of two graphs coincide. Values that
/// differ by more than 10 tol are distinct and values within tol are equal;
/// anything in between is settled exactly on the characteristic polynomials.
bool same_largest_eigenvalue(const Graph& a, const Graph& b, double tol = kEigenTolerance);

/// Same decision for two already computed eigenvalues of integer graphs.
bool same_eigenvalue(double la, const Graph& a, double lb, const Graph& b, double tol);

}  // namespace hoffman
