#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "hoffman/coloring.hpp"
#include "hoffman/spectra.hpp"
#include "support.hpp"

using namespace hoffman;
using doctest::Approx;

namespace {

long double eval_poly(const std::vector<BigInt>& coeff, long double x) {
  long double acc = 0;
  for (const auto& c : coeff) acc = acc * x + static_cast<long double>(c);
  return acc;
}

}  // namespace

TEST_CASE("spectrum examples") {
  const auto k3 = spectrum(complete_graph(3));
  REQUIRE(k3.values.size() == 3);
  CHECK(k3.values[0] == Approx(2.0));
  CHECK(k3.values[1] == Approx(-1.0));
  CHECK(k3.values[2] == Approx(-1.0));

  const auto fig1 = spectrum(testing::figure_one_graph());
  CHECK(fig1.max() == Approx(4.0));
  CHECK(fig1.min() == Approx(-2.0));

  const auto p3 = spectrum(path_graph(3));
  CHECK(p3.values[0] == Approx(std::sqrt(2.0)));
  CHECK(p3.values[1] == Approx(0.0));
  CHECK(p3.values[2] == Approx(-std::sqrt(2.0)));

  CHECK_THROWS_AS(spectrum(Graph(0)), Error);
}

TEST_CASE("perron vector examples") {
  const auto c4 = perron_vector(cycle_graph(4));
  CHECK(c4.eigenvalue == Approx(2.0));
  for (double x : c4.vector) CHECK(x == Approx(0.5));

  const auto star = perron_vector(star_graph(4));
  CHECK(star.eigenvalue == Approx(2.0));
  CHECK(star.vector[0] == Approx(1.0 / std::sqrt(2.0)));
  for (int v = 1; v <= 4; ++v) CHECK(star.vector[v] == Approx(1.0 / (2.0 * std::sqrt(2.0))));

  CHECK_THROWS_AS(perron_vector(disjoint_union(complete_graph(3), path_graph(3))), Error);
  // Equal largest eigenvalues across components are fine.
  const auto twice = perron_vector(disjoint_union(cycle_graph(4), cycle_graph(5)));
  CHECK(twice.eigenvalue == Approx(2.0));
}

TEST_CASE("bounds") {
  CHECK(hoffman_bound(testing::figure_one_graph()) == Approx(3.0));
  for (int n = 2; n <= 8; ++n) CHECK(hoffman_bound(complete_graph(n)) == Approx(n));
  CHECK(hoffman_bound(petersen_graph()) == Approx(2.5));
  CHECK_THROWS_AS(hoffman_bound(Graph(3)), Error);

  CHECK(ratio_bound(petersen_graph()) == Approx(4.0));
  CHECK(ratio_bound(cycle_graph(6)) == Approx(3.0));
  CHECK(ratio_bound(complete_graph(4)) == Approx(1.0));
  CHECK_THROWS_AS(ratio_bound(path_graph(3)), Error);
  CHECK_THROWS_AS(ratio_bound(Graph(3)), Error);
}

TEST_CASE("trace identities and perron properties on random graphs") {
  std::mt19937 rng(5);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 1 + rep % 16;
    const Graph g = testing::random_graph(n, 0.2 + 0.6 * (rep % 5) / 5.0, rng);
    const auto s = spectrum(g);
    CHECK(std::is_sorted(s.values.rbegin(), s.values.rend()));
    const double sum = std::accumulate(s.values.begin(), s.values.end(), 0.0);
    double squares = 0.0;
    for (double x : s.values) squares += x * x;
    CHECK(std::abs(sum) <= n * 1e-9);
    CHECK(squares == Approx(2.0 * g.size()).epsilon(1e-9));

    // Characteristic polynomial vanishes at each eigenvalue.
    const auto cp = characteristic_polynomial(g);
    REQUIRE(cp.size() == static_cast<std::size_t>(n + 1));
    CHECK(cp[0] == 1);
    CHECK(cp[1] == 0);
    if (n >= 2) CHECK(cp[2] == -g.size());
    for (double x : s.values) {
      long double scale = 1;
      for (const auto& c : cp) scale = std::max(scale, std::abs(static_cast<long double>(c)));
      CHECK(std::abs(eval_poly(cp, x)) <= 1e-6L * scale * std::pow(1.0L + std::abs(x), n));
    }

    if (!is_connected(g) || n < 2) continue;
    const auto p = perron_vector(g);
    const auto oracle = testing::power_iteration(g);
    for (int v = 0; v < n; ++v) {
      CHECK(p.vector[v] > 0.0);
      CHECK(p.vector[v] == Approx(oracle[v]).epsilon(1e-6));
      double av = 0.0;
      for (int w = 0; w < n; ++w)
        if (g.adjacent(v, w)) av += p.vector[w];
      CHECK(std::abs(av - p.eigenvalue * p.vector[v]) <= 1e-9);
    }
    if (is_regular(g)) {
      const auto [lo, hi] = std::minmax_element(p.vector.begin(), p.vector.end());
      CHECK(*hi - *lo < 1e-9);
    }
    if (is_bipartite(g)) {
      const auto side = optimal_coloring(g).coloring;
      double a = 0.0, b = 0.0;
      for (int v : side.classes[0]) a += p.vector[v] * p.vector[v];
      for (int v : side.classes[1]) b += p.vector[v] * p.vector[v];
      CHECK(a == Approx(b).epsilon(1e-9));
    }
  }
}

TEST_CASE("hoffman bound never exceeds the chromatic number") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& g : testing::connected_graphs(n)) CHECK(hoffman_bound(g) <= chromatic_number(g) + 1e-9);
  std::mt19937 rng(9);
  for (int rep = 0; rep < 400; ++rep) {
    const Graph g = testing::random_graph(8 + rep % 2, 0.3 + 0.4 * (rep % 3) / 3.0, rng);
    if (g.size() == 0) continue;
    CHECK(hoffman_bound(g) <= chromatic_number(g) + 1e-9);
  }
}

TEST_CASE("exact eigenvalue comparison") {
  // sqrt(2) from P3 and from the star K_{1,2} (the same graph) and from C8's
  // second eigenvalue: lambda_max values that agree exactly.
  CHECK(same_largest_eigenvalue(path_graph(3), star_graph(2)));
  CHECK(same_eigenvalue(std::sqrt(2.0), path_graph(3), std::sqrt(2.0) + 5e-9, star_graph(2), 1e-9));
  // P4 has lambda_max = golden ratio; K_{1,3} has sqrt(3). Far apart.
  CHECK_FALSE(same_largest_eigenvalue(path_graph(4), star_graph(3)));
  // Close values without a common root are told apart.
  CHECK_FALSE(same_eigenvalue(2.0, cycle_graph(4), 2.0 + 5e-9, path_graph(5), 1e-9));
}
