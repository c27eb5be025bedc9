#include <doctest.h>

#include <random>

#include "hoffman/coloring.hpp"
#include "support.hpp"

using namespace hoffman;

namespace {

// Smallest k with a proper k-colouring, by trying every colour assignment.
int brute_chromatic(const Graph& g) {
  const int n = g.order();
  for (int k = 1; k <= n; ++k) {
    std::vector<int> col(n, 0);
    for (;;) {
      bool ok = true;
      for (auto [u, v] : g.edges()) ok &= col[u] != col[v];
      if (ok) return k;
      int i = 0;
      while (i < n && ++col[i] == k) col[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

}  // namespace

TEST_CASE("chromatic number examples") {
  CHECK(chromatic_number(testing::figure_one_graph()) == 3);
  for (int n = 1; n <= 7; ++n) CHECK(chromatic_number(complete_graph(n)) == n);
  CHECK(chromatic_number(petersen_graph()) == 3);
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  CHECK(chromatic_number(cycle_graph(6)) == 2);
  CHECK(chromatic_number(Graph(3)) == 1);
  CHECK_THROWS_AS(chromatic_number(Graph(0)), Error);
  CHECK(clique_number(petersen_graph()) == 2);
}

TEST_CASE("optimal colourings are proper and agree with brute force") {
  std::mt19937 rng(13);
  for (int rep = 0; rep < 150; ++rep) {
    const Graph g = testing::random_graph(1 + rep % 8, 0.5, rng);
    const auto best = optimal_coloring(g);
    CHECK(is_proper(g, best.coloring));
    CHECK(best.coloring.num_classes() == best.chi);
    CHECK(best.chi == brute_chromatic(g));
    CHECK_FALSE(k_coloring(g, best.chi - 1).has_value());
    if (best.chi > 0) {
      const auto again = k_coloring(g, best.chi);
      REQUIRE(again.has_value());
      CHECK(is_proper(g, *again));
    }
  }
}

TEST_CASE("colouring enumeration") {
  // C4 has exactly one 2-colouring and, up to renaming, 2 colourings with 3 classes.
  int two = 0, three = 0;
  for_each_coloring(cycle_graph(4), 2, [&](const Coloring& c) {
    CHECK(is_proper(cycle_graph(4), c));
    ++two;
    return true;
  });
  for_each_coloring(cycle_graph(4), 3, [&](const Coloring&) {
    ++three;
    return true;
  });
  CHECK(two == 1);
  CHECK(three == 2);

  const auto eq = equal_class_coloring(complete_bipartite(3, 3), 2, 3);
  REQUIRE(eq.has_value());
  CHECK(eq->classes[0].size() == 3);
  CHECK_FALSE(equal_class_coloring(star_graph(3), 2, 2).has_value());
}
