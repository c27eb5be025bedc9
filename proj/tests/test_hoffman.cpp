#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "hoffman/canonical.hpp"
#include "hoffman/constructions.hpp"
#include "hoffman/enumeration.hpp"
#include "hoffman/hoffman.hpp"
#include "support.hpp"

using namespace hoffman;
using doctest::Approx;

namespace {

const Coloring kFig7{{{0, 3}, {1, 4}, {2, 5}}};

Coloring two_coloring(const Graph& g) { return *k_coloring(g, 2); }

}  // namespace

TEST_CASE("hoffman colourability examples") {
  const auto fig1 = is_hoffman_colorable(testing::figure_one_graph());
  CHECK(fig1.colorable);
  CHECK(fig1.bound == Approx(3.0));
  CHECK(fig1.chi == 3);

  const auto c5 = is_hoffman_colorable(cycle_graph(5));
  CHECK_FALSE(c5.colorable);
  CHECK(c5.bound == Approx(1.0 + 2.0 / (2.0 * std::cos(M_PI / 5.0))));
  CHECK(c5.bound == Approx(2.236).epsilon(1e-3));
  CHECK(c5.chi == 3);

  const auto two_k3 = is_hoffman_colorable(disjoint_union(complete_graph(3), complete_graph(3)));
  CHECK(two_k3.colorable);
  CHECK(two_k3.per_component.size() == 2);

  // Components meeting the bound but with different spectra do not count.
  CHECK_FALSE(is_hoffman_colorable(disjoint_union(complete_graph(3), complete_graph(4))).colorable);
  CHECK_FALSE(is_hoffman_colorable(disjoint_union(complete_graph(2), cycle_graph(5))).colorable);
  // An isolated vertex has no edge to meet the bound with.
  CHECK_FALSE(is_hoffman_colorable(disjoint_union(complete_graph(3), Graph(1))).colorable);

  CHECK(is_hoffman_colorable(cycle_graph(6)).colorable);
  CHECK_FALSE(is_hoffman_colorable(petersen_graph()).colorable);
  CHECK_THROWS_AS(is_hoffman_colorable(Graph(4)), Error);
}

TEST_CASE("quick check agrees with the exact verdict") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& g : testing::connected_graphs(n))
      CHECK(hoffman_colorable_quick(g) == is_hoffman_colorable(g).colorable);
  std::mt19937 rng(17);
  for (int rep = 0; rep < 300; ++rep) {
    const Graph g = testing::random_graph(8, 0.4, rng);
    if (g.size() == 0) continue;
    CHECK(hoffman_colorable_quick(g) == is_hoffman_colorable(g).colorable);
  }
}

TEST_CASE("weight quotient examples") {
  const auto k3 = weight_quotient(complete_graph(3), Coloring{{{0}, {1}, {2}}});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(k3.entries(i, j) == Approx(i == j ? 0.0 : 1.0));
  CHECK(k3.weight_regular);

  const auto fig1 = weight_quotient(testing::figure_one_graph(), testing::figure_one_coloring());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(fig1.entries(i, j) == Approx(i == j ? 0.0 : 2.0));

  const auto c6 = weight_quotient(cycle_graph(6), kFig7);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(c6.entries(i, j) == Approx(i == j ? 0.0 : 1.0));

  CHECK_THROWS_AS(weight_quotient(disjoint_union(complete_graph(3), path_graph(3)),
                                  Coloring{{{0, 3, 5}, {1, 4}, {2}}}),
                  Error);
}

TEST_CASE("structure checks") {
  CHECK(check_hoffman_structure(testing::figure_one_graph(), testing::figure_one_coloring()).all());
  CHECK(check_hoffman_structure(cycle_graph(6), two_coloring(cycle_graph(6))).all());

  Graph k4e = complete_graph(4);
  k4e.remove_edge(0, 1);
  CHECK(hoffman_bound(k4e) < 3.0);
  CHECK_FALSE(check_hoffman_structure(k4e, Coloring{{{0, 1}, {2}, {3}}}).all());
}

TEST_CASE("decomposition examples") {
  const Graph fig1 = testing::figure_one_graph();
  const Coloring col = testing::figure_one_coloring();
  const std::vector<int> pair{1, 2};
  const auto d = decompose(fig1, col, pair);
  CHECK(d.all());
  CHECK(largest_eigenvalue(d.graph) == Approx(2.0));
  CHECK(d.graph.order() == 4);

  const Graph c8 = cycle_graph(8);
  const std::vector<int> both{0, 1};
  const auto id = decompose(c8, two_coloring(c8), both);
  CHECK(id.all());
  CHECK(is_isomorphic(id.graph, c8));

  const auto k4 = decompose(complete_graph(4), Coloring{{{0}, {1}, {2}, {3}}}, std::vector<int>{0, 2});
  CHECK(k4.all());
  CHECK(k4.graph == complete_graph(2));
  CHECK(largest_eigenvalue(k4.graph) == Approx(1.0));

  CHECK_THROWS_AS(decompose(fig1, col, std::vector<int>{0}), Error);
  CHECK_THROWS_AS(decompose(cycle_graph(5), Coloring{{{0, 2}, {1, 3}, {4}}}, both), Error);

  // All subsets of the three colours of the irregular example.
  for (const auto& subset : std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}, {0, 1, 2}})
    CHECK(decompose(fig1, col, subset).all());
}

TEST_CASE("composition examples") {
  const std::vector<std::pair<int, int>> to_both{{0, 0}, {0, 1}};
  const auto k3 = compose_and_check(complete_graph(2), Coloring{{{0}, {1}}}, 1, to_both);
  CHECK(k3.colorable);
  CHECK(is_isomorphic(k3.graph, complete_graph(3)));
  CHECK(k3.failures.empty());

  std::vector<std::pair<int, int>> cone8, cone6;
  for (int v = 0; v < 8; ++v) cone8.push_back({0, v});
  for (int v = 0; v < 6; ++v) cone6.push_back({0, v});
  const Graph c8 = cycle_graph(8), c6 = cycle_graph(6);
  const auto a = compose_and_check(c8, two_coloring(c8), 1, cone8);
  CHECK(a.colorable);
  CHECK(a.graph == k_cone(c8, 1));
  CHECK(a.weight_deviation < 1e-9);
  const auto b = compose_and_check(c6, two_coloring(c6), 1, cone6);
  // The wheel keeps lambda_min = -2, so a precondition has to fail.
  CHECK_FALSE(b.colorable);
  CHECK(b.spectrum.min() == Approx(-2.0));
  CHECK_FALSE(b.failures.empty());

  // A lone vertex in the new class breaks the no-isolated-vertex precondition.
  const std::vector<std::pair<int, int>> partial{{0, 0}, {0, 1}};
  const auto c = compose_and_check(complete_graph(2), Coloring{{{0}, {1}}}, 2, partial);
  CHECK_FALSE(c.colorable);
  CHECK_FALSE(c.failures.empty());

  CHECK_THROWS_AS(compose_and_check(cycle_graph(5), Coloring{{{0, 2}, {1, 3}, {4}}}, 1, cone6), Error);
}

TEST_CASE("composition agrees with the direct check on small cases") {
  // Templates: Hoffman coloured graphs on at most 8 vertices; new classes of
  // 1 to 3 vertices with every cross relation up to a vertex budget. The
  // composed colouring is optimal exactly when the direct verdict reports
  // chi = classes + 1.
  std::vector<std::pair<Graph, Coloring>> templates;
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : testing::connected_graphs(n)) {
      const auto v = is_hoffman_colorable(g);
      if (v.colorable) templates.push_back({g, optimal_coloring(g).coloring});
    }
  templates.push_back({cycle_graph(8), two_coloring(cycle_graph(8))});
  templates.push_back({complete_bipartite(4, 4), two_coloring(complete_bipartite(4, 4))});

  std::mt19937 rng(23);
  int checked = 0, positive = 0;
  for (const auto& [t, tc] : templates) {
    const int n = t.order();
    for (int s = 1; s <= 3 && n + s <= 11; ++s) {
      const int pairs = n * s;
      const long total = 1L << pairs;
      const int samples = total <= 1024 ? static_cast<int>(total) : 300;
      for (int rep = 0; rep < samples; ++rep) {
        const long mask = total <= 1024 ? rep : static_cast<long>(rng() % total);
        std::vector<std::pair<int, int>> cross;
        for (int w = 0; w < s; ++w)
          for (int u = 0; u < n; ++u)
            if ((mask >> (w * n + u)) & 1) cross.push_back({w, u});
        const auto comp = compose_and_check(t, tc, s, cross);
        if (!is_proper(comp.graph, comp.coloring)) continue;
        const auto direct = is_hoffman_colorable(comp.graph);
        const bool expected = direct.colorable && direct.chi == tc.num_classes() + 1;
        CHECK(comp.colorable == expected);
        ++checked;
        positive += expected;
      }
    }
  }
  CHECK(checked > 3000);
  CHECK(positive > 5);
}

TEST_CASE("enumerated graphs recompose from any class") {
  // Removing one class of a Hoffman colouring leaves a Hoffman coloured
  // template; putting the class back must pass the composition check.
  int composed = 0;
  for (auto [n, chi] : std::vector<std::pair<int, int>>{{6, 3}, {9, 3}, {10, 3}, {12, 3}, {11, 4}, {12, 4}, {13, 5}}) {
    for (const auto& f : enumerate_hoffman(n, chi).graphs) {
      const auto color = f.coloring.color_of(n);
      for (int i = 0; i < chi; ++i) {
        std::vector<int> keep, index(n, -1);
        for (int v = 0; v < n; ++v)
          if (color[v] != i) {
            index[v] = static_cast<int>(keep.size());
            keep.push_back(v);
          }
        std::vector<std::vector<int>> classes;
        for (int j = 0; j < chi; ++j) {
          if (j == i) continue;
          classes.emplace_back();
          for (int v : f.coloring.classes[j]) classes.back().push_back(index[v]);
        }
        std::vector<std::pair<int, int>> cross;
        const auto& removed = f.coloring.classes[i];
        for (int w = 0; w < static_cast<int>(removed.size()); ++w)
          for (int v : keep)
            if (f.graph.adjacent(removed[w], v)) cross.push_back({w, index[v]});
        const auto comp = compose_and_check(f.graph.induced(keep), Coloring{classes},
                                            static_cast<int>(removed.size()), cross);
        INFO(f.form, " class ", i, " connected ", is_connected(f.graph.induced(keep)));
        for (const auto& why : comp.failures) MESSAGE(why);
        CHECK(comp.colorable);
        CHECK(comp.failures.empty());
        CHECK(is_isomorphic(comp.graph, f.graph));
        ++composed;
      }
    }
  }
  CHECK(composed > 100);
}
