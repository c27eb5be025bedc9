#include <doctest.h>

#include <random>
#include <sstream>

#include "hoffman/graph.hpp"
#include "hoffman/graph6.hpp"
#include "support.hpp"

using namespace hoffman;

TEST_CASE("graph basics") {
  Graph g(4, {{0, 1}, {1, 2}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
  g.remove_edge(0, 1);
  CHECK(g.size() == 1);
  CHECK_THROWS_AS(g.add_edge(2, 2), Error);
  CHECK_THROWS_AS(g.add_edge(0, 4), Error);
  CHECK_THROWS_AS(Graph(65), Error);

  const Graph p = path_graph(4);
  const std::vector<int> perm{3, 2, 1, 0};
  CHECK(p.permuted(perm) == p);
  const std::vector<int> sub{0, 2, 3};
  CHECK(p.induced(sub).size() == 1);
}

TEST_CASE("colorings") {
  const Graph c4 = cycle_graph(4);
  const std::vector<int> cols{0, 1, 0, 1};
  const Coloring c = Coloring::from_colors(cols);
  CHECK(c.num_classes() == 2);
  CHECK(is_proper(c4, c));
  CHECK(c.color_of(4) == cols);
  CHECK_FALSE(is_proper(c4, Coloring{{{0, 1}, {2, 3}}}));
  CHECK_FALSE(is_proper(c4, Coloring{{{0, 2}, {1}}}));  // vertex 3 uncovered
  const std::vector<int> gap{0, 2};
  CHECK_THROWS_AS(Coloring::from_colors(gap), Error);
}

TEST_CASE("graph6 examples") {
  CHECK(from_graph6("Bw") == complete_graph(3));
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(from_graph6("A?") == Graph(2));
  CHECK(from_graph6("@") == Graph(1));
  CHECK(to_graph6(Graph(1)) == "@");
  // Path 0-1-2: bits (0,1)=1, (0,2)=0, (1,2)=1 -> 101000 -> 40 + 63.
  CHECK(to_graph6(path_graph(3)) == "Bg");
  CHECK(from_graph6("Bg") == path_graph(3));
  CHECK(to_graph6(petersen_graph()) == "IheA@GUAo");
}

TEST_CASE("graph6 errors carry byte offsets") {
  auto offset_of = [](const char* text) {
    try {
      (void)from_graph6(text);
    } catch (const Graph6Error& e) {
      return static_cast<long>(e.offset());
    }
    return -1L;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of(" w") == 0);      // length prefix below '?'
  CHECK(offset_of("B") == 1);       // edge data missing
  CHECK(offset_of("Bw?") == 2);     // trailing garbage
  CHECK(offset_of("C\x01") == 1);   // out-of-range character
  CHECK(offset_of("Bx") == 1);      // padding bits set
  CHECK_THROWS_AS(to_graph6(Graph(63)), Error);

  std::istringstream in("Bw\n\nA?\nB!\n");
  try {
    (void)read_graph6_lines(in);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("graph6 round trip for random graphs up to 12 vertices") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 12; ++n)
    for (int rep = 0; rep < 40; ++rep) {
      const Graph g = testing::random_graph(n, 0.1 + 0.02 * rep, rng);
      CHECK(from_graph6(to_graph6(g)) == g);
    }
  // Long form: n = 63 as "~??~", then ceil(63 * 62 / 2 / 6) zero bytes.
  CHECK(from_graph6("~??~" + std::string(326, '?')) == Graph(63));
}

TEST_CASE("integer partitions") {
  auto parts = [](int n, int k) {
    std::vector<std::vector<int>> out;
    for (const auto& p : integer_partitions(n, k)) {
      CHECK(p.sum == n);
      out.push_back(p.parts);
    }
    return out;
  };
  CHECK(parts(3, 3) == std::vector<std::vector<int>>{{1, 1, 1}});
  CHECK(parts(6, 3) == std::vector<std::vector<int>>{{4, 1, 1}, {3, 2, 1}, {2, 2, 2}});
  CHECK(parts(9, 3) == std::vector<std::vector<int>>{
                           {7, 1, 1}, {6, 2, 1}, {5, 3, 1}, {5, 2, 2}, {4, 4, 1}, {4, 3, 2}, {3, 3, 3}});
  CHECK_THROWS_AS(integer_partitions(2, 3), Error);
  CHECK_THROWS_AS(integer_partitions(3, 0), Error);

  // p(n, k) = p(n-1, k-1) + p(n-k, k), with p(0, 0) = 1.
  long p[41][41] = {};
  p[0][0] = 1;
  for (int n = 1; n <= 40; ++n)
    for (int k = 1; k <= n; ++k) p[n][k] = p[n - 1][k - 1] + p[n - k][k];
  for (int n = 1; n <= 40; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto all = integer_partitions(n, k);
      CHECK(static_cast<long>(all.size()) == p[n][k]);
      for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].parts > all[i].parts);
      for (const auto& q : all) CHECK(std::is_sorted(q.parts.rbegin(), q.parts.rend()));
    }
}

TEST_CASE("components and connectivity") {
  CHECK(connected_components(complete_graph(3)).size() == 1);
  const auto two = connected_components(disjoint_union(complete_graph(3), complete_graph(3)));
  REQUIRE(two.size() == 2);
  CHECK(two[0].size() == 3);
  CHECK(two[1].size() == 3);
  CHECK(connected_components(empty_graph(4)).size() == 4);
  CHECK(is_connected(petersen_graph()));
  CHECK_FALSE(is_connected(empty_graph(2)));
}

TEST_CASE("independence number") {
  CHECK(independence_number(testing::figure_one_graph()) == 5);
  CHECK(independence_number(complete_graph(5)) == 1);
  CHECK(independence_number(cycle_graph(5)) == 2);
  CHECK(independence_number(petersen_graph()) == 4);
  CHECK_THROWS_AS(independence_number(Graph(0)), Error);

  std::mt19937 rng(3);
  for (int rep = 0; rep < 60; ++rep) {
    const Graph g = testing::random_graph(10, 0.35, rng);
    int best = 0;
    for (VertexMask s = 0; s < bit(10); ++s) {
      bool independent = true;
      for (VertexMask r = s; r && independent; r &= r - 1) independent = !(g.neighbors(std::countr_zero(r)) & s);
      if (independent) best = std::max(best, std::popcount(s));
    }
    CHECK(independence_number(g) == best);
  }
}

TEST_CASE("regularity and bipartiteness") {
  CHECK(is_regular(cycle_graph(6)) == 2);
  CHECK_FALSE(is_regular(testing::figure_one_graph()).has_value());
  CHECK(is_regular(Graph(1)) == 0);
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  CHECK(is_regular(petersen_graph()) == 3);
  CHECK(complete_bipartite(2, 3).size() == 6);
  CHECK(star_graph(4).order() == 5);
}
