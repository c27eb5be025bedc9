#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hoffman/graph.hpp"

namespace hoffman {

/// Size of a maximum clique (exact).
int clique_number(const Graph& g);

/// Exact chromatic number together with one optimal colouring. Clique lower
/// bound, DSATUR greedy upper bound, then DSATUR backtracking for each k in
/// between. The first vertex picked is always given colour 0.
struct OptimalColoring {
  int chi = 0;
  Coloring coloring;
};
OptimalColoring optimal_coloring(const Graph& g);

int chromatic_number(const Graph& g);

/// A proper colouring with at most k colours, if one exists.
std::optional<Coloring> k_coloring(const Graph& g, int k);

/// Visits every proper colouring with exactly k non-empty classes, up to
/// permutation of the classes (class 0 holds vertex 0, and so on). The visitor
/// returns false to stop early.
void for_each_coloring(const Graph& g, int k, const std::function<bool(const Coloring&)>& visit);

/// A proper k-colouring whose classes all have exactly `class_size` vertices.
std::optional<Coloring> equal_class_coloring(const Graph& g, int k, int class_size);

}  // namespace hoffman
