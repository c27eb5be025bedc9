#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hoffman/graph.hpp"

namespace hoffman {

/// Result of canonical labeling. `order[i]` is the original vertex placed at
/// canonical position i. `form` is a byte string that is equal for two inputs
/// exactly when they are isomorphic (colour-preserving when colours are given).
struct CanonicalLabeling {
  std::vector<int> order;
  std::vector<std::vector<int>> generators;  // automorphisms found on the way
  std::string form;
};

/// Colour refinement followed by a backtracking search over individualised
/// vertices, with trace and automorphism pruning. `colors` may be empty
/// (uncoloured) or hold one integer per vertex; vertices may only map to
/// vertices of the same colour value.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {});

std::string canonical_form(const Graph& g, const std::optional<Coloring>& partition = std::nullopt);

bool is_isomorphic(const Graph& g, const Graph& h);

/// Relabels g into canonical order.
Graph canonical_graph(const Graph& g);

/// Orbits of Aut(g) (colour-preserving when colours are given), as sorted
/// vertex lists ordered by smallest member.
std::vector<std::vector<int>> automorphism_orbits(const Graph& g, std::span<const int> colors = {});

}  // namespace hoffman
