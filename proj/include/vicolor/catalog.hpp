#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vicolor/graph.hpp"

namespace vicolor {

/// One representative per isomorphism class of graphs on n vertices
/// (n <= 6), found by brute force over all edge sets with isomorph
/// rejection by minimizing the adjacency bit string over all n!
/// relabelings. Sorted by edge count, then by canonical code.
std::vector<Graph> all_graphs(int n, bool connected_only);

/// Canonical form used by all_graphs: the relabeled graph whose upper
/// triangle, read row by row, is lexicographically smallest. n <= 8.
Graph canonical_form(const Graph& g);

/// Uniform labeled tree on n vertices (Pruefer sequence).
Graph random_tree(int n, std::mt19937_64& rng);

/// Random tree plus each remaining pair independently with probability p.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

/// Vertex i joins a random set of at most k (and at least one, when
/// i > 0) earlier vertices; the result is connected and k-degenerate.
Graph random_degenerate_graph(int n, int k, std::mt19937_64& rng);

}  // namespace vicolor
