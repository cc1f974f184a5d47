#pragma once

#include <optional>
#include <vector>

#include "vicolor/graph.hpp"

namespace vicolor {

/// Blocks (maximal 2-connected subgraphs, bridges, and isolated vertices)
/// and cut vertices of a graph.
struct BlockDecomposition {
    /// Sorted vertex set of each block. Isolated vertices form singleton blocks.
    std::vector<std::vector<Vertex>> blocks;
    /// Edges of each block, parallel to `blocks`.
    std::vector<std::vector<Edge>> block_edges;
    std::vector<Vertex> cut_vertices;
};

BlockDecomposition blocks(const Graph& g);

struct DegeneracyOrdering {
    int degeneracy = 0;
    /// Restoration order: every vertex has at most `degeneracy` neighbors
    /// earlier in the sequence. Removing vertices from the back peels a
    /// vertex of current degree <= degeneracy each time.
    std::vector<Vertex> order;
};

/// Min-degree peeling (ties broken by smallest vertex id).
DegeneracyOrdering degeneracy_ordering(const Graph& g);

/// Maximum matching in a bipartite graph given as adjacency from left
/// vertices 0..left_count-1 to right vertices 0..right_count-1.
/// Returns, for every left vertex, its matched right vertex or -1.
/// Augmenting paths are tried in adjacency order, so the result is
/// deterministic and earlier adjacency entries are preferred.
std::vector<int> max_bipartite_matching(int left_count, int right_count,
                                        const std::vector<std::vector<int>>& adjacency);

/// Perfect matching of a k-regular bipartite graph (k >= 1). Throws
/// std::invalid_argument when `parts` is not a bipartition of g, or g is
/// not regular, or the sides differ in size.
std::vector<Edge> perfect_matching_regular_bipartite(const Graph& g, const Bipartition& parts);

/// The cyclic shift i -> i+1 (mod n) on {0..n-1}; n >= 2.
Permutation derangement(int n);

/// Proper coloring of a k-regular bipartite graph (k >= 4) with colors
/// {1,2} on parts.left and {3,4} on parts.right such that every vertex of
/// degree >= 2 sees two colors in its neighborhood. Indexed by vertex.
std::vector<int> four_dynamic_coloring_bipartite(const Graph& g, const Bipartition& parts);

/// Independent checker for the output of four_dynamic_coloring_bipartite.
bool is_four_dynamic_coloring(const Graph& g, const Bipartition& parts, const std::vector<int>& colors);

}  // namespace vicolor
