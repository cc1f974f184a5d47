#pragma once

#include <span>
#include <string>
#include <vector>

#include "vicolor/graph.hpp"

namespace vicolor {

/// A vertex of the n-subdivision G^(1/n): either an original (terminal)
/// vertex or an internal vertex (xy)_l on the path replacing edge {x,y}.
///
/// Internal vertices are always stored with x < y and l counted from x,
/// so (xy)_l and (yx)_{n-l} have the same representation.
struct SubdivisionVertex {
    bool internal = false;
    Vertex x = 0;  ///< the terminal vertex, or the smaller edge endpoint
    Vertex y = -1; ///< larger edge endpoint (internal only)
    int position = 0;

    static SubdivisionVertex terminal(Vertex v) { return {false, v, -1, 0}; }
    /// (ab)_l in a subdivision of order n, canonicalized.
    static SubdivisionVertex on_edge(Vertex a, Vertex b, int l, int n);

    auto operator<=>(const SubdivisionVertex&) const = default;
};

/// G^(m/n) with labels on every vertex.
struct PowerGraph {
    LabeledGraph<SubdivisionVertex> labeled;
    Graph source;
    int m = 1;
    int n = 1;

    const Graph& graph() const noexcept { return labeled.graph(); }
};

/// G^(1/n). Vertex order: terminals 0..|V|-1 first, then for each edge of
/// source.edges() in order, positions 1..n-1.
PowerGraph subdivide(const Graph& g, int n);

/// Same vertex set; u ~ v iff 1 <= dist(u,v) <= m.
Graph graph_power(const Graph& g, int m);

/// (G^(1/n))^m, labels preserved.
PowerGraph fractional_power(const Graph& g, int m, int n);

/// Index of a label in subdivide(g, n) / fractional_power(g, m, n).
Vertex subdivision_index(const Graph& g, int n, const SubdivisionVertex& label);

/// Delta+2 when Delta >= 2, 4 when Delta = 1. Throws on edgeless graphs.
int clique_number_g33(const Graph& g);

/// Underlying digraph of the vertex subset `subset` of a 3/3-power:
/// terminal vertices of the subset, plus one arc (u,v) for every internal
/// vertex of the subset that is the incidence (u,v), with its endpoints.
Digraph underlying_digraph(const PowerGraph& p, std::span<const Vertex> subset);

/// True when every weak component of `d` is a single vertex or a star with
/// all arcs directed towards its center, and the single-vertex components
/// are pairwise non-adjacent in g.
bool is_in_star_forest(const Graph& g, const Digraph& d);

/// DOT rendering: terminal vertices filled black, internal vertices white.
/// `colors`, when non-empty, labels each vertex with its color.
std::string power_graph_dot(const PowerGraph& p, std::span<const int> colors = {});

std::string to_string(const SubdivisionVertex& v);

}  // namespace vicolor
