#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vicolor/coloring.hpp"
#include "vicolor/graph.hpp"
#include "vicolor/solver.hpp"

namespace vicolor {

/// A construction produced an output that its own checker rejects, or an
/// existence step (SDR, permutation) failed. Always a bug, never bad input.
class ConstructionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Partial vi-coloring of a fixed graph. Color 0 marks uncolored elements;
/// conflicts are only looked up among colored ones.
class ColoringBuilder {
public:
    explicit ColoringBuilder(const Graph& g);

    const Graph& graph() const noexcept { return *graph_; }
    const ViColoring& coloring() const noexcept { return coloring_; }
    int color(const Element& e) const { return coloring_.color(e); }
    bool is_colored(const Element& e) const { return color(e) != 0; }
    void set(const Element& e, int color) { coloring_.set(e, color); }

    /// Colors of the colored elements conflicting with e.
    std::set<int> forbidden(const Element& e) const;
    /// Smallest color in 1..limit that is neither forbidden for e nor in
    /// `avoid`; 0 when there is none.
    int first_free(const Element& e, int limit, const std::set<int>& avoid = {}) const;
    /// Colors of the colored incidences of I_2(v).
    std::set<int> second_colors(Vertex v) const;

    /// No two conflicting colored elements share a color.
    bool consistent() const;
    /// The finished coloring; throws IncompleteColoring if anything is uncolored.
    ViColoring finish() const;

private:
    const Graph* graph_;
    ViColoring coloring_;
};

/// Throws ConstructionError unless c is a proper vi-coloring of g with
/// spread at most `max_spread` (when given) and colors in 1..max_colors
/// (when positive). Returns c.
const ViColoring& require_valid(const Graph& g, const ViColoring& c, std::optional<int> max_spread,
                                int max_colors, const std::string& what);

/// One star forest per class. `classes[i]` is the 1-based class of edge i
/// of g; `centers[i]` is the center of the star containing edge i (for a
/// single-edge star, its smaller endpoint).
struct StarDecomposition {
    int count = 0;
    std::vector<int> classes;
    std::vector<Vertex> centers;
};

/// Centers for a partition of E(g) into star forests; throws
/// std::invalid_argument if some class is not a star forest.
StarDecomposition star_decomposition(const Graph& g, const std::vector<int>& classes);

/// Proper total coloring: vertex colors and edge colors (parallel to edges()).
struct TotalColoring {
    std::vector<int> vertex_colors;
    std::vector<int> edge_colors;
};

/// Star classes take colors 1..st, the total coloring is shifted above
/// them. The incidence (u,v) of an edge whose star has center v takes the
/// edge's star class; every other element takes the shifted total color of
/// its vertex or edge. Uses at most st + (colors of `total`) colors.
ViColoring vi_from_total_and_stars(const Graph& g, const TotalColoring& total, const StarDecomposition& stars);

/// Glue two colorings along a cut edge. side1 and side2 cover V(g) and
/// meet exactly in the endpoints of one edge; every edge of g lies inside
/// one side. c1 and c2 color induced_subgraph(g, side_i) (local indices).
/// c1's colors are permuted to agree with c2 on the shared 4-clique; the
/// result uses at most max(k1, k2) colors and keeps the larger spread bound.
ViColoring merge_cut_edge(const Graph& g, std::span<const Vertex> side1, const ViColoring& c1,
                          std::span<const Vertex> side2, const ViColoring& c2);

/// Glue two spread-1 colorings at a cut vertex v (the only common vertex
/// of the sides, with neighbors on both). c2's colors are permuted in
/// three swap steps; result is a (k,1)-coloring with
/// k = max(k1, k2, d_g(v)+2).
ViColoring merge_cut_vertex(const Graph& g, std::span<const Vertex> side1, const ViColoring& c1,
                            std::span<const Vertex> side2, const ViColoring& c2);

/// (k,1)-coloring of g from spread-1 colorings of its blocks, glued along
/// the block tree. Blocks that are edges, cycles or complete graphs use the
/// family constructions, other blocks the exact solver (which may run out
/// of budget: then std::runtime_error). k = max(block values, Delta+2).
ViColoring color_blocks(const Graph& g, long long node_budget = kDefaultNodeBudget);

/// Extends an incidence coloring to V(G) by list coloring with
/// L(u) = [k] minus the colors on I(u). Empty when the lists admit no
/// coloring.
std::optional<ViColoring> extend_incidence_to_vi(const Graph& g, const std::map<Incidence, int>& incidence_colors,
                                                 int k);

struct DegenerateStats {
    int palette = 0;
    /// SDR steps that needed colors outside the spread-preserving sets.
    int widened_sdr = 0;
    /// Vertices whose greedy extension got stuck (only possible when k = Delta).
    int local_repairs = 0;
    /// Whole-graph exact searches run after a failed local repair.
    int exact_fallbacks = 0;
};

/// (Delta+2k, k)-coloring of a graph with degeneracy at most k and Delta >= 2,
/// built vertex by vertex along the degeneracy order: I_1(u) by an SDR,
/// then I_2(u), then u.
ViColoring color_k_degenerate(const Graph& g, int k, DegenerateStats* stats = nullptr);

struct ThreeDegenerateStats {
    /// Extension steps handled by each of the five cases.
    std::array<int, 5> case_counts{};
    /// Steps where the case rules found no extension and an exhaustive
    /// extension of the single vertex was used instead.
    int fallbacks = 0;
    std::vector<std::string> log;
};

/// (Delta+5, 3)-coloring of a 3-degenerate graph with Delta >= 5, by the
/// five-case extension. Throws std::invalid_argument on other inputs.
ViColoring color_3_degenerate(const Graph& g, ThreeDegenerateStats* stats = nullptr);

/// Spread-1 (Delta+2)-coloring of a forest, rooted at maximum-degree
/// vertices (4 colors when Delta = 1, 1 color when edgeless).
ViColoring color_tree(const Graph& f);

/// (5,1)-, (4,1)- or (6,1)-coloring of cycle_graph(n), n >= 3.
ViColoring color_cycle(int n);

/// (n+2)-coloring of complete_graph(n), n >= 2.
ViColoring color_complete(int n);
/// (2n,1)-coloring of complete_graph(n), n >= 2.
ViColoring color_complete_vi1(int n);

/// (n+3)-coloring from a perfect matching; any regular bipartite graph
/// with equal sides.
ViColoring color_regular_bipartite_matching(const Graph& g, const Bipartition& parts);
/// 2k-coloring from a 4-dynamic coloring; k-regular bipartite, k >= 4.
ViColoring color_regular_bipartite_dynamic(const Graph& g, const Bipartition& parts);
/// The smaller of the two (matching route on ties).
ViColoring color_regular_bipartite(const Graph& g, const Bipartition& parts);

/// Coloring of complete_bipartite_graph(n, m) for n >= m >= 1:
/// n+2 colors when m <= 2 (4 for K_{1,1}), n+3 otherwise.
ViColoring color_complete_bipartite(int n, int m);
/// (n+m,1)-coloring of complete_bipartite_graph(n, m), n, m >= 2.
ViColoring color_complete_bipartite_vi1(int n, int m);

}  // namespace vicolor
