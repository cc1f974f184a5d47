#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <span>
#include <string>
#include <vector>

#include "vicolor/graph.hpp"
#include "vicolor/incidence.hpp"

namespace vicolor {

/// A vertex (other == -1) or the incidence (vertex, other).
struct Element {
    Vertex vertex = 0;
    Vertex other = -1;

    static Element of(Vertex v) { return {v, -1}; }
    static Element of(const Incidence& i) { return {i.vertex, i.other}; }
    bool is_vertex() const noexcept { return other < 0; }
    Incidence incidence() const { return {vertex, other}; }

    auto operator<=>(const Element&) const = default;
};

std::string to_string(const Element& e);

/// Colors on V(G) u I(G). Color 0 means "not colored yet".
struct ViColoring {
    std::vector<int> vertex_colors;
    std::map<Incidence, int> incidence_colors;

    ViColoring() = default;
    explicit ViColoring(const Graph& g);

    int color(const Element& e) const;
    int vertex_color(Vertex v) const { return vertex_colors.at(static_cast<std::size_t>(v)); }
    int incidence_color(Vertex v, Vertex w) const;
    void set(const Element& e, int color);
    void set_vertex(Vertex v, int color) { vertex_colors.at(static_cast<std::size_t>(v)) = color; }
    void set_incidence(Vertex v, Vertex w, int color);

    /// Largest color used (the k of a k-coloring).
    int max_color() const;
    int distinct_colors() const;
    /// Elements still carrying color 0 (vertices first, then incidences).
    std::vector<Element> uncolored() const;

    bool operator==(const ViColoring&) const = default;
};

/// Every element of g: vertices 0..n-1, then incidences() order.
std::vector<Element> elements(const Graph& g);

enum class ViolationKind {
    AdjacentVertices,
    VertexIncidence,
    IncidenceSameVertex, ///< (v,e), (v,f)
    IncidenceSameEdge,   ///< (v,e), (w,e)
    IncidenceConsecutive, ///< (v,{v,w}), (w,f)
    SpreadExceeded,
};

std::string to_string(ViolationKind k);

/// Why two elements conflict under the vi-simultaneous rules, if they do.
/// Evaluated pairwise from the graph alone.
std::optional<ViolationKind> conflict_kind(const Graph& g, const Element& a, const Element& b);

/// All elements conflicting with `e`, sorted, without duplicates.
std::vector<Element> conflicting_elements(const Graph& g, const Element& e);

/// Either a pair of conflicting elements with the same color, or a vertex
/// (first) whose I_2 carries `spread` colors.
struct Violation {
    ViolationKind kind;
    Element first;
    Element second;
    int spread = 0;

    bool operator==(const Violation&) const = default;
};

/// Thrown for colorings that leave elements uncolored or mention elements
/// outside the graph.
class IncompleteColoring : public std::invalid_argument {
public:
    IncompleteColoring(const std::string& what, std::vector<Element> missing)
        : std::invalid_argument(what), missing_(std::move(missing))
    {
    }
    const std::vector<Element>& missing() const noexcept { return missing_; }

private:
    std::vector<Element> missing_;
};

/// Conflicting same-colored pairs found through the 3/3-power: an edge of
/// G^(3/3) whose ends share a color. Pairs are ordered (smaller element first).
std::vector<std::pair<Element, Element>> conflicts_via_power(const Graph& g, const ViColoring& c);

/// Conflicting same-colored pairs found by the adjacency rules applied to
/// every pair of elements, classified by kind.
std::vector<Violation> conflicts_direct(const Graph& g, const ViColoring& c);

/// Runs both routes; throws std::logic_error if they disagree. Spread
/// violations are added when `max_spread` is given. Throws
/// IncompleteColoring for partial colorings.
std::vector<Violation> check_vi_coloring(const Graph& g, const ViColoring& c,
                                         std::optional<int> max_spread = std::nullopt);

bool is_valid_vi_coloring(const Graph& g, const ViColoring& c, std::optional<int> max_spread = std::nullopt);

/// |c(I_2(v))|
int spread(const Graph& g, const ViColoring& c, Vertex v);
int max_spread(const Graph& g, const ViColoring& c);

/// Restriction of a coloring of a supergraph: sub vertex i is super vertex
/// embedding[i]. Throws if an edge of sub is missing in the supergraph.
ViColoring restrict_coloring(const Graph& super, const ViColoring& c, const Graph& sub,
                             std::span<const Vertex> embedding);

/// Colors are renumbered 1..d in order of first appearance (vertices
/// first, then incidences).
ViColoring compact_colors(const Graph& g, const ViColoring& c);

}  // namespace vicolor
