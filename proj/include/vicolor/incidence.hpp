#pragma once

#include <string>
#include <vector>

#include "vicolor/graph.hpp"

namespace vicolor {

/// The incidence (v, {v,w}), written (v,w).
struct Incidence {
    Vertex vertex = 0;
    Vertex other = 0;

    Edge edge() const { return make_edge(vertex, other); }
    auto operator<=>(const Incidence&) const = default;
};

/// All incidences of g: for each edge {x,y} in edges() order, (x,y) then (y,x).
/// Incidence number 2i is (edges[i].u, edges[i].v), 2i+1 the reverse.
std::vector<Incidence> incidences(const Graph& g);
int incidence_index(const Graph& g, const Incidence& i);

/// I_1(v) = {(v,w)} and I_2(v) = {(w,v)} over neighbors w, in neighbor order.
struct IncidenceNeighborhoods {
    std::vector<std::vector<Incidence>> first;
    std::vector<std::vector<Incidence>> second;

    /// I(v) = I_1(v) u I_2(v)
    std::vector<Incidence> all(Vertex v) const;
};

IncidenceNeighborhoods incidence_neighborhoods(const Graph& g);

/// Conflict graph of the incidences: (v,e) ~ (w,f) iff v = w, e = f, or
/// {v,w} is e or f. Vertex order as in incidences(). Throws on edgeless g.
LabeledGraph<Incidence> incidence_graph(const Graph& g);

/// Vertex (v, level) of T_vi,1(G), level 1 or 2.
struct LeveledVertex {
    Vertex vertex = 0;
    int level = 1;

    auto operator<=>(const LeveledVertex&) const = default;
};

/// T_vi,1(G) on V x {1,2}: (v,1) has index v and (v,2) index n+v.
/// (v,1)~(u,1) iff d=1; (v,2)~(u,2) iff 1<=d<=2; (v,1)~(u,2) iff d<=1.
LabeledGraph<LeveledVertex> t_vi1(const Graph& g);

/// DOT rendering of T_vi,1(G): level-1 vertices carry their vertex id,
/// level-2 vertices are drawn unlabeled.
std::string t_vi1_dot(const LabeledGraph<LeveledVertex>& t);

std::string to_string(const Incidence& i);

}  // namespace vicolor
