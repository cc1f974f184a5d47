#include "vicolor/incidence.hpp"

#include <sstream>
#include <stdexcept>

namespace vicolor {

std::vector<Incidence> incidences(const Graph& g)
{
    std::vector<Incidence> out;
    out.reserve(static_cast<std::size_t>(2 * g.edge_count()));
    for (const auto& e : g.edges()) {
        out.push_back({e.u, e.v});
        out.push_back({e.v, e.u});
    }
    return out;
}

int incidence_index(const Graph& g, const Incidence& i)
{
    const auto idx = g.edge_index(i.vertex, i.other);
    if (!idx)
        throw std::out_of_range("incidence " + to_string(i) + " not in graph");
    return 2 * *idx + (i.vertex < i.other ? 0 : 1);
}

std::vector<Incidence> IncidenceNeighborhoods::all(Vertex v) const
{
    auto out = first.at(static_cast<std::size_t>(v));
    const auto& two = second.at(static_cast<std::size_t>(v));
    out.insert(out.end(), two.begin(), two.end());
    return out;
}

IncidenceNeighborhoods incidence_neighborhoods(const Graph& g)
{
    IncidenceNeighborhoods out;
    out.first.resize(static_cast<std::size_t>(g.vertex_count()));
    out.second.resize(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (Vertex w : g.neighbors(v)) {
            out.first[static_cast<std::size_t>(v)].push_back({v, w});
            out.second[static_cast<std::size_t>(v)].push_back({w, v});
        }
    }
    return out;
}

LabeledGraph<Incidence> incidence_graph(const Graph& g)
{
    if (g.edge_count() == 0)
        throw std::invalid_argument("graph has no edges, hence no incidences");
    auto labels = incidences(g);
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < labels.size(); ++a) {
        for (std::size_t b = a + 1; b < labels.size(); ++b) {
            const auto& p = labels[a];
            const auto& q = labels[b];
            const bool same_vertex = p.vertex == q.vertex;
            const bool same_edge = p.edge() == q.edge();
            const bool joined = q.vertex == p.other || p.vertex == q.other;
            if (same_vertex || same_edge || joined)
                edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
        }
    }
    const auto count = static_cast<int>(labels.size());
    return LabeledGraph<Incidence>(Graph(count, std::move(edges)), std::move(labels));
}

LabeledGraph<LeveledVertex> t_vi1(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<LeveledVertex> labels;
    for (int level = 1; level <= 2; ++level)
        for (Vertex v = 0; v < n; ++v)
            labels.push_back({v, level});
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        const auto dist = bfs_distances(g, v, 2);
        for (Vertex u = 0; u < n; ++u) {
            const int d = dist[static_cast<std::size_t>(u)];
            if (d < 0)
                continue;
            if (u > v && d == 1)
                edges.push_back({v, u});
            if (u > v && d <= 2)
                edges.push_back({n + v, n + u});
            if (d <= 1)
                edges.push_back(make_edge(v, n + u));
        }
    }
    return LabeledGraph<LeveledVertex>(Graph(2 * n, std::move(edges)), std::move(labels));
}

std::string t_vi1_dot(const LabeledGraph<LeveledVertex>& t)
{
    std::ostringstream out;
    out << "graph T {\n  node [shape=circle];\n";
    for (Vertex v = 0; v < t.graph().vertex_count(); ++v) {
        const auto& label = t.label(v);
        out << "  n" << v << " [label=\"";
        if (label.level == 1)
            out << label.vertex;
        out << "\"];\n";
    }
    for (const auto& e : t.graph().edges())
        out << "  n" << e.u << " -- n" << e.v << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_string(const Incidence& i)
{
    return "(" + std::to_string(i.vertex) + "," + std::to_string(i.other) + ")";
}

}  // namespace vicolor
