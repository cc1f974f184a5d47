#include "vicolor/power.hpp"

#include <sstream>
#include <stdexcept>

namespace vicolor {

SubdivisionVertex SubdivisionVertex::on_edge(Vertex a, Vertex b, int l, int n)
{
    if (a == b)
        throw std::invalid_argument("internal vertex needs two distinct endpoints");
    if (l < 1 || l > n - 1)
        throw std::invalid_argument("internal vertex position out of range");
    if (a < b)
        return {true, a, b, l};
    return {true, b, a, n - l};
}

PowerGraph subdivide(const Graph& g, int n)
{
    if (n < 1)
        throw std::invalid_argument("subdivision order must be positive");
    std::vector<SubdivisionVertex> labels;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        labels.push_back(SubdivisionVertex::terminal(v));
    if (n == 1)
        return {LabeledGraph<SubdivisionVertex>(g, std::move(labels)), g, 1, 1};

    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        Vertex prev = e.u;
        for (int l = 1; l < n; ++l) {
            const auto id = static_cast<Vertex>(labels.size());
            labels.push_back({true, e.u, e.v, l});
            edges.push_back(make_edge(prev, id));
            prev = id;
        }
        edges.push_back(make_edge(prev, e.v));
    }
    const auto count = static_cast<int>(labels.size());
    return {LabeledGraph<SubdivisionVertex>(Graph(count, std::move(edges)), std::move(labels)), g, 1, n};
}

Graph graph_power(const Graph& g, int m)
{
    if (m < 1)
        throw std::invalid_argument("power exponent must be positive");
    if (m == 1)
        return g;
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto dist = bfs_distances(g, v, m);
        for (Vertex w = v + 1; w < g.vertex_count(); ++w)
            if (dist[static_cast<std::size_t>(w)] >= 1)
                edges.push_back({v, w});
    }
    return Graph(g.vertex_count(), std::move(edges));
}

PowerGraph fractional_power(const Graph& g, int m, int n)
{
    PowerGraph p = subdivide(g, n);
    if (m < 1)
        throw std::invalid_argument("power exponent must be positive");
    Graph powered = graph_power(p.graph(), m);
    std::vector<SubdivisionVertex> labels = p.labeled.labels();
    return {LabeledGraph<SubdivisionVertex>(std::move(powered), std::move(labels)), g, m, n};
}

Vertex subdivision_index(const Graph& g, int n, const SubdivisionVertex& label)
{
    if (!label.internal) {
        if (label.x < 0 || label.x >= g.vertex_count())
            throw std::out_of_range("terminal vertex out of range");
        return label.x;
    }
    const auto idx = g.edge_index(label.x, label.y);
    if (!idx || label.position < 1 || label.position >= n)
        throw std::out_of_range("internal vertex not in subdivision");
    return g.vertex_count() + *idx * (n - 1) + (label.position - 1);
}

int clique_number_g33(const Graph& g)
{
    if (g.edge_count() == 0)
        throw std::invalid_argument("graph has no edges, hence no incidences");
    return g.max_degree() >= 2 ? g.max_degree() + 2 : 4;
}

Digraph underlying_digraph(const PowerGraph& p, std::span<const Vertex> subset)
{
    if (p.n != 3)
        throw std::invalid_argument("underlying digraph needs a 3-subdivision");
    Digraph d;
    for (Vertex id : subset) {
        const auto& label = p.labeled.label(id);
        if (!label.internal) {
            d.add_vertex(label.x);
        } else if (label.position == 1) {
            d.add_arc(label.x, label.y);
        } else {
            d.add_arc(label.y, label.x);
        }
    }
    return d;
}

bool is_in_star_forest(const Graph& g, const Digraph& d)
{
    std::vector<Vertex> trivial;
    for (const auto& component : d.weak_components()) {
        if (component.size() == 1) {
            trivial.push_back(component.front());
            continue;
        }
        int centers = 0;
        for (Vertex v : component) {
            const int in = d.in_degree(v);
            const int out = d.out_degree(v);
            if (out == 0 && in == static_cast<int>(component.size()) - 1)
                ++centers;
            else if (!(out == 1 && in == 0))
                return false;
        }
        if (centers != 1)
            return false;
    }
    for (std::size_t i = 0; i < trivial.size(); ++i)
        for (std::size_t j = i + 1; j < trivial.size(); ++j)
            if (g.has_edge(trivial[i], trivial[j]))
                return false;
    return true;
}

std::string to_string(const SubdivisionVertex& v)
{
    if (!v.internal)
        return std::to_string(v.x);
    return "(" + std::to_string(v.x) + std::to_string(v.y) + ")_" + std::to_string(v.position);
}

std::string power_graph_dot(const PowerGraph& p, std::span<const int> colors)
{
    if (!colors.empty() && static_cast<int>(colors.size()) != p.graph().vertex_count())
        throw std::invalid_argument("color vector size does not match power graph");
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle, style=filled];\n";
    for (Vertex v = 0; v < p.graph().vertex_count(); ++v) {
        const auto& label = p.labeled.label(v);
        out << "  n" << v << " [";
        if (label.internal)
            out << "fillcolor=white, fontcolor=black";
        else
            out << "fillcolor=black, fontcolor=white";
        out << ", tooltip=\"" << to_string(label) << "\", label=\"";
        if (!colors.empty())
            out << colors[static_cast<std::size_t>(v)];
        out << "\"];\n";
    }
    for (const auto& e : p.graph().edges())
        out << "  n" << e.u << " -- n" << e.v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace vicolor
