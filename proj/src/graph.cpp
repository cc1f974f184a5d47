#include "vicolor/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace vicolor {

Graph::Graph(int vertex_count) : Graph(vertex_count, {}) {}

Graph::Graph(int vertex_count, std::vector<Edge> edges)
{
    if (vertex_count < 0)
        throw std::invalid_argument("negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(vertex_count));
    for (auto& e : edges) {
        if (e.u == e.v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        e = make_edge(e.u, e.v);
        if (e.u < 0 || e.v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw std::invalid_argument("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
    edges_ = std::move(edges);
    for (const auto& e : edges_) {
        adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
        max_degree_ = std::max(max_degree_, static_cast<int>(list.size()));
    }
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= vertex_count())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

std::span<const Vertex> Graph::neighbors(Vertex v) const
{
    check_vertex(v);
    return adjacency_[static_cast<std::size_t>(v)];
}

int Graph::degree(Vertex v) const
{
    check_vertex(v);
    return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
}

bool Graph::has_edge(Vertex a, Vertex b) const
{
    if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
        return false;
    const auto& list = adjacency_[static_cast<std::size_t>(a)];
    return std::binary_search(list.begin(), list.end(), b);
}

std::optional<int> Graph::edge_index(Vertex a, Vertex b) const
{
    const Edge e = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
        return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

void Digraph::add_arc(Vertex tail, Vertex head)
{
    if (tail == head)
        throw std::invalid_argument("digraph arcs must join distinct vertices");
    vertices_.insert(tail);
    vertices_.insert(head);
    arcs_.emplace(tail, head);
}

int Digraph::in_degree(Vertex v) const
{
    return static_cast<int>(std::count_if(arcs_.begin(), arcs_.end(), [v](const auto& a) { return a.second == v; }));
}

int Digraph::out_degree(Vertex v) const
{
    return static_cast<int>(std::count_if(arcs_.begin(), arcs_.end(), [v](const auto& a) { return a.first == v; }));
}

std::vector<std::vector<Vertex>> Digraph::weak_components() const
{
    std::map<Vertex, Vertex> parent;
    for (Vertex v : vertices_)
        parent[v] = v;
    auto find = [&parent](Vertex v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& [t, h] : arcs_) {
        Vertex a = find(t);
        Vertex b = find(h);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<Vertex, std::vector<Vertex>> groups;
    for (Vertex v : vertices_)
        groups[find(v)].push_back(v);
    std::vector<std::vector<Vertex>> out;
    for (auto& [root, members] : groups)
        out.push_back(std::move(members));
    return out;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image))
{
    std::vector<bool> seen(image_.size(), false);
    for (int x : image_) {
        if (x < 0 || x >= size() || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("permutation image is not a bijection");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

bool Permutation::is_derangement() const
{
    for (int i = 0; i < size(); ++i)
        if (image_[static_cast<std::size_t>(i)] == i)
            return false;
    return true;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source, int limit)
{
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        const int d = dist[static_cast<std::size_t>(v)];
        if (limit >= 0 && d >= limit)
            continue;
        for (Vertex w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = d + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<int> connected_components(const Graph& g)
{
    std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
    int next = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0)
            continue;
        const auto dist = bfs_distances(g, s);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (dist[static_cast<std::size_t>(v)] >= 0)
                comp[static_cast<std::size_t>(v)] = next;
        ++next;
    }
    return comp;
}

bool is_connected(const Graph& g)
{
    if (g.vertex_count() == 0)
        return true;
    const auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_forest(const Graph& g)
{
    const auto comp = connected_components(g);
    const int components = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    return g.edge_count() == g.vertex_count() - components;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (local[static_cast<std::size_t>(vertices[i])] >= 0)
            throw std::invalid_argument("induced_subgraph: repeated vertex");
        local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        const int a = local[static_cast<std::size_t>(e.u)];
        const int b = local[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0)
            edges.push_back(make_edge(a, b));
    }
    return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

std::optional<Bipartition> find_bipartition(const Graph& g)
{
    std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0)
            continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(v)) {
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw < 0) {
                    sw = 1 - side[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                } else if (sw == side[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        (side[static_cast<std::size_t>(v)] == 0 ? parts.left : parts.right).push_back(v);
    return parts;
}

bool is_valid_bipartition(const Graph& g, const Bipartition& parts)
{
    std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
    auto mark = [&](const std::vector<Vertex>& part, int s) {
        for (Vertex v : part) {
            if (v < 0 || v >= g.vertex_count() || side[static_cast<std::size_t>(v)] >= 0)
                return false;
            side[static_cast<std::size_t>(v)] = s;
        }
        return true;
    };
    if (!mark(parts.left, 0) || !mark(parts.right, 1))
        return false;
    if (std::any_of(side.begin(), side.end(), [](int s) { return s < 0; }))
        return false;
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)];
    });
}

bool is_regular(const Graph& g)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != g.max_degree())
            return false;
    return true;
}

Graph path_graph(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, std::move(edges));
}

Graph complete_graph(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int n, int m)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            edges.push_back({i, n + j});
    return Graph(n + m, std::move(edges));
}

Graph star_graph(int leaves)
{
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i)
        edges.push_back({0, i});
    return Graph(leaves + 1, std::move(edges));
}

Graph petersen_graph()
{
    // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back(make_edge(i, (i + 1) % 5));
        edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
        edges.push_back(make_edge(i, i + 5));
    }
    return Graph(10, std::move(edges));
}

}  // namespace vicolor
