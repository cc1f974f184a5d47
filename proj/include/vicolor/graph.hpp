#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace vicolor {

using Vertex = int;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on the dense vertex set 0..n-1.
///
/// Immutable after construction. Neighbor lists and the edge list are kept
/// sorted so that iteration order (and everything derived from it) is
/// deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    /// Throws std::invalid_argument on self-loops, duplicate edges or
    /// out-of-range endpoints.
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const;
    int max_degree() const noexcept { return max_degree_; }
    bool has_edge(Vertex a, Vertex b) const;
    /// Position of {a,b} in edges(), if present.
    std::optional<int> edge_index(Vertex a, Vertex b) const;

    bool operator==(const Graph& other) const { return edges_ == other.edges_ && vertex_count() == other.vertex_count(); }

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
    int max_degree_ = 0;
};

/// A graph whose vertices carry labels of type Label (e.g. subdivision
/// vertices or incidences). labels[i] names vertex i of `graph`.
template <typename Label>
class LabeledGraph {
public:
    LabeledGraph() = default;
    LabeledGraph(Graph graph, std::vector<Label> labels)
        : graph_(std::move(graph)), labels_(std::move(labels))
    {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            index_.emplace(labels_[i], static_cast<Vertex>(i));
    }

    const Graph& graph() const noexcept { return graph_; }
    const std::vector<Label>& labels() const noexcept { return labels_; }
    const Label& label(Vertex v) const { return labels_.at(static_cast<std::size_t>(v)); }

    std::optional<Vertex> index_of(const Label& label) const
    {
        auto it = index_.find(label);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

private:
    Graph graph_;
    std::vector<Label> labels_;
    std::map<Label, Vertex> index_;
};

/// Directed graph without loops. Vertices are arbitrary identifiers.
class Digraph {
public:
    void add_vertex(Vertex v) { vertices_.insert(v); }
    /// Throws std::invalid_argument if tail == head.
    void add_arc(Vertex tail, Vertex head);

    const std::set<Vertex>& vertices() const noexcept { return vertices_; }
    const std::set<std::pair<Vertex, Vertex>>& arcs() const noexcept { return arcs_; }
    int in_degree(Vertex v) const;
    int out_degree(Vertex v) const;
    /// Weakly connected components, each as a sorted vertex list.
    std::vector<std::vector<Vertex>> weak_components() const;

private:
    std::set<Vertex> vertices_;
    std::set<std::pair<Vertex, Vertex>> arcs_;
};

/// Bijection on {0..n-1}.
class Permutation {
public:
    /// Throws std::invalid_argument if `image` is not a bijection.
    explicit Permutation(std::vector<int> image);

    int size() const noexcept { return static_cast<int>(image_.size()); }
    int operator()(int x) const { return image_.at(static_cast<std::size_t>(x)); }
    const std::vector<int>& image() const noexcept { return image_; }
    bool is_derangement() const;

private:
    std::vector<int> image_;
};

/// Two-sided vertex partition of a bipartite graph.
struct Bipartition {
    std::vector<Vertex> left;
    std::vector<Vertex> right;
};

/// Breadth-first distances from `source`; -1 marks vertices farther than
/// `limit` (when limit >= 0) or unreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source, int limit = -1);

/// Component id per vertex, ids assigned in order of smallest member.
std::vector<int> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);

/// Induced subgraph on `vertices`; new vertex i corresponds to vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// A proper 2-coloring, if one exists. Left side holds the vertices with
/// the same color as the smallest vertex of each component.
std::optional<Bipartition> find_bipartition(const Graph& g);
/// True when every edge crosses the partition and the sides cover V exactly once.
bool is_valid_bipartition(const Graph& g, const Bipartition& parts);

bool is_regular(const Graph& g);

// Standard families. Vertex numbering follows the order in the name:
// the cycle is 0-1-...-(n-1)-0, K_{n,m} has sides 0..n-1 and n..n+m-1.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int n, int m);
Graph star_graph(int leaves);
Graph petersen_graph();

}  // namespace vicolor
