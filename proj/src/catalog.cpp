#include "vicolor/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace vicolor {

namespace {

using Code = std::uint32_t;

// bit order: pairs (i,j), i<j, row by row; the first pair is the most significant bit
std::vector<std::pair<int, int>> pair_order(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    return pairs;
}

Code encode(const std::vector<std::vector<bool>>& adj, const std::vector<int>& perm,
            const std::vector<std::pair<int, int>>& pairs)
{
    Code code = 0;
    for (const auto& [i, j] : pairs) {
        code <<= 1;
        if (adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])][static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])])
            code |= 1;
    }
    return code;
}

Graph decode(int n, Code code, const std::vector<std::pair<int, int>>& pairs)
{
    std::vector<Edge> edges;
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        const auto bit = static_cast<int>(pairs.size() - 1 - idx);
        if ((code >> bit) & 1)
            edges.push_back({pairs[idx].first, pairs[idx].second});
    }
    return Graph(n, std::move(edges));
}

Code canonical_code(int n, const std::vector<std::vector<bool>>& adj, const std::vector<std::pair<int, int>>& pairs)
{
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Code best = ~Code{0};
    do {
        best = std::min(best, encode(adj, perm, pairs));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<std::vector<bool>> adjacency_matrix(const Graph& g)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& e : g.edges())
        adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] =
            adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
    return adj;
}

}  // namespace

Graph canonical_form(const Graph& g)
{
    const int n = g.vertex_count();
    if (n > 8)
        throw std::invalid_argument("canonical_form supports at most 8 vertices");
    const auto pairs = pair_order(n);
    return decode(n, canonical_code(n, adjacency_matrix(g), pairs), pairs);
}

std::vector<Graph> all_graphs(int n, bool connected_only)
{
    if (n < 0 || n > 6)
        throw std::invalid_argument("all_graphs supports 0..6 vertices");
    const auto pairs = pair_order(n);
    const Code limit = Code{1} << pairs.size();
    std::set<Code> seen;
    for (Code code = 0; code < limit; ++code) {
        const Graph g = decode(n, code, pairs);
        if (connected_only && !is_connected(g))
            continue;
        seen.insert(canonical_code(n, adjacency_matrix(g), pairs));
    }
    std::vector<Graph> out;
    for (Code c : seen)
        out.push_back(decode(n, c, pairs));
    std::stable_sort(out.begin(), out.end(),
                     [](const Graph& a, const Graph& b) { return a.edge_count() < b.edge_count(); });
    return out;
}

Graph random_tree(int n, std::mt19937_64& rng)
{
    if (n < 1)
        throw std::invalid_argument("tree needs at least one vertex");
    if (n == 1)
        return Graph(1);
    if (n == 2)
        return Graph(2, {{0, 1}});
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (auto& c : code)
        c = pick(rng);
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int c : code)
        ++degree[static_cast<std::size_t>(c)];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1)
            leaves.insert(v);
    std::vector<Edge> edges;
    for (int c : code) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back(make_edge(leaf, c));
        if (--degree[static_cast<std::size_t>(c)] == 1)
            leaves.insert(c);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    edges.push_back(make_edge(a, b));
    return Graph(n, std::move(edges));
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng)
{
    const Graph tree = random_tree(n, rng);
    std::vector<Edge> edges = tree.edges();
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!tree.has_edge(i, j) && coin(rng))
                edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

Graph random_degenerate_graph(int n, int k, std::mt19937_64& rng)
{
    if (k < 1)
        throw std::invalid_argument("degeneracy bound must be positive");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        std::vector<int> earlier(static_cast<std::size_t>(v));
        std::iota(earlier.begin(), earlier.end(), 0);
        std::shuffle(earlier.begin(), earlier.end(), rng);
        std::uniform_int_distribution<int> count(1, std::min(k, v));
        const int c = count(rng);
        for (int i = 0; i < c; ++i)
            edges.push_back(make_edge(earlier[static_cast<std::size_t>(i)], v));
    }
    return Graph(n, std::move(edges));
}

}  // namespace vicolor
