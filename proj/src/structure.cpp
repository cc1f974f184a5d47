#include "vicolor/structure.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace vicolor {

BlockDecomposition blocks(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edge_stack;
    std::set<Vertex> cuts;
    BlockDecomposition out;
    int time = 0;

    auto emit_block = [&](const Edge& until) {
        std::vector<Edge> edges;
        std::set<Vertex> verts;
        while (true) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            edges.push_back(make_edge(e.u, e.v));
            verts.insert(e.u);
            verts.insert(e.v);
            if (e.u == until.u && e.v == until.v)
                break;
        }
        std::sort(edges.begin(), edges.end());
        out.blocks.emplace_back(verts.begin(), verts.end());
        out.block_edges.push_back(std::move(edges));
    };

    // Iterative Hopcroft-Tarjan; frames hold (vertex, parent, next neighbor index).
    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
        int children;
    };
    for (Vertex root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] >= 0)
            continue;
        if (g.degree(root) == 0) {
            disc[static_cast<std::size_t>(root)] = time++;
            out.blocks.push_back({root});
            out.block_edges.emplace_back();
            continue;
        }
        std::vector<Frame> stack{{root, -1, 0, 0}};
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = time++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                Vertex w = nbrs[f.next++];
                if (disc[static_cast<std::size_t>(w)] < 0) {
                    edge_stack.push_back({f.v, w});
                    f.children++;
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = time++;
                    stack.push_back({w, f.v, 0, 0});
                } else if (w != f.parent && disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)]) {
                    edge_stack.push_back({f.v, w});
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (stack.empty())
                break;
            Frame& parent = stack.back();
            auto& lp = low[static_cast<std::size_t>(parent.v)];
            lp = std::min(lp, low[static_cast<std::size_t>(done.v)]);
            if (low[static_cast<std::size_t>(done.v)] >= disc[static_cast<std::size_t>(parent.v)]) {
                if (parent.parent >= 0 || parent.children > 1)
                    cuts.insert(parent.v);
                emit_block({parent.v, done.v});
            }
        }
    }
    out.cut_vertices.assign(cuts.begin(), cuts.end());
    return out;
}

DegeneracyOrdering degeneracy_ordering(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        degree[static_cast<std::size_t>(v)] = g.degree(v);
        queue.emplace(g.degree(v), v);
    }
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    DegeneracyOrdering out;
    std::vector<Vertex> removal;
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        out.degeneracy = std::max(out.degeneracy, d);
        removed[static_cast<std::size_t>(v)] = true;
        removal.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (removed[static_cast<std::size_t>(w)])
                continue;
            auto& dw = degree[static_cast<std::size_t>(w)];
            queue.erase({dw, w});
            --dw;
            queue.emplace(dw, w);
        }
    }
    out.order.assign(removal.rbegin(), removal.rend());
    return out;
}

std::vector<int> max_bipartite_matching(int left_count, int right_count,
                                        const std::vector<std::vector<int>>& adjacency)
{
    std::vector<int> match_left(static_cast<std::size_t>(left_count), -1);
    std::vector<int> match_right(static_cast<std::size_t>(right_count), -1);
    std::vector<int> visited(static_cast<std::size_t>(right_count), -1);

    std::function<bool(int, int)> augment = [&](int left, int stamp) {
        for (int r : adjacency[static_cast<std::size_t>(left)]) {
            if (visited[static_cast<std::size_t>(r)] == stamp)
                continue;
            visited[static_cast<std::size_t>(r)] = stamp;
            const int other = match_right[static_cast<std::size_t>(r)];
            if (other < 0 || augment(other, stamp)) {
                match_left[static_cast<std::size_t>(left)] = r;
                match_right[static_cast<std::size_t>(r)] = left;
                return true;
            }
        }
        return false;
    };
    for (int l = 0; l < left_count; ++l)
        augment(l, l);
    return match_left;
}

std::vector<Edge> perfect_matching_regular_bipartite(const Graph& g, const Bipartition& parts)
{
    if (!is_valid_bipartition(g, parts))
        throw std::invalid_argument("perfect_matching_regular_bipartite: not a bipartition of the graph");
    if (!is_regular(g) || g.max_degree() < 1)
        throw std::invalid_argument("perfect_matching_regular_bipartite: graph is not k-regular with k >= 1");
    if (parts.left.size() != parts.right.size())
        throw std::invalid_argument("perfect_matching_regular_bipartite: parts differ in size");

    std::vector<int> right_index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < parts.right.size(); ++i)
        right_index[static_cast<std::size_t>(parts.right[i])] = static_cast<int>(i);
    std::vector<std::vector<int>> adjacency;
    for (Vertex v : parts.left) {
        std::vector<int> row;
        for (Vertex w : g.neighbors(v))
            row.push_back(right_index[static_cast<std::size_t>(w)]);
        adjacency.push_back(std::move(row));
    }
    const auto match = max_bipartite_matching(static_cast<int>(parts.left.size()),
                                              static_cast<int>(parts.right.size()), adjacency);
    std::vector<Edge> out;
    for (std::size_t i = 0; i < parts.left.size(); ++i) {
        if (match[i] < 0)
            throw std::logic_error("regular bipartite graph without perfect matching");
        out.push_back(make_edge(parts.left[i], parts.right[static_cast<std::size_t>(match[i])]));
    }
    // every vertex covered exactly once
    std::vector<int> cover(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& e : out) {
        if (!g.has_edge(e.u, e.v))
            throw std::logic_error("matching edge not in graph");
        ++cover[static_cast<std::size_t>(e.u)];
        ++cover[static_cast<std::size_t>(e.v)];
    }
    if (std::any_of(cover.begin(), cover.end(), [](int c) { return c != 1; }))
        throw std::logic_error("matching does not cover every vertex exactly once");
    return out;
}

Permutation derangement(int n)
{
    if (n < 2)
        throw std::invalid_argument("no derangement of fewer than 2 elements");
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        image[static_cast<std::size_t>(i)] = (i + 1) % n;
    return Permutation(std::move(image));
}

namespace {

// Colors `side` with {low, low+1} so that each vertex of the other side with
// degree >= 2 sees both colors. Backtracking in vertex order.
bool two_color_side(const Graph& g, const std::vector<Vertex>& side, int low, std::vector<int>& colors)
{
    std::vector<Vertex> watchers;
    for (Vertex v : side)
        for (Vertex w : g.neighbors(v))
            if (g.degree(w) >= 2)
                watchers.push_back(w);
    std::sort(watchers.begin(), watchers.end());
    watchers.erase(std::unique(watchers.begin(), watchers.end()), watchers.end());

    // a watcher fails once all its neighbors are colored with one color
    auto watcher_ok = [&](Vertex w) {
        int seen = 0;
        bool pending = false;
        for (Vertex x : g.neighbors(w)) {
            const int c = colors[static_cast<std::size_t>(x)];
            if (c == 0)
                pending = true;
            else
                seen |= 1 << (c - low);
        }
        return pending || seen == 3;
    };

    std::function<bool(std::size_t)> search = [&](std::size_t idx) {
        if (idx == side.size())
            return true;
        const Vertex v = side[idx];
        for (int c = low; c <= low + 1; ++c) {
            colors[static_cast<std::size_t>(v)] = c;
            bool ok = true;
            for (Vertex w : g.neighbors(v))
                if (g.degree(w) >= 2 && !watcher_ok(w)) {
                    ok = false;
                    break;
                }
            if (ok && search(idx + 1))
                return true;
        }
        colors[static_cast<std::size_t>(v)] = 0;
        return false;
    };
    return search(0);
}

}  // namespace

std::vector<int> four_dynamic_coloring_bipartite(const Graph& g, const Bipartition& parts)
{
    if (!is_valid_bipartition(g, parts))
        throw std::invalid_argument("four_dynamic_coloring_bipartite: not a bipartition of the graph");
    if (!is_regular(g) || g.max_degree() < 4)
        throw std::invalid_argument("four_dynamic_coloring_bipartite: graph must be k-regular with k >= 4");
    std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()), 0);
    if (!two_color_side(g, parts.left, 1, colors) || !two_color_side(g, parts.right, 3, colors))
        throw std::logic_error("four_dynamic_coloring_bipartite: search failed on a k-regular bipartite graph");
    if (!is_four_dynamic_coloring(g, parts, colors))
        throw std::logic_error("four_dynamic_coloring_bipartite: produced an invalid coloring");
    return colors;
}

bool is_four_dynamic_coloring(const Graph& g, const Bipartition& parts, const std::vector<int>& colors)
{
    if (static_cast<int>(colors.size()) != g.vertex_count())
        return false;
    for (Vertex v : parts.left)
        if (colors[static_cast<std::size_t>(v)] != 1 && colors[static_cast<std::size_t>(v)] != 2)
            return false;
    for (Vertex v : parts.right)
        if (colors[static_cast<std::size_t>(v)] != 3 && colors[static_cast<std::size_t>(v)] != 4)
            return false;
    for (const auto& e : g.edges())
        if (colors[static_cast<std::size_t>(e.u)] == colors[static_cast<std::size_t>(e.v)])
            return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 2)
            continue;
        std::set<int> seen;
        for (Vertex w : g.neighbors(v))
            seen.insert(colors[static_cast<std::size_t>(w)]);
        if (seen.size() < 2)
            return false;
    }
    return true;
}

}  // namespace vicolor
