#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

#include "vicolor/constructive.hpp"
#include "vicolor/structure.hpp"

namespace vicolor {

ColoringBuilder::ColoringBuilder(const Graph& g) : graph_(&g), coloring_(g) {}

std::set<int> ColoringBuilder::forbidden(const Element& e) const
{
    std::set<int> out;
    for (const auto& x : conflicting_elements(*graph_, e))
        if (const int c = color(x))
            out.insert(c);
    return out;
}

int ColoringBuilder::first_free(const Element& e, int limit, const std::set<int>& avoid) const
{
    const auto used = forbidden(e);
    for (int c = 1; c <= limit; ++c)
        if (!used.contains(c) && !avoid.contains(c))
            return c;
    return 0;
}

std::set<int> ColoringBuilder::second_colors(Vertex v) const
{
    std::set<int> out;
    for (Vertex w : graph_->neighbors(v))
        if (const int c = coloring_.incidence_color(w, v))
            out.insert(c);
    return out;
}

bool ColoringBuilder::consistent() const
{
    for (const auto& e : elements(*graph_)) {
        const int c = color(e);
        if (c == 0)
            continue;
        for (const auto& x : conflicting_elements(*graph_, e))
            if (color(x) == c)
                return false;
    }
    return true;
}

ViColoring ColoringBuilder::finish() const
{
    const auto missing = coloring_.uncolored();
    if (!missing.empty())
        throw IncompleteColoring("construction left " + std::to_string(missing.size()) + " elements uncolored",
                                 missing);
    return coloring_;
}

const ViColoring& require_valid(const Graph& g, const ViColoring& c, std::optional<int> max_spread_bound,
                                int max_colors, const std::string& what)
{
    const auto violations = check_vi_coloring(g, c, max_spread_bound);
    if (!violations.empty()) {
        const auto& v = violations.front();
        throw ConstructionError(what + ": " + std::to_string(violations.size()) + " violations, first " +
                                to_string(v.kind) + " at " + to_string(v.first) + " / " + to_string(v.second));
    }
    if (max_colors > 0 && c.max_color() > max_colors)
        throw ConstructionError(what + ": uses color " + std::to_string(c.max_color()) + " above the bound " +
                                std::to_string(max_colors));
    return c;
}

// ---------------------------------------------------------------- forests

ViColoring color_tree(const Graph& f)
{
    if (!is_forest(f))
        throw std::invalid_argument("color_tree: input is not a forest");
    const int n = f.vertex_count();
    const int delta = f.max_degree();
    ViColoring c(f);
    if (delta == 0) {
        std::fill(c.vertex_colors.begin(), c.vertex_colors.end(), 1);
        return require_valid(f, c, 1, 1, "color_tree");
    }
    if (delta == 1) {
        for (Vertex v = 0; v < n; ++v)
            if (f.degree(v) == 0)
                c.set_vertex(v, 1);
        for (const auto& e : f.edges()) {
            c.set_vertex(e.u, 1);
            c.set_vertex(e.v, 2);
            c.set_incidence(e.u, e.v, 3);
            c.set_incidence(e.v, e.u, 4);
        }
        return require_valid(f, c, 1, 4, "color_tree");
    }

    const int top = delta + 2;
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    const auto comp = connected_components(f);
    const int comps = n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    for (int k = 0; k < comps; ++k) {
        Vertex root = -1;
        for (Vertex v = 0; v < n; ++v)
            if (comp[static_cast<std::size_t>(v)] == k && (root < 0 || f.degree(v) > f.degree(root)))
                root = v;
        c.set_vertex(root, 1);
        int next = 2;
        for (Vertex w : f.neighbors(root)) {
            c.set_incidence(root, w, next++);
            c.set_incidence(w, root, top);
        }
        std::queue<Vertex> queue;
        queue.push(root);
        seen[static_cast<std::size_t>(root)] = true;
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop();
            for (Vertex w : f.neighbors(v)) {
                if (seen[static_cast<std::size_t>(w)])
                    continue;
                seen[static_cast<std::size_t>(w)] = true;
                parent[static_cast<std::size_t>(w)] = v;
                queue.push(w);
            }
            if (v == root)
                continue;
            const Vertex p = parent[static_cast<std::size_t>(v)];
            const int down = c.incidence_color(p, v);
            const int up = c.incidence_color(v, p);
            for (Vertex w : f.neighbors(v))
                if (w != p)
                    c.set_incidence(w, v, down);
            int pick = 1;
            while (pick == c.vertex_color(p) || pick == down || pick == up)
                ++pick;
            c.set_vertex(v, pick);
            int color = 1;
            for (Vertex w : f.neighbors(v)) {
                if (w == p)
                    continue;
                while (color == down || color == up || color == pick)
                    ++color;
                c.set_incidence(v, w, color++);
            }
        }
    }
    return require_valid(f, c, 1, top, "color_tree");
}

// ---------------------------------------------------------------- cycles

namespace {

/// Coloring of a cycle listed as a cyclic vertex sequence: t[i] colors
/// the i-th vertex, fwd[i] the incidence (seq i, seq i+1), bwd[i] the
/// incidence (seq i+1, seq i).
struct CycleColors {
    std::vector<int> t;
    std::vector<int> fwd;
    std::vector<int> bwd;

    int size() const { return static_cast<int>(t.size()); }
};

/// Colors read along the subdivided cycle v0, (v0,v1), (v1,v0), v1, ...
CycleColors from_sequence(const std::vector<int>& seq)
{
    CycleColors out;
    for (std::size_t i = 0; i + 2 < seq.size(); i += 3) {
        out.t.push_back(seq[i]);
        out.fwd.push_back(seq[i + 1]);
        out.bwd.push_back(seq[i + 2]);
    }
    return out;
}

/// One edge-to-path replacement: the edge between sequence positions i and
/// i+1 gets a new middle vertex. `mirrored` picks x = position i+1 (and the
/// recolored vertex beyond it) instead of x = position i.
struct Splice {
    int i = 0;
    bool mirrored = false;
};

CycleColors apply_splices(const CycleColors& old, std::vector<Splice> splices)
{
    const int m = old.size();
    CycleColors mid = old;
    // new vertex after position i: its t, fwd, bwd colors; bwd of position i keeps its color
    std::vector<std::tuple<int, int, int, int>> inserted;
    for (const auto& s : splices) {
        const int i = s.i;
        const int j = (i + 1) % m;
        const int f = old.fwd[static_cast<std::size_t>(i)];
        const int b = old.bwd[static_cast<std::size_t>(i)];
        mid.fwd[static_cast<std::size_t>(i)] = 5;
        if (!s.mirrored) {
            const int w = (i - 1 + m) % m;
            mid.t[static_cast<std::size_t>(i)] = f;
            mid.t[static_cast<std::size_t>(w)] = 5;
            inserted.emplace_back(i, old.t[static_cast<std::size_t>(i)], f, 5);
        } else {
            const int w = (i + 2) % m;
            mid.t[static_cast<std::size_t>(j)] = b;
            mid.t[static_cast<std::size_t>(w)] = 5;
            inserted.emplace_back(i, old.t[static_cast<std::size_t>(j)], f, 5);
        }
    }
    std::sort(inserted.begin(), inserted.end());
    CycleColors out;
    std::size_t next = 0;
    for (int i = 0; i < m; ++i) {
        out.t.push_back(mid.t[static_cast<std::size_t>(i)]);
        out.fwd.push_back(mid.fwd[static_cast<std::size_t>(i)]);
        out.bwd.push_back(mid.bwd[static_cast<std::size_t>(i)]);
        if (next < inserted.size() && std::get<0>(inserted[next]) == i) {
            const auto& [pos, t, f, b] = inserted[next++];
            out.t.push_back(t);
            out.fwd.push_back(f);
            out.bwd.push_back(b);
        }
    }
    return out;
}

CycleColors periodic_cycle(int m)
{
    std::vector<int> seq(static_cast<std::size_t>(3 * m));
    for (int p = 0; p < 3 * m; ++p)
        seq[static_cast<std::size_t>(p)] = p % 4 + 1;
    return from_sequence(seq);
}

ViColoring to_cycle_coloring(const CycleColors& cc)
{
    const int n = cc.size();
    const Graph g = cycle_graph(n);
    ViColoring c(g);
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        c.set_vertex(i, cc.t[static_cast<std::size_t>(i)]);
        c.set_incidence(i, j, cc.fwd[static_cast<std::size_t>(i)]);
        c.set_incidence(j, i, cc.bwd[static_cast<std::size_t>(i)]);
    }
    return c;
}

}  // namespace

ViColoring color_cycle(int n)
{
    if (n < 3)
        throw std::invalid_argument("color_cycle: n must be at least 3");
    CycleColors cc;
    int expected = 5;
    if (n == 3) {
        cc = from_sequence({1, 2, 3, 4, 5, 2, 6, 3, 5});
        expected = 6;
    } else if (n % 4 == 0) {
        cc = periodic_cycle(n);
        expected = 4;
    } else if (n % 4 == 1) {
        // the edge {v_{n-1}, v_1} of C_{n-1} becomes a path through v_n
        cc = apply_splices(periodic_cycle(n - 1), {{n - 2, false}});
    } else if (n == 6) {
        cc = from_sequence({1, 3, 4, 2, 5, 3, 1, 4, 5, 2, 3, 4, 1, 5, 3, 2, 4, 5});
    } else if (n == 7) {
        cc = from_sequence({5, 1, 3, 4, 2, 1, 5, 3, 2, 1, 4, 3, 2, 5, 4, 3, 2, 5, 4, 3, 2});
    } else if (n % 4 == 2) {
        cc = apply_splices(periodic_cycle(n - 2), {{0, false}, {3, false}});
    } else {
        // the first replacement recolors v_3 rather than v_{n-3}
        cc = apply_splices(periodic_cycle(n - 3), {{0, true}, {3, false}, {6, false}});
    }
    const Graph g = cycle_graph(n);
    ViColoring c = to_cycle_coloring(cc);
    require_valid(g, c, 1, expected, "color_cycle");
    return c;
}

// ---------------------------------------------------------------- complete graphs

ViColoring color_complete(int n)
{
    if (n < 2)
        throw std::invalid_argument("color_complete: n must be at least 2");
    const Graph g = complete_graph(n);
    ViColoring c(g);
    if (n == 2) {
        c.set_vertex(0, 1);
        c.set_vertex(1, 2);
        c.set_incidence(0, 1, 3);
        c.set_incidence(1, 0, 4);
        return require_valid(g, c, std::nullopt, 4, "color_complete");
    }
    // Hamiltonian cycle 0, 1, ..., n-1; v_j of the construction is vertex j-1.
    for (int j = 1; j <= n; ++j) {
        const Vertex vj = j - 1;
        const Vertex next = j % n;
        c.set_vertex(vj, j);
        for (Vertex k = 0; k < n; ++k)
            if (k != vj && k != next)
                c.set_incidence(k, next, j);
    }
    for (int j = 1; j <= n; ++j) {
        const Vertex vj = j - 1;
        const Vertex next = j % n;
        c.set_incidence(vj, next, j % 2 == 1 ? n + 1 : n + 2);
    }
    if (n % 2 == 1) {
        c.set_incidence(n - 1, 0, n);
        c.set_vertex(n - 1, n + 1);
    }
    return require_valid(g, c, 2, n + 2, "color_complete");
}

ViColoring color_complete_vi1(int n)
{
    if (n < 2)
        throw std::invalid_argument("color_complete_vi1: n must be at least 2");
    const Graph g = complete_graph(n);
    ViColoring c(g);
    for (Vertex v = 0; v < n; ++v) {
        c.set_vertex(v, v + 1);
        for (Vertex u : g.neighbors(v))
            c.set_incidence(u, v, n + v + 1);
    }
    return require_valid(g, c, 1, 2 * n, "color_complete_vi1");
}

// ---------------------------------------------------------------- bipartite graphs

namespace {

void require_regular_bipartite(const Graph& g, const Bipartition& parts, int min_degree, const char* what)
{
    if (!is_valid_bipartition(g, parts))
        throw std::invalid_argument(std::string(what) + ": parts are not a bipartition of the graph");
    if (parts.left.size() != parts.right.size())
        throw std::invalid_argument(std::string(what) + ": parts differ in size");
    if (!is_regular(g) || g.max_degree() < min_degree)
        throw std::invalid_argument(std::string(what) + ": graph must be k-regular with k >= " +
                                    std::to_string(min_degree));
}

}  // namespace

ViColoring color_regular_bipartite_matching(const Graph& g, const Bipartition& parts)
{
    require_regular_bipartite(g, parts, 1, "color_regular_bipartite_matching");
    const int n = static_cast<int>(parts.left.size());
    std::vector<Vertex> a = parts.left;
    std::sort(a.begin(), a.end());
    std::vector<Vertex> mate(static_cast<std::size_t>(g.vertex_count()), -1);
    for (const auto& e : perfect_matching_regular_bipartite(g, parts)) {
        mate[static_cast<std::size_t>(e.u)] = e.v;
        mate[static_cast<std::size_t>(e.v)] = e.u;
    }
    // index[x] = i for x in {v_i, u_i}, 1-based
    std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int i = 1; i <= n; ++i) {
        const Vertex v = a[static_cast<std::size_t>(i - 1)];
        index[static_cast<std::size_t>(v)] = i;
        index[static_cast<std::size_t>(mate[static_cast<std::size_t>(v)])] = i;
    }
    std::vector<bool> in_a(static_cast<std::size_t>(g.vertex_count()), false);
    for (Vertex v : a)
        in_a[static_cast<std::size_t>(v)] = true;

    ViColoring c(g);
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        const int i = index[static_cast<std::size_t>(x)];
        const bool left = in_a[static_cast<std::size_t>(x)];
        if (i == 1)
            c.set_vertex(x, left ? n + 2 : n + 3);
        else
            c.set_vertex(x, left ? 1 : n + 1);
        for (Vertex y : g.neighbors(x)) {
            // incidence (y, x) lies in I_2(x)
            if (i == 1)
                c.set_incidence(y, x, left ? 1 : n + 1);
            else if (y != mate[static_cast<std::size_t>(x)])
                c.set_incidence(y, x, i);
            else
                c.set_incidence(y, x, left ? n + 3 : n + 2);
        }
    }
    return require_valid(g, c, std::nullopt, n + 3, "color_regular_bipartite_matching");
}

ViColoring color_regular_bipartite_dynamic(const Graph& g, const Bipartition& parts)
{
    require_regular_bipartite(g, parts, 4, "color_regular_bipartite_dynamic");
    const int k = g.max_degree();
    const auto dyn = four_dynamic_coloring_bipartite(g, parts);
    ViColoring c(g);
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        c.set_vertex(x, dyn[static_cast<std::size_t>(x)]);
    const auto fan = [&](Vertex x, int low, int high, int fresh) {
        // neighbors colored `low` and `high` receive the opposite pair color
        Vertex with_low = -1;
        Vertex with_high = -1;
        for (Vertex y : g.neighbors(x)) {
            if (dyn[static_cast<std::size_t>(y)] == low && with_low < 0)
                with_low = y;
            if (dyn[static_cast<std::size_t>(y)] == high && with_high < 0)
                with_high = y;
        }
        if (with_low < 0 || with_high < 0)
            throw ConstructionError("4-dynamic coloring lacks a neighbor color");
        c.set_incidence(x, with_high, low);
        c.set_incidence(x, with_low, high);
        for (Vertex y : g.neighbors(x))
            if (y != with_low && y != with_high)
                c.set_incidence(x, y, fresh++);
    };
    for (Vertex u : parts.right)
        fan(u, 1, 2, 5);
    for (Vertex v : parts.left)
        fan(v, 3, 4, k + 3);
    return require_valid(g, c, std::nullopt, 2 * k, "color_regular_bipartite_dynamic");
}

ViColoring color_regular_bipartite(const Graph& g, const Bipartition& parts)
{
    ViColoring best = color_regular_bipartite_matching(g, parts);
    if (g.max_degree() >= 4) {
        ViColoring other = color_regular_bipartite_dynamic(g, parts);
        if (other.max_color() < best.max_color())
            best = std::move(other);
    }
    return best;
}

ViColoring color_complete_bipartite(int n, int m)
{
    if (m < 1 || n < m)
        throw std::invalid_argument("color_complete_bipartite: need n >= m >= 1");
    const Graph g = complete_bipartite_graph(n, m);
    if (m == 1)
        return color_tree(g);
    if (m == 2) {
        // u_1 = vertex n, u_2 = vertex n+1; v_j = vertex j-1
        const Permutation pi = derangement(n);
        ViColoring c(g);
        c.set_vertex(n, n + 1);
        c.set_vertex(n + 1, n + 2);
        for (Vertex v = 0; v < n; ++v) {
            c.set_incidence(v, n + 1, n + 1);
            c.set_incidence(v, n, n + 2);
            c.set_incidence(n, v, v + 1);
            c.set_incidence(n + 1, v, v + 1);
            c.set_vertex(v, pi(v) + 1);
        }
        return require_valid(g, c, std::nullopt, n + 2, "color_complete_bipartite");
    }
    const Graph full = complete_bipartite_graph(n, n);
    Bipartition parts;
    for (Vertex v = 0; v < n; ++v) {
        parts.left.push_back(v);
        parts.right.push_back(n + v);
    }
    const ViColoring big = color_regular_bipartite_matching(full, parts);
    std::vector<Vertex> embedding(static_cast<std::size_t>(n + m));
    std::iota(embedding.begin(), embedding.end(), 0);
    ViColoring c = restrict_coloring(full, big, g, embedding);
    return require_valid(g, c, std::nullopt, n + 3, "color_complete_bipartite");
}

ViColoring color_complete_bipartite_vi1(int n, int m)
{
    if (n < 2 || m < 2)
        throw std::invalid_argument("color_complete_bipartite_vi1: n and m must be at least 2");
    const Graph g = complete_bipartite_graph(n, m);
    const Permutation pi = derangement(n);
    const Permutation sigma = derangement(m);
    ViColoring c(g);
    for (Vertex v = 0; v < n; ++v) {
        c.set_vertex(v, pi(v) + 1);
        for (Vertex u : g.neighbors(v))
            c.set_incidence(u, v, v + 1);
    }
    for (int j = 0; j < m; ++j) {
        const Vertex u = n + j;
        c.set_vertex(u, n + sigma(j) + 1);
        for (Vertex v : g.neighbors(u))
            c.set_incidence(v, u, n + j + 1);
    }
    return require_valid(g, c, 1, n + m, "color_complete_bipartite_vi1");
}

}  // namespace vicolor
