#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "vicolor/constructive.hpp"
#include "vicolor/exact.hpp"
#include "vicolor/structure.hpp"

namespace vicolor {

// ---------------------------------------------------------------- star forests + total colorings

StarDecomposition star_decomposition(const Graph& g, const std::vector<int>& classes)
{
    if (static_cast<int>(classes.size()) != g.edge_count())
        throw std::invalid_argument("star_decomposition: one class per edge required");
    if (!is_star_forest_partition(g, classes))
        throw std::invalid_argument("star_decomposition: some class is not a star forest");
    StarDecomposition out;
    out.classes = classes;
    out.count = classes.empty() ? 0 : *std::max_element(classes.begin(), classes.end());
    out.centers.assign(classes.size(), -1);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& e = g.edges()[i];
        // within its class, a star center is the endpoint touching another edge
        int du = 0;
        int dv = 0;
        for (std::size_t j = 0; j < classes.size(); ++j) {
            if (j == i || classes[j] != classes[i])
                continue;
            const auto& f = g.edges()[j];
            du += (f.u == e.u || f.v == e.u);
            dv += (f.u == e.v || f.v == e.v);
        }
        out.centers[i] = dv > 0 ? e.v : e.u;
    }
    return out;
}

ViColoring vi_from_total_and_stars(const Graph& g, const TotalColoring& total, const StarDecomposition& stars)
{
    const auto& edges = g.edges();
    if (static_cast<int>(total.vertex_colors.size()) != g.vertex_count() ||
        total.edge_colors.size() != edges.size())
        throw std::invalid_argument("vi_from_total_and_stars: total coloring has the wrong size");
    if (!is_total_coloring(g, total.vertex_colors, total.edge_colors))
        throw std::invalid_argument("vi_from_total_and_stars: total coloring is not proper");
    if (stars.classes.size() != edges.size() || stars.centers.size() != edges.size() ||
        !is_star_forest_partition(g, stars.classes))
        throw std::invalid_argument("vi_from_total_and_stars: invalid star decomposition");
    const int shift = stars.count;
    ViColoring c(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        c.set_vertex(v, shift + total.vertex_colors[static_cast<std::size_t>(v)]);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Vertex center = stars.centers[i];
        const Vertex leaf = center == edges[i].u ? edges[i].v : edges[i].u;
        if (center != edges[i].u && center != edges[i].v)
            throw std::invalid_argument("vi_from_total_and_stars: center is not an endpoint");
        c.set_incidence(leaf, center, stars.classes[i]);
        c.set_incidence(center, leaf, shift + total.edge_colors[i]);
    }
    int total_colors = 0;
    for (int x : total.vertex_colors)
        total_colors = std::max(total_colors, x);
    for (int x : total.edge_colors)
        total_colors = std::max(total_colors, x);
    return require_valid(g, c, std::nullopt, shift + total_colors, "vi_from_total_and_stars");
}

// ---------------------------------------------------------------- merges

namespace {

using ColorMap = std::map<Element, int>;

/// Colors of a local coloring of g[side], keyed by elements of g.
ColorMap lift(const Graph& g, std::span<const Vertex> side, const ViColoring& local)
{
    const Graph sub = induced_subgraph(g, side);
    if (static_cast<int>(local.vertex_colors.size()) != sub.vertex_count())
        throw std::invalid_argument("merge: coloring does not match its side");
    ColorMap out;
    for (const auto& e : elements(sub)) {
        const int c = local.color(e);
        if (e.is_vertex())
            out[Element::of(side[static_cast<std::size_t>(e.vertex)])] = c;
        else
            out[{side[static_cast<std::size_t>(e.vertex)], side[static_cast<std::size_t>(e.other)]}] = c;
    }
    return out;
}

int max_color(const ColorMap& m)
{
    int out = 0;
    for (const auto& [e, c] : m)
        out = std::max(out, c);
    return out;
}

void permute(ColorMap& m, const std::vector<int>& image)
{
    for (auto& [e, c] : m)
        c = image[static_cast<std::size_t>(c)];
}

void swap_colors(ColorMap& m, int a, int b)
{
    if (a == b)
        return;
    for (auto& [e, c] : m) {
        if (c == a)
            c = b;
        else if (c == b)
            c = a;
    }
}

std::vector<Vertex> intersection(std::span<const Vertex> a, std::span<const Vertex> b)
{
    std::set<Vertex> sa(a.begin(), a.end());
    std::vector<Vertex> out;
    for (Vertex v : std::set<Vertex>(b.begin(), b.end()))
        if (sa.contains(v))
            out.push_back(v);
    return out;
}

/// Sides must cover V(g) and every edge must lie inside one side.
void require_cover(const Graph& g, std::span<const Vertex> side1, std::span<const Vertex> side2)
{
    std::vector<int> where(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : side1)
        where.at(static_cast<std::size_t>(v)) |= 1;
    for (Vertex v : side2)
        where.at(static_cast<std::size_t>(v)) |= 2;
    for (int w : where)
        if (w == 0)
            throw std::invalid_argument("merge: sides do not cover the graph");
    for (const auto& e : g.edges())
        if ((where[static_cast<std::size_t>(e.u)] & where[static_cast<std::size_t>(e.v)]) == 0)
            throw std::invalid_argument("merge: an edge joins the two sides");
}

ViColoring assemble(const Graph& g, const ColorMap& a, const ColorMap& b)
{
    ViColoring c(g);
    for (const auto& [e, x] : a)
        c.set(e, x);
    for (const auto& [e, x] : b)
        c.set(e, x);
    return c;
}

ColorMap merge_vertex_maps(const Graph& g, const std::set<Vertex>& side1, const ColorMap& c1,
                           const std::set<Vertex>& side2, ColorMap c2, Vertex v)
{
    int d1 = 0;
    int d2 = 0;
    for (Vertex w : g.neighbors(v)) {
        d1 += side1.contains(w);
        d2 += side2.contains(w);
    }
    if (d1 == 0 || d2 == 0)
        throw std::invalid_argument("merge_cut_vertex: the shared vertex needs neighbors on both sides");
    const int k = std::max({max_color(c1), max_color(c2), g.degree(v) + 2});

    const auto second_color = [&](const ColorMap& m, const std::set<Vertex>& side) {
        std::set<int> colors;
        for (Vertex w : g.neighbors(v))
            if (side.contains(w))
                colors.insert(m.at({w, v}));
        if (colors.size() != 1)
            throw std::invalid_argument("merge_cut_vertex: colorings must have spread 1 at the shared vertex");
        return *colors.begin();
    };
    const auto first_colors = [&](const ColorMap& m, const std::set<Vertex>& side) {
        std::set<int> colors;
        for (Vertex w : g.neighbors(v))
            if (side.contains(w))
                colors.insert(m.at({v, w}));
        return colors;
    };

    // (1) align the color of v
    swap_colors(c2, c1.at(Element::of(v)), c2.at(Element::of(v)));
    // (2) align the color of I_2(v)
    swap_colors(c2, second_color(c1, side1), second_color(c2, side2));
    // (3) move shared first-incidence colors to colors unused around v
    const auto f1 = first_colors(c1, side1);
    const auto f2 = first_colors(c2, side2);
    std::vector<int> clash;
    std::set_intersection(f1.begin(), f1.end(), f2.begin(), f2.end(), std::back_inserter(clash));
    std::set<int> used = f1;
    used.insert(f2.begin(), f2.end());
    used.insert(c1.at(Element::of(v)));
    used.insert(second_color(c1, side1));
    std::vector<int> spare;
    for (int c = 1; c <= k && spare.size() < clash.size(); ++c)
        if (!used.contains(c))
            spare.push_back(c);
    if (spare.size() < clash.size())
        throw ConstructionError("merge_cut_vertex: not enough spare colors");
    for (std::size_t i = 0; i < clash.size(); ++i)
        swap_colors(c2, clash[i], spare[i]);
    return c2;
}

}  // namespace

ViColoring merge_cut_edge(const Graph& g, std::span<const Vertex> side1, const ViColoring& c1,
                          std::span<const Vertex> side2, const ViColoring& c2)
{
    require_cover(g, side1, side2);
    const auto shared = intersection(side1, side2);
    if (shared.size() != 2 || !g.has_edge(shared[0], shared[1]))
        throw std::invalid_argument("merge_cut_edge: sides must share exactly the endpoints of one edge");
    const Vertex u = shared[0];
    const Vertex v = shared[1];
    const std::set<Vertex> s1(side1.begin(), side1.end());
    const std::set<Vertex> s2(side2.begin(), side2.end());
    // a cut edge: all other edges at u stay on one side, all at v on the other
    const auto only_on = [&](Vertex x, const std::set<Vertex>& side) {
        for (Vertex w : g.neighbors(x))
            if (w != u && w != v && !side.contains(w))
                return false;
        return true;
    };
    const bool u_in_1 = only_on(u, s1) && only_on(v, s2);
    const bool u_in_2 = only_on(u, s2) && only_on(v, s1);
    if (!u_in_1 && !u_in_2)
        throw std::invalid_argument("merge_cut_edge: the shared edge is not a cut edge");

    ColorMap m1 = lift(g, side1, c1);
    const ColorMap m2 = lift(g, side2, c2);
    const std::vector<Element> clique = {Element::of(u), {u, v}, {v, u}, Element::of(v)};
    const int k = std::max({max_color(m1), max_color(m2), 4});
    std::vector<int> image(static_cast<std::size_t>(k + 1), 0);
    std::vector<bool> taken(static_cast<std::size_t>(k + 1), false);
    for (const auto& x : clique) {
        const int from = m1.at(x);
        const int to = m2.at(x);
        if (image[static_cast<std::size_t>(from)] != 0 || taken[static_cast<std::size_t>(to)])
            throw std::invalid_argument("merge_cut_edge: colorings are not proper on the shared edge");
        image[static_cast<std::size_t>(from)] = to;
        taken[static_cast<std::size_t>(to)] = true;
    }
    int next = 1;
    for (int from = 1; from <= k; ++from) {
        if (image[static_cast<std::size_t>(from)] != 0)
            continue;
        while (taken[static_cast<std::size_t>(next)])
            ++next;
        image[static_cast<std::size_t>(from)] = next;
        taken[static_cast<std::size_t>(next)] = true;
    }
    permute(m1, image);
    const ViColoring c = assemble(g, m1, m2);
    const int spread_bound = std::max({max_spread(induced_subgraph(g, side1), c1),
                                       max_spread(induced_subgraph(g, side2), c2), 1});
    return require_valid(g, c, spread_bound, k, "merge_cut_edge");
}

ViColoring merge_cut_vertex(const Graph& g, std::span<const Vertex> side1, const ViColoring& c1,
                            std::span<const Vertex> side2, const ViColoring& c2)
{
    require_cover(g, side1, side2);
    const auto shared = intersection(side1, side2);
    if (shared.size() != 1)
        throw std::invalid_argument("merge_cut_vertex: sides must share exactly one vertex");
    const Vertex v = shared[0];
    const std::set<Vertex> s1(side1.begin(), side1.end());
    const std::set<Vertex> s2(side2.begin(), side2.end());
    const ColorMap m1 = lift(g, side1, c1);
    const ColorMap m2 = merge_vertex_maps(g, s1, m1, s2, lift(g, side2, c2), v);
    const int k = std::max({c1.max_color(), c2.max_color(), g.degree(v) + 2});
    return require_valid(g, assemble(g, m1, m2), 1, k, "merge_cut_vertex");
}

// ---------------------------------------------------------------- blocks

namespace {

/// Vertices of a 2-regular connected graph in cycle order starting at 0.
std::vector<Vertex> cycle_order(const Graph& b)
{
    std::vector<Vertex> out = {0};
    Vertex prev = -1;
    Vertex cur = 0;
    while (true) {
        const auto nb = b.neighbors(cur);
        const Vertex next = nb[0] != prev ? nb[0] : nb[1];
        if (next == 0)
            break;
        out.push_back(next);
        prev = cur;
        cur = next;
    }
    return out;
}

/// Spread-1 coloring of one block (local vertex ids).
ViColoring color_block(const Graph& b, long long node_budget)
{
    const int n = b.vertex_count();
    if (n == 1) {
        ViColoring c(b);
        c.set_vertex(0, 1);
        return c;
    }
    if (b.edge_count() == n * (n - 1) / 2)
        return color_complete_vi1(n);
    if (is_regular(b) && b.max_degree() == 2) {
        const auto order = cycle_order(b);
        // cycle vertex i is block vertex order[i]
        const ViColoring base = color_cycle(n);
        ViColoring c(b);
        for (int i = 0; i < n; ++i) {
            const int j = (i + 1) % n;
            c.set_vertex(order[static_cast<std::size_t>(i)], base.vertex_color(i));
            c.set_incidence(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)],
                            base.incidence_color(i, j));
            c.set_incidence(order[static_cast<std::size_t>(j)], order[static_cast<std::size_t>(i)],
                            base.incidence_color(j, i));
        }
        return c;
    }
    const Certificate cert = chi_vi_exact(b, 1, node_budget);
    if (cert.status != CertificateStatus::Exact || !cert.witness)
        throw std::runtime_error("color_blocks: exact search on a block ran out of budget");
    return witness_vi_coloring(b, *cert.witness);
}

}  // namespace

ViColoring color_blocks(const Graph& g, long long node_budget)
{
    const auto dec = blocks(g);
    const int nb = static_cast<int>(dec.blocks.size());
    std::vector<ColorMap> block_maps;
    for (const auto& verts : dec.blocks) {
        const Graph b = induced_subgraph(g, verts);
        block_maps.push_back(lift(g, verts, color_block(b, node_budget)));
    }
    // block adjacency through shared vertices
    std::map<Vertex, std::vector<int>> blocks_of;
    for (int i = 0; i < nb; ++i)
        for (Vertex v : dec.blocks[static_cast<std::size_t>(i)])
            blocks_of[v].push_back(i);

    ColorMap result;
    std::vector<bool> done(static_cast<std::size_t>(nb), false);
    for (int start = 0; start < nb; ++start) {
        if (done[static_cast<std::size_t>(start)])
            continue;
        // grow one component of the block tree
        std::set<Vertex> covered(dec.blocks[static_cast<std::size_t>(start)].begin(),
                                 dec.blocks[static_cast<std::size_t>(start)].end());
        ColorMap acc = block_maps[static_cast<std::size_t>(start)];
        done[static_cast<std::size_t>(start)] = true;
        std::queue<int> queue;
        queue.push(start);
        while (!queue.empty()) {
            const int cur = queue.front();
            queue.pop();
            for (Vertex v : dec.blocks[static_cast<std::size_t>(cur)]) {
                for (int next : blocks_of[v]) {
                    if (done[static_cast<std::size_t>(next)])
                        continue;
                    done[static_cast<std::size_t>(next)] = true;
                    queue.push(next);
                    const auto& verts = dec.blocks[static_cast<std::size_t>(next)];
                    std::set<Vertex> side2(verts.begin(), verts.end());
                    std::set<Vertex> both = covered;
                    both.insert(verts.begin(), verts.end());
                    const std::vector<Vertex> all(both.begin(), both.end());
                    // merge inside the subgraph induced by the union, in g's labels
                    const Graph sub = induced_subgraph(g, all);
                    std::map<Vertex, Vertex> local;
                    for (std::size_t i = 0; i < all.size(); ++i)
                        local[all[i]] = static_cast<Vertex>(i);
                    const auto to_local = [&](const ColorMap& m) {
                        ColorMap out;
                        for (const auto& [e, c] : m)
                            out[e.is_vertex() ? Element::of(local.at(e.vertex))
                                              : Element{local.at(e.vertex), local.at(e.other)}] = c;
                        return out;
                    };
                    const auto local_set = [&](const std::set<Vertex>& s) {
                        std::set<Vertex> out;
                        for (Vertex x : s)
                            out.insert(local.at(x));
                        return out;
                    };
                    ColorMap merged = merge_vertex_maps(sub, local_set(covered), to_local(acc), local_set(side2),
                                                        to_local(block_maps[static_cast<std::size_t>(next)]),
                                                        local.at(v));
                    for (const auto& [e, c] : merged)
                        acc[e.is_vertex() ? Element::of(all[static_cast<std::size_t>(e.vertex)])
                                          : Element{all[static_cast<std::size_t>(e.vertex)],
                                                    all[static_cast<std::size_t>(e.other)]}] = c;
                    covered = std::move(both);
                }
            }
        }
        result.insert(acc.begin(), acc.end());
    }
    ViColoring c(g);
    for (const auto& [e, x] : result)
        c.set(e, x);
    int bound = g.edge_count() > 0 ? g.max_degree() + 2 : 1;
    for (const auto& m : block_maps)
        bound = std::max(bound, max_color(m));
    return require_valid(g, c, 1, bound, "color_blocks");
}

// ---------------------------------------------------------------- incidence + list coloring

std::optional<ViColoring> extend_incidence_to_vi(const Graph& g, const std::map<Incidence, int>& incidence_colors,
                                                 int k)
{
    if (!is_incidence_coloring(g, incidence_colors, std::nullopt))
        throw std::invalid_argument("extend_incidence_to_vi: not a proper incidence coloring");
    const auto nbh = incidence_neighborhoods(g);
    std::vector<std::vector<int>> lists(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        std::set<int> used;
        for (const auto& i : nbh.all(u))
            used.insert(incidence_colors.at(i));
        for (int c = 1; c <= k; ++c)
            if (!used.contains(c))
                lists[static_cast<std::size_t>(u)].push_back(c);
    }
    const auto res = list_coloring(g, lists);
    if (res.status == SearchStatus::Infeasible)
        return std::nullopt;
    if (res.status != SearchStatus::Feasible)
        throw std::runtime_error("extend_incidence_to_vi: list coloring ran out of budget");
    ViColoring c(g);
    c.incidence_colors = incidence_colors;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        c.set_vertex(u, res.coloring[static_cast<std::size_t>(u)]);
    int top = k;
    for (const auto& [i, x] : incidence_colors)
        top = std::max(top, x);
    return require_valid(g, c, std::nullopt, top, "extend_incidence_to_vi");
}

}  // namespace vicolor
