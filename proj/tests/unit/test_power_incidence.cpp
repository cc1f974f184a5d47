#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "vicolor/catalog.hpp"
#include "vicolor/exact.hpp"
#include "vicolor/incidence.hpp"
#include "vicolor/power.hpp"
#include "vicolor/solver.hpp"
#include "vicolor/structure.hpp"

using namespace vicolor;

namespace {

// Subdivision built by hand: terminal v keeps index v, the internal vertex
// at distance l from the smaller endpoint of edge i gets n + i*(k-1) + l-1.
struct PlainSubdivision {
    std::vector<std::set<int>> adj;
};

PlainSubdivision plain_subdivision(const Graph& g, int k)
{
    const int n = g.vertex_count();
    PlainSubdivision s;
    s.adj.resize(static_cast<std::size_t>(n + g.edge_count() * (k - 1)));
    const auto link = [&](int a, int b) {
        s.adj[static_cast<std::size_t>(a)].insert(b);
        s.adj[static_cast<std::size_t>(b)].insert(a);
    };
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto e = g.edges()[static_cast<std::size_t>(i)];
        int prev = e.u;
        for (int l = 1; l < k; ++l) {
            const int cur = n + i * (k - 1) + l - 1;
            link(prev, cur);
            prev = cur;
        }
        link(prev, e.v);
    }
    return s;
}

int plain_index(const Graph& g, int k, const SubdivisionVertex& v)
{
    if (!v.internal)
        return v.x;
    return g.vertex_count() + *g.edge_index(v.x, v.y) * (k - 1) + v.position - 1;
}

std::vector<int> plain_distances(const PlainSubdivision& s, int from)
{
    std::vector<int> d(s.adj.size(), -1);
    std::vector<int> queue = {from};
    d[static_cast<std::size_t>(from)] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int w : s.adj[static_cast<std::size_t>(queue[i])])
            if (d[static_cast<std::size_t>(w)] < 0) {
                d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(queue[i])] + 1;
                queue.push_back(w);
            }
    return d;
}

std::set<std::pair<int, int>> edge_set(const Graph& g)
{
    std::set<std::pair<int, int>> out;
    for (const auto& e : g.edges())
        out.emplace(e.u, e.v);
    return out;
}

std::vector<Graph> small_catalog(int max_n)
{
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& g : all_graphs(n, false))
            out.push_back(std::move(g));
    return out;
}

}  // namespace

TEST_CASE("subdivide")
{
    const auto c9 = subdivide(cycle_graph(3), 3);
    CHECK(c9.graph().vertex_count() == 9);
    CHECK(c9.graph().edge_count() == 9);
    CHECK(is_regular(c9.graph()));
    CHECK(is_connected(c9.graph()));

    const auto same = subdivide(petersen_graph(), 1);
    CHECK(same.graph() == petersen_graph());

    const auto p4 = subdivide(complete_graph(2), 3);
    CHECK(p4.graph().vertex_count() == 4);
    CHECK(p4.graph().edge_count() == 3);
    CHECK(p4.graph().max_degree() == 2);
    CHECK(is_forest(p4.graph()));

    // (xy)_l and (yx)_{n-l} name the same vertex
    CHECK(SubdivisionVertex::on_edge(3, 1, 1, 3) == SubdivisionVertex::on_edge(1, 3, 2, 3));
    CHECK(SubdivisionVertex::on_edge(3, 1, 1, 3).x == 1);
}

TEST_CASE("graph_power")
{
    const auto sq = graph_power(path_graph(4), 2);
    CHECK(edge_set(sq) == std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}});

    const auto c9 = graph_power(cycle_graph(9), 3);
    CHECK(c9.edge_count() == 27);
    const auto chi = chromatic_number(c9);
    CHECK(chi.value == 5);  // ceil(9 / floor(9/4))

    CHECK(graph_power(petersen_graph(), 2) == complete_graph(10));
    CHECK(graph_power(cycle_graph(5), 1) == cycle_graph(5));
}

TEST_CASE("fractional_power examples")
{
    const auto c4 = fractional_power(cycle_graph(4), 3, 3);
    CHECK(c4.graph().vertex_count() == 12);
    CHECK(is_regular(c4.graph()));
    CHECK(c4.graph().max_degree() == 6);
    CHECK(c4.graph().edge_count() == 36);

    const auto k2 = fractional_power(complete_graph(2), 3, 3);
    CHECK(k2.graph() == complete_graph(4));

    const Graph g = petersen_graph();
    CHECK(fractional_power(g, 1, 1).graph() == g);
}

TEST_CASE("fractional_power agrees with distances in a hand-built subdivision")
{
    for (const auto& g : small_catalog(5)) {
        for (auto [m, k] : {std::pair{3, 3}, std::pair{2, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
            const auto p = fractional_power(g, m, k);
            const auto plain = plain_subdivision(g, k);
            REQUIRE(p.graph().vertex_count() == static_cast<int>(plain.adj.size()));
            for (Vertex a = 0; a < p.graph().vertex_count(); ++a) {
                const auto d = plain_distances(plain, plain_index(g, k, p.labeled.label(a)));
                for (Vertex b = 0; b < p.graph().vertex_count(); ++b) {
                    if (a == b)
                        continue;
                    const int dist = d[static_cast<std::size_t>(plain_index(g, k, p.labeled.label(b)))];
                    CHECK(p.graph().has_edge(a, b) == (dist >= 1 && dist <= m));
                }
            }
        }
    }
}

TEST_CASE("power graph structure on the small catalog")
{
    for (const auto& g : small_catalog(6)) {
        const auto p = fractional_power(g, 3, 3);
        CHECK(p.graph().vertex_count() == g.vertex_count() + 2 * g.edge_count());

        // t-vertices induce g
        for (const auto& e : p.graph().edges()) {
            const auto& a = p.labeled.label(e.u);
            const auto& b = p.labeled.label(e.v);
            if (!a.internal && !b.internal)
                CHECK(g.has_edge(a.x, b.x));
        }
        for (const auto& e : g.edges())
            CHECK(p.graph().has_edge(*p.labeled.index_of(SubdivisionVertex::terminal(e.u)),
                                     *p.labeled.index_of(SubdivisionVertex::terminal(e.v))));

        if (g.edge_count() == 0)
            continue;
        // i-vertices induce the incidence graph
        const auto inc = incidence_graph(g);
        const auto as_power = [&](const Incidence& i) {
            return *p.labeled.index_of(SubdivisionVertex::on_edge(i.vertex, i.other, 1, 3));
        };
        for (Vertex a = 0; a < inc.graph().vertex_count(); ++a)
            for (Vertex b = a + 1; b < inc.graph().vertex_count(); ++b)
                CHECK(inc.graph().has_edge(a, b) ==
                      p.graph().has_edge(as_power(inc.label(a)), as_power(inc.label(b))));
    }
}

TEST_CASE("the 2/2-power is the total graph")
{
    for (const auto& g : small_catalog(6)) {
        const auto p = fractional_power(g, 2, 2);
        const int n = g.vertex_count();
        // total graph: vertex v -> v, edge i -> n + i
        const auto total_index = [&](const SubdivisionVertex& s) {
            return s.internal ? n + *g.edge_index(s.x, s.y) : s.x;
        };
        const auto touches = [](const Edge& e, Vertex v) { return e.u == v || e.v == v; };
        const auto adjacent = [&](int a, int b) {
            if (a < n && b < n)
                return g.has_edge(a, b);
            if (a >= n && b >= n) {
                const auto& e = g.edges()[static_cast<std::size_t>(a - n)];
                const auto& f = g.edges()[static_cast<std::size_t>(b - n)];
                return touches(f, e.u) || touches(f, e.v);
            }
            if (a >= n)
                std::swap(a, b);
            return touches(g.edges()[static_cast<std::size_t>(b - n)], a);
        };
        REQUIRE(p.graph().vertex_count() == n + g.edge_count());
        for (Vertex a = 0; a < p.graph().vertex_count(); ++a)
            for (Vertex b = a + 1; b < p.graph().vertex_count(); ++b)
                CHECK(p.graph().has_edge(a, b) ==
                      adjacent(total_index(p.labeled.label(a)), total_index(p.labeled.label(b))));
    }
}

TEST_CASE("clique_number_g33")
{
    CHECK(clique_number_g33(cycle_graph(5)) == 4);
    CHECK(clique_number_g33(complete_graph(2)) == 4);
    CHECK(clique_number_g33(petersen_graph()) == 5);
    CHECK_THROWS_AS(clique_number_g33(Graph(3)), std::invalid_argument);

    const auto exact = max_clique(fractional_power(petersen_graph(), 3, 3).graph());
    CHECK(exact.exact);
    CHECK(exact.members.size() == 5);
    for (const auto& g : small_catalog(5)) {
        if (g.edge_count() == 0)
            continue;
        const auto c = max_clique(fractional_power(g, 3, 3).graph());
        REQUIRE(c.exact);
        CHECK(static_cast<int>(c.members.size()) == clique_number_g33(g));
    }
}

TEST_CASE("underlying digraph")
{
    const auto p = fractional_power(complete_graph(3), 3, 3);
    std::vector<Vertex> all(static_cast<std::size_t>(p.graph().vertex_count()));
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = static_cast<Vertex>(i);
    const auto d = underlying_digraph(p, all);
    CHECK(d.vertices() == std::set<Vertex>{0, 1, 2});
    CHECK(d.arcs().size() == 6);
    CHECK(d.arcs().contains({0, 1}));
    CHECK(d.arcs().contains({1, 0}));

    const auto empty = underlying_digraph(p, std::vector<Vertex>{});
    CHECK(empty.vertices().empty());
    CHECK(empty.arcs().empty());

    // an incidence and its reverse make a 2-cycle, not an in-star
    const auto two = underlying_digraph(
        p, std::vector<Vertex>{*p.labeled.index_of(SubdivisionVertex::on_edge(0, 1, 1, 3)),
                               *p.labeled.index_of(SubdivisionVertex::on_edge(1, 0, 1, 3))});
    CHECK_FALSE(is_in_star_forest(complete_graph(3), two));
}

TEST_CASE("color classes of proper 3/3-colorings are in-star forests")
{
    auto graphs = small_catalog(5);
    graphs.push_back(cycle_graph(4));
    graphs.push_back(petersen_graph());
    for (const auto& g : graphs) {
        if (g.edge_count() == 0)
            continue;
        const auto p = fractional_power(g, 3, 3);
        const auto res = minimize_coloring({p.graph(), {}, 0, {}});
        REQUIRE(res.status == SearchStatus::Feasible);
        std::map<int, std::vector<Vertex>> classes;
        for (Vertex v = 0; v < p.graph().vertex_count(); ++v)
            classes[res.coloring[static_cast<std::size_t>(v)]].push_back(v);
        for (const auto& [c, members] : classes) {
            const auto d = underlying_digraph(p, members);
            CHECK(is_in_star_forest(g, d));
            for (const auto& comp : d.weak_components()) {
                if (comp.size() == 1)
                    continue;
                // exactly one vertex receives every arc
                int centers = 0;
                for (Vertex v : comp)
                    centers += d.out_degree(v) == 0;
                CHECK(centers == 1);
            }
        }
    }
}

TEST_CASE("power graph DOT output")
{
    const auto p = fractional_power(complete_graph(2), 3, 3);
    const std::vector<int> colors = {1, 2, 3, 4};
    const auto dot = power_graph_dot(p, colors);
    CHECK(dot.find("fillcolor=black") != std::string::npos);
    CHECK(dot.find("fillcolor=white") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
}

TEST_CASE("incidence neighborhoods")
{
    for (const auto& g : small_catalog(5)) {
        const auto nb = incidence_neighborhoods(g);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            const auto& i1 = nb.first[static_cast<std::size_t>(v)];
            const auto& i2 = nb.second[static_cast<std::size_t>(v)];
            CHECK(static_cast<int>(i1.size()) == g.degree(v));
            CHECK(static_cast<int>(i2.size()) == g.degree(v));
            for (const auto& i : i1) {
                CHECK(i.vertex == v);
                CHECK(std::find(i2.begin(), i2.end(), i) == i2.end());
            }
            for (const auto& i : i2)
                CHECK(i.other == v);
        }
        const auto all = incidences(g);
        CHECK(static_cast<int>(all.size()) == 2 * g.edge_count());
        for (std::size_t i = 0; i < all.size(); ++i)
            CHECK(incidence_index(g, all[i]) == static_cast<int>(i));
    }
}

TEST_CASE("incidence graph")
{
    const auto k2 = incidence_graph(complete_graph(2));
    CHECK(k2.graph().vertex_count() == 2);
    CHECK(k2.graph().edge_count() == 1);

    const auto p3 = incidence_graph(path_graph(3));  // center 1
    CHECK(p3.graph().has_edge(*p3.index_of({1, 0}), *p3.index_of({1, 2})));

    // the incidence graph of C_3 is the octahedron, so 3 colors suffice
    const auto c3 = incidence_graph(cycle_graph(3));
    CHECK(c3.graph().vertex_count() == 6);
    CHECK(c3.graph().edge_count() == 12);
    CHECK(is_regular(c3.graph()));
    CHECK(chromatic_number(c3.graph()).value == 3);

    CHECK_THROWS_AS(incidence_graph(Graph(2)), std::invalid_argument);
}

TEST_CASE("t_vi1")
{
    const auto c6 = t_vi1(cycle_graph(6));
    CHECK(c6.graph().vertex_count() == 12);
    CHECK(c6.graph().edge_count() == 36);
    for (Vertex v = 0; v < 6; ++v) {
        CHECK(c6.graph().degree(v) == 5);
        CHECK(c6.graph().degree(6 + v) == 7);
        CHECK(c6.label(v) == LeveledVertex{v, 1});
        CHECK(c6.label(6 + v) == LeveledVertex{v, 2});
    }
    for (int n = 2; n <= 6; ++n)
        CHECK(t_vi1(complete_graph(n)).graph() == complete_graph(2 * n));

    // level 1 is g, level 2 is g squared, cross edges by distance <= 1
    for (const auto& g : small_catalog(6)) {
        if (g.edge_count() == 0)
            continue;
        const int n = g.vertex_count();
        const auto t = t_vi1(g);
        const auto sq = graph_power(g, 2);
        for (Vertex a = 0; a < n; ++a) {
            const auto d = bfs_distances(g, a);
            for (Vertex b = 0; b < n; ++b) {
                if (a != b) {
                    CHECK(t.graph().has_edge(a, b) == g.has_edge(a, b));
                    CHECK(t.graph().has_edge(n + a, n + b) == sq.has_edge(a, b));
                }
                const int dist = d[static_cast<std::size_t>(b)];
                CHECK(t.graph().has_edge(a, n + b) == (dist == 0 || dist == 1));
            }
        }
    }

    const auto dot = t_vi1_dot(t_vi1(complete_graph(2)));
    CHECK(dot.find("--") != std::string::npos);
}
