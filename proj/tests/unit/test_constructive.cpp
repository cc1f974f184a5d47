#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "vicolor/catalog.hpp"
#include "vicolor/constructive.hpp"
#include "vicolor/conversions.hpp"
#include "vicolor/exact.hpp"
#include "vicolor/incidence.hpp"
#include "vicolor/structure.hpp"

using namespace vicolor;

namespace {

std::vector<Graph> connected_catalog(int max_n)
{
    std::vector<Graph> out;
    for (int n = 2; n <= max_n; ++n)
        for (auto& g : all_graphs(n, true))
            out.push_back(std::move(g));
    return out;
}

int exact(const Graph& g, std::optional<int> s = std::nullopt)
{
    const auto c = chi_vi_exact(g, s);
    REQUIRE(c.status == CertificateStatus::Exact);
    return *c.value;
}

ViColoring exact_coloring(const Graph& g, std::optional<int> s = std::nullopt)
{
    const auto c = chi_vi_exact(g, s);
    REQUIRE(c.status == CertificateStatus::Exact);
    return witness_vi_coloring(g, *c.witness);
}

Graph disjoint_union_with_edge(const Graph& a, const Graph& b, Vertex in_a, Vertex in_b)
{
    std::vector<Edge> es = a.edges();
    const int off = a.vertex_count();
    for (const auto& e : b.edges())
        es.push_back(make_edge(e.u + off, e.v + off));
    es.push_back(make_edge(in_a, in_b + off));
    return Graph(off + b.vertex_count(), es);
}

Graph glue_at_vertex(const Graph& a, const Graph& b, Vertex in_a, Vertex in_b)
{
    // b's vertex in_b becomes a's in_a; the others follow a's vertices
    std::vector<Vertex> map(static_cast<std::size_t>(b.vertex_count()));
    Vertex next = a.vertex_count();
    for (Vertex v = 0; v < b.vertex_count(); ++v)
        map[static_cast<std::size_t>(v)] = v == in_b ? in_a : next++;
    std::vector<Edge> es = a.edges();
    for (const auto& e : b.edges())
        es.push_back(make_edge(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]));
    return Graph(next, es);
}

Graph wheel(int rim)
{
    std::vector<Edge> es;
    for (int i = 0; i < rim; ++i) {
        es.push_back(make_edge(0, 1 + i));
        es.push_back(make_edge(1 + i, 1 + (i + 1) % rim));
    }
    return Graph(rim + 1, es);
}

// Stacked triangulation: each new vertex goes into a random face.
Graph stacked_triangulation(int n, std::mt19937_64& rng)
{
    std::vector<Edge> es = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<std::array<Vertex, 3>> faces = {{0, 1, 2}, {0, 1, 2}};
    for (Vertex v = 3; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
        const std::size_t i = pick(rng);
        const auto f = faces[i];
        for (Vertex x : f)
            es.push_back(make_edge(x, v));
        faces[i] = {f[0], f[1], v};
        faces.push_back({f[0], f[2], v});
        faces.push_back({f[1], f[2], v});
    }
    return Graph(n, es);
}

}  // namespace

TEST_CASE("ColoringBuilder")
{
    const Graph p3 = path_graph(3);
    ColoringBuilder b(p3);
    CHECK(b.forbidden(Element::of(1)).empty());
    b.set(Element::of(1), 1);
    b.set({0, 1}, 2);
    CHECK(b.forbidden(Element::of(0)) == std::set<int>{1, 2});
    CHECK(b.first_free(Element::of(0), 5) == 3);
    CHECK(b.first_free(Element::of(0), 5, {3}) == 4);
    CHECK(b.first_free(Element::of(0), 2) == 0);
    CHECK(b.second_colors(1) == std::set<int>{2});
    CHECK(b.consistent());
    CHECK_THROWS_AS(b.finish(), IncompleteColoring);
    b.set({2, 1}, 1);
    CHECK_FALSE(b.consistent());
}

TEST_CASE("star decompositions and the total-plus-stars coloring")
{
    const Graph k13 = star_graph(3);
    const auto sd = star_decomposition(k13, {1, 1, 1});
    CHECK(sd.count == 1);
    for (Vertex c : sd.centers)
        CHECK(c == 0);
    const auto total = total_coloring_exact(k13);
    REQUIRE(total.value == 4);
    const auto c = vi_from_total_and_stars(k13, {*total.witness->vertex_colors, *total.witness->edge_colors}, sd);
    CHECK(c.max_color() <= 5);
    CHECK(exact(k13) == 5);

    const Graph k2 = complete_graph(2);
    const auto k2c = vi_from_total_and_stars(k2, {{1, 2}, {3}}, star_decomposition(k2, {1}));
    CHECK(k2c.max_color() <= 4);
    CHECK(star_decomposition(k2, {1}).centers[0] == 0);  // smaller endpoint

    const Graph c4 = cycle_graph(4);
    const auto st = star_arboricity_exact(c4);
    const auto tc = total_coloring_exact(c4);
    CHECK(st.value == 2);
    const auto c4c = vi_from_total_and_stars(c4, {*tc.witness->vertex_colors, *tc.witness->edge_colors},
                                             star_decomposition(c4, *st.witness->edge_colors));
    CHECK(c4c.max_color() <= 6);
    CHECK(exact(c4) == 4);

    CHECK_THROWS_AS(star_decomposition(c4, {1, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(vi_from_total_and_stars(k2, {{1, 1}, {2}}, star_decomposition(k2, {1})), std::invalid_argument);

    for (const auto& g : connected_catalog(6)) {
        const auto t = total_coloring_exact(g);
        const auto s = star_arboricity_exact(g);
        REQUIRE(t.status == CertificateStatus::Exact);
        REQUIRE(s.status == CertificateStatus::Exact);
        const auto vi = vi_from_total_and_stars(g, {*t.witness->vertex_colors, *t.witness->edge_colors},
                                                star_decomposition(g, *s.witness->edge_colors));
        CHECK(is_valid_vi_coloring(g, vi));
        CHECK(vi.max_color() <= *t.value + *s.value);
    }
}

TEST_CASE("merge along a cut edge")
{
    // P_4 = two P_3 sharing the middle edge {1,2}
    const Graph p4 = path_graph(4);
    const std::vector<Vertex> left = {0, 1, 2};
    const std::vector<Vertex> right = {1, 2, 3};
    const auto p3 = color_tree(path_graph(3));
    const auto same = merge_cut_edge(p4, left, p3, right, p3);
    CHECK(is_valid_vi_coloring(p4, same));
    CHECK(same.max_color() <= 4);
    const auto mixed = merge_cut_edge(p4, left, exact_coloring(path_graph(3)), right, color_tree(path_graph(3)));
    CHECK(is_valid_vi_coloring(p4, mixed));
    CHECK(mixed.max_color() == 4);

    // two triangles sharing an edge: the shared edge is not a cut edge
    const Graph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(merge_cut_edge(diamond, std::vector<Vertex>{0, 1, 2}, color_cycle(3),
                                   std::vector<Vertex>{1, 2, 3}, color_cycle(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(merge_cut_edge(p4, std::vector<Vertex>{0, 1}, p3, right, p3), std::invalid_argument);

    // random graphs joined by a bridge; each side keeps the bridge as a pendant edge
    std::mt19937_64 rng(3);
    for (int t = 0; t < 60; ++t) {
        const Graph a = random_connected_graph(2 + t % 4, 0.5, rng);
        const Graph b = random_connected_graph(2 + (t / 4) % 4, 0.5, rng);
        const Vertex x = static_cast<Vertex>(t % a.vertex_count());
        const Vertex y = static_cast<Vertex>(t % b.vertex_count());
        const Graph g = disjoint_union_with_edge(a, b, x, y);
        std::vector<Vertex> s1;
        std::vector<Vertex> s2;
        for (Vertex v = 0; v < a.vertex_count(); ++v)
            s1.push_back(v);
        s1.push_back(a.vertex_count() + y);
        s2.push_back(x);
        for (Vertex v = 0; v < b.vertex_count(); ++v)
            s2.push_back(a.vertex_count() + v);
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        const Graph h1 = induced_subgraph(g, s1);
        const Graph h2 = induced_subgraph(g, s2);
        for (std::optional<int> s : {std::optional<int>{}, std::optional<int>{1}}) {
            const auto c1 = exact_coloring(h1, s);
            const auto c2 = exact_coloring(h2, s);
            const auto m = merge_cut_edge(g, s1, c1, s2, c2);
            CHECK(is_valid_vi_coloring(g, m, s));
            CHECK(m.max_color() <= std::max({c1.max_color(), c2.max_color(), 4}));
        }
    }
}

TEST_CASE("merge at a cut vertex")
{
    // two K_{1,2} glued at their centers give K_{1,4}
    const Graph k14 = star_graph(4);
    const auto k12 = color_tree(star_graph(2));
    const auto m = merge_cut_vertex(k14, std::vector<Vertex>{0, 1, 2}, k12, std::vector<Vertex>{0, 3, 4}, k12);
    CHECK(is_valid_vi_coloring(k14, m, 1));
    CHECK(m.max_color() == 6);
    CHECK(exact(k14, 1) == 6);

    // two edges glued give P_3
    const Graph p3 = path_graph(3);
    const auto k2 = color_tree(complete_graph(2));
    const auto p = merge_cut_vertex(p3, std::vector<Vertex>{0, 1}, k2, std::vector<Vertex>{1, 2}, k2);
    CHECK(is_valid_vi_coloring(p3, p, 1));
    CHECK(p.max_color() == 4);

    // paw: triangle plus a pendant edge at vertex 2
    const Graph paw(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    const auto w = merge_cut_vertex(paw, std::vector<Vertex>{0, 1, 2}, color_cycle(3), std::vector<Vertex>{2, 3}, k2);
    CHECK(is_valid_vi_coloring(paw, w, 1));
    CHECK(w.max_color() <= 6);
    CHECK(exact(paw, 1) == 6);

    // sides sharing no vertex
    CHECK_THROWS_AS(merge_cut_vertex(paw, std::vector<Vertex>{0, 1}, k2, std::vector<Vertex>{2, 3}, k2),
                    std::invalid_argument);

    std::mt19937_64 rng(9);
    for (int t = 0; t < 60; ++t) {
        const Graph a = random_connected_graph(2 + t % 4, 0.6, rng);
        const Graph b = random_connected_graph(2 + (t / 4) % 4, 0.6, rng);
        const Vertex x = static_cast<Vertex>(t % a.vertex_count());
        const Vertex y = static_cast<Vertex>((t / 3) % b.vertex_count());
        const Graph g = glue_at_vertex(a, b, x, y);
        std::vector<Vertex> s1;
        for (Vertex v = 0; v < a.vertex_count(); ++v)
            s1.push_back(v);
        std::vector<Vertex> s2 = {x};
        for (Vertex v = a.vertex_count(); v < g.vertex_count(); ++v)
            s2.push_back(v);
        std::sort(s2.begin(), s2.end());
        const auto c1 = exact_coloring(induced_subgraph(g, s1), 1);
        const auto c2 = exact_coloring(induced_subgraph(g, s2), 1);
        const auto merged = merge_cut_vertex(g, s1, c1, s2, c2);
        CHECK(is_valid_vi_coloring(g, merged, 1));
        CHECK(merged.max_color() <= std::max({c1.max_color(), c2.max_color(), g.degree(x) + 2}));
    }
}

TEST_CASE("block-by-block colorings")
{
    const Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    const auto b = color_blocks(bowtie);
    CHECK(is_valid_vi_coloring(bowtie, b, 1));
    CHECK(b.max_color() == 6);
    CHECK(exact(bowtie, 1) == 6);

    const Graph c4p(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}});
    const auto c = color_blocks(c4p);
    CHECK(is_valid_vi_coloring(c4p, c, 1));
    CHECK(c.max_color() == 5);
    CHECK(exact(c4p, 1) == 5);

    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
        const Graph tree = random_tree(3 + t % 10, rng);
        const auto tc = color_blocks(tree);
        CHECK(is_valid_vi_coloring(tree, tc, 1));
        CHECK(tc.max_color() == std::max(4, tree.max_degree() + 2));
    }

    for (int n = 1; n <= 6; ++n)
        for (const auto& g : all_graphs(n, false)) {
            const auto col = color_blocks(g);
            CHECK(is_valid_vi_coloring(g, col, 1));
            int bound = g.edge_count() > 0 ? g.max_degree() + 2 : 1;
            for (const auto& verts : blocks(g).blocks) {
                const Graph blk = induced_subgraph(g, verts);
                if (blk.edge_count() > 0)
                    bound = std::max(bound, exact(blk, 1));
            }
            CHECK(col.max_color() <= bound);
        }
}

TEST_CASE("extending incidence colorings to vertices")
{
    // spread-1 incidence part of a (4,1)-coloring of C_4
    const Graph c4 = cycle_graph(4);
    const auto base = color_cycle(4);
    const auto ext = extend_incidence_to_vi(c4, base.incidence_colors, 4);
    REQUIRE(ext.has_value());
    CHECK(is_valid_vi_coloring(c4, *ext, 1));
    CHECK(ext->incidence_colors == base.incidence_colors);
    CHECK(ext->max_color() == 4);

    const Graph k2 = complete_graph(2);
    const auto k2e = extend_incidence_to_vi(k2, {{{0, 1}, 1}, {{1, 0}, 2}}, 4);
    REQUIRE(k2e.has_value());
    CHECK(is_valid_vi_coloring(k2, *k2e));

    // C_3 with an incidence coloring on colors 1..4 cannot extend within 4 colors
    const Graph c3 = cycle_graph(3);
    auto inc = *incidence_coloring_exact(c3).witness->incidence_colors;
    inc.begin()->second = 4;
    REQUIRE(is_incidence_coloring(c3, inc, std::nullopt));
    CHECK_FALSE(extend_incidence_to_vi(c3, inc, 4).has_value());
    CHECK(extend_incidence_to_vi(c3, inc, 6).has_value());

    CHECK_THROWS_AS(extend_incidence_to_vi(k2, {{{0, 1}, 1}, {{1, 0}, 1}}, 4), std::invalid_argument);

    // whenever k reaches chi_l + Delta + s the lists admit a coloring
    for (const auto& g : connected_catalog(5)) {
        const int chi_l = list_chromatic_number(g);
        for (int s = 1; s <= g.max_degree(); ++s) {
            const auto ic = incidence_coloring_exact(g, s);
            const int k = std::max(*ic.value, chi_l + g.max_degree() + s);
            const auto vi = extend_incidence_to_vi(g, *ic.witness->incidence_colors, k);
            REQUIRE(vi.has_value());
            CHECK(is_valid_vi_coloring(g, *vi, s));
        }
    }
}

TEST_CASE("k-degenerate construction")
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 20; ++t) {
        const Graph tree = random_tree(3 + t % 10, rng);
        if (tree.max_degree() < 2)
            continue;
        const auto c = color_k_degenerate(tree, 1);
        CHECK(is_valid_vi_coloring(tree, c, 1));
        CHECK(c.max_color() <= tree.max_degree() + 2);
    }

    const auto c5 = color_k_degenerate(cycle_graph(5), 2);
    CHECK(is_valid_vi_coloring(cycle_graph(5), c5, 2));
    CHECK(c5.max_color() <= 6);

    DegenerateStats st;
    const auto pet = color_k_degenerate(petersen_graph(), 3, &st);
    CHECK(is_valid_vi_coloring(petersen_graph(), pet, 3));
    CHECK(pet.max_color() <= 9);
    CHECK(st.palette == 9);

    CHECK_THROWS_AS(color_k_degenerate(complete_graph(5), 3), std::invalid_argument);
    CHECK_THROWS_AS(color_k_degenerate(complete_graph(2), 1), std::invalid_argument);

    int widened = 0;
    for (int t = 0; t < 300; ++t) {
        const int n = 3 + t % 10;
        const Graph g = random_connected_graph(n, 0.1 + 0.8 * (t % 9) / 9.0, rng);
        if (g.max_degree() < 2)
            continue;
        const int k = degeneracy_ordering(g).degeneracy;
        DegenerateStats s;
        const auto c = color_k_degenerate(g, k, &s);
        CHECK(is_valid_vi_coloring(g, c, k));
        CHECK(c.max_color() <= g.max_degree() + 2 * k);
        widened += s.widened_sdr;
    }
    CHECK(widened == 0);
}

TEST_CASE("3-degenerate construction")
{
    const Graph w5 = wheel(5);
    ThreeDegenerateStats st;
    const auto c = color_3_degenerate(w5, &st);
    CHECK(is_valid_vi_coloring(w5, c, 3));
    CHECK(c.max_color() <= 10);
    CHECK(st.fallbacks == 0);

    // a pendant vertex exercises the r <= 2 case
    std::vector<Edge> es = w5.edges();
    es.push_back(make_edge(1, 6));
    const Graph pendant(7, es);
    const auto p = color_3_degenerate(pendant, &st);
    CHECK(is_valid_vi_coloring(pendant, p, 3));
    CHECK(st.case_counts[0] > 0);

    CHECK_THROWS_AS(color_3_degenerate(complete_graph(6)), std::invalid_argument);
    CHECK_THROWS_AS(color_3_degenerate(cycle_graph(6)), std::invalid_argument);

    std::mt19937_64 rng(23);
    int fallbacks = 0;
    std::array<int, 5> cases{};
    for (int t = 0; t < 400; ++t) {
        const Graph g = t % 2 ? stacked_triangulation(8 + t % 15, rng) : random_degenerate_graph(8 + t % 20, 3, rng);
        if (g.max_degree() < 5)
            continue;
        ThreeDegenerateStats s;
        const auto col = color_3_degenerate(g, &s);
        CHECK(is_valid_vi_coloring(g, col, 3));
        CHECK(col.max_color() <= g.max_degree() + 5);
        fallbacks += s.fallbacks;
        for (std::size_t i = 0; i < 5; ++i)
            cases[i] += s.case_counts[i];
    }
    CHECK(fallbacks == 0);
    for (int x : cases)
        CHECK(x > 0);
}

TEST_CASE("trees")
{
    CHECK(color_tree(path_graph(4)).max_color() == 4);
    CHECK(color_tree(star_graph(5)).max_color() == 7);
    // spider: three legs of length 3
    const Graph spider(10, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 7}, {7, 8}, {8, 9}});
    const auto sc = color_tree(spider);
    CHECK(is_valid_vi_coloring(spider, sc, 1));
    CHECK(sc.max_color() == 5);
    CHECK(exact(spider, 1) == 5);

    CHECK(color_tree(complete_graph(2)).max_color() == 4);
    CHECK(color_tree(Graph(3)).max_color() == 1);
    const Graph forest(7, {{0, 1}, {0, 2}, {0, 3}, {4, 5}});
    const auto fc = color_tree(forest);
    CHECK(is_valid_vi_coloring(forest, fc, 1));
    CHECK(fc.max_color() == 5);
    CHECK_THROWS_AS(color_tree(cycle_graph(3)), std::invalid_argument);

    for (int n = 2; n <= 6; ++n)
        for (const auto& g : all_graphs(n, true)) {
            if (!is_forest(g))
                continue;
            const auto c = color_tree(g);
            CHECK(is_valid_vi_coloring(g, c, 1));
            CHECK(c.max_color() == exact(g, 1));
        }
}

TEST_CASE("cycles")
{
    const auto c4 = color_cycle(4);
    CHECK(c4.max_color() == 4);
    for (Vertex v = 0; v < 4; ++v)
        CHECK(c4.vertex_color(v) != c4.incidence_color(v, (v + 1) % 4));
    CHECK(color_cycle(7).max_color() == 5);
    CHECK(color_cycle(12).max_color() == 4);
    CHECK_THROWS_AS(color_cycle(2), std::invalid_argument);
    // instances with at most 60 power-graph vertices
    for (int n = 3; n <= 20; ++n) {
        const auto c = color_cycle(n);
        CHECK(is_valid_vi_coloring(cycle_graph(n), c, 1));
        CHECK(c.max_color() == exact(cycle_graph(n), 1));
    }
    for (int n = 21; n <= 60; ++n) {
        const auto c = color_cycle(n);
        CHECK(is_valid_vi_coloring(cycle_graph(n), c, 1));
        CHECK(c.max_color() == (n % 4 == 0 ? 4 : 5));
    }
}

TEST_CASE("complete graphs")
{
    CHECK(color_complete(2).max_color() == 4);
    const auto k5 = color_complete(5);
    CHECK(is_valid_vi_coloring(complete_graph(5), k5, 2));
    CHECK(k5.max_color() == 7);
    CHECK(color_complete(6).max_color() == 8);
    for (int n = 2; n <= 7; ++n) {
        const auto c = color_complete(n);
        CHECK(is_valid_vi_coloring(complete_graph(n), c));
        CHECK(c.max_color() == exact(complete_graph(n)));
        const auto one = color_complete_vi1(n);
        CHECK(is_valid_vi_coloring(complete_graph(n), one, 1));
        CHECK(one.max_color() == 2 * n);
        CHECK(one.max_color() == *chi_vi1_via_tvi1(complete_graph(n)).value);
    }
    CHECK_THROWS_AS(color_complete(1), std::invalid_argument);
}

TEST_CASE("regular bipartite graphs")
{
    const auto check = [](const Graph& g, int matching_colors, int dynamic_colors, int best) {
        const auto parts = *find_bipartition(g);
        const auto a = color_regular_bipartite_matching(g, parts);
        CHECK(is_valid_vi_coloring(g, a));
        CHECK(a.max_color() <= matching_colors);
        if (dynamic_colors > 0) {
            const auto b = color_regular_bipartite_dynamic(g, parts);
            CHECK(is_valid_vi_coloring(g, b));
            CHECK(b.max_color() <= dynamic_colors);
        }
        const auto c = color_regular_bipartite(g, parts);
        CHECK(is_valid_vi_coloring(g, c));
        CHECK(c.max_color() == best);
    };
    check(complete_bipartite_graph(4, 4), 7, 8, 7);
    check(complete_bipartite_graph(5, 5), 8, 10, 8);

    // 4-regular circulant on 8 + 8 vertices: i ~ 8 + (i + d) mod 8 for d < 4
    std::vector<Edge> es;
    for (int i = 0; i < 8; ++i)
        for (int d = 0; d < 4; ++d)
            es.push_back(make_edge(i, 8 + (i + d) % 8));
    check(Graph(16, es), 11, 8, 8);

    check(cycle_graph(8), 7, 0, 7);  // 2-regular: matching route only
    CHECK_THROWS_AS(color_regular_bipartite_dynamic(cycle_graph(8), *find_bipartition(cycle_graph(8))),
                    std::invalid_argument);
    CHECK_THROWS_AS(color_regular_bipartite(path_graph(4), *find_bipartition(path_graph(4))), std::invalid_argument);
}

TEST_CASE("complete bipartite graphs")
{
    CHECK(color_complete_bipartite(5, 2).max_color() == 7);
    CHECK(color_complete_bipartite(3, 3).max_color() == 6);
    CHECK(color_complete_bipartite(4, 1).max_color() == 6);
    CHECK(color_complete_bipartite_vi1(2, 2).max_color() == 4);
    CHECK(color_complete_bipartite_vi1(3, 2).max_color() == 5);
    CHECK(color_complete_bipartite_vi1(4, 4).max_color() == 8);
    CHECK(*chi_vi1_via_tvi1(complete_bipartite_graph(4, 4)).value == 8);
    CHECK_THROWS_AS(color_complete_bipartite(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(color_complete_bipartite_vi1(3, 1), std::invalid_argument);

    for (int n = 1; n <= 12; ++n)
        for (int m = 1; m <= n; ++m) {
            const Graph g = complete_bipartite_graph(n, m);
            const auto c = color_complete_bipartite(n, m);
            CHECK(is_valid_vi_coloring(g, c));
            CHECK(c.max_color() == (n == 1 ? 4 : m <= 2 ? n + 2 : n + 3));
            if (m >= 2) {
                const auto one = color_complete_bipartite_vi1(n, m);
                CHECK(is_valid_vi_coloring(g, one, 1));
                CHECK(one.max_color() == n + m);
            }
        }
}

TEST_CASE("complete bipartite constructions are optimal")
{
    // all K_{n,m} whose 3/3-power has at most 60 vertices. The exact solver
    // cannot refute n+2 colors for four of them within its budget;
    // tests/python decides those with a SAT solver instead.
    const std::set<std::pair<int, int>> out_of_budget = {{6, 3}, {6, 4}, {7, 3}, {8, 3}};
    for (int n = 1; n <= 29; ++n)
        for (int m = 1; m <= n; ++m) {
            const Graph g = complete_bipartite_graph(n, m);
            if (n + m + 2 * n * m > 60)
                continue;
            CAPTURE(n);
            CAPTURE(m);
            if (out_of_budget.count({n, m})) {
                const auto c = chi_vi_exact(g, std::nullopt, 1000);
                CHECK(c.lower_bound.bound == n + 2);
                CHECK(color_complete_bipartite(n, m).max_color() == n + 3);
            } else {
                CHECK(color_complete_bipartite(n, m).max_color() == exact(g));
            }
            if (m >= 2)
                CHECK(color_complete_bipartite_vi1(n, m).max_color() == *chi_vi1_via_tvi1(g).value);
        }
}

TEST_CASE("restricting a coloring to a subgraph")
{
    const Graph k44 = complete_bipartite_graph(4, 4);
    const auto c = color_complete_bipartite(4, 4);
    const Graph k43 = complete_bipartite_graph(4, 3);
    const std::vector<Vertex> embed = {0, 1, 2, 3, 4, 5, 6};
    const auto r = restrict_coloring(k44, c, k43, embed);
    CHECK(is_valid_vi_coloring(k43, r));
    CHECK(r.max_color() <= c.max_color());
    CHECK(r.incidence_color(0, 4) == c.incidence_color(0, 4));
}
