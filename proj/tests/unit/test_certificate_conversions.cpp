#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "vicolor/catalog.hpp"
#include "vicolor/certificate.hpp"
#include "vicolor/conversions.hpp"
#include "vicolor/exact.hpp"
#include "vicolor/incidence.hpp"
#include "vicolor/io.hpp"
#include "vicolor/power.hpp"

using namespace vicolor;

TEST_CASE("certificate JSON round trip")
{
    const std::vector<Certificate> certs = {
        chromatic_number(cycle_graph(5)),
        chi_vi_exact(cycle_graph(5)),
        chi_vi_exact(cycle_graph(5), 1),
        total_coloring_exact(complete_graph(4)),
        incidence_coloring_exact(cycle_graph(4), 1),
        star_arboricity_exact(complete_graph(4)),
        chromatic_number(graph_power(cycle_graph(7), 2), 0, 0, 1),
    };
    for (const auto& c : certs) {
        const auto text = to_json(c);
        CHECK(certificate_from_json(text) == c);
        CHECK(to_json(certificate_from_json(text)) == text);
        // field order is fixed
        CHECK(text.find("\"graph_g6\"") < text.find("\"parameter\""));
        CHECK(text.find("\"parameter\"") < text.find("\"value\""));
        CHECK(text.find("\"value\"") < text.find("\"status\""));
        CHECK(text.find("\"status\"") < text.find("\"lower_bound\""));
    }
    CHECK(certs[2].s == 1);
    CHECK(to_json(certs[6]).find("\"value\":null") != std::string::npos);
    CHECK_THROWS_AS(certificate_from_json("{\"graph_g6\": \"A_\"}"), ParseError);
    CHECK_THROWS_AS(certificate_from_json("not json"), ParseError);
}

TEST_CASE("verify_certificate rejects tampering")
{
    auto c = chi_vi_exact(cycle_graph(5));
    REQUIRE(verify_certificate(c));

    auto wrong_value = c;
    *wrong_value.value += 1;
    CHECK_FALSE(verify_certificate(wrong_value));

    auto broken = c;
    auto& inc = *broken.witness->incidence_colors;
    inc.begin()->second = std::next(inc.begin())->second;
    CHECK_FALSE(verify_certificate(broken));

    auto spread_claim = c;
    spread_claim.parameter = "chi_vi_s";
    spread_claim.s = 1;
    // the chi_vi witness of C_5 may or may not have spread 1; verify agrees with the checker
    CHECK(verify_certificate(spread_claim) ==
          is_valid_vi_coloring(cycle_graph(5), witness_vi_coloring(cycle_graph(5), *c.witness), 1));

    auto unknown = c;
    unknown.status = CertificateStatus::Unknown;
    CHECK_FALSE(verify_certificate(unknown));  // unknown with a value
    unknown.value.reset();
    CHECK_FALSE(verify_certificate(unknown));  // witness without an upper bound
    unknown.upper_bound = 5;
    CHECK(verify_certificate(unknown));
    unknown.upper_bound = 4;
    CHECK_FALSE(verify_certificate(unknown));
    unknown.witness.reset();
    unknown.upper_bound.reset();
    CHECK(verify_certificate(unknown));
}

TEST_CASE("witness conversions")
{
    const auto c = chi_vi_exact(petersen_graph(), 1, 1);
    // one search node is not enough: honest unknown without a value
    CHECK(c.status == CertificateStatus::Unknown);
    CHECK_FALSE(c.value.has_value());

    const Graph g = cycle_graph(6);
    const auto cert = chi_vi_exact(g);
    const auto vi = witness_vi_coloring(g, *cert.witness);
    CHECK(make_witness(vi) == *cert.witness);
}

TEST_CASE("3/3-power colorings and vi-colorings are mutually inverse")
{
    // the periodic 4-coloring of C_12^3 is the vi-coloring of C_4
    const Graph c4 = cycle_graph(4);
    const auto p = fractional_power(c4, 3, 3);
    std::vector<int> colors(12);
    for (int i = 0; i < 4; ++i) {
        const int j = (i + 1) % 4;
        colors[static_cast<std::size_t>(*p.labeled.index_of(SubdivisionVertex::terminal(i)))] = (3 * i) % 4 + 1;
        colors[static_cast<std::size_t>(*p.labeled.index_of(SubdivisionVertex::on_edge(i, j, 1, 3)))] =
            (3 * i + 1) % 4 + 1;
        colors[static_cast<std::size_t>(*p.labeled.index_of(SubdivisionVertex::on_edge(j, i, 1, 3)))] =
            (3 * i + 2) % 4 + 1;
    }
    const auto vi = vi_from_g33(c4, colors);
    CHECK(is_valid_vi_coloring(c4, vi, 1));
    CHECK(vi.max_color() == 4);
    CHECK(g33_from_vi(c4, vi) == colors);

    const auto one = vi_from_g33(Graph(1), {1});
    CHECK(one.vertex_colors == std::vector<int>{1});
    CHECK(one.incidence_colors.empty());

    CHECK_THROWS_AS(vi_from_g33(c4, std::vector<int>(12, 1)), std::invalid_argument);

    std::mt19937_64 rng(5);
    for (int n = 2; n <= 5; ++n)
        for (const auto& g : all_graphs(n, true)) {
            const auto q = fractional_power(g, 3, 3);
            const auto res = minimize_coloring({q.graph(), {}, 0, {}});
            REQUIRE(res.status == SearchStatus::Feasible);
            // shuffle the color names to leave the solver's canonical form
            std::vector<int> names(static_cast<std::size_t>(res.value));
            std::iota(names.begin(), names.end(), 1);
            std::shuffle(names.begin(), names.end(), rng);
            std::vector<int> shuffled;
            for (int x : res.coloring)
                shuffled.push_back(names[static_cast<std::size_t>(x - 1)]);
            const auto c = vi_from_g33(g, shuffled);
            CHECK(conflicts_direct(g, c).empty());
            CHECK(g33_from_vi(g, c) == shuffled);
            CHECK(vi_from_g33(g, g33_from_vi(g, c)) == c);
        }
}

TEST_CASE("T_vi,1 colorings and (k,1)-colorings are mutually inverse")
{
    const Graph k2 = complete_graph(2);
    const auto c = vi1_from_tvi1(k2, {1, 2, 3, 4});
    CHECK(is_valid_vi_coloring(k2, c, 1));
    CHECK(c.incidence_color(1, 0) == 3);
    CHECK(c.incidence_color(0, 1) == 4);
    CHECK(tvi1_from_vi1(k2, c) == std::vector<int>{1, 2, 3, 4});

    const Graph c6 = cycle_graph(6);
    const auto res = minimize_coloring({t_vi1(c6).graph(), {}, 0, {}});
    REQUIRE(res.value == 5);
    const auto vi = vi1_from_tvi1(c6, res.coloring);
    CHECK(is_valid_vi_coloring(c6, vi, 1));
    CHECK(tvi1_from_vi1(c6, vi) == res.coloring);

    CHECK_THROWS_AS(vi1_from_tvi1(c6, std::vector<int>(12, 1)), std::invalid_argument);
    // a valid coloring with spread 2 has no T_vi,1 image
    const auto spread2 = witness_vi_coloring(complete_graph(4), *chi_vi_exact(complete_graph(4)).witness);
    CHECK_THROWS_AS(tvi1_from_vi1(complete_graph(4), spread2), std::invalid_argument);

    for (int n = 2; n <= 5; ++n)
        for (const auto& g : all_graphs(n, true)) {
            const auto cert = chi_vi_exact(g, 1);
            const auto x = witness_vi_coloring(g, *cert.witness);
            const auto t = tvi1_from_vi1(g, x);
            CHECK(is_proper_vertex_coloring(t_vi1(g).graph(), t));
            CHECK(vi1_from_tvi1(g, t) == x);
        }
}

TEST_CASE("element color vectors")
{
    const Graph g = path_graph(3);
    const auto cert = chi_vi_exact(g);
    const auto c = witness_vi_coloring(g, *cert.witness);
    const auto flat = element_colors(g, c);
    CHECK(flat.size() == elements(g).size());
    CHECK(vi_from_element_colors(g, flat) == c);
    CHECK_THROWS_AS(vi_from_element_colors(g, {1, 2}), std::invalid_argument);
}
