#pragma once

#include <map>
#include <optional>
#include <vector>

#include "vicolor/certificate.hpp"
#include "vicolor/coloring.hpp"
#include "vicolor/graph.hpp"
#include "vicolor/solver.hpp"

namespace vicolor {

/// Conflict graph of V(G) u I(G) built from the element rules alone
/// (vertex order as in elements(g)); independent of the power construction.
Graph vi_conflict_graph(const Graph& g);

/// I_2 group id (the receiving vertex) of every element of vi_conflict_graph,
/// -1 for vertices.
std::vector<int> second_incidence_groups(const Graph& g);

/// chi(g) with witness and lower-bound evidence. Hints of 0 mean "none".
Certificate chromatic_number(const Graph& g, int lower_hint = 0, int upper_hint = 0,
                             long long node_budget = kDefaultNodeBudget);

/// chi_vi(g) (s empty) or chi_vi,s(g). Throws on edgeless graphs and on
/// s outside 1..Delta.
Certificate chi_vi_exact(const Graph& g, std::optional<int> s = std::nullopt,
                         long long node_budget = kDefaultNodeBudget);

/// chi(T_vi,1(g)), witness pulled back to a (k,1)-coloring.
Certificate chi_vi1_via_tvi1(const Graph& g, long long node_budget = kDefaultNodeBudget);

/// chi''(g) as chi(G^(2/2)); witness holds vertex and edge colors.
Certificate total_coloring_exact(const Graph& g, long long node_budget = kDefaultNodeBudget);

/// Minimum number of star forests covering E(g); witness edge_colors holds
/// the forest index (1-based) of every edge.
Certificate star_arboricity_exact(const Graph& g, long long node_budget = kDefaultNodeBudget);

/// chi_i(g), or with s the minimum over incidence colorings whose I_2(v)
/// carry at most s colors each.
Certificate incidence_coloring_exact(const Graph& g, std::optional<int> s = std::nullopt,
                                     long long node_budget = kDefaultNodeBudget);

struct ListColoringResult {
    SearchStatus status = SearchStatus::Unknown; ///< Feasible / Infeasible (exhausted) / Unknown
    std::vector<int> coloring;
    long long nodes = 0;
};

/// Proper coloring with coloring[v] in lists[v]. At most 64 distinct colors.
ListColoringResult list_coloring(const Graph& g, const std::vector<std::vector<int>>& lists,
                                 long long node_budget = kDefaultNodeBudget);

/// Exact choice number for graphs on at most 5 vertices.
int list_chromatic_number(const Graph& g);

bool is_total_coloring(const Graph& g, const std::vector<int>& vertex_colors, const std::vector<int>& edge_colors);
bool is_incidence_coloring(const Graph& g, const std::map<Incidence, int>& colors, std::optional<int> max_spread);
/// classes[i] is the forest of edge i; every class must be a star forest.
bool is_star_forest_partition(const Graph& g, const std::vector<int>& classes);

}  // namespace vicolor
