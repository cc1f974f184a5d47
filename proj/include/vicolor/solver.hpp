#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vicolor/graph.hpp"

namespace vicolor {

constexpr long long kDefaultNodeBudget = 50'000'000;
constexpr int kMaxSolverColors = 64;

/// Vertex coloring problem with optional side constraints.
///
/// `groups[v]` names the group of vertex v (-1 for none); the vertices of a
/// group may use at most `group_limit` distinct colors together.
/// `domains[v]`, when non-empty, restricts vertex v to the colors whose bit
/// (color - 1) is set; a problem with domains is not color-symmetric.
struct ColoringProblem {
    Graph graph;
    std::vector<int> groups;
    int group_limit = 0;
    std::vector<std::uint64_t> domains;
};

enum class SearchStatus { Feasible, Infeasible, Unknown };

struct DecisionResult {
    SearchStatus status = SearchStatus::Unknown;
    std::vector<int> coloring; ///< colors 1..k per vertex when Feasible
    long long nodes = 0;
};

/// Depth-first search for a coloring with colors 1..k. Branches on the
/// uncolored vertex with fewest remaining colors (ties: smallest id),
/// tries colors in increasing order, and in the symmetric case opens at
/// most one previously unused color per node. Stops with Unknown once
/// `node_budget` assignments have been made.
DecisionResult decide_coloring(const ColoringProblem& p, int k, long long node_budget = kDefaultNodeBudget);

/// Largest clique: exact branch and bound for at most 60 vertices, greedy
/// otherwise. `exact` tells which one ran.
struct CliqueResult {
    std::vector<Vertex> members;
    bool exact = false;
};
CliqueResult max_clique(const Graph& g);

struct MinimizeResult {
    SearchStatus status = SearchStatus::Unknown; ///< Feasible means optimum proven
    int value = 0;                 ///< optimum, or best upper bound when Unknown
    std::vector<int> coloring;     ///< witness using exactly `value` colors
    int lower_bound = 0;
    std::vector<Vertex> clique;    ///< clique backing lower_bound (when it does)
    /// k = value-1 refuted by exhaustive search (when the clique is smaller)
    std::optional<int> refuted_k;
    long long refutation_nodes = 0;
    long long nodes = 0;
};

/// Minimum k for which decide_coloring succeeds. `lower_hint` and
/// `upper_hint` (0 for none) narrow the range; the clique size is used as
/// lower bound as well. The budget applies to the whole minimization.
MinimizeResult minimize_coloring(const ColoringProblem& p, int lower_hint = 0, int upper_hint = 0,
                                 long long node_budget = kDefaultNodeBudget);

/// Plain proper coloring check for vertex colorings.
bool is_proper_vertex_coloring(const Graph& g, const std::vector<int>& colors);

}  // namespace vicolor
