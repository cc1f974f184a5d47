#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "vicolor/certificate.hpp"
#include "vicolor/graph.hpp"
#include "vicolor/solver.hpp"

namespace vicolor {

/// Parameter names accepted by solve().
const std::vector<std::string>& solve_parameters();

/// Certificate for one graph. Throws std::invalid_argument for unknown
/// parameters and for inputs the parameter rejects (e.g. no edges).
Certificate solve(const Graph& g, const std::string& parameter, std::optional<int> s,
                  long long node_budget = kDefaultNodeBudget);

/// One input line of a graph stream: either a graph or the reason it was
/// not read. Blank lines and a bare ">>graph6<<" header are dropped.
struct StreamEntry {
    int line = 0; ///< 1-based
    std::optional<Graph> graph;
    std::string error;
};
std::vector<StreamEntry> read_graph_stream(std::istream& in);

struct SolveLine {
    int line = 0;
    std::optional<Certificate> certificate;
    std::string error;
};
std::vector<SolveLine> solve_stream(const std::vector<StreamEntry>& input, const std::string& parameter,
                                    std::optional<int> s, long long node_budget = kDefaultNodeBudget);

/// Three-valued verdict: holds, fails, or undecided within budget.
enum class Verdict { Holds, Fails, Unknown };
std::string to_string(Verdict v);

struct ScanRow {
    int line = 0;
    std::string graph6;
    int n = 0;
    int delta = 0;
    int degeneracy = 0;
    Certificate chi_vi;
    Certificate chi_vi1;
    std::optional<Certificate> chi_total; ///< chi(G^(2/2)), only with the total-le-vi check
    /// A failing verdict survived an independent recomputation.
    bool reverified_2d1 = false;
    bool reverified_total_le_vi = false;

    int bound() const { return 2 * delta + 1; }
    /// chi_vi <= 2 Delta + 1, decided from the certificate bounds.
    Verdict conjecture_2d1() const;
    /// chi(G^(2/2)) <= chi(G^(3/3)); Unknown when the check was not requested.
    Verdict conjecture_total_le_vi() const;
    bool budget_exhausted() const;
};

struct ScanOptions {
    int max_n = 6;
    bool check_2d1 = true;
    bool check_total_le_vi = true;
    long long node_budget = kDefaultNodeBudget;
    int threads = 0; ///< 0: hardware concurrency
};

struct ScanReport {
    std::vector<ScanRow> rows; ///< input order
    std::vector<std::string> notes; ///< skipped lines, with reasons

    int counterexamples_2d1() const;
    int counterexamples_total_le_vi() const;
    int counterexamples() const { return counterexamples_2d1() + counterexamples_total_le_vi(); }
    /// graph6 of rows with some certificate left unknown.
    std::vector<std::string> budget_exhausted() const;
};

/// Rows for connected graphs with Delta >= 2 and at most max_n vertices;
/// other entries become notes.
ScanReport scan(const std::vector<StreamEntry>& input, const ScanOptions& options);
/// Built-in catalog: all connected graphs on 3..max_n vertices (max_n <= 6).
ScanReport scan_catalog(const ScanOptions& options);
std::string to_json(const ScanReport& report, int indent = 2);

struct ConstructRequest {
    std::string family;
    std::optional<int> n;
    std::optional<int> m;
    std::optional<int> s;
    std::optional<Graph> graph; ///< for families built on an input graph
};

const std::vector<std::string>& construct_families();

/// Runs a construction and wraps its validated output. The status is exact
/// only when a clique of the conflict graph matches the colors used;
/// otherwise unknown with the construction as witness and upper bound.
Certificate construct(const ConstructRequest& request);

/// G^(1/3) in DOT with each element labeled by its color. Requires a vi
/// witness (parameters chi_vi and chi_vi_s).
std::string certificate_dot(const Certificate& c);

}  // namespace vicolor
