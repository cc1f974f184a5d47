#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vicolor/coloring.hpp"
#include "vicolor/graph.hpp"

namespace vicolor {

enum class CertificateStatus { Exact, Unknown };

/// Colors of whichever element kinds the parameter colors. edge_colors is
/// parallel to Graph::edges() (edge colors of a total coloring, or the
/// class index of each edge in a star-forest partition).
struct Witness {
    std::optional<std::vector<int>> vertex_colors;
    std::optional<std::map<Incidence, int>> incidence_colors;
    std::optional<std::vector<int>> edge_colors;

    bool operator==(const Witness&) const = default;
};

/// Evidence that no coloring with fewer colors exists: a clique of the
/// conflict graph ("clique"), a completed exhaustive search refuting
/// value-1 colors ("exhaustion"), or a caller-supplied bound ("hint").
struct LowerBound {
    std::string type;
    int bound = 0;
    std::vector<std::string> members; ///< clique members, rendered as labels
    int refuted_k = 0;
    long long nodes = 0;

    bool operator==(const LowerBound&) const = default;
};

struct Certificate {
    std::string graph_g6;
    std::string parameter; ///< chi, chi_vi, chi_vi_s, chi_total, chi_incidence, star_arboricity
    std::optional<int> s;
    std::optional<int> value; ///< empty when status is Unknown
    CertificateStatus status = CertificateStatus::Unknown;
    std::optional<Witness> witness;
    LowerBound lower_bound;
    std::optional<int> upper_bound; ///< best known upper bound for Unknown results
    std::vector<std::string> notes;
    long long nodes = 0;

    bool operator==(const Certificate&) const = default;
};

/// JSON with a fixed field order; optional fields are omitted when absent.
std::string to_json(const Certificate& c, int indent = -1);
Certificate certificate_from_json(const std::string& text);

/// Witness as a ViColoring (requires vertex and incidence colors).
ViColoring witness_vi_coloring(const Graph& g, const Witness& w);
Witness make_witness(const ViColoring& c);

/// Re-checks the witness against the graph with the checker matching the
/// parameter and confirms it uses exactly `value` colors. An Unknown
/// certificate has no value; its witness, if any, must stay within
/// upper_bound colors.
bool verify_certificate(const Certificate& c);

std::string to_string(CertificateStatus s);

}  // namespace vicolor
