#include "vicolor/workflows.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "vicolor/catalog.hpp"
#include "vicolor/constructive.hpp"
#include "vicolor/conversions.hpp"
#include "vicolor/exact.hpp"
#include "vicolor/io.hpp"
#include "vicolor/power.hpp"
#include "vicolor/structure.hpp"

namespace vicolor {

namespace {

constexpr int kNoBound = std::numeric_limits<int>::max();

int lower_of(const Certificate& c) { return c.value ? *c.value : c.lower_bound.bound; }
int upper_of(const Certificate& c) { return c.value ? *c.value : c.upper_bound.value_or(kNoBound); }

// a <= b for two certified quantities
Verdict at_most(int a_lo, int a_hi, int b_lo, int b_hi)
{
    if (a_hi <= b_lo)
        return Verdict::Holds;
    if (b_hi != kNoBound && a_lo > b_hi)
        return Verdict::Fails;
    return Verdict::Unknown;
}

Certificate vi_via_power(const Graph& g, long long budget)
{
    return chromatic_number(fractional_power(g, 3, 3).graph(), 0, 0, budget);
}

void fill_row(ScanRow& row, const Graph& g, const ScanOptions& opt)
{
    row.chi_vi = chi_vi_exact(g, std::nullopt, opt.node_budget);
    row.chi_vi1 = chi_vi_exact(g, 1, opt.node_budget);
    if (opt.check_total_le_vi)
        row.chi_total = total_coloring_exact(g, opt.node_budget);

    // a failure only counts once a second, independent computation agrees
    if (opt.check_2d1 && row.conjecture_2d1() == Verdict::Fails) {
        const auto again = vi_via_power(g, opt.node_budget);
        row.reverified_2d1 = verify_certificate(row.chi_vi) && verify_certificate(again) &&
                         at_most(lower_of(again), upper_of(again), row.bound(), row.bound()) == Verdict::Fails;
    }
    if (opt.check_total_le_vi && row.conjecture_total_le_vi() == Verdict::Fails) {
        const auto total = chromatic_number(fractional_power(g, 2, 2).graph(), 0, 0, opt.node_budget);
        const auto vi = vi_via_power(g, opt.node_budget);
        row.reverified_total_le_vi = verify_certificate(*row.chi_total) && verify_certificate(total) &&
                         verify_certificate(vi) &&
                         at_most(lower_of(total), upper_of(total), lower_of(vi), upper_of(vi)) == Verdict::Fails;
    }
}

template <class F>
void parallel_for(std::size_t count, int threads, F&& body)
{
    if (threads <= 0)
        threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(threads), std::max<std::size_t>(count, 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++)
            body(i);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
}

nlohmann::ordered_json value_json(const Certificate& c)
{
    if (c.value)
        return *c.value;
    nlohmann::ordered_json j;
    j["lower_bound"] = c.lower_bound.bound;
    j["upper_bound"] = c.upper_bound ? nlohmann::ordered_json(*c.upper_bound) : nlohmann::ordered_json();
    return j;
}

int require_int(const std::optional<int>& x, const char* name, const std::string& family)
{
    if (!x)
        throw std::invalid_argument("family " + family + " needs --" + name);
    return *x;
}

const Graph& require_graph(const ConstructRequest& r)
{
    if (!r.graph)
        throw std::invalid_argument("family " + r.family + " needs an input graph");
    return *r.graph;
}

}  // namespace

const std::vector<std::string>& solve_parameters()
{
    static const std::vector<std::string> names = {"chi",           "chi_vi",          "chi_vi_s",
                                                   "chi_total",     "chi_incidence",   "star_arboricity"};
    return names;
}

Certificate solve(const Graph& g, const std::string& parameter, std::optional<int> s, long long node_budget)
{
    if (parameter == "chi")
        return chromatic_number(g, 0, 0, node_budget);
    if (parameter == "chi_vi")
        return chi_vi_exact(g, s, node_budget);
    if (parameter == "chi_vi_s") {
        if (!s)
            throw std::invalid_argument("chi_vi_s needs --s");
        return chi_vi_exact(g, s, node_budget);
    }
    if (parameter == "chi_total")
        return total_coloring_exact(g, node_budget);
    if (parameter == "chi_incidence")
        return incidence_coloring_exact(g, s, node_budget);
    if (parameter == "star_arboricity")
        return star_arboricity_exact(g, node_budget);
    throw std::invalid_argument("unknown parameter " + parameter);
}

std::vector<StreamEntry> read_graph_stream(std::istream& in)
{
    std::vector<StreamEntry> out;
    std::string text;
    for (int line = 1; std::getline(in, text); ++line) {
        while (!text.empty() && (text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
            text.pop_back();
        if (text.empty() || text == ">>graph6<<")
            continue;
        StreamEntry e;
        e.line = line;
        try {
            e.graph = parse_graph(text);
        } catch (const std::exception& ex) {
            e.error = ex.what();
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<SolveLine> solve_stream(const std::vector<StreamEntry>& input, const std::string& parameter,
                                    std::optional<int> s, long long node_budget)
{
    std::vector<SolveLine> out;
    for (const auto& e : input) {
        SolveLine r;
        r.line = e.line;
        if (!e.graph) {
            r.error = e.error;
        } else {
            try {
                r.certificate = solve(*e.graph, parameter, s, node_budget);
            } catch (const std::invalid_argument& ex) {
                r.error = ex.what();
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Holds:
        return "holds";
    case Verdict::Fails:
        return "fails";
    case Verdict::Unknown:
        return "unknown";
    }
    return "unknown";
}

Verdict ScanRow::conjecture_2d1() const
{
    return at_most(lower_of(chi_vi), upper_of(chi_vi), bound(), bound());
}

Verdict ScanRow::conjecture_total_le_vi() const
{
    if (!chi_total)
        return Verdict::Unknown;
    return at_most(lower_of(*chi_total), upper_of(*chi_total), lower_of(chi_vi), upper_of(chi_vi));
}

bool ScanRow::budget_exhausted() const
{
    return chi_vi.status == CertificateStatus::Unknown || chi_vi1.status == CertificateStatus::Unknown ||
           (chi_total && chi_total->status == CertificateStatus::Unknown);
}

int ScanReport::counterexamples_2d1() const
{
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) {
        return r.conjecture_2d1() == Verdict::Fails && r.reverified_2d1;
    }));
}

int ScanReport::counterexamples_total_le_vi() const
{
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) {
        return r.conjecture_total_le_vi() == Verdict::Fails && r.reverified_total_le_vi;
    }));
}

std::vector<std::string> ScanReport::budget_exhausted() const
{
    std::vector<std::string> out;
    for (const auto& r : rows)
        if (r.budget_exhausted())
            out.push_back(r.graph6);
    return out;
}

ScanReport scan(const std::vector<StreamEntry>& input, const ScanOptions& options)
{
    ScanReport report;
    std::vector<const StreamEntry*> accepted;
    for (const auto& e : input) {
        const std::string where = "line " + std::to_string(e.line) + ": ";
        if (!e.graph) {
            report.notes.push_back(where + "unreadable (" + e.error + ")");
        } else if (e.graph->vertex_count() > options.max_n) {
            report.notes.push_back(where + "skipped, more than " + std::to_string(options.max_n) + " vertices");
        } else if (!is_connected(*e.graph)) {
            report.notes.push_back(where + "skipped, not connected");
        } else if (e.graph->max_degree() < 2) {
            report.notes.push_back(where + "skipped, maximum degree below 2");
        } else {
            accepted.push_back(&e);
        }
    }
    report.rows.resize(accepted.size());
    std::vector<std::string> errors(accepted.size());
    parallel_for(accepted.size(), options.threads, [&](std::size_t i) {
        const Graph& g = *accepted[i]->graph;
        ScanRow& row = report.rows[i];
        row.line = accepted[i]->line;
        row.graph6 = to_graph6(g);
        row.n = g.vertex_count();
        row.delta = g.max_degree();
        row.degeneracy = degeneracy_ordering(g).degeneracy;
        try {
            fill_row(row, g, options);
        } catch (const std::exception& ex) {
            errors[i] = ex.what();
        }
    });
    for (std::size_t i = 0; i < errors.size(); ++i)
        if (!errors[i].empty())
            throw std::runtime_error("line " + std::to_string(report.rows[i].line) + ": " + errors[i]);
    return report;
}

ScanReport scan_catalog(const ScanOptions& options)
{
    if (options.max_n > 6)
        throw std::invalid_argument("the built-in catalog covers n <= 6; pass larger catalogs as graph6 input");
    std::vector<StreamEntry> input;
    int line = 0;
    for (int n = 3; n <= options.max_n; ++n)
        for (auto& g : all_graphs(n, true)) {
            StreamEntry e;
            e.line = ++line;
            e.graph = std::move(g);
            input.push_back(std::move(e));
        }
    return scan(input, options);
}

std::string to_json(const ScanReport& report, int indent)
{
    using ojson = nlohmann::ordered_json;
    ojson rows = ojson::array();
    for (const auto& r : report.rows) {
        ojson j;
        j["line"] = r.line;
        j["graph6"] = r.graph6;
        j["n"] = r.n;
        j["delta"] = r.delta;
        j["degeneracy"] = r.degeneracy;
        j["chi_vi"] = value_json(r.chi_vi);
        j["chi_vi1"] = value_json(r.chi_vi1);
        j["chi_total"] = r.chi_total ? value_json(*r.chi_total) : ojson();
        j["bound_2d1"] = r.bound();
        j["verdict_2d1"] = to_string(r.conjecture_2d1());
        j["verdict_total_le_vi"] = r.chi_total ? ojson(to_string(r.conjecture_total_le_vi())) : ojson();
        rows.push_back(std::move(j));
    }
    ojson out;
    out["rows"] = std::move(rows);
    ojson counts;
    counts["rows"] = report.rows.size();
    counts["counterexamples_2d1"] = report.counterexamples_2d1();
    counts["counterexamples_total_le_vi"] = report.counterexamples_total_le_vi();
    counts["budget_exhausted"] = report.budget_exhausted().size();
    counts["skipped"] = report.notes.size();
    out["counts"] = std::move(counts);
    out["budget_exhausted"] = report.budget_exhausted();
    out["notes"] = report.notes;
    return out.dump(indent);
}

const std::vector<std::string>& construct_families()
{
    static const std::vector<std::string> names = {"tree",         "cycle",       "complete",     "complete-bipartite",
                                                   "regular-bipartite", "k-degenerate", "3-degenerate", "blocks"};
    return names;
}

Certificate construct(const ConstructRequest& r)
{
    const std::string& f = r.family;
    Graph g;
    ViColoring c;
    std::optional<int> s;
    if (f == "tree") {
        g = require_graph(r);
        c = color_tree(g);
        s = 1;
    } else if (f == "cycle") {
        const int n = require_int(r.n, "n", f);
        g = cycle_graph(n);
        c = color_cycle(n);
        s = 1;
    } else if (f == "complete") {
        const int n = require_int(r.n, "n", f);
        g = complete_graph(n);
        if (r.s == 1) {
            c = color_complete_vi1(n);
            s = 1;
        } else {
            c = color_complete(n);
        }
    } else if (f == "complete-bipartite") {
        const int n = require_int(r.n, "n", f);
        const int m = require_int(r.m, "m", f);
        g = complete_bipartite_graph(n, m);
        if (r.s == 1) {
            c = color_complete_bipartite_vi1(n, m);
            s = 1;
        } else {
            c = color_complete_bipartite(n, m);
        }
    } else if (f == "regular-bipartite") {
        g = require_graph(r);
        const auto parts = find_bipartition(g);
        if (!parts)
            throw std::invalid_argument("input graph is not bipartite");
        c = color_regular_bipartite(g, *parts);
    } else if (f == "k-degenerate") {
        g = require_graph(r);
        const int k = r.s.value_or(degeneracy_ordering(g).degeneracy);
        c = color_k_degenerate(g, k);
        s = k;
    } else if (f == "3-degenerate") {
        g = require_graph(r);
        c = color_3_degenerate(g);
        s = 3;
    } else if (f == "blocks") {
        g = require_graph(r);
        c = color_blocks(g);
        s = 1;
    } else {
        throw std::invalid_argument("unknown family " + f);
    }
    if (s && g.edge_count() > 0)
        s = std::min(*s, g.max_degree());

    Certificate cert;
    cert.graph_g6 = to_graph6(g);
    cert.parameter = s ? "chi_vi_s" : "chi_vi";
    cert.s = s;
    cert.witness = make_witness(c);
    cert.notes.push_back("constructed by family " + f);
    const int used = c.max_color();
    const auto elems = elements(g);
    const auto clique = max_clique(vi_conflict_graph(g));
    cert.lower_bound.type = "clique";
    cert.lower_bound.bound = static_cast<int>(clique.members.size());
    for (Vertex v : clique.members)
        cert.lower_bound.members.push_back(to_string(elems[static_cast<std::size_t>(v)]));
    if (cert.lower_bound.bound == used) {
        cert.status = CertificateStatus::Exact;
        cert.value = used;
    } else {
        cert.status = CertificateStatus::Unknown;
        cert.upper_bound = used;
        cert.notes.push_back("optimality not certified: clique bound below the colors used");
    }
    if (!verify_certificate(cert))
        throw ConstructionError("construction certificate for " + f + " does not verify");
    return cert;
}

std::string certificate_dot(const Certificate& c)
{
    if (c.parameter != "chi_vi" && c.parameter != "chi_vi_s")
        throw std::invalid_argument("DOT export needs a vi-simultaneous coloring certificate");
    if (!c.witness)
        throw std::invalid_argument("certificate has no witness; export it as JSON");
    const Graph g = parse_graph6(c.graph_g6);
    const auto colors = g33_from_vi(g, witness_vi_coloring(g, *c.witness));
    return power_graph_dot(fractional_power(g, 1, 3), colors);
}

}  // namespace vicolor
