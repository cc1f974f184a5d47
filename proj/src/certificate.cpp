#include "vicolor/certificate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "vicolor/exact.hpp"
#include "vicolor/io.hpp"

namespace vicolor {

using ojson = nlohmann::ordered_json;

std::string to_string(CertificateStatus s)
{
    return s == CertificateStatus::Exact ? "exact" : "unknown";
}

namespace {

ojson witness_json(const Graph* g, const Witness& w)
{
    ojson out = ojson::object();
    if (w.vertex_colors)
        out["vertex_colors"] = *w.vertex_colors;
    if (w.incidence_colors) {
        ojson list = ojson::array();
        for (const auto& [i, c] : *w.incidence_colors)
            list.push_back({i.vertex, i.other, c});
        out["incidence_colors"] = list;
    }
    if (w.edge_colors) {
        ojson list = ojson::array();
        for (std::size_t k = 0; k < w.edge_colors->size(); ++k) {
            if (g) {
                const auto& e = g->edges().at(k);
                list.push_back({e.u, e.v, (*w.edge_colors)[k]});
            } else {
                list.push_back((*w.edge_colors)[k]);
            }
        }
        out["edge_colors"] = list;
    }
    return out;
}

}  // namespace

std::string to_json(const Certificate& c, int indent)
{
    std::optional<Graph> g;
    try {
        g = parse_graph6(c.graph_g6);
    } catch (const ParseError&) {
    }
    ojson out;
    out["graph_g6"] = c.graph_g6;
    out["parameter"] = c.parameter;
    if (c.s)
        out["s"] = *c.s;
    out["value"] = c.value ? ojson(*c.value) : ojson(nullptr);
    out["status"] = to_string(c.status);
    if (c.witness)
        out["witness"] = witness_json(g ? &*g : nullptr, *c.witness);
    ojson lb;
    lb["type"] = c.lower_bound.type;
    ojson detail;
    detail["bound"] = c.lower_bound.bound;
    if (c.lower_bound.type == "clique") {
        detail["members"] = c.lower_bound.members;
    } else if (c.lower_bound.type == "exhaustion") {
        detail["refuted_k"] = c.lower_bound.refuted_k;
        detail["nodes"] = c.lower_bound.nodes;
    }
    lb["detail"] = detail;
    out["lower_bound"] = lb;
    if (c.upper_bound)
        out["upper_bound"] = *c.upper_bound;
    out["nodes"] = c.nodes;
    if (!c.notes.empty())
        out["notes"] = c.notes;
    return out.dump(indent);
}

Certificate certificate_from_json(const std::string& text)
{
    ojson doc;
    try {
        doc = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid certificate JSON: ") + e.what(), e.byte);
    }
    try {
        Certificate c;
        c.graph_g6 = doc.at("graph_g6").get<std::string>();
        c.parameter = doc.at("parameter").get<std::string>();
        if (doc.contains("s"))
            c.s = doc.at("s").get<int>();
        if (!doc.at("value").is_null())
            c.value = doc.at("value").get<int>();
        const auto status = doc.at("status").get<std::string>();
        if (status != "exact" && status != "unknown")
            throw ParseError("unknown certificate status \"" + status + "\"", 0);
        c.status = status == "exact" ? CertificateStatus::Exact : CertificateStatus::Unknown;
        if (doc.contains("witness")) {
            const auto& w = doc.at("witness");
            Witness out;
            if (w.contains("vertex_colors"))
                out.vertex_colors = w.at("vertex_colors").get<std::vector<int>>();
            if (w.contains("incidence_colors")) {
                std::map<Incidence, int> m;
                for (const auto& row : w.at("incidence_colors"))
                    m[{row.at(0).get<int>(), row.at(1).get<int>()}] = row.at(2).get<int>();
                out.incidence_colors = m;
            }
            if (w.contains("edge_colors")) {
                std::vector<int> colors;
                for (const auto& row : w.at("edge_colors"))
                    colors.push_back(row.is_array() ? row.at(2).get<int>() : row.get<int>());
                out.edge_colors = colors;
            }
            c.witness = out;
        }
        const auto& lb = doc.at("lower_bound");
        c.lower_bound.type = lb.at("type").get<std::string>();
        const auto& detail = lb.at("detail");
        c.lower_bound.bound = detail.value("bound", 0);
        if (detail.contains("members"))
            c.lower_bound.members = detail.at("members").get<std::vector<std::string>>();
        c.lower_bound.refuted_k = detail.value("refuted_k", 0);
        c.lower_bound.nodes = detail.value("nodes", 0LL);
        if (doc.contains("upper_bound"))
            c.upper_bound = doc.at("upper_bound").get<int>();
        c.nodes = doc.value("nodes", 0LL);
        if (doc.contains("notes"))
            c.notes = doc.at("notes").get<std::vector<std::string>>();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what(), 0);
    }
}

ViColoring witness_vi_coloring(const Graph& g, const Witness& w)
{
    if (!w.vertex_colors || !w.incidence_colors)
        throw std::invalid_argument("witness lacks vertex or incidence colors");
    ViColoring c;
    c.vertex_colors = *w.vertex_colors;
    c.incidence_colors = *w.incidence_colors;
    if (static_cast<int>(c.vertex_colors.size()) != g.vertex_count())
        throw std::invalid_argument("witness vertex count does not match graph");
    return c;
}

Witness make_witness(const ViColoring& c)
{
    return {c.vertex_colors, c.incidence_colors, std::nullopt};
}

namespace {

bool uses_exactly(std::vector<int> colors, int value)
{
    if (colors.empty())
        return value == 0;
    std::set<int> distinct(colors.begin(), colors.end());
    return *distinct.begin() >= 1 && *distinct.rbegin() == value && static_cast<int>(distinct.size()) == value;
}

}  // namespace

namespace {

bool within(const std::vector<int>& colors, int value)
{
    return std::all_of(colors.begin(), colors.end(), [&](int x) { return x >= 1 && x <= value; });
}

}  // namespace

bool verify_certificate(const Certificate& c)
{
    if (c.status == CertificateStatus::Unknown) {
        if (c.value)
            return false;
        if (!c.witness)
            return true;
        // an unknown result may still carry a witness for its upper bound
        if (!c.upper_bound)
            return false;
    } else {
        if (!c.value)
            return false;
        if (!c.witness)
            return true;
    }
    const Graph g = parse_graph6(c.graph_g6);
    const Witness& w = *c.witness;
    const int value = c.value ? *c.value : *c.upper_bound;
    const bool exact = c.status == CertificateStatus::Exact;
    const auto fits = [&](const std::vector<int>& colors, int k) {
        return exact ? vicolor::uses_exactly(colors, k) : within(colors, k);
    };
    try {
        if (c.parameter == "chi") {
            if (!w.vertex_colors || !is_proper_vertex_coloring(g, *w.vertex_colors))
                return false;
            return fits(*w.vertex_colors, value);
        }
        if (c.parameter == "chi_vi" || c.parameter == "chi_vi_s") {
            const ViColoring vi = witness_vi_coloring(g, w);
            if (!is_valid_vi_coloring(g, vi, c.s))
                return false;
            std::vector<int> all = vi.vertex_colors;
            for (const auto& [i, col] : vi.incidence_colors)
                all.push_back(col);
            return fits(all, value);
        }
        if (c.parameter == "chi_total") {
            if (!w.vertex_colors || !w.edge_colors || !is_total_coloring(g, *w.vertex_colors, *w.edge_colors))
                return false;
            std::vector<int> all = *w.vertex_colors;
            all.insert(all.end(), w.edge_colors->begin(), w.edge_colors->end());
            return fits(all, value);
        }
        if (c.parameter == "chi_incidence") {
            if (!w.incidence_colors || !is_incidence_coloring(g, *w.incidence_colors, c.s))
                return false;
            std::vector<int> all;
            for (const auto& [i, col] : *w.incidence_colors)
                all.push_back(col);
            return fits(all, value);
        }
        if (c.parameter == "star_arboricity") {
            if (!w.edge_colors || !is_star_forest_partition(g, *w.edge_colors))
                return false;
            return fits(*w.edge_colors, value);
        }
    } catch (const std::exception&) {
        return false;
    }
    return false;
}

}  // namespace vicolor
