#include "vicolor/coloring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "vicolor/power.hpp"

namespace vicolor {

std::string to_string(const Element& e)
{
    return e.is_vertex() ? std::to_string(e.vertex) : to_string(e.incidence());
}

ViColoring::ViColoring(const Graph& g) : vertex_colors(static_cast<std::size_t>(g.vertex_count()), 0)
{
    for (const auto& i : incidences(g))
        incidence_colors.emplace(i, 0);
}

int ViColoring::color(const Element& e) const
{
    return e.is_vertex() ? vertex_color(e.vertex) : incidence_color(e.vertex, e.other);
}

int ViColoring::incidence_color(Vertex v, Vertex w) const
{
    auto it = incidence_colors.find({v, w});
    if (it == incidence_colors.end())
        throw std::out_of_range("incidence " + to_string(Incidence{v, w}) + " not in coloring");
    return it->second;
}

void ViColoring::set(const Element& e, int color)
{
    if (e.is_vertex())
        set_vertex(e.vertex, color);
    else
        set_incidence(e.vertex, e.other, color);
}

void ViColoring::set_incidence(Vertex v, Vertex w, int color)
{
    auto it = incidence_colors.find({v, w});
    if (it == incidence_colors.end())
        throw std::out_of_range("incidence " + to_string(Incidence{v, w}) + " not in coloring");
    it->second = color;
}

int ViColoring::max_color() const
{
    int k = 0;
    for (int c : vertex_colors)
        k = std::max(k, c);
    for (const auto& [i, c] : incidence_colors)
        k = std::max(k, c);
    return k;
}

int ViColoring::distinct_colors() const
{
    std::set<int> seen(vertex_colors.begin(), vertex_colors.end());
    for (const auto& [i, c] : incidence_colors)
        seen.insert(c);
    seen.erase(0);
    return static_cast<int>(seen.size());
}

std::vector<Element> ViColoring::uncolored() const
{
    std::vector<Element> out;
    for (std::size_t v = 0; v < vertex_colors.size(); ++v)
        if (vertex_colors[v] <= 0)
            out.push_back(Element::of(static_cast<Vertex>(v)));
    for (const auto& [i, c] : incidence_colors)
        if (c <= 0)
            out.push_back(Element::of(i));
    return out;
}

std::vector<Element> elements(const Graph& g)
{
    std::vector<Element> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out.push_back(Element::of(v));
    for (const auto& i : incidences(g))
        out.push_back(Element::of(i));
    return out;
}

std::string to_string(ViolationKind k)
{
    switch (k) {
    case ViolationKind::AdjacentVertices:
        return "adjacent-vertices";
    case ViolationKind::VertexIncidence:
        return "vertex-incidence";
    case ViolationKind::IncidenceSameVertex:
        return "incidence-same-vertex";
    case ViolationKind::IncidenceSameEdge:
        return "incidence-same-edge";
    case ViolationKind::IncidenceConsecutive:
        return "incidence-consecutive";
    case ViolationKind::SpreadExceeded:
        return "spread-exceeded";
    }
    return "unknown";
}

namespace {

void require_total(const Graph& g, const ViColoring& c)
{
    if (static_cast<int>(c.vertex_colors.size()) != g.vertex_count())
        throw std::invalid_argument("coloring has " + std::to_string(c.vertex_colors.size()) +
                                    " vertex entries for a graph on " + std::to_string(g.vertex_count()) +
                                    " vertices");
    std::vector<Element> missing;
    for (const auto& e : elements(g)) {
        if (!e.is_vertex() && !c.incidence_colors.contains(e.incidence())) {
            missing.push_back(e);
            continue;
        }
        if (c.color(e) <= 0)
            missing.push_back(e);
    }
    for (const auto& [i, col] : c.incidence_colors)
        if (!g.has_edge(i.vertex, i.other))
            throw std::invalid_argument("coloring names incidence " + to_string(i) + " outside the graph");
    if (!missing.empty()) {
        std::string what = "coloring is partial; uncolored:";
        for (const auto& e : missing)
            what += " " + to_string(e);
        throw IncompleteColoring(what, std::move(missing));
    }
}

Element element_of(const SubdivisionVertex& s)
{
    if (!s.internal)
        return Element::of(s.x);
    return s.position == 1 ? Element{s.x, s.y} : Element{s.y, s.x};
}

}  // namespace

std::optional<ViolationKind> conflict_kind(const Graph& g, const Element& a, const Element& b)
{
    if (a.is_vertex() && b.is_vertex())
        return g.has_edge(a.vertex, b.vertex) ? std::optional(ViolationKind::AdjacentVertices) : std::nullopt;
    if (a.is_vertex() || b.is_vertex()) {
        const Element& v = a.is_vertex() ? a : b;
        const Element& i = a.is_vertex() ? b : a;
        if (v.vertex == i.vertex || v.vertex == i.other)
            return ViolationKind::VertexIncidence;
        return std::nullopt;
    }
    if (a.vertex == b.vertex)
        return ViolationKind::IncidenceSameVertex;
    if (a.vertex == b.other && a.other == b.vertex)
        return ViolationKind::IncidenceSameEdge;
    if (b.vertex == a.other || a.vertex == b.other)
        return ViolationKind::IncidenceConsecutive;
    return std::nullopt;
}

std::vector<Element> conflicting_elements(const Graph& g, const Element& e)
{
    std::vector<Element> out;
    if (e.is_vertex()) {
        for (Vertex w : g.neighbors(e.vertex)) {
            out.push_back(Element::of(w));
            out.push_back({e.vertex, w});
            out.push_back({w, e.vertex});
        }
    } else {
        const Vertex v = e.vertex;
        const Vertex w = e.other;
        out.push_back(Element::of(v));
        out.push_back(Element::of(w));
        for (Vertex x : g.neighbors(v)) {
            if (x != w)
                out.push_back({v, x});
            out.push_back({x, v});
        }
        for (Vertex x : g.neighbors(w))
            out.push_back({w, x});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::pair<Element, Element>> conflicts_via_power(const Graph& g, const ViColoring& c)
{
    require_total(g, c);
    const PowerGraph p = fractional_power(g, 3, 3);
    std::vector<Element> elems;
    std::vector<int> colors;
    for (const auto& label : p.labeled.labels()) {
        elems.push_back(element_of(label));
        colors.push_back(c.color(elems.back()));
    }
    std::vector<std::pair<Element, Element>> out;
    for (const auto& e : p.graph().edges()) {
        if (colors[static_cast<std::size_t>(e.u)] != colors[static_cast<std::size_t>(e.v)])
            continue;
        const auto& a = elems[static_cast<std::size_t>(e.u)];
        const auto& b = elems[static_cast<std::size_t>(e.v)];
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Violation> conflicts_direct(const Graph& g, const ViColoring& c)
{
    require_total(g, c);
    const auto elems = elements(g);
    std::vector<Violation> out;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            if (c.color(elems[i]) != c.color(elems[j]))
                continue;
            if (auto kind = conflict_kind(g, elems[i], elems[j]))
                out.push_back({*kind, std::min(elems[i], elems[j]), std::max(elems[i], elems[j]), 0});
        }
    }
    std::sort(out.begin(), out.end(), [](const Violation& x, const Violation& y) {
        return std::tie(x.first, x.second) < std::tie(y.first, y.second);
    });
    return out;
}

std::vector<Violation> check_vi_coloring(const Graph& g, const ViColoring& c, std::optional<int> max_spread_bound)
{
    auto direct = conflicts_direct(g, c);
    const auto power = conflicts_via_power(g, c);
    std::vector<std::pair<Element, Element>> direct_pairs;
    for (const auto& v : direct)
        direct_pairs.emplace_back(v.first, v.second);
    if (direct_pairs != power)
        throw std::logic_error("vi-coloring checkers disagree: " + std::to_string(direct_pairs.size()) +
                               " direct conflicts vs " + std::to_string(power.size()) + " power-graph conflicts");
    if (max_spread_bound) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            const int s = spread(g, c, v);
            if (s > *max_spread_bound)
                direct.push_back({ViolationKind::SpreadExceeded, Element::of(v), Element::of(v), s});
        }
    }
    return direct;
}

bool is_valid_vi_coloring(const Graph& g, const ViColoring& c, std::optional<int> max_spread_bound)
{
    return check_vi_coloring(g, c, max_spread_bound).empty();
}

int spread(const Graph& g, const ViColoring& c, Vertex v)
{
    std::set<int> seen;
    for (Vertex w : g.neighbors(v))
        seen.insert(c.incidence_color(w, v));
    return static_cast<int>(seen.size());
}

int max_spread(const Graph& g, const ViColoring& c)
{
    int out = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out = std::max(out, spread(g, c, v));
    return out;
}

ViColoring restrict_coloring(const Graph& super, const ViColoring& c, const Graph& sub,
                             std::span<const Vertex> embedding)
{
    if (static_cast<int>(embedding.size()) != sub.vertex_count())
        throw std::invalid_argument("embedding size does not match subgraph");
    ViColoring out(sub);
    for (Vertex v = 0; v < sub.vertex_count(); ++v)
        out.set_vertex(v, c.vertex_color(embedding[static_cast<std::size_t>(v)]));
    for (const auto& i : incidences(sub)) {
        const Vertex a = embedding[static_cast<std::size_t>(i.vertex)];
        const Vertex b = embedding[static_cast<std::size_t>(i.other)];
        if (!super.has_edge(a, b))
            throw std::invalid_argument("subgraph edge missing from supergraph");
        out.set_incidence(i.vertex, i.other, c.incidence_color(a, b));
    }
    return out;
}

ViColoring compact_colors(const Graph& g, const ViColoring& c)
{
    std::map<int, int> rename;
    ViColoring out(g);
    for (const auto& e : elements(g)) {
        const int old = c.color(e);
        auto [it, inserted] = rename.emplace(old, static_cast<int>(rename.size()) + 1);
        out.set(e, it->second);
    }
    return out;
}

}  // namespace vicolor
