#include "vicolor/conversions.hpp"

#include <set>
#include <stdexcept>

#include "vicolor/incidence.hpp"
#include "vicolor/power.hpp"
#include "vicolor/solver.hpp"

namespace vicolor {

ViColoring vi_from_g33(const Graph& g, const std::vector<int>& c)
{
    const PowerGraph p = fractional_power(g, 3, 3);
    if (!is_proper_vertex_coloring(p.graph(), c)) {
        std::string what = "coloring of G^(3/3) is not proper:";
        if (static_cast<int>(c.size()) == p.graph().vertex_count())
            for (const auto& e : p.graph().edges())
                if (c[static_cast<std::size_t>(e.u)] == c[static_cast<std::size_t>(e.v)])
                    what += " " + to_string(p.labeled.label(e.u)) + "~" + to_string(p.labeled.label(e.v));
        throw std::invalid_argument(what);
    }
    ViColoring out(g);
    for (Vertex id = 0; id < p.graph().vertex_count(); ++id) {
        const auto& label = p.labeled.label(id);
        const int color = c[static_cast<std::size_t>(id)];
        if (!label.internal)
            out.set_vertex(label.x, color);
        else if (label.position == 1)
            out.set_incidence(label.x, label.y, color);
        else
            out.set_incidence(label.y, label.x, color);
    }
    return out;
}

std::vector<int> g33_from_vi(const Graph& g, const ViColoring& c)
{
    const auto violations = check_vi_coloring(g, c);
    if (!violations.empty())
        throw std::invalid_argument("vi-coloring is not proper (" + std::to_string(violations.size()) + " conflicts)");
    const PowerGraph p = subdivide(g, 3);
    std::vector<int> out(static_cast<std::size_t>(p.graph().vertex_count()));
    for (Vertex id = 0; id < p.graph().vertex_count(); ++id) {
        const auto& label = p.labeled.label(id);
        if (!label.internal)
            out[static_cast<std::size_t>(id)] = c.vertex_color(label.x);
        else if (label.position == 1)
            out[static_cast<std::size_t>(id)] = c.incidence_color(label.x, label.y);
        else
            out[static_cast<std::size_t>(id)] = c.incidence_color(label.y, label.x);
    }
    return out;
}

ViColoring vi1_from_tvi1(const Graph& g, const std::vector<int>& c)
{
    const auto t = t_vi1(g);
    if (!is_proper_vertex_coloring(t.graph(), c))
        throw std::invalid_argument("coloring of T_vi,1 is not proper");
    const int n = g.vertex_count();
    ViColoring out(g);
    for (Vertex v = 0; v < n; ++v) {
        out.set_vertex(v, c[static_cast<std::size_t>(v)]);
        for (Vertex u : g.neighbors(v))
            out.set_incidence(u, v, c[static_cast<std::size_t>(n + v)]);
    }
    return out;
}

std::vector<int> tvi1_from_vi1(const Graph& g, const ViColoring& c)
{
    const auto violations = check_vi_coloring(g, c, 1);
    if (!violations.empty())
        throw std::invalid_argument("not a (k,1)-coloring (" + std::to_string(violations.size()) + " violations)");
    const int n = g.vertex_count();
    std::vector<int> out(static_cast<std::size_t>(2 * n));
    for (Vertex v = 0; v < n; ++v) {
        out[static_cast<std::size_t>(v)] = c.vertex_color(v);
        if (g.degree(v) > 0)
            out[static_cast<std::size_t>(n + v)] = c.incidence_color(g.neighbors(v).front(), v);
        else
            out[static_cast<std::size_t>(n + v)] = c.vertex_color(v) == 1 ? 2 : 1;
    }
    return out;
}

ViColoring vi_from_element_colors(const Graph& g, const std::vector<int>& colors)
{
    const auto elems = elements(g);
    if (colors.size() != elems.size())
        throw std::invalid_argument("element color vector has wrong size");
    ViColoring out(g);
    for (std::size_t i = 0; i < elems.size(); ++i)
        out.set(elems[i], colors[i]);
    return out;
}

std::vector<int> element_colors(const Graph& g, const ViColoring& c)
{
    std::vector<int> out;
    for (const auto& e : elements(g))
        out.push_back(c.color(e));
    return out;
}

}  // namespace vicolor
