#include "vicolor/exact.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>

#include "vicolor/conversions.hpp"
#include "vicolor/incidence.hpp"
#include "vicolor/io.hpp"
#include "vicolor/power.hpp"
#include "vicolor/structure.hpp"

namespace vicolor {

namespace {

Certificate certificate_from(const Graph& g, std::string parameter, std::optional<int> s, const MinimizeResult& r,
                             const std::function<std::string(Vertex)>& label,
                             const std::function<Witness(const std::vector<int>&)>& witness)
{
    Certificate c;
    c.graph_g6 = to_graph6(g);
    c.parameter = std::move(parameter);
    c.s = s;
    c.nodes = r.nodes;
    if (r.status == SearchStatus::Infeasible)
        throw std::logic_error("coloring problem without any solution");
    if (r.status == SearchStatus::Unknown) {
        c.status = CertificateStatus::Unknown;
        if (r.value > 0)
            c.upper_bound = r.value;
        c.lower_bound.type = "clique";
        c.lower_bound.bound = static_cast<int>(r.clique.size());
        for (Vertex v : r.clique)
            c.lower_bound.members.push_back(label(v));
        c.notes.push_back("node budget exhausted");
        return c;
    }
    c.status = CertificateStatus::Exact;
    c.value = r.value;
    c.witness = witness(r.coloring);
    c.lower_bound.bound = r.value;
    if (r.refuted_k) {
        c.lower_bound.type = "exhaustion";
        c.lower_bound.refuted_k = *r.refuted_k;
        c.lower_bound.nodes = r.refutation_nodes;
    } else if (static_cast<int>(r.clique.size()) == r.value) {
        c.lower_bound.type = "clique";
        for (Vertex v : r.clique)
            c.lower_bound.members.push_back(label(v));
    } else {
        c.lower_bound.type = "hint";
    }
    return c;
}

void require_edges(const Graph& g)
{
    if (g.edge_count() == 0)
        throw std::invalid_argument("graph has no edges, hence no incidences");
}

void require_spread(const Graph& g, std::optional<int> s)
{
    if (s && (*s < 1 || *s > g.max_degree()))
        throw std::invalid_argument("spread bound s must lie in 1..Delta = " + std::to_string(g.max_degree()));
}

}  // namespace

Graph vi_conflict_graph(const Graph& g)
{
    const auto elems = elements(g);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (conflict_kind(g, elems[i], elems[j]))
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    return Graph(static_cast<int>(elems.size()), std::move(edges));
}

std::vector<int> second_incidence_groups(const Graph& g)
{
    std::vector<int> out;
    for (const auto& e : elements(g))
        out.push_back(e.is_vertex() ? -1 : e.other);
    return out;
}

Certificate chromatic_number(const Graph& g, int lower_hint, int upper_hint, long long node_budget)
{
    if (lower_hint < 0 || upper_hint < 0 || (upper_hint > 0 && lower_hint > upper_hint))
        throw std::invalid_argument("hints must satisfy 0 <= lower <= upper");
    ColoringProblem p{g, {}, 0, {}};
    const auto r = minimize_coloring(p, lower_hint, upper_hint, node_budget);
    return certificate_from(
        g, "chi", std::nullopt, r, [](Vertex v) { return std::to_string(v); },
        [](const std::vector<int>& colors) { return Witness{colors, std::nullopt, std::nullopt}; });
}

Certificate chi_vi_exact(const Graph& g, std::optional<int> s, long long node_budget)
{
    require_edges(g);
    require_spread(g, s);
    ColoringProblem p{vi_conflict_graph(g), {}, 0, {}};
    if (s) {
        p.groups = second_incidence_groups(g);
        p.group_limit = *s;
    }
    const auto elems = elements(g);
    const auto r = minimize_coloring(p, 0, 0, node_budget);
    return certificate_from(
        g, s ? "chi_vi_s" : "chi_vi", s, r,
        [&](Vertex v) { return to_string(elems[static_cast<std::size_t>(v)]); },
        [&](const std::vector<int>& colors) { return make_witness(vi_from_element_colors(g, colors)); });
}

Certificate chi_vi1_via_tvi1(const Graph& g, long long node_budget)
{
    require_edges(g);
    const auto t = t_vi1(g);
    ColoringProblem p{t.graph(), {}, 0, {}};
    const auto r = minimize_coloring(p, 0, 0, node_budget);
    auto c = certificate_from(
        g, "chi_vi_s", 1, r,
        [&](Vertex v) {
            const auto& l = t.label(v);
            return "(" + std::to_string(l.vertex) + "," + std::to_string(l.level) + ")";
        },
        [&](const std::vector<int>& colors) { return make_witness(vi1_from_tvi1(g, colors)); });
    c.notes.push_back("computed as the chromatic number of T_vi,1(G)");
    return c;
}

Certificate total_coloring_exact(const Graph& g, long long node_budget)
{
    require_edges(g);
    const PowerGraph p = fractional_power(g, 2, 2);
    ColoringProblem problem{p.graph(), {}, 0, {}};
    const auto r = minimize_coloring(problem, 0, 0, node_budget);
    const int n = g.vertex_count();
    return certificate_from(
        g, "chi_total", std::nullopt, r,
        [&](Vertex v) {
            const auto& l = p.labeled.label(v);
            return l.internal ? "{" + std::to_string(l.x) + "," + std::to_string(l.y) + "}" : std::to_string(l.x);
        },
        [&](const std::vector<int>& colors) {
            Witness w;
            w.vertex_colors = std::vector<int>(colors.begin(), colors.begin() + n);
            w.edge_colors = std::vector<int>(colors.begin() + n, colors.end());
            return w;
        });
}

namespace {

class StarForestSearch {
public:
    StarForestSearch(const Graph& g, int k, long long budget)
        : g_(g), k_(k), budget_(budget), degree_(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(g.vertex_count()), 0)),
          partner_(static_cast<std::size_t>(k), std::vector<std::vector<Vertex>>(static_cast<std::size_t>(g.vertex_count()))),
          classes_(g.edges().size(), 0)
    {
    }

    SearchStatus run()
    {
        if (dfs(0, 0))
            return SearchStatus::Feasible;
        return aborted_ ? SearchStatus::Unknown : SearchStatus::Infeasible;
    }
    const std::vector<int>& classes() const { return classes_; }
    long long nodes() const { return nodes_; }

private:
    // x may gain a new leaf: it is isolated, a star center, or an end of a single edge
    bool open_end(int c, Vertex x) const
    {
        const int d = degree_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)];
        if (d != 1)
            return true;
        const Vertex y = partner_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)].back();
        return degree_[static_cast<std::size_t>(c)][static_cast<std::size_t>(y)] == 1;
    }

    bool can_add(int c, Vertex u, Vertex v) const
    {
        const int du = degree_[static_cast<std::size_t>(c)][static_cast<std::size_t>(u)];
        const int dv = degree_[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)];
        if (du > 0 && dv > 0)
            return false;
        return du == 0 ? open_end(c, v) : open_end(c, u);
    }

    void add(int c, Vertex u, Vertex v, int sign)
    {
        auto& deg = degree_[static_cast<std::size_t>(c)];
        auto& part = partner_[static_cast<std::size_t>(c)];
        deg[static_cast<std::size_t>(u)] += sign;
        deg[static_cast<std::size_t>(v)] += sign;
        if (sign > 0) {
            part[static_cast<std::size_t>(u)].push_back(v);
            part[static_cast<std::size_t>(v)].push_back(u);
        } else {
            part[static_cast<std::size_t>(u)].pop_back();
            part[static_cast<std::size_t>(v)].pop_back();
        }
    }

    bool dfs(std::size_t i, int used)
    {
        if (i == classes_.size())
            return true;
        const Edge e = g_.edges()[i];
        for (int c = 0; c < std::min(used + 1, k_); ++c) {
            if (!can_add(c, e.u, e.v))
                continue;
            if (++nodes_ > budget_) {
                aborted_ = true;
                return false;
            }
            add(c, e.u, e.v, 1);
            classes_[i] = c + 1;
            if (dfs(i + 1, std::max(used, c + 1)))
                return true;
            add(c, e.u, e.v, -1);
            if (aborted_)
                return false;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    long long budget_;
    std::vector<std::vector<int>> degree_;
    std::vector<std::vector<std::vector<Vertex>>> partner_;
    std::vector<int> classes_;
    long long nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace

Certificate star_arboricity_exact(const Graph& g, long long node_budget)
{
    Certificate c;
    c.graph_g6 = to_graph6(g);
    c.parameter = "star_arboricity";
    if (g.edge_count() == 0) {
        c.status = CertificateStatus::Exact;
        c.value = 0;
        c.witness = Witness{std::nullopt, std::nullopt, std::vector<int>{}};
        c.lower_bound = {"exhaustion", 0, {}, 0, 0};
        return c;
    }
    long long left = node_budget;
    long long previous_nodes = 0;
    for (int k = 1; k <= g.max_degree() + 1; ++k) {
        StarForestSearch search(g, k, left);
        const auto status = search.run();
        left -= search.nodes();
        c.nodes += search.nodes();
        if (status == SearchStatus::Unknown) {
            c.status = CertificateStatus::Unknown;
            c.lower_bound = {"exhaustion", k, {}, k - 1, previous_nodes};
            c.notes.push_back("node budget exhausted");
            return c;
        }
        if (status == SearchStatus::Feasible) {
            c.status = CertificateStatus::Exact;
            c.value = k;
            c.witness = Witness{std::nullopt, std::nullopt, search.classes()};
            c.lower_bound = {"exhaustion", k, {}, k - 1, previous_nodes};
            return c;
        }
        previous_nodes = search.nodes();
    }
    throw std::logic_error("no star forest partition with Delta+1 forests");
}

Certificate incidence_coloring_exact(const Graph& g, std::optional<int> s, long long node_budget)
{
    require_edges(g);
    require_spread(g, s);
    const auto ig = incidence_graph(g);
    ColoringProblem p{ig.graph(), {}, 0, {}};
    if (s) {
        for (const auto& i : ig.labels())
            p.groups.push_back(i.other);
        p.group_limit = *s;
    }
    const auto r = minimize_coloring(p, 0, 0, node_budget);
    auto c = certificate_from(
        g, "chi_incidence", s, r, [&](Vertex v) { return to_string(ig.label(v)); },
        [&](const std::vector<int>& colors) {
            std::map<Incidence, int> m;
            for (std::size_t i = 0; i < colors.size(); ++i)
                m[ig.labels()[i]] = colors[i];
            return Witness{std::nullopt, m, std::nullopt};
        });
    if (s)
        c.notes.push_back("spread-restricted incidence chromatic number: |c(I_2(v))| <= s for every v");
    return c;
}

ListColoringResult list_coloring(const Graph& g, const std::vector<std::vector<int>>& lists, long long node_budget)
{
    if (static_cast<int>(lists.size()) != g.vertex_count())
        throw std::invalid_argument("one list per vertex required");
    std::vector<int> palette;
    for (const auto& l : lists)
        palette.insert(palette.end(), l.begin(), l.end());
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    if (palette.size() > static_cast<std::size_t>(kMaxSolverColors))
        throw std::invalid_argument("list coloring supports at most 64 distinct colors");
    ColoringProblem p{g, {}, 0, {}};
    for (const auto& l : lists) {
        std::uint64_t mask = 0;
        for (int c : l)
            mask |= std::uint64_t{1} << (std::lower_bound(palette.begin(), palette.end(), c) - palette.begin());
        p.domains.push_back(mask);
    }
    ListColoringResult out;
    if (g.vertex_count() == 0) {
        out.status = SearchStatus::Feasible;
        return out;
    }
    const auto r = decide_coloring(p, std::max<int>(1, static_cast<int>(palette.size())), node_budget);
    out.status = r.status;
    out.nodes = r.nodes;
    if (r.status == SearchStatus::Feasible)
        for (int c : r.coloring)
            out.coloring.push_back(palette[static_cast<std::size_t>(c - 1)]);
    return out;
}

namespace {

// Lists are bit masks over a palette; true when the first `count` vertices can be colored.
bool prefix_colorable(const Graph& g, const std::vector<std::uint32_t>& lists, int count)
{
    std::vector<int> color(static_cast<std::size_t>(count), -1);
    std::function<bool(int)> go = [&](int v) {
        if (v == count)
            return true;
        std::uint32_t mask = lists[static_cast<std::size_t>(v)];
        for (Vertex w : g.neighbors(v))
            if (w < v)
                mask &= ~(std::uint32_t{1} << color[static_cast<std::size_t>(w)]);
        while (mask) {
            color[static_cast<std::size_t>(v)] = std::countr_zero(mask);
            mask &= mask - 1;
            if (go(v + 1))
                return true;
        }
        return false;
    };
    return go(0);
}

// Searches for k-lists (fresh colors numbered canonically) that admit no coloring.
bool exists_bad_assignment(const Graph& g, int k, int v, int used, std::vector<std::uint32_t>& lists)
{
    const int n = g.vertex_count();
    if (v == n)
        return false;
    for (int shared = std::min(k, used); shared >= 0; --shared) {
        const int fresh = k - shared;
        std::uint32_t fresh_mask = 0;
        for (int i = 0; i < fresh; ++i)
            fresh_mask |= std::uint32_t{1} << (used + i);
        // every subset of the used colors of size `shared`
        std::vector<bool> pick(static_cast<std::size_t>(used), false);
        std::fill(pick.begin(), pick.begin() + shared, true);
        do {
            std::uint32_t mask = fresh_mask;
            for (int i = 0; i < used; ++i)
                if (pick[static_cast<std::size_t>(i)])
                    mask |= std::uint32_t{1} << i;
            lists[static_cast<std::size_t>(v)] = mask;
            if (!prefix_colorable(g, lists, v + 1))
                return true;
            if (exists_bad_assignment(g, k, v + 1, used + fresh, lists))
                return true;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return false;
}

}  // namespace

int list_chromatic_number(const Graph& g)
{
    if (g.vertex_count() > 5)
        throw std::invalid_argument("exact list chromatic number is limited to 5 vertices");
    if (g.vertex_count() == 0)
        return 0;
    const auto chi = chromatic_number(g);
    const int upper = degeneracy_ordering(g).degeneracy + 1;
    for (int k = *chi.value; k < upper; ++k) {
        std::vector<std::uint32_t> lists(static_cast<std::size_t>(g.vertex_count()), 0);
        if (!exists_bad_assignment(g, k, 0, 0, lists))
            return k;
    }
    return upper;
}

bool is_total_coloring(const Graph& g, const std::vector<int>& vertex_colors, const std::vector<int>& edge_colors)
{
    if (static_cast<int>(vertex_colors.size()) != g.vertex_count() || edge_colors.size() != g.edges().size())
        return false;
    auto positive = [](int c) { return c > 0; };
    if (!std::all_of(vertex_colors.begin(), vertex_colors.end(), positive) ||
        !std::all_of(edge_colors.begin(), edge_colors.end(), positive))
        return false;
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        const int c = edge_colors[i];
        if (vertex_colors[static_cast<std::size_t>(e.u)] == vertex_colors[static_cast<std::size_t>(e.v)])
            return false;
        if (c == vertex_colors[static_cast<std::size_t>(e.u)] || c == vertex_colors[static_cast<std::size_t>(e.v)])
            return false;
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& f = edges[j];
            const bool touch = e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v;
            if (touch && c == edge_colors[j])
                return false;
        }
    }
    return true;
}

bool is_incidence_coloring(const Graph& g, const std::map<Incidence, int>& colors, std::optional<int> max_spread_bound)
{
    const auto all = incidences(g);
    if (colors.size() != all.size())
        return false;
    for (const auto& i : all) {
        auto it = colors.find(i);
        if (it == colors.end() || it->second <= 0)
            return false;
    }
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b)
            if (colors.at(all[a]) == colors.at(all[b]) &&
                conflict_kind(g, Element::of(all[a]), Element::of(all[b])))
                return false;
    if (max_spread_bound) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            std::set<int> seen;
            for (Vertex u : g.neighbors(v))
                seen.insert(colors.at({u, v}));
            if (static_cast<int>(seen.size()) > *max_spread_bound)
                return false;
        }
    }
    return true;
}

bool is_star_forest_partition(const Graph& g, const std::vector<int>& classes)
{
    if (classes.size() != g.edges().size())
        return false;
    std::set<int> ids(classes.begin(), classes.end());
    for (int id : ids) {
        if (id <= 0)
            return false;
        std::vector<Edge> part;
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (classes[i] == id)
                part.push_back(g.edges()[i]);
        const Graph h(g.vertex_count(), part);
        if (!is_forest(h))
            return false;
        // every component of a forest is a star iff every edge has an end of degree 1
        for (const auto& e : h.edges())
            if (h.degree(e.u) > 1 && h.degree(e.v) > 1)
                return false;
    }
    return true;
}

}  // namespace vicolor
