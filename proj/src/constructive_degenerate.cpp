#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "vicolor/constructive.hpp"
#include "vicolor/conversions.hpp"
#include "vicolor/exact.hpp"
#include "vicolor/structure.hpp"

namespace vicolor {

namespace {

/// Earlier neighbors of every vertex along a restoration order.
std::vector<std::vector<Vertex>> back_neighbors(const Graph& g, const std::vector<Vertex>& order)
{
    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < order.size(); ++i)
        pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex u : order)
        for (Vertex w : g.neighbors(u))
            if (pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(u)])
                out[static_cast<std::size_t>(u)].push_back(w);
    return out;
}

std::set<int> allowed(const ColoringBuilder& b, const Element& e, int palette)
{
    const auto used = b.forbidden(e);
    std::set<int> out;
    for (int c = 1; c <= palette; ++c)
        if (!used.contains(c))
            out.insert(c);
    return out;
}

/// Colors u and all incidences between u and `back` by exhaustive search,
/// keeping every I_2 class at most `spread` colors. Leaves b unchanged on
/// failure.
bool extend_exhaustive(ColoringBuilder& b, Vertex u, const std::vector<Vertex>& back, int palette, int spread)
{
    std::vector<Element> todo;
    for (Vertex w : back)
        todo.push_back({u, w});
    for (Vertex w : back)
        todo.push_back({w, u});
    todo.push_back(Element::of(u));

    const auto spread_ok = [&](const Element& e) {
        return e.is_vertex() || static_cast<int>(b.second_colors(e.other).size()) <= spread;
    };
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
        if (i == todo.size())
            return true;
        const auto& e = todo[i];
        for (int c : allowed(b, e, palette)) {
            b.set(e, c);
            if (spread_ok(e) && go(i + 1))
                return true;
        }
        b.set(e, 0);
        return false;
    };
    return go(0);
}

}  // namespace

ViColoring color_k_degenerate(const Graph& g, int k, DegenerateStats* stats)
{
    const auto ord = degeneracy_ordering(g);
    if (k < 1 || ord.degeneracy > k)
        throw std::invalid_argument("color_k_degenerate: degeneracy exceeds k");
    if (g.max_degree() < 2)
        throw std::invalid_argument("color_k_degenerate: needs maximum degree at least 2");
    DegenerateStats local;
    DegenerateStats& st = stats ? *stats : local;
    st = DegenerateStats{};
    const int palette = g.max_degree() + 2 * k;
    st.palette = palette;

    const auto back = back_neighbors(g, ord.order);
    ColoringBuilder b(g);
    for (Vertex u : ord.order) {
        const auto& nb = back[static_cast<std::size_t>(u)];
        const int r = static_cast<int>(nb.size());
        // I_1(u) towards G' by a system of distinct representatives
        std::vector<std::vector<int>> wide(static_cast<std::size_t>(r));
        std::vector<std::vector<int>> narrow(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j) {
            const Vertex w = nb[static_cast<std::size_t>(j)];
            const auto a = allowed(b, {u, w}, palette);
            const auto c = b.second_colors(w);
            auto& rw = wide[static_cast<std::size_t>(j)];
            for (int x : a)
                if (c.contains(x))
                    rw.push_back(x);
            const std::size_t in_c = rw.size();
            for (int x : a)
                if (!c.contains(x))
                    rw.push_back(x);
            auto& rn = narrow[static_cast<std::size_t>(j)];
            rn = rw;
            // a full I_2(w) class: stay inside it
            if (static_cast<int>(c.size()) >= k)
                rn.resize(in_c);
        }
        const auto sdr = [&](const std::vector<std::vector<int>>& sets) {
            std::vector<std::vector<int>> adj(sets.size());
            for (std::size_t j = 0; j < sets.size(); ++j)
                for (int x : sets[j])
                    adj[j].push_back(x - 1);
            return max_bipartite_matching(r, palette, adj);
        };
        auto match = sdr(narrow);
        if (std::count(match.begin(), match.end(), -1) > 0) {
            ++st.widened_sdr;
            match = sdr(wide);
        }
        bool stuck = std::count(match.begin(), match.end(), -1) > 0;
        if (!stuck) {
            for (int j = 0; j < r; ++j)
                b.set({u, nb[static_cast<std::size_t>(j)]}, match[static_cast<std::size_t>(j)] + 1);
            for (Vertex w : nb) {
                const int c = b.first_free({w, u}, palette);
                if (c == 0) {
                    stuck = true;
                    break;
                }
                b.set({w, u}, c);
            }
            if (!stuck) {
                const int c = b.first_free(Element::of(u), palette);
                if (c == 0)
                    stuck = true;
                else
                    b.set(Element::of(u), c);
            }
        }
        if (!stuck)
            continue;
        for (Vertex w : nb) {
            b.set({u, w}, 0);
            b.set({w, u}, 0);
        }
        b.set(Element::of(u), 0);
        ++st.local_repairs;
        if (extend_exhaustive(b, u, nb, palette, k))
            continue;
        // last resort: search the whole graph
        ++st.exact_fallbacks;
        ColoringProblem p{vi_conflict_graph(g), second_incidence_groups(g), k, {}};
        const auto res = decide_coloring(p, palette);
        if (res.status != SearchStatus::Feasible)
            throw ConstructionError("color_k_degenerate: no (" + std::to_string(palette) + "," + std::to_string(k) +
                                    ")-coloring found");
        return require_valid(g, vi_from_element_colors(g, res.coloring), k, palette, "color_k_degenerate");
    }
    return require_valid(g, b.finish(), k, palette, "color_k_degenerate");
}

// ---------------------------------------------------------------- 3-degenerate, five cases

namespace {

using Colors = std::set<int>;

Colors minus(const Colors& a, std::initializer_list<int> drop)
{
    Colors out = a;
    for (int x : drop)
        out.erase(x);
    return out;
}

Colors meet(const Colors& a, const Colors& b)
{
    Colors out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

struct Step {
    ColoringBuilder& b;
    Vertex u;
    std::vector<Vertex> nb;
    int palette;
    std::vector<Colors> A;  // free colors for (u, u_j)
    std::vector<Colors> C;  // colors on I_2(u_j)
    std::vector<Colors> T;  // colors on u_j and I(u_j); everything when short

    /// C_j first; the rest of A_j only while I_2(u_j) has room.
    Colors pool(int j) const
    {
        return C[j].size() <= 1 ? A[j] : meet(A[j], C[j]);
    }

    /// Applies the choice (u,u_j) = pick[j] when it extends to I_2(u) and u.
    bool accept(const std::vector<int>& pick)
    {
        const int r = static_cast<int>(nb.size());
        for (int j = 0; j < r; ++j) {
            if (!A[j].contains(pick[j]))
                return false;
            for (int i = 0; i < j; ++i)
                if (pick[i] == pick[j])
                    return false;
            Colors c = C[j];
            c.insert(pick[j]);
            if (c.size() > 3)
                return false;
        }
        for (int j = 0; j < r; ++j)
            b.set({u, nb[j]}, pick[j]);
        bool ok = true;
        for (Vertex w : nb) {
            const int c = b.first_free({w, u}, palette);
            if (c == 0) {
                ok = false;
                break;
            }
            b.set({w, u}, c);
        }
        if (ok) {
            const int c = b.first_free(Element::of(u), palette);
            ok = c != 0;
            if (ok)
                b.set(Element::of(u), c);
        }
        if (!ok) {
            for (Vertex w : nb) {
                b.set({u, w}, 0);
                b.set({w, u}, 0);
            }
        }
        return ok;
    }

    /// Tries every tuple from the given per-index sets.
    bool any_tuple(const std::vector<Colors>& sets)
    {
        std::vector<int> pick(sets.size());
        std::function<bool(std::size_t)> go = [&](std::size_t j) {
            if (j == sets.size())
                return accept(pick);
            for (int x : sets[j]) {
                pick[j] = x;
                if (go(j + 1))
                    return true;
            }
            return false;
        };
        return go(0);
    }
};

/// R_j: inside C_j when I_2(u_j) is full, anywhere in A_j otherwise.
std::vector<Colors> representative_sets(const Step& s)
{
    std::vector<Colors> out;
    for (std::size_t j = 0; j < s.nb.size(); ++j)
        out.push_back(s.C[j].size() >= 3 ? meet(s.A[j], s.C[j]) : s.A[j]);
    return out;
}

// Two back-neighbors with room (p, q) and one full one.
bool case_two_small(Step& s, int p, int q, int big)
{
    for (int j : {p, q}) {
        const int i = j == p ? q : p;
        for (int a : meet(s.pool(j), s.T[big])) {
            Colors bs = minus(s.C[i], {a});
            if (bs.empty())
                bs = minus(s.A[i], {a});
            for (int b : bs)
                for (int d : minus(s.C[big], {a, b})) {
                    std::vector<int> pick(3);
                    pick[j] = a;
                    pick[i] = b;
                    pick[big] = d;
                    if (s.accept(pick))
                        return true;
                }
        }
    }
    if (s.C[p] == s.C[q] && s.C[p].size() == 2) {
        for (int a : s.C[p]) {
            const int other = a == *s.C[p].begin() ? *s.C[p].rbegin() : *s.C[p].begin();
            for (int d : minus(s.A[p], {a, other}))
                for (int f : minus(s.C[big], {a, d})) {
                    std::vector<int> pick(3);
                    pick[p] = d;
                    pick[q] = a;
                    pick[big] = f;
                    if (s.accept(pick))
                        return true;
                }
        }
    }
    return false;
}

// One back-neighbor with room (j1) and two full ones.
bool case_one_small(Step& s, int j1, int i, int j)
{
    for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
        for (int a : meet(s.pool(j1), s.T[y]))
            for (int b : meet(s.C[x], s.T[y]))
                for (int d : minus(s.C[y], {a, b})) {
                    std::vector<int> pick(3);
                    pick[j1] = a;
                    pick[x] = b;
                    pick[y] = d;
                    if (s.accept(pick))
                        return true;
                }
    }
    for (int a : s.pool(j1))
        for (int b : meet(s.C[i], s.T[j]))
            for (int d : meet(s.C[j], s.T[i])) {
                if (b == d)
                    continue;
                std::vector<int> pick(3);
                pick[j1] = a;
                pick[i] = b;
                pick[j] = d;
                if (s.accept(pick))
                    return true;
            }
    return false;
}

// All three back-neighbors full.
bool case_none_small(Step& s)
{
    const auto& C = s.C;
    const auto& T = s.T;
    for (int a1 : meet(C[0], T[1]))
        for (int a2 : meet(C[1], T[2]))
            for (int a3 : meet(C[2], T[0])) {
                const std::vector<int> a = {a1, a2, a3};
                if (a1 != a2 && a2 != a3 && a1 != a3) {
                    if (s.accept(a))
                        return true;
                    continue;
                }
                if (a1 == a2 && a2 == a3) {
                    const int x = a1;
                    for (int i = 0; i < 3; ++i)
                        for (int j = 0; j < 3; ++j) {
                            if (i == j)
                                continue;
                            const int t = 3 - i - j;
                            for (int b : meet(minus(C[i], {x}), T[j]))
                                for (int d : minus(C[t], {x, b})) {
                                    std::vector<int> pick(3);
                                    pick[i] = b;
                                    pick[j] = x;
                                    pick[t] = d;
                                    if (s.accept(pick))
                                        return true;
                                }
                            if (C[i] == C[j])
                                for (int b : minus(C[i], {x}))
                                    for (int f : minus(C[t], {x, b})) {
                                        std::vector<int> pick(3);
                                        pick[i] = b;
                                        pick[j] = x;
                                        pick[t] = f;
                                        if (s.accept(pick))
                                            return true;
                                    }
                        }
                    continue;
                }
                // exactly two agree: a_i = a_j, l the odd one out
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j) {
                        if (a[i] != a[j])
                            continue;
                        const int l = 3 - i - j;
                        for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}})
                            for (int b : minus(C[y], {a[i], a[l]})) {
                                std::vector<int> pick(3);
                                pick[x] = a[i];
                                pick[y] = b;
                                pick[l] = a[l];
                                if (s.accept(pick))
                                    return true;
                            }
                    }
            }
    return false;
}

}  // namespace

ViColoring color_3_degenerate(const Graph& g, ThreeDegenerateStats* stats)
{
    const auto ord = degeneracy_ordering(g);
    if (ord.degeneracy > 3)
        throw std::invalid_argument("color_3_degenerate: graph is not 3-degenerate");
    if (g.max_degree() < 5)
        throw std::invalid_argument("color_3_degenerate: needs maximum degree at least 5");
    ThreeDegenerateStats local;
    ThreeDegenerateStats& st = stats ? *stats : local;
    st = ThreeDegenerateStats{};
    const int palette = g.max_degree() + 5;

    const auto back = back_neighbors(g, ord.order);
    ColoringBuilder b(g);
    for (Vertex u : ord.order) {
        Step s{b, u, back[static_cast<std::size_t>(u)], palette, {}, {}, {}};
        const int r = static_cast<int>(s.nb.size());
        for (Vertex w : s.nb) {
            s.A.push_back(allowed(b, {u, w}, palette));
            s.C.push_back(b.second_colors(w));
            Colors t = {b.color(Element::of(w))};
            for (Vertex x : g.neighbors(w)) {
                if (const int c = b.color({w, x}))
                    t.insert(c);
                if (const int c = b.color({x, w}))
                    t.insert(c);
            }
            t.erase(0);
            // a short T_j leaves (u_j,u) room for any three new colors
            if (static_cast<int>(t.size()) <= palette - 4)
                for (int c = 1; c <= palette; ++c)
                    t.insert(c);
            s.T.push_back(std::move(t));
        }
        std::vector<int> small;
        std::vector<int> big;
        for (int j = 0; j < r; ++j)
            (s.C[j].size() <= 2 ? small : big).push_back(j);

        int which = 0;
        bool done = false;
        if (r <= 2 || small.size() == 3) {
            which = r <= 2 ? 0 : 1;
            done = s.any_tuple(representative_sets(s));
        } else if (small.size() == 2) {
            which = 2;
            done = case_two_small(s, small[0], small[1], big[0]);
        } else if (small.size() == 1) {
            which = 3;
            done = case_one_small(s, small[0], big[0], big[1]);
        } else {
            which = 4;
            done = case_none_small(s);
        }
        ++st.case_counts[static_cast<std::size_t>(which)];
        if (done)
            continue;
        ++st.fallbacks;
        st.log.push_back("vertex " + std::to_string(u) + ": case " + std::to_string(which + 1) +
                         " rules found no extension");
        if (!extend_exhaustive(b, u, s.nb, palette, 3))
            throw ConstructionError("color_3_degenerate: vertex " + std::to_string(u) + " cannot be extended");
    }
    return require_valid(g, b.finish(), 3, palette, "color_3_degenerate");
}

}  // namespace vicolor
