#include "vicolor/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace vicolor {

namespace {

std::uint64_t low_bits(int count)
{
    return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

class Search {
public:
    Search(const ColoringProblem& p, int k, long long budget)
        : p_(p), k_(k), n_(p.graph.vertex_count()), budget_(budget), full_(low_bits(k)),
          color_(static_cast<std::size_t>(n_), 0),
          forbid_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(k), 0),
          forbidden_(static_cast<std::size_t>(n_), 0)
    {
        if (!p.groups.empty()) {
            if (static_cast<int>(p.groups.size()) != n_)
                throw std::invalid_argument("group vector size does not match graph");
            int count = 0;
            for (int g : p.groups)
                count = std::max(count, g + 1);
            group_count_.assign(static_cast<std::size_t>(count) * static_cast<std::size_t>(k), 0);
            group_used_.assign(static_cast<std::size_t>(count), 0);
        }
        if (!p.domains.empty() && static_cast<int>(p.domains.size()) != n_)
            throw std::invalid_argument("domain vector size does not match graph");
        symmetric_ = p.domains.empty();
    }

    DecisionResult run()
    {
        DecisionResult out;
        const bool found = dfs(n_, 0);
        out.nodes = nodes_;
        if (aborted_) {
            out.status = SearchStatus::Unknown;
        } else if (found) {
            out.status = SearchStatus::Feasible;
            out.coloring = color_;
        } else {
            out.status = SearchStatus::Infeasible;
        }
        return out;
    }

private:
    std::uint64_t available(Vertex v) const
    {
        const auto i = static_cast<std::size_t>(v);
        std::uint64_t mask = full_ & ~forbidden_[i];
        if (!p_.domains.empty())
            mask &= p_.domains[i];
        if (!p_.groups.empty() && p_.group_limit > 0) {
            const int g = p_.groups[i];
            if (g >= 0 && std::popcount(group_used_[static_cast<std::size_t>(g)]) >= p_.group_limit)
                mask &= group_used_[static_cast<std::size_t>(g)];
        }
        return mask;
    }

    void assign(Vertex v, int bit)
    {
        color_[static_cast<std::size_t>(v)] = bit + 1;
        const std::uint64_t b = std::uint64_t{1} << bit;
        for (Vertex w : p_.graph.neighbors(v)) {
            auto& cnt = forbid_[static_cast<std::size_t>(w) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(bit)];
            if (cnt++ == 0)
                forbidden_[static_cast<std::size_t>(w)] |= b;
        }
        if (!p_.groups.empty()) {
            const int g = p_.groups[static_cast<std::size_t>(v)];
            if (g >= 0) {
                auto& cnt = group_count_[static_cast<std::size_t>(g) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(bit)];
                if (cnt++ == 0)
                    group_used_[static_cast<std::size_t>(g)] |= b;
            }
        }
    }

    void unassign(Vertex v, int bit)
    {
        color_[static_cast<std::size_t>(v)] = 0;
        const std::uint64_t b = std::uint64_t{1} << bit;
        for (Vertex w : p_.graph.neighbors(v)) {
            auto& cnt = forbid_[static_cast<std::size_t>(w) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(bit)];
            if (--cnt == 0)
                forbidden_[static_cast<std::size_t>(w)] &= ~b;
        }
        if (!p_.groups.empty()) {
            const int g = p_.groups[static_cast<std::size_t>(v)];
            if (g >= 0) {
                auto& cnt = group_count_[static_cast<std::size_t>(g) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(bit)];
                if (--cnt == 0)
                    group_used_[static_cast<std::size_t>(g)] &= ~b;
            }
        }
    }

    bool dfs(int remaining, int max_used)
    {
        if (remaining == 0)
            return true;
        Vertex best = -1;
        int best_size = k_ + 1;
        for (Vertex v = 0; v < n_; ++v) {
            if (color_[static_cast<std::size_t>(v)] != 0)
                continue;
            const int size = std::popcount(available(v));
            if (size == 0)
                return false;
            if (size < best_size) {
                best_size = size;
                best = v;
            }
        }
        std::uint64_t mask = available(best);
        if (symmetric_)
            mask &= low_bits(max_used + 1);
        while (mask) {
            const int bit = std::countr_zero(mask);
            mask &= mask - 1;
            if (++nodes_ > budget_) {
                aborted_ = true;
                return false;
            }
            assign(best, bit);
            if (dfs(remaining - 1, std::max(max_used, bit + 1)))
                return true;
            unassign(best, bit);
            if (aborted_)
                return false;
        }
        return false;
    }

    const ColoringProblem& p_;
    int k_;
    int n_;
    long long budget_;
    std::uint64_t full_;
    std::vector<int> color_;
    std::vector<std::uint16_t> forbid_;
    std::vector<std::uint64_t> forbidden_;
    std::vector<std::uint16_t> group_count_;
    std::vector<std::uint64_t> group_used_;
    bool symmetric_ = true;
    long long nodes_ = 0;
    bool aborted_ = false;
};

// Branch and bound with greedy-coloring bounds over 64-bit vertex sets.
class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : n_(g.vertex_count()), adj_(static_cast<std::size_t>(n_), 0)
    {
        for (const auto& e : g.edges()) {
            adj_[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
            adj_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
        }
    }

    std::vector<Vertex> run()
    {
        expand(0, low_bits(n_));
        std::vector<Vertex> out;
        for (std::uint64_t m = best_; m; m &= m - 1)
            out.push_back(std::countr_zero(m));
        return out;
    }

private:
    void expand(std::uint64_t current, std::uint64_t candidates)
    {
        const int size = std::popcount(current);
        if (candidates == 0) {
            if (size > std::popcount(best_))
                best_ = current;
            return;
        }
        // greedy color classes give an upper bound per vertex
        std::vector<std::pair<Vertex, int>> order;
        std::uint64_t uncolored = candidates;
        int color = 0;
        while (uncolored) {
            ++color;
            std::uint64_t q = uncolored;
            while (q) {
                const int v = std::countr_zero(q);
                q &= ~(std::uint64_t{1} << v);
                q &= ~adj_[static_cast<std::size_t>(v)];
                uncolored &= ~(std::uint64_t{1} << v);
                order.emplace_back(v, color);
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            if (size + it->second <= std::popcount(best_))
                return;
            const std::uint64_t bit = std::uint64_t{1} << it->first;
            expand(current | bit, candidates & adj_[static_cast<std::size_t>(it->first)]);
            candidates &= ~bit;
        }
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    std::uint64_t best_ = 0;
};

std::vector<Vertex> greedy_clique(const Graph& g)
{
    std::vector<Vertex> best;
    for (Vertex start = 0; start < g.vertex_count(); ++start) {
        std::vector<Vertex> clique{start};
        std::vector<Vertex> candidates(g.neighbors(start).begin(), g.neighbors(start).end());
        while (!candidates.empty()) {
            Vertex pick = candidates.front();
            int pick_score = -1;
            for (Vertex c : candidates) {
                int score = 0;
                for (Vertex d : candidates)
                    score += g.has_edge(c, d) ? 1 : 0;
                if (score > pick_score) {
                    pick_score = score;
                    pick = c;
                }
            }
            clique.push_back(pick);
            std::erase_if(candidates, [&](Vertex c) { return c == pick || !g.has_edge(c, pick); });
        }
        if (clique.size() > best.size())
            best = clique;
    }
    std::sort(best.begin(), best.end());
    return best;
}

int max_color(const std::vector<int>& colors)
{
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

}  // namespace

DecisionResult decide_coloring(const ColoringProblem& p, int k, long long node_budget)
{
    if (k < 0 || k > kMaxSolverColors)
        throw std::invalid_argument("color count outside 0.." + std::to_string(kMaxSolverColors));
    if (p.graph.vertex_count() == 0)
        return {SearchStatus::Feasible, {}, 0};
    if (k == 0)
        return {SearchStatus::Infeasible, {}, 0};
    return Search(p, k, node_budget).run();
}

CliqueResult max_clique(const Graph& g)
{
    if (g.vertex_count() <= 60)
        return {CliqueSearch(g).run(), true};
    return {greedy_clique(g), false};
}

MinimizeResult minimize_coloring(const ColoringProblem& p, int lower_hint, int upper_hint, long long node_budget)
{
    MinimizeResult out;
    const int n = p.graph.vertex_count();
    out.clique = max_clique(p.graph).members;
    out.lower_bound = std::max(lower_hint, static_cast<int>(out.clique.size()));
    if (n == 0) {
        out.status = SearchStatus::Feasible;
        return out;
    }

    long long left = node_budget;
    auto spend = [&](const DecisionResult& r) {
        left -= r.nodes;
        out.nodes += r.nodes;
    };

    int start = std::min(n, kMaxSolverColors);
    if (upper_hint > 0)
        start = std::min(start, upper_hint);
    DecisionResult first = decide_coloring(p, start, left);
    spend(first);
    if (first.status == SearchStatus::Infeasible && start < std::min(n, kMaxSolverColors)) {
        first = decide_coloring(p, std::min(n, kMaxSolverColors), left);
        spend(first);
    }
    if (first.status == SearchStatus::Infeasible) {
        if (n > kMaxSolverColors)
            throw std::invalid_argument("instance needs more than " + std::to_string(kMaxSolverColors) + " colors");
        out.status = SearchStatus::Infeasible;
        return out;
    }
    if (first.status == SearchStatus::Unknown) {
        out.status = SearchStatus::Unknown;
        return out;
    }
    out.coloring = std::move(first.coloring);
    out.value = max_color(out.coloring);

    while (out.value > out.lower_bound) {
        DecisionResult r = decide_coloring(p, out.value - 1, std::max(left, 0LL));
        spend(r);
        if (r.status == SearchStatus::Feasible) {
            out.coloring = std::move(r.coloring);
            out.value = max_color(out.coloring);
        } else if (r.status == SearchStatus::Infeasible) {
            out.refuted_k = out.value - 1;
            out.refutation_nodes = r.nodes;
            break;
        } else {
            out.status = SearchStatus::Unknown;
            return out;
        }
    }
    out.status = SearchStatus::Feasible;
    return out;
}

bool is_proper_vertex_coloring(const Graph& g, const std::vector<int>& colors)
{
    if (static_cast<int>(colors.size()) != g.vertex_count())
        return false;
    if (std::any_of(colors.begin(), colors.end(), [](int c) { return c <= 0; }))
        return false;
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return colors[static_cast<std::size_t>(e.u)] != colors[static_cast<std::size_t>(e.v)];
    });
}

}  // namespace vicolor
