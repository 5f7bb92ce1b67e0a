#pragma once

// Exact cycle search. Everything here is branch-and-bound DFS over simple
// paths with a canonical start (the smallest vertex on the cycle) and
// ascending successor order, so completed searches are deterministic and the
// returned witness is the tie-break-minimal one. Pruning: reachability of the
// remaining graph from the path tip, an iterated degree-2 core of that
// remainder, an independent-set alternation bound, and the requirement that
// the start vertex stays reachable.

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "planegraph/core.hpp"

namespace planegraph {

struct CycleWitness {
    std::vector<VertexId> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
};

struct DisjointCyclePairWitness {
    CycleWitness first;
    CycleWitness second;
};

struct SearchBudget {
    std::uint64_t node_limit = 0;  // 0 = unlimited
    std::int64_t time_limit_ms = 0;

    static SearchBudget unlimited() { return {}; }
    static SearchBudget nodes(std::uint64_t n) { return {n, 0}; }
    static SearchBudget millis(std::int64_t ms) { return {0, ms}; }
};

/// Outcome of a budgeted exact search.
enum class SearchStatus { Exact, Budget };

struct LongestCycleResult {
    SearchStatus status = SearchStatus::Exact;
    int length = 0;  // exact circumference, or best found under Budget
    std::optional<CycleWitness> witness;
    bool upper_bound_proven = false;  // for the decision variant under Budget
};

namespace detail {

struct CycleSearcher {
    const PlaneGraph& g;
    SearchBudget budget;
    std::uint64_t nodes = 0;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();
    bool out_of_budget = false;

    // state
    std::vector<char> on_path;
    std::vector<VertexId> path;
    VertexId start = 0;

    // scratch for bounds
    std::vector<int> mark;
    int mark_round = 0;
    std::vector<VertexId> reach_list;
    std::vector<int> index;
    std::vector<int> contacts;
    std::vector<char> alive;
    std::vector<int> peel_queue;
    std::vector<VertexId> bfs_queue;

    explicit CycleSearcher(const PlaneGraph& graph, SearchBudget b)
        : g(graph), budget(b), on_path(graph.vertex_count + 1, 0),
          mark(graph.vertex_count + 1, 0) {}

    bool budget_spent() {
        if (out_of_budget) return true;
        ++nodes;
        if (budget.node_limit && nodes > budget.node_limit) out_of_budget = true;
        if (budget.time_limit_ms && (nodes & 0x3ff) == 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
            if (ms > budget.time_limit_ms) out_of_budget = true;
        }
        return out_of_budget;
    }

    /// Unvisited vertices (ids > start, not on path) reachable from the tip,
    /// shrunk to the 2-core against {tip, start}, plus an alternation cap
    /// from a greedy independent set. Returns an upper bound on how many
    /// more vertices any cycle extension can add, or -1 if the start vertex
    /// cannot be reconnected. Stages stop early once the bound is already
    /// below needed_gain; the returned value stays valid either way.
    int extension_bound(VertexId tip, int needed_gain) {
        ++mark_round;
        reach_list.clear();
        bfs_queue.clear();
        auto usable = [&](VertexId w) { return w > start && !on_path[w]; };
        for (VertexId w : g.rotations[tip])
            if (usable(w) && mark[w] != mark_round) {
                mark[w] = mark_round;
                bfs_queue.push_back(w);
            }
        for (size_t qi = 0; qi < bfs_queue.size(); ++qi) {
            VertexId u = bfs_queue[qi];
            reach_list.push_back(u);
            for (VertexId w : g.rotations[u])
                if (usable(w) && mark[w] != mark_round) {
                    mark[w] = mark_round;
                    bfs_queue.push_back(w);
                }
        }
        if (static_cast<int>(reach_list.size()) < needed_gain)
            return static_cast<int>(reach_list.size());

        // peel: a candidate vertex on the remaining route needs two contacts
        // among {tip, start, surviving candidates}
        if (index.empty()) index.assign(g.vertex_count + 1, -1);
        if (contacts.size() < reach_list.size()) contacts.resize(reach_list.size() + 8);
        if (alive.size() < reach_list.size()) alive.resize(reach_list.size() + 8);
        for (size_t i = 0; i < reach_list.size(); ++i) index[reach_list[i]] = static_cast<int>(i);
        peel_queue.clear();
        for (size_t i = 0; i < reach_list.size(); ++i) {
            VertexId u = reach_list[i];
            int c = 0;
            for (VertexId w : g.rotations[u])
                if (w == tip || w == start || index[w] >= 0) ++c;
            contacts[i] = c;
            alive[i] = 1;
            if (c < 2) {
                alive[i] = 0;
                peel_queue.push_back(static_cast<int>(i));
            }
        }
        int live = static_cast<int>(reach_list.size()) - static_cast<int>(peel_queue.size());
        while (!peel_queue.empty()) {
            int i = peel_queue.back();
            peel_queue.pop_back();
            for (VertexId w : g.rotations[reach_list[static_cast<size_t>(i)]]) {
                int j = index[w];
                if (j < 0 || !alive[j]) continue;
                if (--contacts[j] < 2) {
                    alive[j] = 0;
                    --live;
                    peel_queue.push_back(j);
                }
            }
        }
        if (live < needed_gain) {
            for (VertexId u : reach_list) index[u] = -1;
            return live;
        }

        // can the cycle close? start must be adjacent to tip or to a live vertex
        bool can_close = g.has_edge(tip, start);
        if (!can_close) {
            for (VertexId w : g.rotations[start]) {
                int j = index[w];
                if (j >= 0 && alive[j]) {
                    can_close = true;
                    break;
                }
            }
        }
        int bound = live;
        if (can_close && live > 0) {
            // alternation cap: members of an independent set I inside the
            // live candidates cannot be route-consecutive, so at most
            // 2*(live - |I|) + 1 of the candidates fit on the route
            ++mark_round;
            int independent = 0;
            for (size_t i = 0; i < reach_list.size(); ++i) {
                if (!alive[i]) continue;
                VertexId u = reach_list[i];
                bool blocked = false;
                for (VertexId w : g.rotations[u]) {
                    int j = index[w];
                    if (j >= 0 && alive[j] && mark[w] == mark_round) blocked = true;
                }
                if (!blocked) {
                    mark[u] = mark_round;
                    ++independent;
                }
            }
            bound = std::min(live, 2 * (live - independent) + 1);
        }
        for (VertexId u : reach_list) index[u] = -1;
        return can_close ? bound : -1;
    }
};

}  // namespace detail

/// Exact longest cycle (branch and bound). With `stop_at >= 3`, the search
/// additionally stops as soon as any cycle of length >= stop_at is found,
/// which is the decision variant used by circumference_upper_check.
inline LongestCycleResult longest_cycle(const PlaneGraph& g,
                                        SearchBudget budget = SearchBudget::unlimited(),
                                        int stop_at = 0) {
    LongestCycleResult result;
    if (g.vertex_count < 3) return result;

    detail::CycleSearcher s(g, budget);
    std::vector<VertexId> best;

    std::function<void(VertexId)> dfs = [&](VertexId tip) {
        if (s.budget_spent()) return;
        if (stop_at >= 3 && static_cast<int>(best.size()) >= stop_at) return;
        // decision mode cares only about reaching stop_at; exact mode must
        // beat the incumbent
        int len = static_cast<int>(s.path.size());
        int needed = stop_at >= 3 ? stop_at : static_cast<int>(best.size()) + 1;
        int bound = s.extension_bound(tip, needed - len);
        if (bound < 0) return;
        if (len + bound < needed) return;
        for (VertexId w : g.rotations[tip]) {
            if (w == s.start && s.path.size() >= 3) {
                if (s.path.size() > best.size() && s.path[1] < s.path.back()) best = s.path;
                if (stop_at >= 3 && static_cast<int>(best.size()) >= stop_at) return;
            }
        }
        for (VertexId w : g.rotations[tip]) {
            if (w <= s.start || s.on_path[w]) continue;
            s.on_path[w] = 1;
            s.path.push_back(w);
            dfs(w);
            s.path.pop_back();
            s.on_path[w] = 0;
            if (s.out_of_budget) return;
            if (stop_at >= 3 && static_cast<int>(best.size()) >= stop_at) return;
        }
    };

    for (VertexId v = 1; v <= g.vertex_count; ++v) {
        s.start = v;
        s.path = {v};
        std::fill(s.on_path.begin(), s.on_path.end(), 0);
        s.on_path[v] = 1;
        dfs(v);
        if (s.out_of_budget) break;
        if (stop_at >= 3 && static_cast<int>(best.size()) >= stop_at) break;
    }

    result.status = s.out_of_budget ? SearchStatus::Budget : SearchStatus::Exact;
    result.length = static_cast<int>(best.size());
    if (!best.empty()) result.witness = CycleWitness{best};
    result.upper_bound_proven = !s.out_of_budget;
    return result;
}

/// True iff the graph provably has no cycle of length >= bound.
/// Throws BudgetExceeded when the budget dies first.
inline bool circumference_upper_check(const PlaneGraph& g, int bound,
                                      SearchBudget budget = SearchBudget::unlimited()) {
    if (g.vertex_count < 3 || bound > g.vertex_count) return true;
    // cycles shorter than 3 do not exist, so bound < 3 asks for acyclicity
    int target = std::max(bound, 3);
    auto r = longest_cycle(g, budget, target);
    if (r.status == SearchStatus::Budget)
        fail(Errc::BudgetExceeded, "circumference decision ran out of budget");
    return r.length < bound || (bound < 3 && r.length == 0);
}

/// Enumerates simple cycles of exactly k vertices in canonical order and
/// feeds them to `visit` until it returns false. Returns false when the
/// budget died before the enumeration finished.
inline bool for_each_cycle_of_length(const PlaneGraph& g, int k,
                                     const std::function<bool(const std::vector<VertexId>&)>& visit,
                                     SearchBudget budget = SearchBudget::unlimited()) {
    if (k < 3 || k > g.vertex_count) return true;
    detail::CycleSearcher s(g, budget);
    bool stopped = false;

    std::function<void(VertexId)> dfs = [&](VertexId tip) {
        if (stopped || s.budget_spent()) return;
        int len = static_cast<int>(s.path.size());
        if (len == k) {
            if (g.has_edge(tip, s.start) && s.path[1] < s.path.back()) {
                if (!visit(s.path)) stopped = true;
            }
            return;
        }
        int bound = s.extension_bound(tip, k - len);
        if (bound < 0 || len + bound < k) return;
        for (VertexId w : g.rotations[tip]) {
            if (w <= s.start || s.on_path[w]) continue;
            s.on_path[w] = 1;
            s.path.push_back(w);
            dfs(w);
            s.path.pop_back();
            s.on_path[w] = 0;
            if (stopped || s.out_of_budget) return;
        }
    };

    for (VertexId v = 1; v + k - 1 <= g.vertex_count && !stopped; ++v) {
        s.start = v;
        s.path = {v};
        std::fill(s.on_path.begin(), s.on_path.end(), 0);
        s.on_path[v] = 1;
        dfs(v);
        if (s.out_of_budget) return false;
    }
    return true;
}

/// A cycle of exactly k vertices, if any.
inline std::optional<CycleWitness> cycle_of_length_exactly(
    const PlaneGraph& g, int k, SearchBudget budget = SearchBudget::unlimited()) {
    std::optional<CycleWitness> found;
    bool complete = for_each_cycle_of_length(
        g, k,
        [&](const std::vector<VertexId>& cyc) {
            found = CycleWitness{cyc};
            return false;
        },
        budget);
    if (!complete && !found) fail(Errc::BudgetExceeded, "exact-length cycle search out of budget");
    return found;
}

/// Two vertex-disjoint cycles of k vertices each, if any. Cycles are
/// enumerated lazily in canonical order; each new cycle is tested against
/// the retained representatives (one per distinct vertex set).
inline std::optional<DisjointCyclePairWitness> two_disjoint_k_cycles(
    const PlaneGraph& g, int k, SearchBudget budget = SearchBudget::unlimited()) {
    if (k < 3 || 2 * k > g.vertex_count) return std::nullopt;
    std::vector<std::vector<std::uint64_t>> seen_sets;
    std::vector<std::vector<VertexId>> reps;
    std::optional<DisjointCyclePairWitness> found;
    size_t words = static_cast<size_t>(g.vertex_count) / 64 + 1;

    bool complete = for_each_cycle_of_length(
        g, k,
        [&](const std::vector<VertexId>& cyc) {
            std::vector<std::uint64_t> bits(words, 0);
            for (VertexId v : cyc) bits[static_cast<size_t>(v) / 64] |= 1ull << (v % 64);
            for (size_t i = 0; i < seen_sets.size(); ++i) {
                bool disjoint = true;
                for (size_t w = 0; w < words; ++w)
                    if (seen_sets[i][w] & bits[w]) {
                        disjoint = false;
                        break;
                    }
                if (disjoint) {
                    found = DisjointCyclePairWitness{CycleWitness{reps[i]}, CycleWitness{cyc}};
                    return false;
                }
            }
            for (const auto& s : seen_sets)
                if (s == bits) return true;  // same vertex set, keep first representative
            seen_sets.push_back(std::move(bits));
            reps.push_back(cyc);
            return true;
        },
        budget);
    if (!complete && !found) fail(Errc::BudgetExceeded, "disjoint cycle search out of budget");
    return found;
}

/// Checks a witness against its host: distinct vertices, consecutive
/// adjacency, and disjointness for pairs.
inline bool validate_cycle_witness(const PlaneGraph& g, const CycleWitness& w) {
    if (w.length() < 3) return false;
    std::set<VertexId> distinct(w.vertices.begin(), w.vertices.end());
    if (static_cast<int>(distinct.size()) != w.length()) return false;
    for (size_t i = 0; i < w.vertices.size(); ++i) {
        VertexId a = w.vertices[i], b = w.vertices[(i + 1) % w.vertices.size()];
        if (a < 1 || a > g.vertex_count || !g.has_edge(a, b)) return false;
    }
    return true;
}

inline bool validate_disjoint_pair(const PlaneGraph& g, const DisjointCyclePairWitness& w) {
    if (!validate_cycle_witness(g, w.first) || !validate_cycle_witness(g, w.second)) return false;
    std::set<VertexId> a(w.first.vertices.begin(), w.first.vertices.end());
    for (VertexId v : w.second.vertices)
        if (a.count(v)) return false;
    return true;
}

}  // namespace planegraph
