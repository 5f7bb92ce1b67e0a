#pragma once

// Connectivity predicates, 2-cuts, and block/cut-vertex decomposition.

#include <algorithm>
#include <utility>
#include <vector>

#include "planegraph/core.hpp"

namespace planegraph {

namespace detail {

/// Adjacency view over an optionally vertex-masked graph, 1-based ids.
struct AdjView {
    const std::vector<std::vector<VertexId>>* rot = nullptr;
    std::vector<char> active;  // size n+1; empty means all active
    int n = 0;

    bool is_active(VertexId v) const { return active.empty() ? true : active[v] != 0; }
};

inline AdjView full_view(const PlaneGraph& g) {
    AdjView v;
    v.rot = &g.rotations;
    v.n = g.vertex_count;
    return v;
}

inline AdjView deleted_vertex_view(const PlaneGraph& g, VertexId removed) {
    AdjView v = full_view(g);
    v.active.assign(g.vertex_count + 1, 1);
    v.active[removed] = 0;
    return v;
}

/// Component count over active vertices.
inline int component_count(const AdjView& view) {
    std::vector<char> seen(view.n + 1, 0);
    int comps = 0;
    for (VertexId s = 1; s <= view.n; ++s) {
        if (!view.is_active(s) || seen[s]) continue;
        ++comps;
        std::vector<VertexId> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (VertexId w : (*view.rot)[u]) {
                if (view.is_active(w) && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return comps;
}

/// Articulation vertices via Hopcroft-Tarjan lowpoints, ascending ids.
inline std::vector<VertexId> articulation_points(const AdjView& view) {
    std::vector<int> disc(view.n + 1, 0), low(view.n + 1, 0);
    std::vector<char> is_art(view.n + 1, 0);
    int timer = 0;

    struct Frame {
        VertexId u;
        VertexId parent;
        size_t next_index;
        int children;
    };

    for (VertexId root = 1; root <= view.n; ++root) {
        if (!view.is_active(root) || disc[root]) continue;
        std::vector<Frame> stack;
        disc[root] = low[root] = ++timer;
        stack.push_back({root, 0, 0, 0});
        while (!stack.empty()) {
            Frame& fr = stack.back();
            const auto& nbrs = (*view.rot)[fr.u];
            if (fr.next_index < nbrs.size()) {
                VertexId w = nbrs[fr.next_index++];
                if (!view.is_active(w)) continue;
                if (!disc[w]) {
                    ++fr.children;
                    disc[w] = low[w] = ++timer;
                    stack.push_back({w, fr.u, 0, 0});
                } else if (w != fr.parent) {
                    low[fr.u] = std::min(low[fr.u], disc[w]);
                }
            } else {
                Frame done = fr;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& par = stack.back();
                    low[par.u] = std::min(low[par.u], low[done.u]);
                    if (par.parent != 0 && low[done.u] >= disc[par.u]) is_art[par.u] = 1;
                }
                if (done.parent == 0 && done.children >= 2) is_art[done.u] = 1;
            }
        }
    }
    std::vector<VertexId> out;
    for (VertexId v = 1; v <= view.n; ++v)
        if (view.is_active(v) && is_art[v]) out.push_back(v);
    return out;
}

/// 2-connectivity over raw rotation lists (no embedding rebuild).
inline bool adjacency_two_connected(const std::vector<std::vector<VertexId>>& rot, int n) {
    if (n < 3) return false;
    AdjView v;
    v.rot = &rot;
    v.n = n;
    if (component_count(v) != 1) return false;
    return articulation_points(v).empty();
}

}  // namespace detail

/// True iff n >= 3, connected, and free of cut vertices.
inline bool is_two_connected(const PlaneGraph& g) {
    if (g.vertex_count < 3) return false;
    auto view = detail::full_view(g);
    if (detail::component_count(view) != 1) return false;
    return detail::articulation_points(view).empty();
}

inline void require_two_connected(const PlaneGraph& g, const char* op) {
    require(is_two_connected(g), Errc::NotTwoConnected, std::string(op) + " requires a 2-connected graph");
}

/// All unordered pairs {u,v} whose removal disconnects a 2-connected graph.
/// Computed as: v is a cut vertex of G - u. Pairs ascend lexicographically.
inline std::vector<std::pair<VertexId, VertexId>> two_cuts(const PlaneGraph& g) {
    require_two_connected(g, "two_cuts");
    std::vector<std::pair<VertexId, VertexId>> cuts;
    for (VertexId u = 1; u <= g.vertex_count; ++u) {
        auto view = detail::deleted_vertex_view(g, u);
        for (VertexId v : detail::articulation_points(view)) {
            if (v > u) cuts.emplace_back(u, v);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

/// Circuit-graph test: for every 2-cut S, each component of G - S must meet
/// the outer cycle.
inline bool is_circuit_graph(const PlaneGraph& g) {
    require_two_connected(g, "is_circuit_graph");
    std::vector<char> on_outer(g.vertex_count + 1, 0);
    for (VertexId v : g.outer_cycle_vertices()) on_outer[v] = 1;

    for (const auto& [a, b] : two_cuts(g)) {
        std::vector<char> seen(g.vertex_count + 1, 0);
        seen[a] = seen[b] = 1;
        for (VertexId s = 1; s <= g.vertex_count; ++s) {
            if (seen[s]) continue;
            bool meets_outer = false;
            std::vector<VertexId> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                VertexId u = stack.back();
                stack.pop_back();
                if (on_outer[u]) meets_outer = true;
                for (VertexId w : g.rotations[u]) {
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            if (!meets_outer) return false;
        }
    }
    return true;
}

/// Block/cut-vertex decomposition of a connected graph.
struct BlockDecomposition {
    struct Block {
        std::vector<VertexId> vertices;                 // ascending
        std::vector<std::pair<VertexId, VertexId>> edges;  // u < v, ascending
    };
    std::vector<Block> blocks;            // ordered by smallest contained vertex
    std::vector<VertexId> cut_vertices;   // ascending
    std::vector<std::vector<int>> blocks_of_cut;  // parallel to cut_vertices

    int block_count() const { return static_cast<int>(blocks.size()); }
    bool is_cut_vertex(VertexId v) const {
        return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
    }
};

namespace detail {

inline BlockDecomposition blocks_of_view(const AdjView& view) {
    require(component_count(view) == 1, Errc::NotConnected, "blocks requires a connected input");

    std::vector<int> disc(view.n + 1, 0), low(view.n + 1, 0);
    int timer = 0;
    std::vector<std::pair<VertexId, VertexId>> edge_stack;
    std::vector<std::vector<std::pair<VertexId, VertexId>>> raw_blocks;

    struct Frame {
        VertexId u;
        VertexId parent;
        size_t next_index;
        int children;
    };

    auto pop_block = [&](VertexId u, VertexId w) {
        std::vector<std::pair<VertexId, VertexId>> edges;
        while (!edge_stack.empty()) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            edges.push_back(e);
            if (e.first == u && e.second == w) break;
        }
        raw_blocks.push_back(std::move(edges));
    };

    for (VertexId root = 1; root <= view.n; ++root) {
        if (!view.is_active(root) || disc[root]) continue;
        std::vector<Frame> stack;
        disc[root] = low[root] = ++timer;
        stack.push_back({root, 0, 0, 0});
        while (!stack.empty()) {
            Frame& fr = stack.back();
            const auto& nbrs = (*view.rot)[fr.u];
            if (fr.next_index < nbrs.size()) {
                VertexId w = nbrs[fr.next_index++];
                if (!view.is_active(w) || w == fr.parent) continue;
                if (!disc[w]) {
                    ++fr.children;
                    edge_stack.emplace_back(fr.u, w);
                    disc[w] = low[w] = ++timer;
                    stack.push_back({w, fr.u, 0, 0});
                } else if (disc[w] < disc[fr.u]) {
                    edge_stack.emplace_back(fr.u, w);
                    low[fr.u] = std::min(low[fr.u], disc[w]);
                }
            } else {
                Frame done = fr;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& par = stack.back();
                    low[par.u] = std::min(low[par.u], low[done.u]);
                    if (low[done.u] >= disc[par.u]) pop_block(par.u, done.u);
                }
            }
        }
        // isolated active vertex: no block
    }

    BlockDecomposition out;
    for (auto& edges : raw_blocks) {
        BlockDecomposition::Block b;
        for (auto& [u, v] : edges) {
            if (u > v) std::swap(u, v);
            b.vertices.push_back(u);
            b.vertices.push_back(v);
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        std::sort(edges.begin(), edges.end());
        b.edges = std::move(edges);
        out.blocks.push_back(std::move(b));
    }
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const BlockDecomposition::Block& a, const BlockDecomposition::Block& b) {
                  return a.vertices < b.vertices;
              });

    // cut vertices appear in more than one block
    std::vector<int> seen_in(view.n + 1, -1);
    std::vector<char> cut(view.n + 1, 0);
    for (int i = 0; i < static_cast<int>(out.blocks.size()); ++i) {
        for (VertexId v : out.blocks[i].vertices) {
            if (seen_in[v] >= 0 && seen_in[v] != i) cut[v] = 1;
            seen_in[v] = i;
        }
    }
    for (VertexId v = 1; v <= view.n; ++v)
        if (cut[v]) out.cut_vertices.push_back(v);
    out.blocks_of_cut.assign(out.cut_vertices.size(), {});
    for (int i = 0; i < static_cast<int>(out.blocks.size()); ++i) {
        for (VertexId v : out.blocks[i].vertices) {
            if (!cut[v]) continue;
            auto it = std::lower_bound(out.cut_vertices.begin(), out.cut_vertices.end(), v);
            out.blocks_of_cut[it - out.cut_vertices.begin()].push_back(i);
        }
    }
    return out;
}

}  // namespace detail

inline BlockDecomposition blocks(const PlaneGraph& g) {
    return detail::blocks_of_view(detail::full_view(g));
}

/// Blocks of G - v under the inherited adjacency.
inline BlockDecomposition blocks_after_deletion(const PlaneGraph& g, VertexId removed) {
    return detail::blocks_of_view(detail::deleted_vertex_view(g, removed));
}

}  // namespace planegraph
