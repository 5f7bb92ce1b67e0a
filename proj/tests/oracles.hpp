#pragma once

// Brute-force reference implementations used to derive and cross-check
// expected values. These deliberately avoid the library's algorithm paths:
// everything here works by exhaustive deletion or exhaustive path
// enumeration over plain adjacency lists.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "planegraph/core.hpp"

namespace oracles {

using planegraph::PlaneGraph;
using planegraph::VertexId;

inline int brute_component_count(const PlaneGraph& g, const std::set<VertexId>& removed) {
    std::vector<char> seen(g.vertex_count + 1, 0);
    for (VertexId v : removed) seen[v] = 1;
    int comps = 0;
    for (VertexId s = 1; s <= g.vertex_count; ++s) {
        if (seen[s]) continue;
        ++comps;
        std::vector<VertexId> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (VertexId w : g.rotations[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return comps;
}

inline bool brute_is_two_connected(const PlaneGraph& g) {
    if (g.vertex_count < 3) return false;
    if (brute_component_count(g, {}) != 1) return false;
    for (VertexId v = 1; v <= g.vertex_count; ++v)
        if (brute_component_count(g, {v}) != 1) return false;
    return true;
}

/// Every pair whose deletion disconnects, by deletion and component count.
inline std::vector<std::pair<VertexId, VertexId>> brute_two_cuts(const PlaneGraph& g) {
    std::vector<std::pair<VertexId, VertexId>> cuts;
    for (VertexId u = 1; u <= g.vertex_count; ++u)
        for (VertexId v = u + 1; v <= g.vertex_count; ++v)
            if (brute_component_count(g, {u, v}) != 1) cuts.emplace_back(u, v);
    return cuts;
}

/// All simple cycles as canonical vertex sequences (smallest vertex first,
/// smaller second vertex than last). Exponential; for n <= 12 or so.
inline std::vector<std::vector<VertexId>> brute_all_cycles(const PlaneGraph& g) {
    std::vector<std::vector<VertexId>> cycles;
    std::vector<VertexId> path;
    std::vector<char> used(g.vertex_count + 1, 0);

    auto extend = [&](auto&& self, VertexId start) -> void {
        VertexId tip = path.back();
        for (VertexId w : g.rotations[tip]) {
            if (w == start && path.size() >= 3) {
                if (path[1] < path.back()) cycles.push_back(path);
            } else if (w > start && !used[w]) {
                used[w] = 1;
                path.push_back(w);
                self(self, start);
                path.pop_back();
                used[w] = 0;
            }
        }
    };

    for (VertexId s = 1; s <= g.vertex_count; ++s) {
        path = {s};
        used.assign(g.vertex_count + 1, 0);
        used[s] = 1;
        extend(extend, s);
    }
    return cycles;
}

inline int brute_circumference(const PlaneGraph& g) {
    int best = 0;
    for (const auto& c : brute_all_cycles(g)) best = std::max<int>(best, c.size());
    return best;
}

}  // namespace oracles
