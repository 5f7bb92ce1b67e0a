#pragma once

// Near-triangulation extraction. Given a 2-connected plane graph whose
// missing-edge count is below (n - (t-1)) / (3t - 7), a near-triangulation
// subgraph on at least t vertices exists; the search below finds one by
// recursing on strictly smaller instances (missing edges, then edges,
// decrease lexicographically):
//   a. a near-triangulation returns itself;
//   b. a hole meeting the outer cycle twice splits the graph into regions
//      between consecutive meeting points; recurse best-ratio-first;
//   c. a hole meeting the outer cycle once: delete one peripheral fan at the
//      meeting vertex and recurse into the result or its blocks;
//   d. no hole meets the outer cycle: the minimal connector region is a
//      near-triangulation; return it if big enough, else recurse on the
//      complementary side.
// An exhaustive search over hole-free disc regions backs the guided
// recursion; every returned witness passes an independent certifier that
// shares no code with the search.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "planegraph/bounds.hpp"
#include "planegraph/connectors.hpp"
#include "planegraph/connectivity.hpp"
#include "planegraph/core.hpp"
#include "planegraph/holes.hpp"
#include "planegraph/io.hpp"
#include "planegraph/subgraph.hpp"

namespace planegraph {

struct NearTriangulationWitness {
    std::uint64_t host_hash = 0;
    std::vector<VertexId> vertex_set;                      // ascending host ids
    std::vector<std::pair<VertexId, VertexId>> edge_set;   // u < v, ascending
    std::vector<VertexId> boundary_cycle;                  // host ids, cyclic
    int order = 0;

    int requested_t = 0;
    bool used_fallback = false;
};

struct ExtractionResult {
    std::optional<NearTriangulationWitness> witness;
    bool hypothesis_held = false;
    bool used_fallback = false;
};

/// Independent certificate check: the edge set exists in the host, induces a
/// connected 2-connected subgraph under the inherited rotations, every face
/// orbit except the boundary has length 3, the boundary orbit matches the
/// stated cycle, and the order meets t. Self-contained on purpose.
inline bool check_witness(const PlaneGraph& host, const NearTriangulationWitness& w, int t) {
    if (w.order < t || w.order < 3) return false;
    if (static_cast<int>(w.vertex_set.size()) != w.order) return false;
    if (graph_hash(host) != w.host_hash) return false;

    std::set<VertexId> vs(w.vertex_set.begin(), w.vertex_set.end());
    if (vs.size() != w.vertex_set.size()) return false;
    for (VertexId v : vs)
        if (v < 1 || v > host.vertex_count) return false;

    std::set<std::pair<VertexId, VertexId>> es;
    for (auto [u, v] : w.edge_set) {
        if (u >= v || !vs.count(u) || !vs.count(v)) return false;
        if (!host.has_edge(u, v)) return false;
        if (!es.insert({u, v}).second) return false;
    }
    // every stated vertex must carry an edge
    std::map<VertexId, std::vector<VertexId>> rot;
    for (VertexId v : vs) {
        std::vector<VertexId> nbrs;
        for (VertexId u : host.rotations[v])
            if (es.count({std::min(v, u), std::max(v, u)})) nbrs.push_back(u);
        if (nbrs.size() < 2) return false;
        rot[v] = std::move(nbrs);
    }

    // connectivity
    {
        std::set<VertexId> seen{*vs.begin()};
        std::vector<VertexId> stack{*vs.begin()};
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (VertexId x : rot[u])
                if (seen.insert(x).second) stack.push_back(x);
        }
        if (seen.size() != vs.size()) return false;
    }
    // no cut vertex: delete-and-flood, small inputs only
    for (VertexId cut : vs) {
        VertexId seed = 0;
        for (VertexId v : vs)
            if (v != cut) {
                seed = v;
                break;
            }
        std::set<VertexId> seen{seed};
        std::vector<VertexId> stack{seed};
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (VertexId x : rot[u])
                if (x != cut && seen.insert(x).second) stack.push_back(x);
        }
        if (seen.size() != vs.size() - 1) return false;
    }

    // orbits of the inherited rotation system
    std::set<std::pair<VertexId, VertexId>> visited;
    std::vector<std::vector<VertexId>> orbits;
    for (VertexId v : vs) {
        for (VertexId u : rot[v]) {
            if (visited.count({v, u})) continue;
            std::vector<VertexId> walk;
            VertexId a = v, b = u;
            do {
                visited.insert({a, b});
                walk.push_back(a);
                const auto& rb = rot[b];
                size_t i = 0;
                while (rb[i] != a) ++i;
                VertexId c = rb[(i + rb.size() - 1) % rb.size()];
                a = b;
                b = c;
            } while (!(a == v && b == u));
            orbits.push_back(std::move(walk));
        }
    }
    long long euler = static_cast<long long>(vs.size()) - static_cast<long long>(es.size()) +
                      static_cast<long long>(orbits.size());
    if (euler != 2) return false;

    // boundary must be one orbit (either direction); all other orbits 3-faces
    if (w.boundary_cycle.size() < 3) return false;
    std::set<VertexId> bset(w.boundary_cycle.begin(), w.boundary_cycle.end());
    if (bset.size() != w.boundary_cycle.size()) return false;
    auto matches_boundary = [&](const std::vector<VertexId>& orbit) {
        if (orbit.size() != w.boundary_cycle.size()) return false;
        for (int dir = 0; dir < 2; ++dir) {
            std::vector<VertexId> probe = w.boundary_cycle;
            if (dir) std::reverse(probe.begin(), probe.end());
            for (size_t shift = 0; shift < probe.size(); ++shift) {
                bool same = true;
                for (size_t i = 0; i < probe.size() && same; ++i)
                    same = probe[(i + shift) % probe.size()] == orbit[i];
                if (same) return true;
            }
        }
        return false;
    };
    int boundary_orbits = 0, long_orbits = 0;
    for (const auto& orbit : orbits) {
        if (matches_boundary(orbit)) ++boundary_orbits;
        if (orbit.size() != 3) ++long_orbits;
    }
    if (boundary_orbits == 0) return false;
    if (w.boundary_cycle.size() == 3) {
        if (long_orbits != 0) return false;
    } else {
        if (long_orbits != 1 || boundary_orbits != 1) return false;
    }
    return true;
}

namespace detail {

struct SearchInstance {
    PlaneGraph graph;
    std::vector<VertexId> to_host;  // local -> original host id
};

inline NearTriangulationWitness witness_of_whole(const PlaneGraph& original,
                                                 const SearchInstance& inst, int t) {
    NearTriangulationWitness w;
    w.host_hash = graph_hash(original);
    w.requested_t = t;
    for (VertexId v = 1; v <= inst.graph.vertex_count; ++v)
        w.vertex_set.push_back(inst.to_host[v]);
    std::sort(w.vertex_set.begin(), w.vertex_set.end());
    w.order = static_cast<int>(w.vertex_set.size());
    for (VertexId v = 1; v <= inst.graph.vertex_count; ++v)
        for (VertexId u : inst.graph.rotations[v]) {
            VertexId a = inst.to_host[v], b = inst.to_host[u];
            if (a < b) w.edge_set.emplace_back(a, b);
        }
    std::sort(w.edge_set.begin(), w.edge_set.end());
    for (const auto& e : inst.graph.outer_face().boundary)
        w.boundary_cycle.push_back(inst.to_host[e.from]);
    return w;
}

inline SearchInstance compose(const SearchInstance& parent, BoundedSubgraph&& sub) {
    SearchInstance child;
    child.graph = std::move(sub.graph);
    child.to_host.assign(1, 0);
    for (size_t i = 1; i < sub.to_host.size(); ++i)
        child.to_host.push_back(parent.to_host[sub.to_host[i]]);
    return child;
}

/// Exact-rational descending order of (n - (t-1)) / max(1, m).
struct RegionRank {
    std::int64_t num = 0;
    std::int64_t den = 1;
    VertexId smallest_host = 0;

    bool operator<(const RegionRank& o) const {
        // larger ratio first
        std::int64_t lhs = num * o.den, rhs = o.num * den;
        if (lhs != rhs) return lhs > rhs;
        return smallest_host < o.smallest_host;
    }
};

struct MeasuredInstance {
    SearchInstance inst;
    int m = 0;
    RegionRank rank;
};

inline MeasuredInstance measure(SearchInstance&& inst, int t) {
    MeasuredInstance mi;
    mi.m = missing_edge_count(inst.graph);
    mi.rank.num = inst.graph.vertex_count - (t - 1);
    mi.rank.den = std::max(1, mi.m);
    mi.rank.smallest_host = *std::min_element(inst.to_host.begin() + 1, inst.to_host.end());
    mi.inst = std::move(inst);
    return mi;
}

/// Face classes separated by the outer cycle and one hole: the regions
/// between consecutive meeting points, as face-id lists.
inline std::vector<std::vector<int>> split_regions(const PlaneGraph& g, const Face& hole) {
    std::set<std::pair<VertexId, VertexId>> blocked;
    for (const auto& e : g.outer_face().boundary)
        blocked.insert({std::min(e.from, e.to), std::max(e.from, e.to)});
    for (const auto& e : hole.boundary)
        blocked.insert({std::min(e.from, e.to), std::max(e.from, e.to)});

    std::vector<int> cls(g.faces.size(), -1);
    int classes = 0;
    for (int f0 = 0; f0 < static_cast<int>(g.faces.size()); ++f0) {
        if (cls[f0] >= 0) continue;
        int id = classes++;
        std::vector<int> stack{f0};
        cls[f0] = id;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (const auto& e : g.faces[f].boundary) {
                if (blocked.count({std::min(e.from, e.to), std::max(e.from, e.to)})) continue;
                int other = g.face_of(e.to, e.from);
                if (cls[other] < 0) {
                    cls[other] = id;
                    stack.push_back(other);
                }
            }
        }
    }
    std::vector<std::vector<int>> regions(static_cast<size_t>(classes));
    for (int f = 0; f < static_cast<int>(g.faces.size()); ++f)
        regions[static_cast<size_t>(cls[f])].push_back(f);
    std::vector<std::vector<int>> out;
    for (auto& r : regions) {
        bool skip = false;
        for (int f : r)
            if (f == g.outer_face_id || f == hole.face_id) skip = true;
        if (!skip) out.push_back(std::move(r));
    }
    return out;
}

/// Fan-deleted rotations for one peripheral neighborhood.
inline std::vector<std::vector<VertexId>> delete_fan(const PlaneGraph& g,
                                                     const PeripheralNeighborhood& fan) {
    auto rot = g.rotations;
    for (VertexId u : fan.sequence) {
        auto& rv = rot[fan.center];
        rv.erase(std::find(rv.begin(), rv.end(), u));
        auto& ru = rot[u];
        ru.erase(std::find(ru.begin(), ru.end(), fan.center));
    }
    return rot;
}

inline std::optional<DirectedEdge> surviving_outer_edge(const PlaneGraph& g,
                                                        const PeripheralNeighborhood& fan) {
    for (const auto& e : g.outer_face().boundary) {
        bool deleted = (e.from == fan.center && e.to == fan.sequence.front()) ||
                       (e.to == fan.center && e.from == fan.sequence.front());
        if (!deleted) return e;
    }
    return std::nullopt;
}

struct Searcher {
    const PlaneGraph& original;
    int t;
    bool used_fallback = false;

    std::optional<NearTriangulationWitness> run(const SearchInstance& inst, int parent_m,
                                                int parent_e) {
        const PlaneGraph& g = inst.graph;
        if (g.vertex_count < 3 || !is_two_connected(g)) return std::nullopt;
        int m = missing_edge_count(g);
        require(m < parent_m || (m == parent_m && g.edge_count < parent_e), Errc::Internal,
                "extraction recursion failed to shrink (m, e)");

        if (is_near_triangulation(g)) {
            if (g.vertex_count < t) return std::nullopt;
            return witness_of_whole(original, inst, t);
        }
        if (g.vertex_count < t) return std::nullopt;

        std::vector<char> on_outer(g.vertex_count + 1, 0);
        for (VertexId v : g.outer_cycle_vertices()) on_outer[v] = 1;

        auto hole_list = holes(g);
        std::vector<Face> wide_touch;   // >= 2 outer-cycle vertices
        std::vector<VertexId> single_touch_vertices;
        bool any_touch = false;
        for (const auto& f : hole_list) {
            int touches = 0;
            VertexId touch_vertex = 0;
            for (VertexId v : f.vertex_set())
                if (on_outer[v]) {
                    ++touches;
                    touch_vertex = v;
                }
            if (touches >= 2) wide_touch.push_back(f);
            if (touches == 1) single_touch_vertices.push_back(touch_vertex);
            if (touches > 0) any_touch = true;
        }

        for (const auto& f : wide_touch) {
            if (auto w = split_and_recurse(inst, f, m)) return w;
        }
        if (!wide_touch.empty() && !single_touch_vertices.empty()) {
            // fall through to the fan step for robustness off-hypothesis
        }
        if (!single_touch_vertices.empty()) {
            if (auto w = fan_step(inst, single_touch_vertices, m)) return w;
        }
        if (!any_touch) {
            if (auto w = connector_step(inst, m)) return w;
        }
        return std::nullopt;
    }

    std::optional<NearTriangulationWitness> split_and_recurse(const SearchInstance& inst,
                                                              const Face& hole, int m) {
        const PlaneGraph& g = inst.graph;
        std::vector<MeasuredInstance> measured;
        for (auto& faces : split_regions(g, hole)) {
            auto sub = subgraph_of_faces(g, faces);
            measured.push_back(measure(compose(inst, std::move(sub)), t));
        }
        std::sort(measured.begin(), measured.end(),
                  [](const MeasuredInstance& a, const MeasuredInstance& b) {
                      return a.rank < b.rank;
                  });
        for (auto& mi : measured) {
            if (mi.inst.graph.vertex_count < t) continue;
            if (auto w = run(mi.inst, m, g.edge_count)) return w;
        }
        return std::nullopt;
    }

    std::optional<NearTriangulationWitness> fan_step(const SearchInstance& inst,
                                                     const std::vector<VertexId>& touch_vertices,
                                                     int m) {
        const PlaneGraph& g = inst.graph;
        struct Candidate {
            int max_block = 0;
            VertexId v = 0;
            int side = 0;
            PeripheralNeighborhood fan;
        };
        std::vector<Candidate> candidates;
        std::set<VertexId> seen;
        for (VertexId v : touch_vertices) {
            if (!seen.insert(v).second) continue;
            std::pair<PeripheralNeighborhood, PeripheralNeighborhood> fans{{}, {}};
            try {
                fans = peripheral_neighborhoods(g, v);
            } catch (const GraphError&) {
                continue;  // another hole at v reaches the outer cycle elsewhere
            }
            for (const auto& fan : {fans.first, fans.second}) {
                auto rot = delete_fan(g, fan);
                auto bd = blocks_of_view(AdjView{&rot, {}, g.vertex_count});
                int biggest = 0;
                for (const auto& b : bd.blocks)
                    biggest = std::max(biggest, static_cast<int>(b.vertices.size()));
                candidates.push_back({biggest, v, fan.side, fan});
            }
        }
        std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
            if (a.max_block != b.max_block) return a.max_block > b.max_block;
            if (a.v != b.v) return a.v < b.v;
            return a.side < b.side;
        });

        for (const auto& cand : candidates) {
            auto rot = delete_fan(g, cand.fan);
            auto hint = surviving_outer_edge(g, cand.fan);
            if (!hint) continue;
            if (adjacency_two_connected(rot, g.vertex_count)) {
                SearchInstance child;
                child.graph = build_plane_graph(g.vertex_count, rot, *hint);
                child.to_host = inst.to_host;
                if (auto w = run(child, m, g.edge_count)) return w;
                continue;
            }
            // recurse into the blocks, big ratio first
            auto walk = trace_orbit(rot, *hint);
            auto bd = blocks_of_view(AdjView{&rot, {}, g.vertex_count});
            std::vector<MeasuredInstance> measured;
            for (const auto& b : bd.blocks) {
                if (b.vertices.size() < 3) continue;
                std::set<std::pair<VertexId, VertexId>> bedges(b.edges.begin(), b.edges.end());
                std::optional<DirectedEdge> bhint;
                for (const auto& e : walk) {
                    if (bedges.count({std::min(e.from, e.to), std::max(e.from, e.to)})) {
                        bhint = e;
                        break;
                    }
                }
                if (!bhint) continue;
                SearchInstance child;
                std::vector<VertexId> to_local(g.vertex_count + 1, 0);
                child.to_host.push_back(0);
                for (VertexId v : b.vertices) {
                    to_local[v] = static_cast<VertexId>(child.to_host.size());
                    child.to_host.push_back(inst.to_host[v]);
                }
                std::vector<std::vector<VertexId>> brot(b.vertices.size() + 1);
                for (VertexId v : b.vertices)
                    for (VertexId u : rot[v])
                        if (bedges.count({std::min(v, u), std::max(v, u)}))
                            brot[to_local[v]].push_back(to_local[u]);
                child.graph =
                    build_plane_graph(static_cast<int>(b.vertices.size()), std::move(brot),
                                      DirectedEdge{to_local[bhint->from], to_local[bhint->to]});
                measured.push_back(measure(std::move(child), t));
            }
            std::sort(measured.begin(), measured.end(),
                      [](const MeasuredInstance& a, const MeasuredInstance& b) {
                          return a.rank < b.rank;
                      });
            for (auto& mi : measured) {
                if (mi.inst.graph.vertex_count < t) continue;
                if (auto w = run(mi.inst, m, g.edge_count)) return w;
            }
        }
        return std::nullopt;
    }

    std::optional<NearTriangulationWitness> connector_step(const SearchInstance& inst, int m) {
        const PlaneGraph& g = inst.graph;
        auto hole_list = holes(g);
        require(!hole_list.empty(), Errc::Internal, "connector step without holes");
        auto outer = g.outer_face().vertex_set();
        auto cw = find_hole_connectors(g, g.outer_cycle_vertices(), hole_list.front().face_id);
        require(cw.region_is_near_triangulation, Errc::Internal,
                "connector step expected a near-triangulated region");

        std::set<VertexId> region_vertices;
        for (int f : cw.region_faces)
            for (const auto& e : g.faces[f].boundary) region_vertices.insert(e.from);
        for (VertexId v : cw.region_cycle) region_vertices.insert(v);
        if (static_cast<int>(region_vertices.size()) >= t) {
            auto sub = subgraph_of_faces(g, cw.region_faces);
            require(is_near_triangulation(sub.graph), Errc::Internal,
                    "connector region fails the near-triangulation check");
            return witness_of_whole(original, compose(inst, std::move(sub)), t);
        }

        // complementary side: everything but the region, its hole, and the
        // outer face
        std::set<int> excluded(cw.region_faces.begin(), cw.region_faces.end());
        excluded.insert(cw.hole_id);
        excluded.insert(g.outer_face_id);
        std::vector<int> complement;
        for (int f = 0; f < static_cast<int>(g.faces.size()); ++f)
            if (!excluded.count(f)) complement.push_back(f);
        if (complement.empty()) return std::nullopt;
        auto sub = subgraph_of_faces(g, complement);
        auto child = compose(inst, std::move(sub));
        return run(child, m, g.edge_count);
    }
};

/// Fallback: hole-free disc regions (connected unions of inner 3-faces whose
/// boundary is one simple cycle) searched greedily, then exhaustively up to
/// the 2t-5 face budget a t-vertex disc needs.
struct DiscSearcher {
    const PlaneGraph& g;
    int t;
    std::vector<int> tri_faces;
    std::map<int, std::vector<int>> tri_adj;  // via shared edges

    DiscSearcher(const PlaneGraph& graph, int target) : g(graph), t(target) {
        for (const auto& f : g.faces)
            if (!f.is_outer && f.length() == 3) tri_faces.push_back(f.face_id);
        std::set<int> tri_set(tri_faces.begin(), tri_faces.end());
        for (int f : tri_faces) {
            for (const auto& e : g.faces[f].boundary) {
                int other = g.face_of(e.to, e.from);
                if (other != f && tri_set.count(other)) tri_adj[f].push_back(other);
            }
        }
        for (auto& [f, nbrs] : tri_adj) {
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        }
    }

    /// Boundary of a face set as a simple cycle, or empty if not a disc.
    std::vector<VertexId> disc_boundary(const std::set<int>& faces) const {
        std::map<VertexId, std::vector<VertexId>> next;
        int boundary_edges = 0;
        for (int f : faces) {
            for (const auto& e : g.faces[f].boundary) {
                int other = g.face_of(e.to, e.from);
                if (faces.count(other)) continue;
                next[e.from].push_back(e.to);
                ++boundary_edges;
            }
        }
        if (boundary_edges < 3) return {};
        for (const auto& [v, outs] : next)
            if (outs.size() != 1) return {};
        std::vector<VertexId> cycle;
        VertexId start = next.begin()->first, cur = start;
        do {
            cycle.push_back(cur);
            cur = next[cur].front();
            if (cycle.size() > next.size()) return {};
        } while (cur != start);
        if (cycle.size() != next.size()) return {};
        return cycle;
    }

    int vertex_count(const std::set<int>& faces) const {
        std::set<VertexId> vs;
        for (int f : faces)
            for (const auto& e : g.faces[f].boundary) vs.insert(e.from);
        return static_cast<int>(vs.size());
    }

    std::optional<std::set<int>> greedy() const {
        for (int seed : tri_faces) {
            std::set<int> region{seed};
            if (disc_boundary(region).empty()) continue;
            bool grew = true;
            while (grew && vertex_count(region) < t) {
                grew = false;
                std::set<int> frontier;
                for (int f : region) {
                    auto it = tri_adj.find(f);
                    if (it == tri_adj.end()) continue;
                    for (int nb : it->second)
                        if (!region.count(nb)) frontier.insert(nb);
                }
                for (int nb : frontier) {
                    region.insert(nb);
                    if (!disc_boundary(region).empty()) {
                        grew = true;
                        break;
                    }
                    region.erase(nb);
                }
            }
            if (vertex_count(region) >= t) return region;
        }
        return std::nullopt;
    }

    std::optional<std::set<int>> exhaustive(std::uint64_t node_cap) const {
        size_t max_faces = static_cast<size_t>(std::max(1, 2 * t - 5));
        std::uint64_t nodes = 0;
        std::set<std::set<int>> visited;
        std::optional<std::set<int>> found;

        std::function<void(std::set<int>&, int)> grow = [&](std::set<int>& region, int seed) {
            if (found || ++nodes > node_cap) return;
            if (!disc_boundary(region).empty() && vertex_count(region) >= t) {
                found = region;
                return;
            }
            if (region.size() >= max_faces) return;
            std::set<int> frontier;
            for (int f : region) {
                auto it = tri_adj.find(f);
                if (it == tri_adj.end()) continue;
                for (int nb : it->second)
                    if (nb > seed && !region.count(nb)) frontier.insert(nb);
            }
            for (int nb : frontier) {
                region.insert(nb);
                if (visited.insert(region).second && !disc_boundary(region).empty())
                    grow(region, seed);
                region.erase(nb);
                if (found) return;
            }
        };
        for (int seed : tri_faces) {
            std::set<int> region{seed};
            if (disc_boundary(region).empty()) continue;
            grow(region, seed);
            if (found) return found;
        }
        return std::nullopt;
    }
};

}  // namespace detail

/// Extracts a near-triangulation subgraph on at least t vertices. A witness
/// is guaranteed whenever m(G) * (3t-7) < v(G) - (t-1); the result always
/// passes check_witness when present.
inline ExtractionResult extract_near_triangulation(const PlaneGraph& g, int t) {
    require(t >= 4, Errc::BadT, "t must be at least 4");
    require_two_connected(g, "extract_near_triangulation");

    ExtractionResult result;
    int m = missing_edge_count(g);
    result.hypothesis_held = g.vertex_count >= t && extraction_hypothesis_holds(g.vertex_count, m, t);

    detail::SearchInstance root;
    root.graph = g;
    root.to_host.push_back(0);
    for (VertexId v = 1; v <= g.vertex_count; ++v) root.to_host.push_back(v);

    detail::Searcher searcher{g, t};
    std::optional<NearTriangulationWitness> w;
    try {
        w = searcher.run(root, m + 1, g.edge_count + 1);
    } catch (const GraphError&) {
        w.reset();  // fall back below
    }

    if (!w) {
        detail::DiscSearcher discs(g, t);
        auto region = discs.greedy();
        if (!region) region = discs.exhaustive(4'000'000);
        if (region) {
            auto boundary = discs.disc_boundary(*region);
            detail::SearchInstance inst;
            auto sub = subgraph_of_faces(g, std::vector<int>(region->begin(), region->end()));
            inst = detail::compose(root, std::move(sub));
            w = detail::witness_of_whole(g, inst, t);
            w->used_fallback = true;
            result.used_fallback = true;
        }
    }

    if (w) {
        w->requested_t = t;
        require(check_witness(g, *w, t), Errc::Internal, "extraction produced an invalid witness");
        result.witness = std::move(w);
    }
    return result;
}

/// Text certificate block for a witness.
inline std::string serialize_witness(const NearTriangulationWitness& w) {
    std::ostringstream os;
    os << "cert near-triangulation\n";
    std::uint64_t h = w.host_hash;
    static const char* digits = "0123456789abcdef";
    std::string hex(16, '0');
    for (int i = 15; i >= 0; --i) {
        hex[static_cast<size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    os << "host-hash " << hex << "\n";
    os << "t " << w.requested_t << "\n";
    os << "order " << w.order << "\n";
    os << "vertices";
    for (VertexId v : w.vertex_set) os << " " << v;
    os << "\nedges";
    for (auto [u, v] : w.edge_set) os << " " << u << "-" << v;
    os << "\nboundary";
    for (VertexId v : w.boundary_cycle) os << " " << v;
    os << "\nend\n";
    return os.str();
}

inline NearTriangulationWitness parse_witness(std::istream& is) {
    NearTriangulationWitness w;
    std::string line;
    bool saw_header = false, saw_end = false;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "cert") {
            saw_header = true;
        } else if (head == "host-hash") {
            std::string hex;
            require(static_cast<bool>(ls >> hex) && hex.size() == 16, Errc::FormatError,
                    "bad host-hash line");
            w.host_hash = 0;
            for (char c : hex) {
                int d = c >= 'a' ? c - 'a' + 10 : c - '0';
                require(d >= 0 && d < 16, Errc::FormatError, "bad hash digit");
                w.host_hash = (w.host_hash << 4) | static_cast<std::uint64_t>(d);
            }
        } else if (head == "t") {
            ls >> w.requested_t;
        } else if (head == "order") {
            ls >> w.order;
        } else if (head == "vertices") {
            VertexId v;
            while (ls >> v) w.vertex_set.push_back(v);
        } else if (head == "edges") {
            std::string tok;
            while (ls >> tok) {
                auto dash = tok.find('-');
                require(dash != std::string::npos, Errc::FormatError, "bad edge token " + tok);
                w.edge_set.emplace_back(std::stoi(tok.substr(0, dash)),
                                        std::stoi(tok.substr(dash + 1)));
            }
        } else if (head == "boundary") {
            VertexId v;
            while (ls >> v) w.boundary_cycle.push_back(v);
        } else if (head == "end") {
            saw_end = true;
            break;
        }
    }
    require(saw_header && saw_end, Errc::FormatError, "incomplete certificate block");
    return w;
}

}  // namespace planegraph
