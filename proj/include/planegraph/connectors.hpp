#pragma once

// Connectors from the outer cycle to holes, and peripheral fans.
//
// find_hole_connectors returns two vertex-disjoint paths L1: x1..y1 and
// L2: x2..y2 from a path P on the outer cycle to a hole F, meeting P and F
// only at their endpoints (degenerate single-vertex paths allowed). When no
// hole meets the outer cycle in two or more vertices, the witness also
// carries a region: the side of the configuration with the fewest edges,
// shrunk until it is a near-triangulation (a hole inside the region always
// yields a strictly smaller valid configuration, so the descent terminates).

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "planegraph/connectivity.hpp"
#include "planegraph/core.hpp"
#include "planegraph/holes.hpp"
#include "planegraph/subgraph.hpp"

namespace planegraph {

struct ConnectorWitness {
    int hole_id = -1;
    VertexId x1 = 0, x2 = 0;  // on P
    VertexId y1 = 0, y2 = 0;  // on the hole boundary
    std::vector<VertexId> path1;  // x1..y1; single vertex when x1 == y1
    std::vector<VertexId> path2;  // x2..y2
    bool region_is_near_triangulation = false;
    std::vector<VertexId> region_cycle;  // boundary of the near-triangulated side
    std::vector<int> region_faces;       // its faces (host face ids)
};

namespace detail {

/// Two vertex-disjoint paths from `sources` to `sinks` (disjoint even at the
/// endpoints) via two rounds of unit-capacity augmentation with vertex
/// splitting. Sources/sinks may intersect; a shared vertex yields a
/// single-vertex path. Deterministic: BFS in ascending vertex order.
inline std::optional<std::array<std::vector<VertexId>, 2>> two_disjoint_paths(
    const PlaneGraph& g, const std::vector<VertexId>& sources, const std::vector<VertexId>& sinks,
    const std::vector<char>& allowed,
    const std::function<bool(VertexId, VertexId)>& edge_ok) {
    int n = g.vertex_count;
    // nodes: 2*v = v_in, 2*v+1 = v_out, plus source 0 and sink 1
    int N = 2 * (n + 1) + 2;
    int S = 0, T = 1;
    std::vector<std::set<int>> cap(static_cast<size_t>(N));  // unit residual arcs
    std::vector<char> is_source(n + 1, 0), is_sink(n + 1, 0);
    for (VertexId v : sources)
        if (allowed[v]) is_source[v] = 1;
    for (VertexId v : sinks)
        if (allowed[v]) is_sink[v] = 1;
    auto vin = [](VertexId v) { return 2 * v; };
    auto vout = [](VertexId v) { return 2 * v + 1; };
    for (VertexId v = 1; v <= n; ++v) {
        if (!allowed[v]) continue;
        cap[static_cast<size_t>(vin(v))].insert(vout(v));
        if (is_source[v]) cap[static_cast<size_t>(S)].insert(vin(v));
        if (is_sink[v]) cap[static_cast<size_t>(vout(v))].insert(T);
        for (VertexId w : g.rotations[v])
            if (allowed[w] && edge_ok(v, w)) cap[static_cast<size_t>(vout(v))].insert(vin(w));
    }

    auto augment = [&]() -> bool {
        std::vector<int> parent(static_cast<size_t>(N), -1);
        std::vector<int> queue{S};
        parent[static_cast<size_t>(S)] = S;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int w : cap[static_cast<size_t>(u)]) {
                if (parent[static_cast<size_t>(w)] >= 0) continue;
                parent[static_cast<size_t>(w)] = u;
                if (w == T) {
                    int cur = T;
                    while (cur != S) {
                        int p = parent[static_cast<size_t>(cur)];
                        cap[static_cast<size_t>(p)].erase(cur);
                        cap[static_cast<size_t>(cur)].insert(p);
                        cur = p;
                    }
                    return true;
                }
                queue.push_back(w);
            }
        }
        return false;
    };
    if (!augment() || !augment()) return std::nullopt;

    // decompose: follow forward arcs that carry flow (their residual points back)
    std::array<std::vector<VertexId>, 2> paths;
    std::set<int> used_first;
    for (int p = 0; p < 2; ++p) {
        std::vector<VertexId>& path = paths[static_cast<size_t>(p)];
        // find a flow arc S -> vin(v) not used by the previous path
        VertexId cur = 0;
        for (VertexId v = 1; v <= n && !cur; ++v)
            if (is_source[v] && allowed[v] && cap[static_cast<size_t>(vin(v))].count(S) &&
                !used_first.count(v))
                cur = v;
        require(cur != 0, Errc::Internal, "flow decomposition lost a path");
        used_first.insert(cur);
        while (true) {
            path.push_back(cur);
            // leaving arc from vout(cur) carrying flow: residual vin(w) -> vout(cur)
            if (is_sink[cur] && cap[static_cast<size_t>(T)].count(vout(cur))) {
                cap[static_cast<size_t>(T)].erase(vout(cur));
                break;
            }
            VertexId nxt = 0;
            for (VertexId w = 1; w <= n && !nxt; ++w)
                if (allowed[w] && cap[static_cast<size_t>(vin(w))].count(vout(cur)) && w != cur)
                    nxt = w;
            require(nxt != 0, Errc::Internal, "flow decomposition stuck");
            cap[static_cast<size_t>(vin(nxt))].erase(vout(cur));
            cur = nxt;
        }
    }
    return paths;
}

/// Trims a walk so it meets P only at its (new) first vertex and F only at
/// its (new) last vertex.
inline std::vector<VertexId> trim_connector(const std::vector<VertexId>& path,
                                            const std::vector<char>& in_p,
                                            const std::vector<char>& in_f) {
    size_t last_p = 0;
    for (size_t i = 0; i < path.size(); ++i)
        if (in_p[path[i]]) last_p = i;
    std::vector<VertexId> out;
    for (size_t i = last_p; i < path.size(); ++i) {
        out.push_back(path[i]);
        if (in_f[path[i]]) break;
    }
    require(in_p[out.front()] && in_f[out.back()], Errc::Internal, "connector trim failed");
    return out;
}

/// Hole boundary as a vertex cycle in orbit order.
inline std::vector<VertexId> face_cycle(const Face& f) { return f.walk_vertices(); }

/// The two arcs of a cycle between two distinct member vertices, each
/// returned from `a` to `b`.
inline std::array<std::vector<VertexId>, 2> cycle_arcs(const std::vector<VertexId>& cycle,
                                                       VertexId a, VertexId b) {
    size_t n = cycle.size();
    size_t ia = n, ib = n;
    for (size_t i = 0; i < n; ++i) {
        if (cycle[i] == a) ia = i;
        if (cycle[i] == b) ib = i;
    }
    require(ia < n && ib < n && ia != ib, Errc::Internal, "arc endpoints not on cycle");
    std::array<std::vector<VertexId>, 2> arcs;
    for (size_t i = ia;; i = (i + 1) % n) {
        arcs[0].push_back(cycle[i]);
        if (i == ib) break;
    }
    for (size_t i = ia;; i = (i + n - 1) % n) {
        arcs[1].push_back(cycle[i]);
        if (i == ib) break;
    }
    return arcs;
}

struct ConnectorConfig {
    int hole_id = -1;
    std::vector<VertexId> path1, path2;  // P end first, hole end last
};

struct RegionCandidate {
    std::vector<VertexId> cycle;
    std::vector<int> faces;
    int edge_count = 0;
    ConnectorConfig config;
};

inline int region_edge_count(const PlaneGraph& g, const std::vector<int>& faces) {
    std::set<std::pair<VertexId, VertexId>> edges;
    for (int f : faces)
        for (const auto& e : g.faces[f].boundary)
            edges.insert({std::min(e.from, e.to), std::max(e.from, e.to)});
    return static_cast<int>(edges.size());
}

/// All simple cycles assembled from a P-segment, the two connector paths,
/// and one of the two hole arcs, together with the region they bound. Only
/// candidates whose region excludes the hole qualify.
inline std::vector<RegionCandidate> region_candidates(const PlaneGraph& g,
                                                      const std::vector<VertexId>& p_vertices,
                                                      bool p_is_cycle,
                                                      const ConnectorConfig& cfg) {
    std::vector<RegionCandidate> out;
    VertexId x1 = cfg.path1.front(), x2 = cfg.path2.front();
    const Face& hole = g.faces[cfg.hole_id];
    auto hole_cycle = face_cycle(hole);
    auto hole_arcs = cycle_arcs(hole_cycle, cfg.path1.back(), cfg.path2.back());

    // P segments between x1 and x2: slice of the listing, or both arcs of
    // the full outer cycle
    std::vector<std::vector<VertexId>> segments;
    if (p_is_cycle) {
        auto arcs = cycle_arcs(p_vertices, x1, x2);
        segments.push_back(arcs[0]);
        segments.push_back(arcs[1]);
    } else {
        size_t i1 = p_vertices.size(), i2 = p_vertices.size();
        for (size_t i = 0; i < p_vertices.size(); ++i) {
            if (p_vertices[i] == x1) i1 = i;
            if (p_vertices[i] == x2) i2 = i;
        }
        require(i1 < p_vertices.size() && i2 < p_vertices.size(), Errc::Internal,
                "connector endpoints missing from P");
        std::vector<VertexId> seg;
        if (i1 <= i2)
            seg.assign(p_vertices.begin() + static_cast<long>(i1),
                       p_vertices.begin() + static_cast<long>(i2) + 1);
        else {
            seg.assign(p_vertices.begin() + static_cast<long>(i2),
                       p_vertices.begin() + static_cast<long>(i1) + 1);
            std::reverse(seg.begin(), seg.end());
        }
        segments.push_back(std::move(seg));
    }

    for (const auto& seg : segments) {
        for (const auto& arc : hole_arcs) {
            // cycle: x1 ..path1.. y1 ..arc reversed.. y2 ..path2 reversed.. x2 ..seg reversed.. x1
            std::vector<VertexId> cyc;
            cyc.insert(cyc.end(), cfg.path1.begin(), cfg.path1.end());
            // arc runs y1 -> y2; append skipping the shared first vertex
            if (arc.front() != cfg.path1.back()) continue;
            cyc.insert(cyc.end(), arc.begin() + 1, arc.end());
            // path2 reversed: from y2 back to x2, skipping y2
            for (size_t i = cfg.path2.size() - 1; i-- > 0;) cyc.push_back(cfg.path2[i]);
            // seg runs x1 -> x2; append reversed skipping x2 and x1
            if (seg.front() != x1 || seg.back() != x2) continue;
            for (size_t i = seg.size() - 1; i-- > 1;) cyc.push_back(seg[i]);

            if (cyc.size() < 3) continue;
            std::set<VertexId> distinct(cyc.begin(), cyc.end());
            if (distinct.size() != cyc.size()) continue;
            bool adjacent = true;
            for (size_t i = 0; i < cyc.size() && adjacent; ++i)
                adjacent = g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
            if (!adjacent) continue;

            auto interior = cycle_interior(g, cyc);
            bool contains_hole = std::binary_search(interior.faces.begin(), interior.faces.end(),
                                                    cfg.hole_id);
            if (contains_hole) continue;
            RegionCandidate cand;
            cand.cycle = std::move(cyc);
            cand.faces = std::move(interior.faces);
            cand.edge_count = region_edge_count(g, cand.faces);
            cand.config = cfg;
            out.push_back(std::move(cand));
        }
    }
    return out;
}

inline ConnectorConfig disjoint_connector_config(
    const PlaneGraph& g, const std::vector<VertexId>& p_vertices, int hole_id,
    const std::vector<char>& allowed, const std::function<bool(VertexId, VertexId)>& edge_ok) {
    std::vector<char> in_p(g.vertex_count + 1, 0), in_f(g.vertex_count + 1, 0);
    for (VertexId v : p_vertices) in_p[v] = 1;
    auto hole_vs = g.faces[hole_id].vertex_set();
    for (VertexId v : hole_vs) in_f[v] = 1;
    std::vector<VertexId> sources;
    for (VertexId v : p_vertices)
        if (allowed[v]) sources.push_back(v);
    auto paths = two_disjoint_paths(g, sources, hole_vs, allowed, edge_ok);
    require(paths.has_value(), Errc::Internal,
            "2-connected graph must admit two disjoint connectors");
    ConnectorConfig cfg;
    cfg.hole_id = hole_id;
    cfg.path1 = trim_connector((*paths)[0], in_p, in_f);
    cfg.path2 = trim_connector((*paths)[1], in_p, in_f);
    if (cfg.path1.front() > cfg.path2.front()) std::swap(cfg.path1, cfg.path2);
    return cfg;
}

}  // namespace detail

/// True iff some hole's boundary shares >= 2 vertices with the outer cycle.
inline bool any_hole_meets_outer_twice(const PlaneGraph& g) {
    std::vector<char> on_outer(g.vertex_count + 1, 0);
    for (VertexId v : g.outer_cycle_vertices()) on_outer[v] = 1;
    for (const auto& f : holes(g)) {
        int touches = 0;
        for (VertexId v : f.vertex_set()) touches += on_outer[v];
        if (touches >= 2) return true;
    }
    return false;
}

/// Two disjoint connectors for (P, F); P must be a contiguous walk on the
/// outer cycle (or the whole cycle). When no hole meets the outer cycle in
/// two or more vertices, the witness additionally carries the minimal-edge
/// near-triangulated region (whose hole may differ from F).
inline ConnectorWitness find_hole_connectors(const PlaneGraph& g,
                                             const std::vector<VertexId>& p_vertices,
                                             int hole_face_id) {
    require_two_connected(g, "find_hole_connectors");
    require(!is_near_triangulation(g), Errc::IsNearTriangulation,
            "graph has no holes to connect to");
    require(hole_face_id >= 0 && hole_face_id < static_cast<int>(g.faces.size()),
            Errc::NoHole, "no such face");
    const Face& hole = g.faces[hole_face_id];
    require(!hole.is_outer && hole.length() >= 4, Errc::NoHole, "face is not a hole");
    require(!p_vertices.empty(), Errc::BadParameters, "P must be nonempty");
    for (VertexId v : p_vertices)
        require(g.on_outer_cycle(v), Errc::BadParameters,
                "P must stay on the outer cycle, vertex " + std::to_string(v) + " does not");

    bool p_is_cycle = p_vertices.size() == g.outer_face().vertex_set().size();
    std::vector<char> allowed(g.vertex_count + 1, 1);
    auto all_edges = [](VertexId, VertexId) { return true; };

    auto cfg = detail::disjoint_connector_config(g, p_vertices, hole_face_id, allowed, all_edges);
    ConnectorWitness w;
    w.hole_id = hole_face_id;
    w.path1 = cfg.path1;
    w.path2 = cfg.path2;
    w.x1 = cfg.path1.front();
    w.y1 = cfg.path1.back();
    w.x2 = cfg.path2.front();
    w.y2 = cfg.path2.back();

    if (any_hole_meets_outer_twice(g)) return w;

    // minimal-region descent: start from the given configuration, keep
    // replacing the region with a strictly smaller valid one until its
    // interior is hole-free
    auto candidates = detail::region_candidates(g, p_vertices, p_is_cycle, cfg);
    require(!candidates.empty(), Errc::Internal, "no bounded region for the connectors");
    auto pick_smallest = [](std::vector<detail::RegionCandidate>& cs) {
        std::sort(cs.begin(), cs.end(),
                  [](const detail::RegionCandidate& a, const detail::RegionCandidate& b) {
                      if (a.edge_count != b.edge_count) return a.edge_count < b.edge_count;
                      return a.cycle < b.cycle;
                  });
        return cs.front();
    };
    auto current = pick_smallest(candidates);

    while (true) {
        std::vector<int> interior_holes;
        for (int f : current.faces)
            if (g.faces[f].length() >= 4) interior_holes.push_back(f);
        if (interior_holes.empty()) break;

        // restrict the path search to the current region's vertices and edges
        std::vector<char> region_allowed(g.vertex_count + 1, 0);
        std::set<std::pair<VertexId, VertexId>> region_edges;
        for (int f : current.faces) {
            for (const auto& e : g.faces[f].boundary) {
                region_allowed[e.from] = 1;
                region_edges.insert({std::min(e.from, e.to), std::max(e.from, e.to)});
            }
        }
        for (VertexId v : current.cycle) region_allowed[v] = 1;
        auto region_edge_ok = [&](VertexId a, VertexId b) {
            return region_edges.count({std::min(a, b), std::max(a, b)}) > 0;
        };

        std::vector<detail::RegionCandidate> next;
        for (int hf : interior_holes) {
            auto sub_cfg =
                detail::disjoint_connector_config(g, p_vertices, hf, region_allowed, region_edge_ok);
            for (auto& cand : detail::region_candidates(g, p_vertices, p_is_cycle, sub_cfg))
                if (cand.edge_count < current.edge_count) next.push_back(std::move(cand));
            if (!next.empty()) break;  // first hole suffices; it always shrinks
        }
        require(!next.empty(), Errc::Internal, "region descent found no smaller configuration");
        current = pick_smallest(next);
    }

    w.hole_id = current.config.hole_id;
    w.path1 = current.config.path1;
    w.path2 = current.config.path2;
    w.x1 = w.path1.front();
    w.y1 = w.path1.back();
    w.x2 = w.path2.front();
    w.y2 = w.path2.back();
    w.region_is_near_triangulation = true;
    w.region_cycle = current.cycle;
    w.region_faces = current.faces;
    return w;
}

/// Endpoint-only intersection validity of a witness against (P, F).
inline bool validate_connector(const PlaneGraph& g, const std::vector<VertexId>& p_vertices,
                               const ConnectorWitness& w) {
    if (w.path1.empty() || w.path2.empty()) return false;
    if (w.path1.front() != w.x1 || w.path1.back() != w.y1) return false;
    if (w.path2.front() != w.x2 || w.path2.back() != w.y2) return false;
    std::set<VertexId> s1(w.path1.begin(), w.path1.end());
    std::set<VertexId> s2(w.path2.begin(), w.path2.end());
    if (s1.size() != w.path1.size() || s2.size() != w.path2.size()) return false;
    for (VertexId v : s1)
        if (s2.count(v)) return false;
    for (const auto& path : {w.path1, w.path2})
        for (size_t i = 0; i + 1 < path.size(); ++i)
            if (!g.has_edge(path[i], path[i + 1])) return false;
    std::set<VertexId> in_p(p_vertices.begin(), p_vertices.end());
    auto hole_vs = g.faces[w.hole_id].vertex_set();
    std::set<VertexId> in_f(hole_vs.begin(), hole_vs.end());
    auto meets_only_at = [](const std::vector<VertexId>& path, const std::set<VertexId>& s,
                            VertexId only) {
        for (VertexId v : path)
            if (s.count(v) && v != only) return false;
        return s.count(only) > 0;
    };
    if (!meets_only_at(w.path1, in_p, w.x1) || !meets_only_at(w.path2, in_p, w.x2)) return false;
    if (!meets_only_at(w.path1, in_f, w.y1) || !meets_only_at(w.path2, in_f, w.y2)) return false;
    return true;
}

/// A maximal fan of triangles at an outer-cycle vertex, running from one of
/// its outer-cycle edges to its first hole.
struct PeripheralNeighborhood {
    VertexId center = 0;
    std::vector<VertexId> sequence;  // first entry is the outer-cycle neighbor
    int side = 0;                    // 0: against the rotation, 1: along it
    int hole_id = -1;                // the hole the fan stops at
};

/// The two peripheral fans at v. Requires every hole containing v to meet
/// the outer cycle only at v, and at least one such hole.
inline std::pair<PeripheralNeighborhood, PeripheralNeighborhood> peripheral_neighborhoods(
    const PlaneGraph& g, VertexId v) {
    require_two_connected(g, "peripheral_neighborhoods");
    require(g.on_outer_cycle(v), Errc::VertexNotOnOuterCycle, "center must lie on the outer cycle");

    std::vector<char> on_outer(g.vertex_count + 1, 0);
    for (VertexId u : g.outer_cycle_vertices()) on_outer[u] = 1;
    bool v_on_hole = false;
    for (int i = 0; i < g.degree(v); ++i) {
        const Face& f = g.faces[static_cast<size_t>(g.face_of_slot[v][i])];
        if (f.is_outer || f.length() < 4) continue;
        v_on_hole = true;
        for (VertexId u : f.vertex_set())
            require(u == v || !on_outer[u], Errc::NotApplicable,
                    "a hole at the center also meets the outer cycle elsewhere");
    }
    require(v_on_hole, Errc::NotApplicable, "center lies on no hole");

    // outer-cycle neighbors: (v, first) and (second, v) are on the outer orbit
    VertexId first = 0, second = 0;
    for (const auto& e : g.outer_face().boundary) {
        if (e.from == v) first = e.to;
        if (e.to == v) second = e.from;
    }
    require(first != 0 && second != 0, Errc::Internal, "outer corner missing");

    auto walk_fan = [&](VertexId start, bool against_rotation, int side) {
        PeripheralNeighborhood fan;
        fan.center = v;
        fan.side = side;
        fan.sequence.push_back(start);
        VertexId cur = start;
        while (true) {
            VertexId nxt = against_rotation ? g.prev_neighbor(v, cur) : g.next_neighbor(v, cur);
            int fid = against_rotation ? g.face_of(v, nxt) : g.face_of(v, cur);
            const Face& f = g.faces[static_cast<size_t>(fid)];
            require(!f.is_outer, Errc::Internal, "fan walked around the whole rotation");
            if (f.length() >= 4) {
                fan.hole_id = fid;
                break;
            }
            fan.sequence.push_back(nxt);
            cur = nxt;
        }
        require(fan.sequence.size() >= 2, Errc::Internal, "peripheral fan shorter than 2");
        return fan;
    };
    return {walk_fan(first, true, 0), walk_fan(second, false, 1)};
}

}  // namespace planegraph
