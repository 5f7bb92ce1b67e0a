#pragma once

// Cycle interiors and plane subgraphs bounded by cycles. A cycle splits the
// sphere into two face regions; the interior is the side not containing the
// outer face. The subgraph bounded by a cycle keeps the cycle edges plus
// everything incident to interior faces, relabelled densely with a map back
// to host ids.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "planegraph/connectivity.hpp"
#include "planegraph/core.hpp"

namespace planegraph {

/// A plane subgraph with local dense ids and the host ids they came from.
struct BoundedSubgraph {
    PlaneGraph graph;
    std::vector<VertexId> to_host;  // [1..n_local] -> host id

    VertexId host_id(VertexId local) const { return to_host[local]; }
};

namespace detail {

inline void check_cycle_in_graph(const PlaneGraph& g, const std::vector<VertexId>& cycle) {
    require(cycle.size() >= 3, Errc::NotACycle, "cycle needs at least 3 vertices");
    std::set<VertexId> distinct(cycle.begin(), cycle.end());
    require(distinct.size() == cycle.size(), Errc::NotACycle, "cycle vertices repeat");
    for (size_t i = 0; i < cycle.size(); ++i) {
        VertexId u = cycle[i], v = cycle[(i + 1) % cycle.size()];
        require(u >= 1 && u <= g.vertex_count, Errc::NotACycle, "cycle vertex out of range");
        require(g.has_edge(u, v), Errc::NotACycle,
                "cycle vertices " + std::to_string(u) + "," + std::to_string(v) + " not adjacent");
    }
}

/// Face classes reachable without crossing the given cycle's edges,
/// starting from `start_face`.
inline std::vector<char> flood_faces(const PlaneGraph& g, const std::set<std::pair<VertexId, VertexId>>& blocked,
                                     int start_face) {
    std::vector<char> in(g.faces.size(), 0);
    std::vector<int> stack{start_face};
    in[start_face] = 1;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (const auto& e : g.faces[f].boundary) {
            VertexId a = std::min(e.from, e.to), b = std::max(e.from, e.to);
            if (blocked.count({a, b})) continue;
            int other = g.face_of(e.to, e.from);
            if (!in[other]) {
                in[other] = 1;
                stack.push_back(other);
            }
        }
    }
    return in;
}

}  // namespace detail

/// Faces strictly inside a cycle, plus the cycle's rotational sense.
struct CycleInterior {
    std::vector<int> faces;  // ascending face ids
    Orientation orientation = Orientation::Clockwise;
};

inline CycleInterior cycle_interior(const PlaneGraph& g, const std::vector<VertexId>& cycle) {
    detail::check_cycle_in_graph(g, cycle);
    std::set<std::pair<VertexId, VertexId>> blocked;
    for (size_t i = 0; i < cycle.size(); ++i) {
        VertexId u = cycle[i], v = cycle[(i + 1) % cycle.size()];
        blocked.insert({std::min(u, v), std::max(u, v)});
    }
    int right = g.face_of(cycle[0], cycle[1]);
    int left = g.face_of(cycle[1], cycle[0]);
    auto right_side = detail::flood_faces(g, blocked, right);
    auto left_side = detail::flood_faces(g, blocked, left);
    require(!(right_side[g.outer_face_id] && left_side[g.outer_face_id]), Errc::Internal,
            "cycle does not separate the sphere");

    CycleInterior out;
    const auto& inside = right_side[g.outer_face_id] ? left_side : right_side;
    out.orientation =
        right_side[g.outer_face_id] ? Orientation::CounterClockwise : Orientation::Clockwise;
    for (int f = 0; f < static_cast<int>(g.faces.size()); ++f)
        if (inside[f]) out.faces.push_back(f);
    return out;
}

inline CycleRef make_cycle_ref(const PlaneGraph& g, std::vector<VertexId> vertices) {
    CycleRef c;
    c.orientation = cycle_interior(g, vertices).orientation;
    c.vertices = std::move(vertices);
    return c;
}

/// Plane subgraph formed by a set of faces whose union is a closed disc.
/// Keeps every edge incident to a face of the set; the outer face of the
/// result is the merged complement. Local ids ascend with host ids.
inline BoundedSubgraph subgraph_of_faces(const PlaneGraph& g, const std::vector<int>& face_ids) {
    require(!face_ids.empty(), Errc::Internal, "empty face region");
    std::vector<char> in_region(g.faces.size(), 0);
    for (int f : face_ids) {
        require(f >= 0 && f < static_cast<int>(g.faces.size()) && f != g.outer_face_id,
                Errc::Internal, "bad face id in region");
        in_region[f] = 1;
    }

    std::vector<char> keep_vertex(g.vertex_count + 1, 0);
    std::set<std::pair<VertexId, VertexId>> keep_edge;
    std::optional<DirectedEdge> boundary_hint;
    for (int f : face_ids) {
        for (const auto& e : g.faces[f].boundary) {
            keep_vertex[e.from] = 1;
            keep_edge.insert({std::min(e.from, e.to), std::max(e.from, e.to)});
            // boundary edge: region side right of (e.from,e.to), other side out
            if (!in_region[g.face_of(e.to, e.from)] && !boundary_hint)
                boundary_hint = DirectedEdge{e.from, e.to};
        }
    }
    require(boundary_hint.has_value(), Errc::Internal, "face region has no boundary");

    BoundedSubgraph out;
    std::vector<VertexId> to_local(g.vertex_count + 1, 0);
    out.to_host.push_back(0);
    for (VertexId v = 1; v <= g.vertex_count; ++v) {
        if (keep_vertex[v]) {
            to_local[v] = static_cast<VertexId>(out.to_host.size());
            out.to_host.push_back(v);
        }
    }
    int n_local = static_cast<int>(out.to_host.size()) - 1;
    std::vector<std::vector<VertexId>> rot(n_local + 1);
    for (VertexId v = 1; v <= g.vertex_count; ++v) {
        if (!keep_vertex[v]) continue;
        for (VertexId w : g.rotations[v]) {
            if (keep_edge.count({std::min(v, w), std::max(v, w)}))
                rot[to_local[v]].push_back(to_local[w]);
        }
    }
    // hint is reversed: the orbit right of (to, from) is the merged outside
    DirectedEdge hint{to_local[boundary_hint->to], to_local[boundary_hint->from]};
    out.graph = build_plane_graph(n_local, std::move(rot), hint);
    return out;
}

/// The plane subgraph bounded by a cycle: the cycle plus everything strictly
/// inside it, with the cycle as outer face. The result is checked to be
/// 2-connected.
inline BoundedSubgraph subgraph_bounded_by_cycle(const PlaneGraph& g,
                                                 const std::vector<VertexId>& cycle) {
    require_two_connected(g, "subgraph_bounded_by_cycle");
    auto interior = cycle_interior(g, cycle);
    auto sub = subgraph_of_faces(g, interior.faces);
    require(is_two_connected(sub.graph), Errc::Internal,
            "subgraph bounded by a cycle must be 2-connected");
    // outer face of the result must be exactly the cycle
    require(sub.graph.outer_face().length() == static_cast<int>(cycle.size()), Errc::Internal,
            "bounded subgraph outer face does not match the cycle");
    return sub;
}

inline BoundedSubgraph subgraph_bounded_by_cycle(const PlaneGraph& g, const CycleRef& cycle) {
    return subgraph_bounded_by_cycle(g, cycle.vertices);
}

}  // namespace planegraph
