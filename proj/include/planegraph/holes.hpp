#pragma once

// Holes (inner faces of length >= 4), missing-edge counting, hole
// triangulation by chord fans, and joinable edges exposed by deleting an
// outer-cycle vertex.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "planegraph/connectivity.hpp"
#include "planegraph/core.hpp"

namespace planegraph {

/// Inner faces of length >= 4, ascending by (length, smallest boundary id).
inline std::vector<Face> holes(const PlaneGraph& g) {
    std::vector<Face> out;
    for (const auto& f : g.faces) {
        if (!f.is_outer && f.length() >= 4) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        auto va = a.vertex_set(), vb = b.vertex_set();
        if (va != vb) return va < vb;
        return a.face_id < b.face_id;
    });
    return out;
}

struct HoleReport {
    std::vector<int> hole_face_ids;        // in holes() order
    int missing_edge_count = 0;            // sum of per-hole deficits
    std::map<int, int> per_hole_deficit;   // face id -> length - 3
};

inline HoleReport hole_report(const PlaneGraph& g) {
    HoleReport r;
    for (const auto& f : holes(g)) {
        r.hole_face_ids.push_back(f.face_id);
        r.per_hole_deficit[f.face_id] = f.length() - 3;
        r.missing_edge_count += f.length() - 3;
    }
    return r;
}

/// Number of chords needed to make every inner face a 3-face.
inline int missing_edge_count(const PlaneGraph& g) {
    require_two_connected(g, "missing_edge_count");
    return hole_report(g).missing_edge_count;
}

/// True iff 2-connected and every inner face is a 3-face.
inline bool is_near_triangulation(const PlaneGraph& g) {
    if (!is_two_connected(g)) return false;
    for (const auto& f : g.faces)
        if (!f.is_outer && f.length() != 3) return false;
    return true;
}

namespace detail {

/// Hole boundary as a vertex cycle starting at its smallest vertex.
inline std::vector<VertexId> hole_walk_from_apex(const Face& f) {
    auto walk = f.walk_vertices();
    auto it = std::min_element(walk.begin(), walk.end());
    std::rotate(walk.begin(), it, walk.end());
    return walk;
}

inline void insert_between(std::vector<VertexId>& list, VertexId after, VertexId before,
                           VertexId w) {
    // clockwise list currently reads ..., after, before, ...
    for (size_t i = 0; i < list.size(); ++i) {
        if (list[i] == after && list[(i + 1) % list.size()] == before) {
            list.insert(list.begin() + static_cast<long>(i) + 1, w);
            return;
        }
    }
    fail(Errc::Internal, "face corner not found in rotation");
}

/// Triangulates one face by a fan from walk[0]. The walk must be the face's
/// current boundary orbit; all fan chords go in at once so each rotation
/// corner is touched exactly once.
inline void fan_triangulate(std::vector<std::vector<VertexId>>& rot,
                            const std::vector<VertexId>& walk) {
    size_t r = walk.size();
    if (r <= 3) return;
    VertexId apex = walk[0];
    // apex rotation reads ..., walk[1], walk[r-1], ...; widen that corner to
    // walk[1], walk[2], ..., walk[r-1]
    auto& apex_rot = rot[apex];
    bool spliced = false;
    for (size_t i = 0; i < apex_rot.size(); ++i) {
        if (apex_rot[i] == walk[1] && apex_rot[(i + 1) % apex_rot.size()] == walk[r - 1]) {
            apex_rot.insert(apex_rot.begin() + static_cast<long>(i) + 1, walk.begin() + 2,
                            walk.end() - 1);
            spliced = true;
            break;
        }
    }
    if (!spliced) fail(Errc::Internal, "apex corner not found in rotation");
    for (size_t j = 2; j + 1 < r; ++j)
        insert_between(rot[walk[j]], walk[j + 1], walk[j - 1], apex);
}

}  // namespace detail

namespace detail {

/// Fan chords for every hole plus the updated rotation table. Each hole is
/// fanned from the smallest boundary vertex none of whose fan chords
/// collides with an existing edge or an earlier fan (such an apex always
/// exists: blocking chords are non-crossing diagonals of the hole polygon,
/// and any non-crossing diagonal set leaves at least two ear vertices free).
struct HoleTriangulation {
    std::vector<std::pair<VertexId, VertexId>> chords;
    std::vector<std::vector<VertexId>> rotations;
};

inline HoleTriangulation triangulate_all_holes(const PlaneGraph& g) {
    HoleTriangulation out;
    out.rotations = g.rotations;
    std::set<std::pair<VertexId, VertexId>> present;
    for (VertexId u = 1; u <= g.vertex_count; ++u)
        for (VertexId w : g.rotations[u])
            if (u < w) present.insert({u, w});

    for (const auto& f : holes(g)) {
        auto walk = hole_walk_from_apex(f);
        size_t r = walk.size();
        auto fan_of = [&](size_t apex_pos) {
            std::vector<std::pair<VertexId, VertexId>> fan;
            for (size_t j = 2; j + 1 < r; ++j) {
                VertexId a = walk[apex_pos], b = walk[(apex_pos + j) % r];
                fan.emplace_back(std::min(a, b), std::max(a, b));
            }
            return fan;
        };
        size_t best = r;
        VertexId best_apex = 0;
        for (size_t pos = 0; pos < r; ++pos) {
            bool feasible = true;
            for (const auto& c : fan_of(pos))
                if (present.count(c)) feasible = false;
            if (feasible && (best == r || walk[pos] < best_apex)) {
                best = pos;
                best_apex = walk[pos];
            }
        }
        require(best < r, Errc::Internal, "hole without a feasible fan apex");
        std::vector<VertexId> rotated(walk.begin() + static_cast<long>(best), walk.end());
        rotated.insert(rotated.end(), walk.begin(), walk.begin() + static_cast<long>(best));
        fan_triangulate(out.rotations, rotated);
        auto fan = fan_of(best);
        std::sort(fan.begin(), fan.end());
        for (const auto& c : fan) present.insert(c);
        out.chords.insert(out.chords.end(), fan.begin(), fan.end());
    }
    return out;
}

}  // namespace detail

/// Chords whose insertion triangulates every hole, a fan per hole. Returns
/// exactly missing_edge_count(g) pairs, none already an edge.
inline std::vector<std::pair<VertexId, VertexId>> triangulating_chords(const PlaneGraph& g) {
    require_two_connected(g, "triangulating_chords");
    return detail::triangulate_all_holes(g).chords;
}

/// The graph with all triangulating chords inserted into the embedding.
inline PlaneGraph with_holes_triangulated(const PlaneGraph& g) {
    require_two_connected(g, "with_holes_triangulated");
    auto tri = detail::triangulate_all_holes(g);
    DirectedEdge outer_edge = g.outer_face().boundary.front();
    return build_plane_graph(g.vertex_count, std::move(tri.rotations), outer_edge);
}

/// A non-edge whose endpoints lie on a common face boundary; inserting it
/// keeps the embedding planar.
struct JoinableEdge {
    VertexId u = 0;
    VertexId v = 0;
    int face_id = -1;

    friend bool operator<(const JoinableEdge& a, const JoinableEdge& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return a.face_id < b.face_id;
    }
    friend bool operator==(const JoinableEdge& a, const JoinableEdge& b) {
        return a.u == b.u && a.v == b.v && a.face_id == b.face_id;
    }
};

/// All non-adjacent vertex pairs on one face boundary, ascending.
inline std::vector<JoinableEdge> joinable_edges_of_face(const PlaneGraph& g, const Face& f) {
    auto vs = f.vertex_set();
    std::vector<JoinableEdge> out;
    for (size_t i = 0; i < vs.size(); ++i) {
        for (size_t j = i + 1; j < vs.size(); ++j) {
            if (!g.has_edge(vs[i], vs[j])) out.push_back({vs[i], vs[j], f.face_id});
        }
    }
    return out;
}

/// Result of probing G - v for joinable edges along its outer face.
struct DeletionJoinables {
    int block_count = 0;                 // blocks of G - v
    std::vector<JoinableEdge> witnesses; // joinable in G, on the outer face of G - v
};

/// Deletes an outer-cycle vertex and reports joinable edges found at the
/// block gaps around each cut vertex of G - v: at every corner of the outer
/// walk of G - v located at a cut vertex, the entering and leaving neighbors
/// form a candidate pair. A candidate survives unless the deleted vertex's
/// edge splits that corner in G. Yields at least block_count - 1 witnesses.
inline DeletionJoinables joinable_after_deletion(const PlaneGraph& g, VertexId v) {
    require_two_connected(g, "joinable_after_deletion");
    require(g.on_outer_cycle(v), Errc::VertexNotOnOuterCycle,
            "vertex " + std::to_string(v) + " is not on the outer cycle");

    DeletionJoinables out;
    auto decomposition = blocks_after_deletion(g, v);
    out.block_count = decomposition.block_count();
    if (out.block_count <= 1) return out;

    // rotations of G - v
    auto rot = g.rotations;
    for (VertexId w : rot[v]) {
        auto& list = rot[w];
        list.erase(std::remove(list.begin(), list.end(), v), list.end());
    }
    rot[v].clear();

    // outer walk of G - v: continue the orbit through any outer edge of G
    // that avoids v
    std::optional<DirectedEdge> start;
    for (const auto& e : g.outer_face().boundary) {
        if (e.from != v && e.to != v) {
            start = e;
            break;
        }
    }
    require(start.has_value(), Errc::Internal, "outer cycle too short after deletion");
    auto walk = detail::trace_orbit(rot, *start);

    std::set<std::pair<VertexId, VertexId>> emitted;
    size_t len = walk.size();
    for (size_t i = 0; i < len; ++i) {
        // corner at w: enter via (p, w), leave via (w, q)
        VertexId p = walk[i].from, w = walk[i].to, q = walk[(i + 1) % len].to;
        if (!decomposition.is_cut_vertex(w)) continue;
        if (g.has_edge(p, q)) continue;
        if (g.prev_neighbor(w, p) != q) continue;  // corner split by the edge w-v in G
        VertexId a = std::min(p, q), b = std::max(p, q);
        if (!emitted.insert({a, b}).second) continue;
        out.witnesses.push_back({a, b, g.face_of(p, w)});
    }
    std::sort(out.witnesses.begin(), out.witnesses.end());
    require(static_cast<int>(out.witnesses.size()) >= out.block_count - 1, Errc::Internal,
            "fewer joinable witnesses than block gaps");
    return out;
}

}  // namespace planegraph
