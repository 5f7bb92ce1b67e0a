#pragma once

// Small embedded graphs shared across tests. Rotations are clockwise
// neighbor orders derived from planar drawings; build_plane_graph's Euler
// check guards each of them.

#include "planegraph/core.hpp"

namespace fixtures {

using planegraph::DirectedEdge;
using planegraph::PlaneGraph;
using planegraph::VertexId;

inline PlaneGraph make(int n, std::vector<std::vector<VertexId>> rot,
                       std::optional<DirectedEdge> hint = std::nullopt) {
    return planegraph::build_plane_graph(n, std::move(rot), hint);
}

inline PlaneGraph triangle() { return make(3, {{2, 3}, {1, 3}, {1, 2}}); }

/// Outer triangle 1,2,3 with center 4; outer face is the orbit of (1,2).
inline PlaneGraph k4() {
    return make(4, {{3, 4, 2}, {1, 4, 3}, {2, 4, 1}, {1, 3, 2}}, DirectedEdge{1, 2});
}

inline PlaneGraph cycle(int n) {
    std::vector<std::vector<VertexId>> rot(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int prev = i == 1 ? n : i - 1, next = i == n ? 1 : i + 1;
        rot[static_cast<size_t>(i) - 1] = {prev, next};
    }
    return make(n, std::move(rot));
}

inline PlaneGraph hexagon() { return cycle(6); }

/// 5-cycle 1..5 plus chord 1-3; outer face is the pentagon.
inline PlaneGraph c5_chord() {
    return make(5, {{2, 3, 5}, {1, 3}, {4, 1, 2}, {3, 5}, {4, 1}}, DirectedEdge{2, 1});
}

/// Wheel: rim 1..5, hub 6; outer face is the rim.
inline PlaneGraph wheel6() {
    return make(6, {{2, 6, 5}, {1, 3, 6}, {4, 6, 2}, {5, 6, 3}, {1, 6, 4}, {5, 1, 2, 3, 4}},
                DirectedEdge{2, 1});
}

/// Triangles 1-2-3 and 3-4-5 sharing the cut vertex 3.
inline PlaneGraph two_triangles_shared_vertex() {
    return make(5, {{2, 3}, {1, 3}, {1, 2, 4, 5}, {3, 5}, {4, 3}});
}

/// Triangles 1-2-3 and 1-2-4 sharing the edge 1-2.
inline PlaneGraph two_triangles_shared_edge() {
    return make(4, {{3, 2, 4}, {1, 3, 4}, {1, 2}, {1, 2}});
}

inline PlaneGraph path3() { return make(3, {{2}, {1, 3}, {2}}); }

/// Outer square 1-2-3-4, chord 1-3, inner vertex 5 adjacent to 1 and 3 only.
/// {1,3} is a 2-cut whose component {5} avoids the outer cycle.
inline PlaneGraph square_chord_pendant_inside() {
    return make(5, {{2, 5, 3, 4}, {3, 1}, {2, 4, 1, 5}, {1, 3}, {1, 3}}, DirectedEdge{2, 1});
}

/// 4-cycle 1-2-3-4 (as 1=v, 2=a, 3=u, 4=b) plus chord 1-3: deleting 1 leaves
/// the path 2-3-4 with two blocks.
inline PlaneGraph square_with_chord() {
    return make(4, {{2, 3, 4}, {3, 1}, {2, 4, 1}, {1, 3}}, DirectedEdge{2, 1});
}

/// Join of the edge {1,2} with the path 3..10 (two hubs over a path).
inline PlaneGraph k2_join_p8() {
    std::vector<std::vector<VertexId>> rot(10);
    rot[0] = {2, 10, 9, 8, 7, 6, 5, 4, 3};
    rot[1] = {1, 3, 4, 5, 6, 7, 8, 9, 10};
    rot[2] = {1, 4, 2};
    for (VertexId v = 4; v <= 9; ++v) rot[static_cast<size_t>(v) - 1] = {v - 1, 1, v + 1, 2};
    rot[9] = {9, 1, 2};
    return make(10, std::move(rot));
}

/// Degree-4 outer vertex 1 with one incident 4-hole {1,5,7,6} meeting the
/// outer cycle {1,2,3,4} only at 1; fan triangles {1,2,5} and {1,3,6}, and a
/// 6-hole {2,5,7,6,3,4} between the fans and the rest of the outer cycle.
inline PlaneGraph peripheral_example() {
    return make(7, {{2, 3, 6, 5}, {1, 5, 4}, {1, 4, 6}, {2, 3}, {2, 1, 7}, {1, 3, 7}, {5, 6}},
                DirectedEdge{1, 2});
}

/// Outer vertex 1 carrying two 4-holes {1,5,8,6} and {1,6,9,7}, separated by
/// the spoke 1-6 and flanked by the fan triangles {1,2,5} and {1,3,7}.
inline PlaneGraph two_holes_at_vertex() {
    return make(9,
                {{2, 3, 7, 6, 5}, {1, 5, 4}, {1, 4, 7}, {2, 3}, {2, 1, 8}, {1, 9, 8}, {1, 3, 9},
                 {5, 6}, {6, 7}},
                DirectedEdge{1, 2});
}

/// Hexagon 1..6 around pentagon 7..11, fully triangulated between the rings,
/// pentagon interior carrying the chord 7-9 and the 4-hole {7,9,10,11}. The
/// single hole avoids the outer cycle entirely; m = 1.
inline PlaneGraph ring11() {
    return make(11,
                {{2, 7, 6},
                 {7, 1, 3, 8},
                 {9, 8, 2, 4},
                 {5, 10, 9, 3},
                 {6, 11, 10, 4},
                 {1, 7, 11, 5},
                 {6, 1, 2, 8, 9, 11},
                 {7, 2, 3, 9},
                 {10, 7, 8, 3, 4},
                 {11, 9, 4, 5},
                 {6, 7, 10, 5}},
                DirectedEdge{2, 1});
}

}  // namespace fixtures
