#pragma once

// Combinatorial plane graphs: a rotation system (clockwise neighbor order per
// vertex) with a designated outer face. Faces are the orbits of the traversal
// rule  (u,v) -> (v, w)  where w immediately precedes u in v's clockwise
// rotation; with clockwise rotations this traces inner faces clockwise and the
// outer face counter-clockwise, and each orbit lies to the right of its
// directed edges.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace planegraph {

using VertexId = int;  // 1-based, dense

enum class Errc {
    InconsistentRotation,
    NotConnected,
    EulerViolation,
    BadOuterHint,
    NotTwoConnected,
    NotACycle,
    VertexNotOnOuterCycle,
    IsNearTriangulation,
    NoHole,
    NotApplicable,
    BadT,
    LevelTooLarge,
    BadOrder,
    KTooSmall,
    BadParameters,
    FormatError,
    BudgetExceeded,
    Internal,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::InconsistentRotation: return "InconsistentRotation";
        case Errc::NotConnected: return "NotConnected";
        case Errc::EulerViolation: return "EulerViolation";
        case Errc::BadOuterHint: return "BadOuterHint";
        case Errc::NotTwoConnected: return "NotTwoConnected";
        case Errc::NotACycle: return "NotACycle";
        case Errc::VertexNotOnOuterCycle: return "VertexNotOnOuterCycle";
        case Errc::IsNearTriangulation: return "IsNearTriangulation";
        case Errc::NoHole: return "NoHole";
        case Errc::NotApplicable: return "NotApplicable";
        case Errc::BadT: return "BadT";
        case Errc::LevelTooLarge: return "LevelTooLarge";
        case Errc::BadOrder: return "BadOrder";
        case Errc::KTooSmall: return "KTooSmall";
        case Errc::BadParameters: return "BadParameters";
        case Errc::FormatError: return "FormatError";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

class GraphError : public std::runtime_error {
public:
    GraphError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw GraphError(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

struct DirectedEdge {
    VertexId from = 0;
    VertexId to = 0;
    friend bool operator==(const DirectedEdge& a, const DirectedEdge& b) {
        return a.from == b.from && a.to == b.to;
    }
    friend bool operator<(const DirectedEdge& a, const DirectedEdge& b) {
        return a.from != b.from ? a.from < b.from : a.to < b.to;
    }
};

/// Closed boundary walk of one face. In a 2-connected graph the walk is a
/// simple cycle; in general vertices may repeat.
struct Face {
    int face_id = -1;
    std::vector<DirectedEdge> boundary;  // consecutive directed edges of the orbit
    bool is_outer = false;

    int length() const { return static_cast<int>(boundary.size()); }

    /// Vertices in walk order (one per edge slot; repeats possible).
    std::vector<VertexId> walk_vertices() const {
        std::vector<VertexId> vs;
        vs.reserve(boundary.size());
        for (const auto& e : boundary) vs.push_back(e.from);
        return vs;
    }

    bool contains_vertex(VertexId v) const {
        for (const auto& e : boundary)
            if (e.from == v) return true;
        return false;
    }

    /// Distinct vertices on the walk, ascending.
    std::vector<VertexId> vertex_set() const {
        auto vs = walk_vertices();
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }
};

/// A cycle in a host graph, with its rotational sense in the embedding.
/// Clockwise means the cycle's interior lies to the right of the walk.
enum class Orientation { Clockwise, CounterClockwise };

struct CycleRef {
    std::vector<VertexId> vertices;  // distinct, consecutive pairs adjacent, length >= 3
    Orientation orientation = Orientation::Clockwise;

    int length() const { return static_cast<int>(vertices.size()); }
};

/// Immutable after construction; all operations on it are pure.
struct PlaneGraph {
    int vertex_count = 0;
    std::vector<std::vector<VertexId>> rotations;  // index 1..n, clockwise order
    std::vector<Face> faces;
    int outer_face_id = -1;
    int edge_count = 0;

    // face id per directed edge slot: face_of_slot[u][i] covers (u, rotations[u][i])
    std::vector<std::vector<int>> face_of_slot;

    int degree(VertexId v) const { return static_cast<int>(rotations[v].size()); }

    int rotation_index(VertexId u, VertexId v) const {
        const auto& r = rotations[u];
        for (int i = 0; i < static_cast<int>(r.size()); ++i)
            if (r[i] == v) return i;
        return -1;
    }

    bool has_edge(VertexId u, VertexId v) const {
        if (u < 1 || u > vertex_count || v < 1 || v > vertex_count) return false;
        if (degree(u) > degree(v)) std::swap(u, v);
        return rotation_index(u, v) >= 0;
    }

    /// Neighbor immediately before v in u's clockwise rotation.
    VertexId prev_neighbor(VertexId u, VertexId v) const {
        int i = rotation_index(u, v);
        if (i < 0) fail(Errc::Internal, "prev_neighbor of a non-edge");
        int d = degree(u);
        return rotations[u][(i + d - 1) % d];
    }

    VertexId next_neighbor(VertexId u, VertexId v) const {
        int i = rotation_index(u, v);
        if (i < 0) fail(Errc::Internal, "next_neighbor of a non-edge");
        return rotations[u][(i + 1) % degree(u)];
    }

    /// Face orbit containing the directed edge (u, v); the face to its right.
    int face_of(VertexId u, VertexId v) const {
        int i = rotation_index(u, v);
        if (i < 0) fail(Errc::Internal, "face_of of a non-edge");
        return face_of_slot[u][i];
    }

    const Face& outer_face() const { return faces[outer_face_id]; }

    std::vector<VertexId> outer_cycle_vertices() const { return outer_face().walk_vertices(); }

    bool on_outer_cycle(VertexId v) const { return outer_face().contains_vertex(v); }
};

namespace detail {

/// Next directed edge of the face orbit: (u,v) -> (v, prev_v(u)).
inline DirectedEdge orbit_successor(const std::vector<std::vector<VertexId>>& rot, DirectedEdge e) {
    const auto& r = rot[e.to];
    int d = static_cast<int>(r.size());
    for (int i = 0; i < d; ++i) {
        if (r[i] == e.from) return DirectedEdge{e.to, r[(i + d - 1) % d]};
    }
    fail(Errc::Internal, "orbit_successor: reversed edge missing from rotation");
}

/// Full face orbit starting from a directed edge, on raw rotation lists.
inline std::vector<DirectedEdge> trace_orbit(const std::vector<std::vector<VertexId>>& rot,
                                             DirectedEdge start) {
    std::vector<DirectedEdge> walk;
    DirectedEdge e = start;
    do {
        walk.push_back(e);
        e = orbit_successor(rot, e);
    } while (!(e == start));
    return walk;
}

inline bool rotations_connected(const std::vector<std::vector<VertexId>>& rot, int n) {
    if (n <= 1) return true;
    std::vector<char> seen(n + 1, 0);
    std::vector<VertexId> stack{1};
    seen[1] = 1;
    int count = 1;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId w : rot[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

}  // namespace detail

/// Builds a PlaneGraph from clockwise rotations. Faces are computed as orbits;
/// the sphere condition n - e + f = 2 is enforced. The outer face is the orbit
/// containing outer_hint when given, otherwise the orbit whose sorted directed
/// edge list is lexicographically smallest.
inline PlaneGraph build_plane_graph(int n, std::vector<std::vector<VertexId>> rotations,
                                    std::optional<DirectedEdge> outer_hint = std::nullopt) {
    require(n >= 1, Errc::BadParameters, "vertex count must be positive");
    if (static_cast<int>(rotations.size()) == n) {
        // accept 0-based input by shifting to 1-based slots
        rotations.insert(rotations.begin(), std::vector<VertexId>{});
    }
    require(static_cast<int>(rotations.size()) == n + 1, Errc::BadParameters,
            "rotation table must have one list per vertex");

    long long directed = 0;
    for (VertexId u = 1; u <= n; ++u) {
        std::vector<VertexId> sorted = rotations[u];
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i < sorted.size(); ++i) {
            VertexId w = sorted[i];
            require(w >= 1 && w <= n, Errc::InconsistentRotation,
                    "neighbor id out of range at vertex " + std::to_string(u));
            require(w != u, Errc::InconsistentRotation,
                    "self-loop at vertex " + std::to_string(u));
            require(i == 0 || sorted[i] != sorted[i - 1], Errc::InconsistentRotation,
                    "repeated neighbor in rotation of vertex " + std::to_string(u));
        }
        if (n >= 2)
            require(!rotations[u].empty(), Errc::InconsistentRotation,
                    "isolated vertex " + std::to_string(u));
        directed += static_cast<long long>(rotations[u].size());
    }
    for (VertexId u = 1; u <= n; ++u) {
        for (VertexId w : rotations[u]) {
            bool back = false;
            for (VertexId x : rotations[w])
                if (x == u) back = true;
            require(back, Errc::InconsistentRotation,
                    "edge " + std::to_string(u) + "-" + std::to_string(w) + " not symmetric");
        }
    }
    require(detail::rotations_connected(rotations, n), Errc::NotConnected,
            "rotation system is not connected");

    PlaneGraph g;
    g.vertex_count = n;
    g.rotations = std::move(rotations);
    g.edge_count = static_cast<int>(directed / 2);

    g.face_of_slot.assign(n + 1, {});
    for (VertexId u = 1; u <= n; ++u) g.face_of_slot[u].assign(g.rotations[u].size(), -1);

    for (VertexId u = 1; u <= n; ++u) {
        for (int i = 0; i < g.degree(u); ++i) {
            if (g.face_of_slot[u][i] >= 0) continue;
            int id = static_cast<int>(g.faces.size());
            Face f;
            f.face_id = id;
            f.boundary = detail::trace_orbit(g.rotations, DirectedEdge{u, g.rotations[u][i]});
            for (const auto& e : f.boundary) {
                int j = g.rotation_index(e.from, e.to);
                require(g.face_of_slot[e.from][j] == -1, Errc::Internal, "orbit overlap");
                g.face_of_slot[e.from][j] = id;
            }
            g.faces.push_back(std::move(f));
        }
    }

    long long euler = static_cast<long long>(n) - g.edge_count + static_cast<long long>(g.faces.size());
    require(euler == 2 || (n == 1 && g.edge_count == 0), Errc::EulerViolation,
            "n - e + f = " + std::to_string(euler) + ", rotation system is not a sphere embedding");

    if (n == 1 && g.faces.empty()) {
        Face f;
        f.face_id = 0;
        g.faces.push_back(f);
    }

    if (outer_hint) {
        require(g.has_edge(outer_hint->from, outer_hint->to), Errc::BadOuterHint,
                "outer hint is not an edge");
        g.outer_face_id = g.face_of(outer_hint->from, outer_hint->to);
    } else {
        int best = 0;
        std::vector<DirectedEdge> best_key;
        for (const auto& f : g.faces) {
            std::vector<DirectedEdge> key = f.boundary;
            std::sort(key.begin(), key.end());
            if (f.face_id == 0 || key < best_key) {
                best = f.face_id;
                best_key = std::move(key);
            }
        }
        g.outer_face_id = best;
    }
    g.faces[g.outer_face_id].is_outer = true;
    return g;
}

}  // namespace planegraph
