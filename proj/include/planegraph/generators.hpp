#pragma once

// Instance generators. Stacked triangulations grow from K4 by inserting a
// vertex into inner 3-faces (every face per level for the short-circumference
// family, a seeded uniform face for random supply). The glued family fans
// triangulation lobes around one shared edge. All generators are
// deterministic given their inputs and the seed.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "planegraph/connectivity.hpp"
#include "planegraph/core.hpp"
#include "planegraph/holes.hpp"

namespace planegraph {

/// splitmix64; self-contained so seeded streams are identical everywhere.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n), by rejection.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = ~0ull - ~0ull % n;
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % n;
    }
};

struct MoonMoserSpec {
    int level = 0;
    int order = 0;  // (3^(level+1) + 5) / 2
};

inline int moon_moser_order(int level) {
    long long p = 1;
    for (int i = 0; i <= level; ++i) p *= 3;
    return static_cast<int>((p + 5) / 2);
}

namespace detail {

inline std::vector<std::vector<VertexId>> k4_rotations() {
    return {{}, {3, 4, 2}, {1, 4, 3}, {2, 4, 1}, {1, 3, 2}};
}

inline constexpr DirectedEdge kCanonicalOuterEdge{1, 2};

/// Splices a new vertex `w` into the 3-face traced by walk (a->b->c->a).
inline void stack_into_face(std::vector<std::vector<VertexId>>& rot,
                            const std::vector<DirectedEdge>& walk, VertexId w) {
    rot.push_back({});
    for (const auto& e : walk) {
        // at the head of each face edge, w goes between the walk successor
        // and the walk predecessor
        VertexId at = e.to, succ_nbr = 0, pred_nbr = e.from;
        for (const auto& f : walk)
            if (f.from == e.to) succ_nbr = f.to;
        insert_between(rot[at], succ_nbr, pred_nbr, w);
    }
    // clockwise rotation of w matches the face walk orientation
    auto& wr = rot[w];
    for (const auto& e : walk) wr.push_back(e.from);
}

/// Inner 3-faces in face-id order, as boundary walks.
inline std::vector<std::vector<DirectedEdge>> inner_triangle_walks(const PlaneGraph& g) {
    std::vector<std::vector<DirectedEdge>> walks;
    for (const auto& f : g.faces)
        if (!f.is_outer && f.length() == 3) walks.push_back(f.boundary);
    return walks;
}

}  // namespace detail

/// Stacked triangulation: K4, then `level` rounds of inserting one vertex
/// into every inner 3-face. Order is (3^(level+1)+5)/2; the outer face stays
/// the original triangle 1,2,3.
inline PlaneGraph moon_moser(int level) {
    require(level >= 0, Errc::BadParameters, "level must be nonnegative");
    require(level <= 6, Errc::LevelTooLarge, "level capped at 6 (order 1096)");
    auto rot = detail::k4_rotations();
    PlaneGraph g = build_plane_graph(4, rot, detail::kCanonicalOuterEdge);
    for (int round = 0; round < level; ++round) {
        rot = g.rotations;
        VertexId next_vertex = g.vertex_count;
        for (const auto& walk : detail::inner_triangle_walks(g))
            detail::stack_into_face(rot, walk, ++next_vertex);
        g = build_plane_graph(next_vertex, std::move(rot), detail::kCanonicalOuterEdge);
    }
    return g;
}

inline MoonMoserSpec moon_moser_spec(int level) { return {level, moon_moser_order(level)}; }

/// Order-n prefix of the stacked family: vertices are added level by level,
/// within a level in face-id order, stopping at n. n = 3 gives the bare
/// triangle; every result is a near-triangulation.
inline PlaneGraph moon_moser_subtriangulation(int n) {
    require(n >= 3, Errc::BadOrder, "order must be at least 3");
    require(n <= moon_moser_order(6), Errc::BadOrder, "order capped at 1096");
    if (n == 3)
        return build_plane_graph(3, {{3, 2}, {1, 3}, {2, 1}}, detail::kCanonicalOuterEdge);
    PlaneGraph g = build_plane_graph(4, detail::k4_rotations(), detail::kCanonicalOuterEdge);
    while (g.vertex_count < n) {
        auto rot = g.rotations;
        VertexId next_vertex = g.vertex_count;
        for (const auto& walk : detail::inner_triangle_walks(g)) {
            if (next_vertex >= n) break;
            detail::stack_into_face(rot, walk, ++next_vertex);
        }
        g = build_plane_graph(next_vertex, std::move(rot), detail::kCanonicalOuterEdge);
    }
    return g;
}

/// Exponent arithmetic with a snap: doubles within 1e-9 of an integer are
/// treated as that integer before flooring, so exact points like
/// (2*14/7)^(log2 3) = 9 do not lose 1 to rounding.
inline double pow_snapped(double base, double exponent) {
    double x = std::pow(base, exponent);
    double r = std::round(x);
    if (std::abs(x - r) <= 1e-9) return r;
    return x;
}

inline double log2_3() { return std::log2(3.0); }
inline double log3_2() { return std::log(2.0) / std::log(3.0); }

struct GluedSpec {
    int k = 0;
    int n = 0;
    int m = 0;          // lobe order: floor((2k/7)^(log2 3))
    int t_copies = 0;   // full lobes
    int remainder = 0;  // n - 2 - t_copies*(m - 2), in [0, m-2)
};

struct GluedResult {
    PlaneGraph graph;
    GluedSpec spec;
    std::vector<std::vector<VertexId>> lobe_vertices;  // host ids incl. the shared edge 1,2
    std::vector<int> lobe_orders;                      // orders of the built lobes
};

/// Fans triangulation lobes around the shared edge 1-2: t_copies lobes of
/// order m and, when the remainder r >= 3 would not fit by stacking, one
/// extra lobe of order r+2. Remainders 1 and 2 are stacked into the last
/// full lobe instead. Order is exactly n and no two disjoint k-cycles exist
/// when every lobe's circumference stays below k.
inline GluedResult glued_construction(int n, int k) {
    require(k >= 7, Errc::KTooSmall,
            "lobe order floor((2k/7)^(log2 3)) degenerates for k < 7");
    GluedSpec spec;
    spec.k = k;
    spec.n = n;
    spec.m = static_cast<int>(std::floor(pow_snapped(2.0 * k / 7.0, log2_3())));
    require(spec.m >= 3, Errc::KTooSmall, "lobe order too small");
    require(n >= spec.m, Errc::BadOrder, "need n >= lobe order");
    spec.t_copies = (n - 2) / (spec.m - 2);
    spec.remainder = (n - 2) % (spec.m - 2);

    std::vector<int> lobe_orders(static_cast<size_t>(spec.t_copies), spec.m);
    if (spec.remainder >= 1 && spec.remainder <= 2) {
        lobe_orders.back() = spec.m + spec.remainder;  // stack extras into the last full lobe
    } else if (spec.remainder >= 3) {
        lobe_orders.push_back(spec.remainder + 2);  // own lobe sharing the edge
    }

    GluedResult out;
    out.spec = spec;
    out.lobe_orders = lobe_orders;

    // rotations at the shared edge get assembled lobe by lobe; lobe i sits
    // inside the spine-adjacent face of lobe i+1
    int total = 2;
    for (int order : lobe_orders) total += order - 2;
    require(total == n, Errc::Internal, "glued order accounting is off");

    std::vector<std::vector<VertexId>> rot(static_cast<size_t>(n) + 1);
    std::vector<VertexId> u_fans, v_fans;  // accumulated neighbors of 1 and 2
    VertexId next_free = 3;
    for (int order : lobe_orders) {
        PlaneGraph lobe = moon_moser_subtriangulation(order);
        // local 1,2 map to the spine; local j >= 3 maps to next_free + j - 3
        auto to_host = [&](VertexId local) -> VertexId {
            if (local <= 2) return local;
            return next_free + local - 3;
        };
        std::vector<VertexId> members{1, 2};
        for (VertexId local = 3; local <= lobe.vertex_count; ++local) {
            VertexId host = to_host(local);
            members.push_back(host);
            for (VertexId w : lobe.rotations[local]) rot[host].push_back(to_host(w));
        }
        out.lobe_vertices.push_back(members);
        // lobe rotation at 1 reads (3, ..., 2): keep everything but the
        // trailing 2; newest lobe goes outermost
        std::vector<VertexId> u_fan, v_fan;
        for (VertexId w : lobe.rotations[1])
            if (w != 2) u_fan.push_back(to_host(w));
        for (VertexId w : lobe.rotations[2])
            if (w != 1) v_fan.push_back(to_host(w));
        u_fans.insert(u_fans.begin(), u_fan.begin(), u_fan.end());
        v_fans.insert(v_fans.end(), v_fan.begin(), v_fan.end());
        next_free += lobe.vertex_count - 2;
    }
    rot[1] = u_fans;
    rot[1].push_back(2);
    rot[2].assign(1, 1);
    rot[2].insert(rot[2].end(), v_fans.begin(), v_fans.end());

    out.graph = build_plane_graph(n, std::move(rot), detail::kCanonicalOuterEdge);
    return out;
}

/// Random stacked triangulation: each step picks an inner 3-face uniformly.
inline PlaneGraph random_near_triangulation(int n, std::uint64_t seed) {
    require(n >= 4, Errc::BadOrder, "random near-triangulations start at order 4");
    Rng rng(seed);
    PlaneGraph g = build_plane_graph(4, detail::k4_rotations(), detail::kCanonicalOuterEdge);
    while (g.vertex_count < n) {
        auto walks = detail::inner_triangle_walks(g);
        const auto& walk = walks[rng.below(walks.size())];
        auto rot = g.rotations;
        detail::stack_into_face(rot, walk, g.vertex_count + 1);
        g = build_plane_graph(g.vertex_count + 1, std::move(rot), detail::kCanonicalOuterEdge);
    }
    return g;
}

struct RandomTwoConnected {
    PlaneGraph graph;
    int achieved_m = 0;  // may fall short of the target when no edge is deletable
};

/// Random 2-connected supply: a random stacked triangulation with inner
/// edges deleted one at a time (uniform among candidates that keep the graph
/// 2-connected and merge two inner faces) until m reaches target_m or no
/// candidate remains.
inline RandomTwoConnected random_two_connected(int n, int target_m, std::uint64_t seed) {
    require(target_m >= 0, Errc::BadParameters, "target_m must be nonnegative");
    RandomTwoConnected out;
    out.graph = random_near_triangulation(n, seed);
    Rng rng(seed ^ 0x5bf03635f0a5b1b5ull);
    while (out.achieved_m < target_m) {
        std::vector<std::pair<VertexId, VertexId>> candidates;
        auto rot_trial = out.graph.rotations;
        for (VertexId u = 1; u <= out.graph.vertex_count; ++u) {
            for (VertexId w : out.graph.rotations[u]) {
                if (w < u) continue;
                if (out.graph.face_of(u, w) == out.graph.outer_face_id ||
                    out.graph.face_of(w, u) == out.graph.outer_face_id)
                    continue;  // keep the outer cycle intact
                auto& ru = rot_trial[u];
                auto& rw = rot_trial[w];
                ru.erase(std::find(ru.begin(), ru.end(), w));
                rw.erase(std::find(rw.begin(), rw.end(), u));
                if (detail::adjacency_two_connected(rot_trial, out.graph.vertex_count))
                    candidates.emplace_back(u, w);
                rot_trial[u] = out.graph.rotations[u];
                rot_trial[w] = out.graph.rotations[w];
            }
        }
        if (candidates.empty()) break;
        auto [u, w] = candidates[rng.below(candidates.size())];
        auto rot = out.graph.rotations;
        rot[u].erase(std::find(rot[u].begin(), rot[u].end(), w));
        rot[w].erase(std::find(rot[w].begin(), rot[w].end(), u));
        out.graph = build_plane_graph(out.graph.vertex_count, std::move(rot),
                                      out.graph.outer_face().boundary.front());
        ++out.achieved_m;
    }
    return out;
}

inline std::string moon_moser_spec_line(const MoonMoserSpec& s) {
    return "moon_moser level=" + std::to_string(s.level) + " order=" + std::to_string(s.order);
}

inline std::string glued_spec_line(const GluedSpec& s) {
    return "glued k=" + std::to_string(s.k) + " n=" + std::to_string(s.n) +
           " m=" + std::to_string(s.m) + " t=" + std::to_string(s.t_copies) +
           " n'=" + std::to_string(s.remainder);
}

}  // namespace planegraph
