#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "planegraph/extract.hpp"
#include "planegraph/generators.hpp"

using namespace planegraph;

namespace {

/// Deletes one inner chord of a near-triangulation (the first inner edge
/// whose deletion keeps 2-connectivity), giving a 2-connected graph with
/// m = 1.
PlaneGraph delete_one_inner_edge(const PlaneGraph& g) {
    for (VertexId u = 1; u <= g.vertex_count; ++u) {
        for (VertexId w : g.rotations[u]) {
            if (w < u) continue;
            if (g.face_of(u, w) == g.outer_face_id || g.face_of(w, u) == g.outer_face_id)
                continue;
            auto rot = g.rotations;
            rot[u].erase(std::find(rot[u].begin(), rot[u].end(), w));
            rot[w].erase(std::find(rot[w].begin(), rot[w].end(), u));
            if (!planegraph::detail::adjacency_two_connected(rot, g.vertex_count)) continue;
            return build_plane_graph(g.vertex_count, std::move(rot),
                                     g.outer_face().boundary.front());
        }
    }
    FAIL("no deletable inner edge");
    return g;
}

}  // namespace

TEST_CASE("near-triangulation hosts return themselves") {
    auto g = random_near_triangulation(12, 3);
    auto r = extract_near_triangulation(g, 4);
    CHECK(r.hypothesis_held);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->order == 12);
    CHECK(check_witness(g, *r.witness, 4));
    CHECK_FALSE(r.used_fallback);
}

TEST_CASE("hexagon has nothing to extract") {
    auto g = fixtures::hexagon();
    auto r = extract_near_triangulation(g, 4);
    CHECK_FALSE(r.hypothesis_held);  // m = 3, threshold (6-3)/5
    CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("one deleted chord still leaves a large near-triangulation") {
    auto g = delete_one_inner_edge(random_near_triangulation(20, 1));
    REQUIRE(missing_edge_count(g) == 1);
    auto r = extract_near_triangulation(g, 4);
    CHECK(r.hypothesis_held);  // 1 * 5 < 20 - 3
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->order >= 4);
    CHECK(check_witness(g, *r.witness, 4));
}

TEST_CASE("ring11 extraction goes through the connector step") {
    auto g = fixtures::ring11();
    auto r = extract_near_triangulation(g, 4);
    CHECK(r.hypothesis_held);  // 1 * 5 < 11 - 3
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->order >= 4);
    CHECK(check_witness(g, *r.witness, 4));
}

TEST_CASE("extraction across t and seeds, certified") {
    for (int t = 4; t <= 6; ++t) {
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            int n = 14 + static_cast<int>(seed);
            int max_m = (n - t) / (3 * t - 7);
            auto supply = random_two_connected(n, static_cast<int>(seed) % (max_m + 1), seed);
            if (!extraction_hypothesis_holds(n, supply.achieved_m, t)) continue;
            auto r = extract_near_triangulation(supply.graph, t);
            CHECK(r.hypothesis_held);
            REQUIRE(r.witness.has_value());
            CHECK(r.witness->order >= t);
            CHECK(check_witness(supply.graph, *r.witness, t));
        }
    }
}

TEST_CASE("extraction argument checks") {
    CHECK_THROWS_AS(extract_near_triangulation(fixtures::k4(), 3), GraphError);
    CHECK_THROWS_AS(extract_near_triangulation(fixtures::path3(), 4), GraphError);
}

TEST_CASE("check_witness rejects corrupted certificates") {
    auto g = random_near_triangulation(10, 7);
    auto r = extract_near_triangulation(g, 4);
    REQUIRE(r.witness.has_value());
    auto good = *r.witness;
    CHECK(check_witness(g, good, 4));

    SUBCASE("order below t") { CHECK_FALSE(check_witness(g, good, good.order + 1)); }
    SUBCASE("missing edge leaves a quadrilateral face") {
        auto bad = good;
        // drop one edge that borders two inner triangles
        for (size_t i = 0; i < bad.edge_set.size(); ++i) {
            auto [u, v] = bad.edge_set[i];
            if (g.face_of(u, v) != g.outer_face_id && g.face_of(v, u) != g.outer_face_id) {
                bad.edge_set.erase(bad.edge_set.begin() + static_cast<long>(i));
                break;
            }
        }
        CHECK_FALSE(check_witness(g, bad, 4));
    }
    SUBCASE("wrong host") {
        auto other = random_near_triangulation(10, 8);
        CHECK_FALSE(check_witness(other, good, 4));
    }
    SUBCASE("boundary tampering") {
        // use a host whose witness boundary is longer than a triangle: the
        // wheel returns itself with the 5-rim as boundary
        auto wheel = fixtures::wheel6();
        auto rw = extract_near_triangulation(wheel, 4);
        REQUIRE(rw.witness.has_value());
        REQUIRE(rw.witness->boundary_cycle.size() == 5);
        auto bad = *rw.witness;
        std::swap(bad.boundary_cycle[0], bad.boundary_cycle[1]);
        CHECK_FALSE(check_witness(wheel, bad, 4));
    }
}

TEST_CASE("witness certificates round-trip through text") {
    auto g = fixtures::ring11();
    auto r = extract_near_triangulation(g, 4);
    REQUIRE(r.witness.has_value());
    auto text = serialize_witness(*r.witness);
    std::istringstream in(text);
    auto back = parse_witness(in);
    CHECK(back.host_hash == r.witness->host_hash);
    CHECK(back.vertex_set == r.witness->vertex_set);
    CHECK(back.edge_set == r.witness->edge_set);
    CHECK(back.boundary_cycle == r.witness->boundary_cycle);
    CHECK(check_witness(g, back, back.requested_t));
}

TEST_CASE("fallback disc search finds regions directly") {
    auto g = fixtures::ring11();
    planegraph::detail::DiscSearcher discs(g, 5);
    auto region = discs.greedy();
    REQUIRE(region.has_value());
    CHECK(discs.vertex_count(*region) >= 5);
    CHECK_FALSE(discs.disc_boundary(*region).empty());
}
