#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "planegraph/connectors.hpp"
#include "planegraph/generators.hpp"

using namespace planegraph;

TEST_CASE("ring11 fixture sanity") {
    auto g = fixtures::ring11();
    CHECK(g.vertex_count == 11);
    CHECK(g.edge_count == 23);
    CHECK(g.outer_face().vertex_set() == std::vector<VertexId>{1, 2, 3, 4, 5, 6});
    auto hs = holes(g);
    REQUIRE(hs.size() == 1);
    CHECK(hs[0].vertex_set() == std::vector<VertexId>{7, 9, 10, 11});
    CHECK(missing_edge_count(g) == 1);
    CHECK_FALSE(any_hole_meets_outer_twice(g));
}

TEST_CASE("connectors to an interior hole carry a near-triangulated region") {
    auto g = fixtures::ring11();
    auto outer = g.outer_cycle_vertices();
    int hole_id = holes(g).front().face_id;
    auto w = find_hole_connectors(g, outer, hole_id);

    CHECK(validate_connector(g, outer, w));
    // the hole avoids the outer cycle, so both connectors carry an edge
    CHECK(w.path1.size() >= 2);
    CHECK(w.path2.size() >= 2);
    REQUIRE(w.region_is_near_triangulation);
    REQUIRE_FALSE(w.region_faces.empty());
    for (int f : w.region_faces) CHECK(g.faces[f].length() == 3);

    // region boundary is a real cycle of the host
    auto sub = subgraph_bounded_by_cycle(g, w.region_cycle);
    CHECK(is_near_triangulation(sub.graph));
}

TEST_CASE("connector determinism") {
    auto g = fixtures::ring11();
    auto outer = g.outer_cycle_vertices();
    int hole_id = holes(g).front().face_id;
    auto a = find_hole_connectors(g, outer, hole_id);
    auto b = find_hole_connectors(g, outer, hole_id);
    CHECK(a.path1 == b.path1);
    CHECK(a.path2 == b.path2);
    CHECK(a.region_cycle == b.region_cycle);
}

TEST_CASE("degenerate connectors when the hole touches P") {
    // pentagon with chord: the 4-hole {1,3,4,5} shares vertices with the
    // outer cycle, so single-vertex connectors appear
    auto g = fixtures::c5_chord();
    auto hs = holes(g);
    REQUIRE(hs.size() == 1);
    std::vector<VertexId> p{3, 4, 5, 1};  // outer portion of the hole
    auto w = find_hole_connectors(g, p, hs[0].face_id);
    CHECK(validate_connector(g, p, w));
    CHECK(w.path1.size() == 1);  // x = y on the shared boundary
    CHECK(w.path2.size() == 1);
    CHECK(w.x1 == w.y1);
    CHECK(w.x2 == w.y2);
}

TEST_CASE("connectors exist and validate on seeded instances") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto r = random_two_connected(18, 2, seed);
        if (is_near_triangulation(r.graph)) continue;
        auto outer = r.graph.outer_cycle_vertices();
        for (const auto& hole : holes(r.graph)) {
            auto w = find_hole_connectors(r.graph, outer, hole.face_id);
            CHECK(validate_connector(r.graph, outer, w));
            if (w.region_is_near_triangulation) {
                auto sub = subgraph_bounded_by_cycle(r.graph, w.region_cycle);
                CHECK(is_near_triangulation(sub.graph));
            }
        }
    }
}

TEST_CASE("find_hole_connectors rejects bad inputs") {
    auto nt = fixtures::k4();
    CHECK_THROWS_AS(find_hole_connectors(nt, nt.outer_cycle_vertices(), 0), GraphError);
    auto g = fixtures::ring11();
    // a triangular face is not a hole
    int tri = -1;
    for (const auto& f : g.faces)
        if (!f.is_outer && f.length() == 3) tri = f.face_id;
    CHECK_THROWS_AS(find_hole_connectors(g, g.outer_cycle_vertices(), tri), GraphError);
}

TEST_CASE("peripheral fans of the single-hole example") {
    auto g = fixtures::peripheral_example();
    auto [first, second] = peripheral_neighborhoods(g, 1);
    CHECK(first.center == 1);
    CHECK(first.sequence == std::vector<VertexId>{2, 5});
    CHECK(second.sequence == std::vector<VertexId>{3, 6});
    // both fans stop at the same 4-hole {1,5,7,6}
    CHECK(first.hole_id == second.hole_id);
    CHECK(g.faces[first.hole_id].vertex_set() == std::vector<VertexId>{1, 5, 6, 7});
}

TEST_CASE("peripheral fans with two holes stop at distinct holes") {
    auto g = fixtures::two_holes_at_vertex();
    CHECK(g.edge_count == 13);
    CHECK(g.faces.size() == 6);
    auto [first, second] = peripheral_neighborhoods(g, 1);
    CHECK(first.sequence == std::vector<VertexId>{2, 5});
    CHECK(second.sequence == std::vector<VertexId>{3, 7});
    CHECK(first.hole_id != second.hole_id);
    CHECK(g.faces[first.hole_id].vertex_set() == std::vector<VertexId>{1, 5, 6, 8});
    CHECK(g.faces[second.hole_id].vertex_set() == std::vector<VertexId>{1, 6, 7, 9});
}

TEST_CASE("peripheral fans refuse off-hole and off-cycle centers") {
    auto g = fixtures::peripheral_example();
    // vertex 4 is on the outer cycle but touches no hole... it touches the
    // 6-hole {2,5,7,6,3,4}, which also meets the outer cycle at 2 and 3
    try {
        peripheral_neighborhoods(g, 4);
        FAIL("expected NotApplicable");
    } catch (const GraphError& e) {
        CHECK(e.code() == Errc::NotApplicable);
    }
    // K4 has no holes anywhere
    try {
        peripheral_neighborhoods(fixtures::k4(), 1);
        FAIL("expected NotApplicable");
    } catch (const GraphError& e) {
        CHECK(e.code() == Errc::NotApplicable);
    }
    CHECK_THROWS_AS(peripheral_neighborhoods(fixtures::ring11(), 7), GraphError);
}
