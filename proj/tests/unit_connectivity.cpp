#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "planegraph/connectivity.hpp"
#include "planegraph/subgraph.hpp"

using namespace planegraph;

TEST_CASE("is_two_connected basics") {
    CHECK(is_two_connected(fixtures::k4()));
    CHECK_FALSE(is_two_connected(fixtures::two_triangles_shared_vertex()));
    CHECK_FALSE(is_two_connected(fixtures::path3()));
    CHECK(is_two_connected(fixtures::triangle()));
}

TEST_CASE("two_cuts on the named instances") {
    CHECK(two_cuts(fixtures::k4()).empty());

    auto shared_edge = fixtures::two_triangles_shared_edge();
    auto expected = oracles::brute_two_cuts(shared_edge);
    REQUIRE(expected == std::vector<std::pair<VertexId, VertexId>>{{1, 2}});
    CHECK(two_cuts(shared_edge) == expected);

    auto c4 = fixtures::cycle(4);
    CHECK(two_cuts(c4) == std::vector<std::pair<VertexId, VertexId>>{{1, 3}, {2, 4}});
}

TEST_CASE("two_cuts matches the deletion oracle on every fixture") {
    for (const auto& g :
         {fixtures::k4(), fixtures::hexagon(), fixtures::c5_chord(), fixtures::wheel6(),
          fixtures::k2_join_p8(), fixtures::square_chord_pendant_inside(),
          fixtures::square_with_chord(), fixtures::peripheral_example()}) {
        if (!is_two_connected(g)) continue;
        CHECK(two_cuts(g) == oracles::brute_two_cuts(g));
    }
}

TEST_CASE("two_cuts requires 2-connectivity") {
    CHECK_THROWS_AS(two_cuts(fixtures::path3()), GraphError);
}

TEST_CASE("circuit graph predicate") {
    CHECK(is_circuit_graph(fixtures::k4()));  // no 2-cut at all
    CHECK(is_circuit_graph(fixtures::wheel6()));
    // {1,3} cuts off the inner pendant vertex 5, which avoids the outer cycle
    CHECK_FALSE(is_circuit_graph(fixtures::square_chord_pendant_inside()));
}

TEST_CASE("blocks of standard shapes") {
    auto single = blocks(fixtures::k4());
    CHECK(single.block_count() == 1);
    CHECK(single.cut_vertices.empty());

    auto path = blocks(fixtures::path3());
    CHECK(path.block_count() == 2);
    CHECK(path.cut_vertices == std::vector<VertexId>{2});
    CHECK(path.blocks[0].vertices == std::vector<VertexId>{1, 2});
    CHECK(path.blocks[1].vertices == std::vector<VertexId>{2, 3});

    auto shared = blocks(fixtures::two_triangles_shared_vertex());
    CHECK(shared.block_count() == 2);
    CHECK(shared.cut_vertices == std::vector<VertexId>{3});
    REQUIRE(shared.blocks_of_cut.size() == 1);
    CHECK(shared.blocks_of_cut[0].size() == 2);
}

TEST_CASE("blocks_after_deletion sees the split") {
    // square 1-2-3-4 with chord 1-3: removing 1 leaves the path 2-3-4
    auto g = fixtures::square_with_chord();
    auto d = blocks_after_deletion(g, 1);
    CHECK(d.block_count() == 2);
    CHECK(d.cut_vertices == std::vector<VertexId>{3});
}

TEST_CASE("subgraph_bounded_by_cycle identity and interior cases") {
    auto k4 = fixtures::k4();
    SUBCASE("outer cycle returns the whole graph") {
        auto sub = subgraph_bounded_by_cycle(k4, std::vector<VertexId>{1, 2, 3});
        CHECK(sub.graph.vertex_count == 4);
        CHECK(sub.graph.edge_count == 6);
        CHECK(sub.to_host == std::vector<VertexId>{0, 1, 2, 3, 4});
    }
    SUBCASE("a facial triangle bounds only itself") {
        auto sub = subgraph_bounded_by_cycle(k4, std::vector<VertexId>{1, 2, 4});
        CHECK(sub.graph.vertex_count == 3);
        CHECK(sub.graph.edge_count == 3);
        CHECK(sub.to_host == std::vector<VertexId>{0, 1, 2, 4});
    }
    SUBCASE("wheel sector picks up the enclosed spoke") {
        auto w = fixtures::wheel6();
        auto sub = subgraph_bounded_by_cycle(w, std::vector<VertexId>{1, 2, 3, 6});
        CHECK(sub.graph.vertex_count == 4);
        CHECK(sub.graph.edge_count == 5);  // rim 1-2, 2-3, spokes 6-1, 6-2, 6-3
        CHECK(is_two_connected(sub.graph));
        CHECK(sub.graph.outer_face().length() == 4);
    }
}

TEST_CASE("subgraph_bounded_by_cycle rejects non-cycles") {
    auto k4 = fixtures::k4();
    CHECK_THROWS_AS(subgraph_bounded_by_cycle(k4, std::vector<VertexId>{1, 2}), GraphError);
    CHECK_THROWS_AS(subgraph_bounded_by_cycle(k4, std::vector<VertexId>{1, 2, 1}), GraphError);
}

TEST_CASE("cycle orientation matches the embedding convention") {
    auto k4 = fixtures::k4();
    // outer face of the fixture traverses 1->2->3; its interior is the rest
    auto c = make_cycle_ref(k4, {1, 2, 3});
    CHECK(c.orientation == Orientation::CounterClockwise);
    auto r = make_cycle_ref(k4, {3, 2, 1});
    CHECK(r.orientation == Orientation::Clockwise);
}

TEST_CASE("bounded subgraphs of every enumerated cycle stay 2-connected") {
    for (const auto& g : {fixtures::k4(), fixtures::wheel6(), fixtures::c5_chord(),
                          fixtures::k2_join_p8()}) {
        for (const auto& cyc : oracles::brute_all_cycles(g)) {
            auto sub = subgraph_bounded_by_cycle(g, cyc);
            CHECK(is_two_connected(sub.graph));
        }
    }
}
