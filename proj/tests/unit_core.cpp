#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "planegraph/core.hpp"
#include "planegraph/io.hpp"

using namespace planegraph;

namespace {

int face_length_sum(const PlaneGraph& g) {
    int s = 0;
    for (const auto& f : g.faces) s += f.length();
    return s;
}

}  // namespace

TEST_CASE("K4 has four triangular faces") {
    auto g = fixtures::k4();
    CHECK(g.vertex_count == 4);
    CHECK(g.edge_count == 6);
    CHECK(g.faces.size() == 4);
    for (const auto& f : g.faces) CHECK(f.length() == 3);
    CHECK(face_length_sum(g) == 2 * g.edge_count);
    auto outer = g.outer_face().vertex_set();
    CHECK(outer == std::vector<VertexId>{1, 2, 3});
}

TEST_CASE("triangle has two faces of length 3") {
    auto g = fixtures::triangle();
    CHECK(g.faces.size() == 2);
    CHECK(g.faces[0].length() == 3);
    CHECK(g.faces[1].length() == 3);
}

TEST_CASE("5-cycle plus chord has faces of lengths 3, 4, 5") {
    auto g = fixtures::c5_chord();
    REQUIRE(g.faces.size() == 3);
    std::vector<int> lengths;
    for (const auto& f : g.faces) lengths.push_back(f.length());
    std::sort(lengths.begin(), lengths.end());
    CHECK(lengths == std::vector<int>{3, 4, 5});
    CHECK(g.outer_face().length() == 5);
}

TEST_CASE("build rejects malformed rotation systems") {
    // asymmetric adjacency
    CHECK_THROWS_WITH_AS(build_plane_graph(3, {{2, 3}, {1}, {1, 2}}), doctest::Contains("symmetric"),
                         GraphError);
    // self-loop
    CHECK_THROWS_AS(build_plane_graph(2, {{1, 2}, {1}}), GraphError);
    // repeated neighbor (multigraph)
    CHECK_THROWS_AS(build_plane_graph(2, {{2, 2}, {1, 1}}), GraphError);
    // disconnected
    try {
        build_plane_graph(4, {{2}, {1}, {4}, {3}});
        FAIL("expected NotConnected");
    } catch (const GraphError& e) {
        CHECK(e.code() == Errc::NotConnected);
    }
    // K5-like rotation table cannot embed: this one violates Euler
    try {
        build_plane_graph(5, {{2, 3, 4, 5},
                              {1, 3, 4, 5},
                              {1, 2, 4, 5},
                              {1, 2, 3, 5},
                              {1, 2, 3, 4}});
        FAIL("expected EulerViolation");
    } catch (const GraphError& e) {
        CHECK(e.code() == Errc::EulerViolation);
    }
    // bad outer hint
    try {
        build_plane_graph(3, {{2, 3}, {1, 3}, {1, 2}}, DirectedEdge{1, 1});
        FAIL("expected BadOuterHint");
    } catch (const GraphError& e) {
        CHECK(e.code() == Errc::BadOuterHint);
    }
}

TEST_CASE("outer face defaulting picks the lexicographically smallest orbit") {
    auto g = build_plane_graph(4, {{3, 4, 2}, {1, 4, 3}, {2, 4, 1}, {1, 3, 2}});
    // the orbit containing the directed edge (1,2) sorts first
    CHECK(g.face_of(1, 2) == g.outer_face_id);
}

TEST_CASE("face traversal convention: orbit lies right of its directed edges") {
    auto g = fixtures::k4();
    // outer face of the fixture is the orbit of (1,2); the reversed edge
    // must bound an inner triangle through the center vertex 4
    int inner = g.face_of(2, 1);
    CHECK(inner != g.outer_face_id);
    CHECK(g.faces[inner].vertex_set() == std::vector<VertexId>{1, 2, 4});
}

TEST_CASE("planar_code round-trip is byte identical") {
    auto g = fixtures::k4();
    auto bytes = planar_code_bytes(g);
    std::istringstream in(bytes);
    auto back = read_planar_code(in);
    REQUIRE(back.size() == 1);
    CHECK(back[0].rotations == g.rotations);
    CHECK(planar_code_bytes(back[0]) == bytes);
}

TEST_CASE("planar_code reports truncation with byte offsets") {
    auto bytes = planar_code_bytes(fixtures::k4());
    bytes.pop_back();
    std::istringstream in(bytes);
    try {
        read_planar_code(in);
        FAIL("expected FormatError");
    } catch (const GraphError& e) {
        CHECK(e.code() == Errc::FormatError);
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
}

TEST_CASE("text format round-trip preserves the embedding and outer face") {
    auto g = fixtures::c5_chord();
    std::ostringstream os;
    write_text(os, g, "pentagon with one chord");
    std::istringstream in(os.str());
    auto back = read_text(in);
    REQUIRE(back.size() == 1);
    CHECK(back[0].rotations == g.rotations);
    CHECK(back[0].outer_face().vertex_set() == g.outer_face().vertex_set());
}

TEST_CASE("text parser reports line numbers") {
    std::istringstream in("pg 3\n1: 2 3\n2: 1 3\n");
    try {
        read_text(in);
        FAIL("expected FormatError");
    } catch (const GraphError& e) {
        CHECK(e.code() == Errc::FormatError);
    }
    std::istringstream bad("pg 2\n1: 2\nnope\n");
    CHECK_THROWS_AS(read_text(bad), GraphError);
}

TEST_CASE("multiple planar_code records parse in order") {
    std::ostringstream os;
    write_planar_code(os, fixtures::triangle(), true);
    write_planar_code(os, fixtures::k4(), false);
    std::istringstream in(os.str());
    auto gs = read_planar_code(in);
    REQUIRE(gs.size() == 2);
    CHECK(gs[0].vertex_count == 3);
    CHECK(gs[1].vertex_count == 4);
}

TEST_CASE("graph hash distinguishes rotations") {
    CHECK(graph_hash(fixtures::k4()) == graph_hash(fixtures::k4()));
    CHECK(graph_hash(fixtures::k4()) != graph_hash(fixtures::triangle()));
    CHECK(graph_hash_hex(fixtures::k4()).size() == 16);
}

TEST_CASE("Euler and face-sum invariants on all fixtures") {
    for (const auto& g : {fixtures::triangle(), fixtures::k4(), fixtures::hexagon(),
                          fixtures::c5_chord(), fixtures::wheel6(), fixtures::k2_join_p8(),
                          fixtures::two_triangles_shared_vertex(), fixtures::path3(),
                          fixtures::square_chord_pendant_inside(), fixtures::peripheral_example()}) {
        CHECK(g.vertex_count - g.edge_count + static_cast<int>(g.faces.size()) == 2);
        CHECK(face_length_sum(g) == 2 * g.edge_count);
    }
}

TEST_CASE("K2 join P8 embeds with 16 triangular-ish faces") {
    auto g = fixtures::k2_join_p8();
    CHECK(g.vertex_count == 10);
    CHECK(g.edge_count == 24);
    CHECK(g.faces.size() == 16);
}
