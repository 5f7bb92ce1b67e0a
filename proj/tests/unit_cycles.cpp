#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "planegraph/cycles.hpp"
#include "planegraph/generators.hpp"

using namespace planegraph;

TEST_CASE("longest cycle on named instances") {
    for (int n : {3, 5, 6, 9}) {
        auto r = longest_cycle(fixtures::cycle(n));
        CHECK(r.status == SearchStatus::Exact);
        CHECK(r.length == n);
        REQUIRE(r.witness.has_value());
        CHECK(validate_cycle_witness(fixtures::cycle(n), *r.witness));
    }
    auto k4 = longest_cycle(fixtures::k4());
    CHECK(k4.length == 4);
}

TEST_CASE("level-1 stacked triangulation is Hamiltonian on 7 vertices") {
    auto g = moon_moser(1);
    REQUIRE(g.vertex_count == 7);
    CHECK(oracles::brute_circumference(g) == 7);
    auto r = longest_cycle(g);
    CHECK(r.status == SearchStatus::Exact);
    CHECK(r.length == 7);
    CHECK(validate_cycle_witness(g, *r.witness));
}

TEST_CASE("longest cycle agrees with exhaustive enumeration on small instances") {
    std::vector<PlaneGraph> gs = {fixtures::k4(),         fixtures::wheel6(),
                                  fixtures::c5_chord(),   fixtures::hexagon(),
                                  fixtures::k2_join_p8(), fixtures::two_triangles_shared_vertex(),
                                  fixtures::path3()};
    for (std::uint64_t seed = 1; seed <= 6; ++seed)
        gs.push_back(random_near_triangulation(4 + static_cast<int>(seed), seed));
    for (const auto& g : gs) {
        auto r = longest_cycle(g);
        CHECK(r.status == SearchStatus::Exact);
        CHECK(r.length == oracles::brute_circumference(g));
    }
}

TEST_CASE("deterministic witness: smallest start, lexicographic successors") {
    auto g = fixtures::wheel6();
    auto a = longest_cycle(g);
    auto b = longest_cycle(g);
    REQUIRE(a.witness.has_value());
    CHECK(a.witness->vertices == b.witness->vertices);
    CHECK(a.witness->vertices[0] == 1);
}

TEST_CASE("cycle_of_length_exactly") {
    CHECK_FALSE(cycle_of_length_exactly(fixtures::hexagon(), 5).has_value());
    CHECK(cycle_of_length_exactly(fixtures::hexagon(), 6).has_value());

    auto tri = cycle_of_length_exactly(fixtures::k4(), 3);
    REQUIRE(tri.has_value());
    CHECK(validate_cycle_witness(fixtures::k4(), *tri));

    // near-triangulations carry every length from 3 up to the circumference
    for (std::uint64_t seed : {11ull, 12ull}) {
        auto g = random_near_triangulation(12, seed);
        int c = longest_cycle(g).length;
        for (int k = 3; k <= c; ++k) {
            auto w = cycle_of_length_exactly(g, k);
            REQUIRE(w.has_value());
            CHECK(w->length() == k);
            CHECK(validate_cycle_witness(g, *w));
        }
    }
}

TEST_CASE("two disjoint k-cycles") {
    SUBCASE("two pentagons joined by one edge") {
        // cycle 1..5, cycle 6..10, bridge 5-6
        auto g = fixtures::make(10, {{5, 2},
                                     {1, 3},
                                     {2, 4},
                                     {3, 5},
                                     {4, 1, 6},
                                     {10, 7, 5},
                                     {6, 8},
                                     {7, 9},
                                     {8, 10},
                                     {9, 6}});
        auto w = two_disjoint_k_cycles(g, 5);
        REQUIRE(w.has_value());
        CHECK(validate_disjoint_pair(g, *w));
        CHECK(w->first.length() == 5);
        CHECK(w->second.length() == 5);
    }
    SUBCASE("hub join over a path splits into two 5-cycles") {
        auto g = fixtures::k2_join_p8();
        auto w = two_disjoint_k_cycles(g, 5);
        REQUIRE(w.has_value());
        CHECK(validate_disjoint_pair(g, *w));
    }
    SUBCASE("book of triangles has no long cycles at all") {
        auto book = glued_construction(9, 7);
        // two pages give a 4-cycle through the spine ends; nothing longer
        CHECK(oracles::brute_circumference(book.graph) == 4);
        CHECK(longest_cycle(book.graph).length == 4);
        CHECK_FALSE(two_disjoint_k_cycles(book.graph, 7).has_value());
    }
    SUBCASE("k above n/2 is immediately empty") {
        CHECK_FALSE(two_disjoint_k_cycles(fixtures::k4(), 3).has_value());
    }
}

TEST_CASE("circumference_upper_check") {
    CHECK(circumference_upper_check(fixtures::cycle(6), 7));
    CHECK_FALSE(circumference_upper_check(fixtures::k4(), 4));
    CHECK(circumference_upper_check(fixtures::k4(), 5));
    CHECK(circumference_upper_check(fixtures::path3(), 3));  // acyclic
}

TEST_CASE("budget exhaustion is reported, not silently wrong") {
    auto g = moon_moser(2);
    auto r = longest_cycle(g, SearchBudget::nodes(5));
    CHECK(r.status == SearchStatus::Budget);
    CHECK_FALSE(r.upper_bound_proven);
    CHECK_THROWS_AS(circumference_upper_check(g, 4, SearchBudget::nodes(2)), GraphError);
}

TEST_CASE("acyclic graphs report length 0") {
    auto r = longest_cycle(fixtures::path3());
    CHECK(r.length == 0);
    CHECK_FALSE(r.witness.has_value());
}
