#include "g2web/cutpath.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>

using namespace g2web;

TEST_CASE("search graph") {
    auto g0 = build_search_graph(Diagram());
    CHECK(g0.face_count == 1);
    CHECK(g0.arcs.empty());

    auto ga = build_search_graph(fixtures::arc());
    CHECK(ga.face_count == 2);
    REQUIRE(ga.arcs.size() == 1);
    CHECK(ga.arcs[0].cost == Weight{0, 1});
    CHECK(ga.arcs[0].kind == ArcKind::cross);

    auto gh = build_search_graph(fixtures::h_shape(false));
    auto fs = faces(fixtures::h_shape(false));
    const int top = fs.face_of_slot[2], bottom = fs.face_of_slot[6];
    bool bridge_ride = false;
    for (const auto& a : gh.arcs) {
        if (a.kind != ArcKind::ride) continue;
        CHECK(a.cost == Weight{1, 0});
        bridge_ride = bridge_ride || (std::minmax(a.from, a.to) == std::minmax(top, bottom));
    }
    CHECK(bridge_ride);
}

TEST_CASE("min cut weights on small fixtures") {
    Diagram arc = fixtures::arc();
    CHECK(min_cut_weight(arc, 0, 0) == Weight{0, 0});
    CHECK(min_cut_weight(arc, 0, 2) == Weight{0, 1});
    CHECK(min_cut_multiplicity(Diagram(), 0, 0) == 1);
    CHECK_THROWS_AS(min_cut_weight(arc, 0, 1), std::invalid_argument);

    // Across the bridge of an H: riding the bridge is cheaper than two crossings.
    Diagram h = fixtures::h_shape(false);
    CHECK(min_cut_weight(h, 2, 6) == Weight{1, 0});
    CHECK(min_cut_weight(h, 0, 4) == Weight{0, 1});
    CHECK(min_cut_weight(h, 4, 0) == Weight{0, 1});

    // The eye has two equally cheap routes between its side gaps.
    Diagram eye = fixtures::eye();
    CHECK(min_cut_weight(eye, 0, 2) == Weight{0, 1});
    CHECK(min_cut_multiplicity(eye, 0, 2) == 2);
}

TEST_CASE("metric symmetry on the hexagon") {
    Diagram d = fixtures::hexagon();
    for (int s = 0; s < d.slot_count(); s += 2)
        for (int t = 0; t < d.slot_count(); t += 2) CHECK(min_cut_weight(d, s, t) == min_cut_weight(d, t, s));
    // Opposite gaps: straight through the hexagon beats riding around it.
    CHECK(min_cut_weight(d, 0, 6) == Weight{0, 2});
}

TEST_CASE("adding an arc never lowers a cut") {
    // two_arcs(false) is arc() with a second arc in the interval after its
    // second mark; gaps 0, 4, 6 there all lie in arc()'s gap 0.
    Diagram one = fixtures::arc();
    Diagram two = fixtures::two_arcs(false);
    const int image[8] = {0, -1, 2, -1, 0, -1, 0, -1};
    for (int s = 0; s < 8; s += 2)
        for (int t = 0; t < 8; t += 2)
            CHECK(cut_order_cmp(min_cut_weight(one, image[s], image[t]), min_cut_weight(two, s, t)) <= 0);
    // A bridge is different: riding it undercuts crossing both arcs.
    CHECK(min_cut_weight(fixtures::two_arcs(false), 2, 6) == Weight{0, 2});
    CHECK(min_cut_weight(fixtures::h_shape(false), 2, 6) == Weight{1, 0});
    // Neighbouring gaps of the hexagon are one leg apart.
    Diagram hex = fixtures::hexagon();
    CHECK(cut_order_cmp(min_cut_weight(hex, 0, 2), Weight{0, 1}) == 0);
}

TEST_CASE("profile of the empty triangle") {
    TriangularDiagram td{Diagram().with_corners({0, 0, 0})};
    CHECK(weight_profile(td) == std::vector<Weight>{{0, 0}});
}
