#include "g2web/tiles.hpp"

#include "g2web/cutpath.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <string>

#include <random>

using namespace g2web;

TEST_CASE("label set closure and signatures") {
    for (Weight a : kLabelSet)
        for (Weight b : kLabelSet) {
            auto out = diamond_outputs(a, b);
            CHECK(in_label_set(out.bottom_left));
            CHECK(in_label_set(out.bottom_right));
        }
    CHECK(diamond_outputs({0, 1}, {0, 1}).bottom_left == Weight{0, 0});
    CHECK(diamond_outputs({0, 1}, {1, 0}).bottom_left == Weight{1, 0});
    CHECK(diamond_outputs({0, 1}, {1, 0}).bottom_right == Weight{0, 1});
    CHECK(diamond_outputs({0, 2}, {1, 0}).bottom_left == Weight{1, 0});
    CHECK(diamond_outputs({0, 2}, {1, 0}).bottom_right == Weight{0, 2});
    CHECK(diamond_outputs({0, 0}, {0, 0}).bottom_right == Weight{0, 0});
    CHECK(signature({1, 0}) == std::vector<EdgeKind>{EdgeKind::doubled});
    CHECK(signature({0, 2}).size() == 2);
    CHECK_THROWS_AS(signature({1, 1}), std::invalid_argument);
}

TEST_CASE("triangle labels differ by the step") {
    for (Step s : kAllSteps) {
        auto t = triangle_labels(s);
        CHECK(t.h - t.d == step_weight(s));
        CHECK(in_label_set(t.d));
        CHECK(in_label_set(t.h));
    }
}

namespace {

std::vector<EdgeKind> kinds_on(const TileTemplate& t, int side) {
    std::vector<EdgeKind> out;
    for (int s : t.side_slots(side)) out.push_back(t.fragment.kind(t.fragment.slot(s).dart));
    return out;
}

} // namespace

TEST_CASE("triangle templates") {
    for (Step s : kAllSteps) {
        CAPTURE(step_token(s));
        auto t = triangle_template(s);
        const Diagram& f = t.fragment;
        auto report = validate(f, true);
        CHECK_MESSAGE(report.ok, (report.problems.empty() ? "" : report.problems.front()));
        CHECK(is_nonpositive(f));
        REQUIRE(f.corners().size() == 3);
        CHECK(t.side_slots(1).size() == 1);
        auto lab = triangle_labels(s);
        CHECK(kinds_on(t, 0) == signature(lab.d));
        auto right = kinds_on(t, 2);
        std::reverse(right.begin(), right.end());
        CHECK(right == signature(lab.h));
        TriangularDiagram td{f};
        CHECK(weight_profile(td) == std::vector<Weight>{lab.d, lab.h});
        CHECK(min_cut_multiplicity(f, td.corner_a(), td.corner_x()) == 1);
        CHECK(min_cut_multiplicity(f, td.corner_a(), td.corner_y()) == 1);
    }
    CHECK(triangle_template(Step::z).fragment.vertex_count() == 1);
    CHECK(triangle_template(Step::a).fragment.vertex_count() == 0);
    CHECK(triangle_template(Step::b).fragment.count_kind(EdgeKind::doubled) == 1);
}

TEST_CASE("diamond templates") {
    for (Weight a : kLabelSet)
        for (Weight b : kLabelSet) {
            CAPTURE(a);
            CAPTURE(b);
            auto t = diamond_template(a, b);
            const Diagram& f = t.fragment;
            auto report = validate(f, true);
            CHECK_MESSAGE(report.ok, (report.problems.empty() ? "" : report.problems.front()));
            CHECK(is_nonpositive(f));
            REQUIRE(f.corners().size() == 4);
            for (int side = 0; side < 4; ++side) {
                auto k = kinds_on(t, side);
                CHECK(k == signature(t.side_labels[static_cast<std::size_t>(side)]));
            }
            // The sides are minimal cut paths between the corners.
            const auto& c = f.corners();
            CHECK(min_cut_weight(f, c[0], c[1]) == t.side_labels[0]);
            CHECK(min_cut_weight(f, c[1], c[2]) == t.side_labels[1]);
            CHECK(min_cut_weight(f, c[2], c[3]) == t.side_labels[2]);
            CHECK(min_cut_weight(f, c[3], c[0]) == t.side_labels[3]);
        }
    CHECK(diamond_template({0, 0}, {0, 0}).fragment.edge_count() == 0);
    auto cap = diamond_template({1, 0}, {1, 0}).fragment;
    CHECK(cap.edge_count() == 1);
    CHECK(cap.count_kind(EdgeKind::doubled) == 1);
    auto zig = diamond_template({0, 2}, {1, 0}).fragment;
    CHECK(zig.vertex_count() == 4);
    CHECK(zig.count_kind(EdgeKind::doubled) == 3);
    CHECK_THROWS_AS(diamond_template({2, 0}, {0, 0}), std::invalid_argument);
}

TEST_CASE("grid labels") {
    auto g1 = grid_labels(parse_word("a"));
    CHECK(g1.d(0, 0) == Weight{0, 0});
    CHECK(g1.h(0, 0) == Weight{0, 1});
    auto g2 = grid_labels(parse_word("aA"));
    CHECK(g2.h(0, 1) == Weight{0, 1});
    CHECK(g2.d(1, 0) == Weight{0, 1});
    CHECK(g2.d(0, 0) == Weight{0, 0});
    CHECK(g2.h(0, 0) == Weight{0, 0});

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        Word w(static_cast<std::size_t>(1 + rng() % 10));
        for (auto& s : w) s = kAllSteps[rng() % 7];
        for (Weight x : grid_labels(w).all()) CHECK(in_label_set(x));
    }
}

TEST_CASE("assembly") {
    auto z = assemble(parse_word("z"));
    CHECK(z.diagram.vertex_count() == 1);
    CHECK(z.length() == 1);
    auto e = assemble({});
    CHECK(e.length() == 0);
    CHECK(e.diagram.edge_count() == 0);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 500; ++trial) {
        Word w(static_cast<std::size_t>(rng() % 8));
        for (auto& s : w) s = kAllSteps[rng() % 7];
        CAPTURE(format_word(w));
        auto td = assemble(w);
        CHECK(td.length() == static_cast<int>(w.size()));
        auto report = validate(td.diagram, true);
        CHECK_MESSAGE(report.ok, (report.problems.empty() ? "" : report.problems.front()));
    }
}

TEST_CASE("resolution of double edges") {
    // No doubles: unchanged.
    Diagram h = fixtures::h_shape(false);
    CHECK(canonical_encoding(resolve_doubles(h)) == canonical_encoding(h));

    // An isolated double between two mixed vertices becomes the H.
    Sketch s;
    s.gap();
    int tl = s.mark(-2, 2);
    s.gap();
    int tr = s.mark(2, 2);
    s.gap();
    int br = s.mark(2, -2);
    s.gap();
    int bl = s.mark(-2, -2);
    int l = s.vertex(-1, 0), r = s.vertex(1, 0);
    s.edge(tl, l);
    s.edge(bl, l);
    s.edge(tr, r);
    s.edge(br, r);
    s.edge(l, r, EdgeKind::doubled);
    Diagram dbl = s.build();
    CHECK(validate(dbl, true).ok);
    Diagram res = resolve_doubles(dbl);
    CHECK(validate(res, false).ok);
    CHECK(canonical_encoding(res) == canonical_encoding(fixtures::h_shape(false)));

    // A double ending on the boundary splits its mark.
    Sketch t;
    t.gap();
    int m0 = t.mark(-2, 2);
    t.gap();
    int m1 = t.mark(2, 0);
    t.gap();
    int m2 = t.mark(-2, -2);
    int v = t.vertex(0, 0);
    t.edge(m0, v);
    t.edge(m2, v);
    t.edge(v, m1, EdgeKind::doubled);
    Diagram half = resolve_doubles(t.build());
    CHECK(half.mark_count() == 4);
    CHECK(validate(half, false).ok);
    CHECK(canonical_encoding(normalized_disc(half)) == canonical_encoding(fixtures::h_shape(false)));
}

TEST_CASE("templates match the golden files") {
    auto name = [](Weight w) {
        auto f = [](int x) { return x < 0 ? "m" + std::to_string(-x) : std::to_string(x); };
        return f(w.a) + "_" + f(w.b);
    };
    const std::string dir = std::string(G2WEB_DATA_DIR) + "/tiles/";
    for (Step s : {Step::a, Step::b, Step::c, Step::z, Step::C, Step::B, Step::A}) {
        const Diagram g = read_diagram_file(dir + "triangle_" + name(step_weight(s)) + ".g2w");
        CHECK(canonical_encoding(g) == canonical_encoding(triangle_template(s).fragment));
        CHECK(g.corners().size() == 3);
    }
    for (Weight a : kLabelSet)
        for (Weight b : kLabelSet) {
            const Diagram g = read_diagram_file(dir + "diamond_" + name(a) + "__" + name(b) + ".g2w");
            CHECK(canonical_encoding(g) == canonical_encoding(diamond_template(a, b).fragment));
            CHECK(g.corners().size() == 4);
        }
}
