#include "figures.hpp"
#include "fixtures.hpp"

#include "g2web/bijection.hpp"
#include "g2web/cutpath.hpp"
#include "g2web/tiles.hpp"
#include "g2web/walks.hpp"

#include <doctest.h>

#include <set>
#include <string>

using namespace g2web;

namespace {

std::string weight_name(Weight w) {
    auto f = [](int x) { return x < 0 ? "m" + std::to_string(-x) : std::to_string(x); };
    return f(w.a) + "_" + f(w.b);
}

std::string data(const std::string& rel) { return std::string(G2WEB_DATA_DIR) + "/" + rel; }

std::set<std::string> encodings(const std::vector<Diagram>& ds) {
    std::set<std::string> out;
    for (const auto& d : ds) out.insert(canonical_encoding(d));
    return out;
}

} // namespace

TEST_CASE("single letters give the figure triangles") {
    for (Step s : {Step::a, Step::b, Step::c, Step::z, Step::C, Step::B, Step::A}) {
        CAPTURE(step_token(s));
        const auto td = word_to_diagram({s});
        const Diagram fig = figures::letter(s);
        CHECK(canonical_encoding(td.diagram) == canonical_encoding(fig));
        const Diagram golden = read_diagram_file(data("figures/step_" + weight_name(step_weight(s)) + ".g2w"));
        CHECK(canonical_encoding(golden) == canonical_encoding(fig));
        CHECK(diagram_to_word(TriangularDiagram{fig}) == Word{s});
        CHECK(irreducibility_probe(td) == Irreducibility::certificate);
        CHECK(irreducibility_probe(TriangularDiagram{triangle_template(s).fragment}) == Irreducibility::certificate);
        CHECK_FALSE(output_check(td.diagram).has_value());
    }
}

TEST_CASE("short words") {
    const auto empty = word_to_diagram({});
    CHECK(diagram_to_word(empty).empty());
    CHECK(to_disc(empty) == Diagram());

    const auto aa = word_to_diagram(parse_word("aA"));
    CHECK(diagram_to_word(aa) == parse_word("aA"));
    CHECK(canonical_encoding(to_disc(aa)) == canonical_encoding(fixtures::arc()));

    const Diagram four = to_disc(word_to_diagram(parse_word("abBA")));
    CHECK(canonical_encoding(four) == canonical_encoding(read_diagram_file(data("figures/closed_abBA.g2w"))));
    CHECK(encodings(brute_force_diagrams(4)).count(canonical_encoding(four)) == 1);
}

TEST_CASE("words off the closed walks keep weight on a side") {
    CHECK_THROWS_AS(to_disc(word_to_diagram(parse_word("a"))), std::invalid_argument);
    CHECK_THROWS_AS(to_disc(word_to_diagram(parse_word("ab"))), std::invalid_argument);
}

TEST_CASE("a double arc on the top side is not a step") {
    Sketch s;
    const int a = s.gap();
    const int left = s.mark(-6, -2);
    const int x = s.gap();
    const int top = s.mark(0, 4);
    const int y = s.gap();
    s.edge(left, top, EdgeKind::doubled);
    TriangularDiagram td{s.build({a, x, y})};
    try {
        diagram_to_word(td);
        FAIL("expected NotAStep");
    } catch (const NotAStep& e) {
        CHECK(e.position == 1);
        CHECK(e.difference == Weight{-1, 0});
    }
}

TEST_CASE("roundtrip sweeps") {
    auto one = roundtrip_report(1, {});
    CHECK(one.tested == 7);
    CHECK(one.passed == 7);
    CHECK(one.ok());

    for (int n = 0; n <= 4; ++n) {
        CAPTURE(n);
        auto r = roundtrip_report(n, {});
        CHECK(r.ok());
        CHECK(r.passed == r.tested);
    }

    RoundtripOptions sample{false, 300, 7, 1};
    auto serial = roundtrip_report(6, sample);
    sample.jobs = 4;
    auto parallel = roundtrip_report(6, sample);
    CHECK(serial.tested == 300);
    CHECK(serial.ok());
    CHECK(parallel.tested == serial.tested);
    CHECK(parallel.passed == serial.passed);

    // Sampling more words than exist degrades to the full set.
    auto all = roundtrip_report(2, {false, 1000, 1, 2});
    CHECK(all.tested == 49);
}

TEST_CASE("closed diagrams against the oracle") {
    CHECK(closed_diagrams(0).size() == 1);
    CHECK(closed_diagrams(1).empty());
    CHECK(closed_diagrams(2).size() == 1);
    for (int n = 0; n <= 6; ++n) {
        CAPTURE(n);
        const auto closed = closed_diagrams(n, 2);
        const auto brute = brute_force_diagrams(n);
        CHECK(closed.size() == count_walks(DominantWeight{0, 0}, n, DominantWeight{0, 0}));
        CHECK(encodings(closed).size() == closed.size());
        CHECK(encodings(closed) == encodings(brute));
        for (const auto& d : closed) CHECK_FALSE(output_check(d).has_value());
    }
    const auto four = brute_force_diagrams(4);
    REQUIRE(four.size() == 4);
    int with_vertices = 0;
    for (const auto& d : four) with_vertices += d.vertex_count() == 2;
    CHECK(with_vertices == 2);
}

TEST_CASE("brute force budget") {
    CHECK(brute_force_diagrams(0).size() == 1);
    CHECK(brute_force_diagrams(2).size() == 1);
    CHECK_THROWS_AS(brute_force_diagrams(7), BudgetExceeded);
    CHECK(brute_force_diagrams(7, 7).size() == 120);
}

TEST_CASE("irreducibility probe") {
    const Diagram cat = fixtures::caterpillar();
    CHECK(validate(cat, false).ok);
    CHECK(is_nonpositive(cat));
    TriangularDiagram td{cat.with_corners({0, 6, 8})};
    CHECK(td.length() == 1);
    CHECK(diagram_to_word(td) == parse_word("B"));
    CHECK(irreducibility_probe(td) == Irreducibility::inconclusive);
    // Same letter as a figure triangle, different diagram.
    CHECK(canonical_encoding(cat) != canonical_encoding(figures::letter(Step::B).without_corners()));

    for (int n = 0; n <= 4; ++n) {
        std::uint64_t total = 1;
        for (int i = 0; i < n; ++i) total *= 7;
        int certified = 0;
        for (std::uint64_t k = 0; k < total; ++k)
            certified += irreducibility_probe(word_to_diagram(word_from_index(k, n))) == Irreducibility::certificate;
        CHECK(certified == static_cast<int>(total));
    }
}

TEST_CASE("resolving double edges keeps the weight profile") {
    for (int n = 1; n <= 3; ++n) {
        std::uint64_t total = 1;
        for (int i = 0; i < n; ++i) total *= 7;
        for (std::uint64_t k = 0; k < total; ++k) {
            const auto assembled = assemble(word_from_index(k, n));
            CHECK(weight_profile(assembled) == weight_profile(resolve_doubles(assembled)));
        }
    }
}
