#include "doctest.h"

#include "quiverhh/io.hpp"

using namespace quiverhh;

TEST_CASE("parse the loop and the 2-cycle") {
    auto loop = parse_quiver("vertices: v\narrows: a: v -> v\nrelations: a a\n");
    CHECK(loop.quiver.vertex_count() == 1);
    CHECK(loop.quiver.relations().size() == 1);
    CHECK(loop.field.characteristic() == 0);

    auto cyc = parse_quiver("vertices: 1 2\narrows: a: 1 -> 2, b: 2 -> 1\nrelations: a b, b a\nchar: 2\n");
    CHECK(cyc.quiver.arrow_count() == 2);
    CHECK(cyc.quiver.relations().size() == 2);
    CHECK(cyc.field.characteristic() == 2);
}

TEST_CASE("comments, blank lines and section order") {
    auto f = parse_quiver("# header\nrelations:\n  a a   # squared\n\narrows:\n  a: v -> v\nvertices: v\n");
    CHECK(f.quiver.is_relation(ArrowId{0}, ArrowId{0}));
}

TEST_CASE("errors carry a position") {
    try {
        parse_quiver("vertices: 1 2\narrows: a: 1 -> 2, b: 1 -> 2\nrelations: a c\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 14);
        CHECK(std::string(e.what()).find("'c'") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_quiver("vertices: 1\narrows: a: 1 -> 9\n"), ParseError);
    CHECK_THROWS_AS(parse_quiver("vertices: 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_quiver("vertices: 1 2\narrows: a: 1 -> 2\nrelations: a a\n"), ParseError);
    CHECK_THROWS_AS(parse_quiver("vertices: 1\nchar: 4\n"), ParseError);
    CHECK_THROWS_AS(parse_quiver("vertices: 1\nvertices: 2\n"), ParseError);
    CHECK_THROWS_AS(parse_quiver("vertices 1\n"), ParseError);
}

TEST_CASE("emit and parse round trip") {
    const std::string text = "vertices: 1 2 3\narrows:\n  a: 1 -> 2\n  b: 2 -> 3\nrelations:\n  a b\nchar: 3\n";
    auto f = parse_quiver(text);
    auto out = emit_quiver(f.quiver, f.field);
    CHECK(out == text);
    auto g = parse_quiver(out);
    CHECK(emit_quiver(g.quiver, g.field) == out);
    CHECK(g.quiver.relations() == f.quiver.relations());
}
