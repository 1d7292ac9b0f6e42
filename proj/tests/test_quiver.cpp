#include "doctest.h"

#include "fixtures.hpp"
#include "quiverhh/quiver.hpp"

using namespace quiverhh;

namespace {

BoundQuiver three_loops() {
    BoundQuiver::Builder b;
    b.add_vertex("v");
    for (auto a : {"a", "b", "c"}) b.add_arrow(a, "v", "v");
    b.add_relation("a", "a");
    return b.build();
}

bool has(const ValidationReport& r, Condition c) {
    for (const auto& v : r.violations)
        if (v.condition == c) return true;
    return false;
}

}  // namespace

TEST_CASE("compose") {
    auto bq = fixtures::a3();
    auto e2 = bq.trivial("2");
    CHECK(compose(e2, e2) == e2);
    auto a = bq.path({"a"}), b = bq.path({"b"});
    CHECK(compose(a, b) == bq.path({"a", "b"}));
    CHECK_FALSE(compose(a, a).has_value());
    CHECK(compose(bq.trivial("1"), a) == a);
    CHECK(compose(a, e2) == a);
    CHECK_FALSE(compose(e2, a).has_value());
}

TEST_CASE("paths are ordered by length then arrows") {
    auto bq = fixtures::two_cycle();
    CHECK(bq.trivial("2") < bq.path({"a"}));
    CHECK(bq.path({"a"}) < bq.path({"b"}));
    CHECK(bq.path({"b"}) < bq.path({"a", "b"}));
    CHECK(bq.describe(bq.path({"a", "b", "a"})) == "aba");
    CHECK(bq.describe(bq.trivial("1")) == "e_1");
    CHECK_THROWS_AS(bq.path({"a", "a"}), QuiverError);
}

TEST_CASE("builder rejects malformed input") {
    BoundQuiver::Builder b;
    b.add_vertex("1");
    b.add_vertex("2");
    b.add_arrow("a", "1", "2");
    b.add_arrow("b", "1", "2");
    CHECK_THROWS_AS(b.add_relation("a", "b"), QuiverError);
    CHECK_THROWS_AS(b.add_arrow("c", "1", "9"), QuiverError);
    CHECK_THROWS_AS(b.add_vertex("1"), QuiverError);
}

TEST_CASE("duplicate relations collapse") {
    BoundQuiver::Builder b;
    b.add_vertex("v");
    b.add_arrow("a", "v", "v");
    b.add_relation("a", "a");
    b.add_relation("a", "a");
    CHECK(b.build().relations().size() == 1);
}

TEST_CASE("string condition") {
    CHECK(validate_string(fixtures::loop()).ok());
    CHECK(validate_string(fixtures::two_cycle()).ok());
    CHECK(validate_string(fixtures::star()).ok());
    CHECK(has(validate_string(three_loops()), Condition::S1));

    BoundQuiver::Builder b;
    b.add_vertex("1");
    b.add_vertex("2");
    for (auto a : {"a", "b", "c"}) b.add_arrow(a, "1", "2");
    CHECK(has(validate_string(b.build()), Condition::S1));

    // a continues freely into both b and c
    BoundQuiver::Builder s;
    for (auto v : {"1", "2", "3", "4"}) s.add_vertex(v);
    s.add_arrow("a", "1", "2");
    s.add_arrow("b", "2", "3");
    s.add_arrow("c", "2", "4");
    auto r = validate_string(s.build());
    CHECK(has(r, Condition::S2));
    CHECK_FALSE(has(r, Condition::S1));
}

TEST_CASE("gentle condition") {
    CHECK(validate_gentle(fixtures::two_cycle()).ok());
    CHECK(validate_gentle(fixtures::loop()).ok());
    auto r = validate_gentle(fixtures::star());
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].condition == Condition::G1);
    CHECK(r.violations[0].witness.find('a') != std::string::npos);
    CHECK(is_gentle(fixtures::a3()));
    CHECK_FALSE(is_gentle(fixtures::star()));
}

TEST_CASE("finite dimensionality") {
    CHECK_FALSE(check_finite_dimensional(fixtures::loop()).has_value());
    CHECK_FALSE(check_finite_dimensional(fixtures::two_cycle()).has_value());

    BoundQuiver::Builder b;
    b.add_vertex("v");
    b.add_arrow("a", "v", "v");
    auto free_loop = b.build();
    auto w = check_finite_dimensional(free_loop);
    REQUIRE(w.has_value());
    CHECK(free_loop.describe(*w) == "a");
    CHECK(has(validate_string_algebra(free_loop), Condition::FiniteDimensional));

    // a 2-cycle with only one relation still has the infinite path (ba)^n
    BoundQuiver::Builder c;
    c.add_vertex("1");
    c.add_vertex("2");
    c.add_arrow("a", "1", "2");
    c.add_arrow("b", "2", "1");
    c.add_relation("a", "b");
    CHECK_FALSE(check_finite_dimensional(c.build()).has_value());
}

TEST_CASE("connectivity") {
    BoundQuiver::Builder b;
    b.add_vertex("1");
    b.add_vertex("2");
    auto r = validate_connected(b.build());
    CHECK(has(r, Condition::Connected));
    CHECK_THROWS_AS(require_string_algebra(b.build()), HypothesisError);
    CHECK(validate_connected(fixtures::two_loops()).ok());
}
