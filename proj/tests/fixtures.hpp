#ifndef QUIVERHH_TEST_FIXTURES_HPP
#define QUIVERHH_TEST_FIXTURES_HPP

#include "quiverhh/quiver.hpp"

namespace fixtures {

using quiverhh::BoundQuiver;

// k[x]/(x^2)
inline BoundQuiver loop() {
    BoundQuiver::Builder b;
    b.add_vertex("v");
    b.add_arrow("a", "v", "v");
    b.add_relation("a", "a");
    return b.build();
}

// a: 1 -> 2, b: 2 -> 1, relations ab and ba
inline BoundQuiver two_cycle() {
    BoundQuiver::Builder b;
    b.add_vertex("1");
    b.add_vertex("2");
    b.add_arrow("a", "1", "2");
    b.add_arrow("b", "2", "1");
    b.add_relation("a", "b");
    b.add_relation("b", "a");
    return b.build();
}

// 1 -a-> 2 -b-> 3, relation ab
inline BoundQuiver a3() {
    BoundQuiver::Builder b;
    b.add_vertex("1");
    b.add_vertex("2");
    b.add_vertex("3");
    b.add_arrow("a", "1", "2");
    b.add_arrow("b", "2", "3");
    b.add_relation("a", "b");
    return b.build();
}

// 1 -a-> 2 -b-> 3 with no relations (hereditary A3)
inline BoundQuiver a3_free() {
    BoundQuiver::Builder b;
    b.add_vertex("1");
    b.add_vertex("2");
    b.add_vertex("3");
    b.add_arrow("a", "1", "2");
    b.add_arrow("b", "2", "3");
    return b.build();
}

// Two squared loops a at 1 and c at 2, joined by b: 1 -> 2, relations aa, cc
inline BoundQuiver two_loops() {
    BoundQuiver::Builder b;
    b.add_vertex("1");
    b.add_vertex("2");
    b.add_arrow("a", "1", "1");
    b.add_arrow("b", "1", "2");
    b.add_arrow("c", "2", "2");
    b.add_relation("a", "a");
    b.add_relation("c", "c");
    return b.build();
}

// Non-gentle string algebra: a: 1 -> 2, b: 2 -> 3, c: 2 -> 4, relations ab, ac
inline BoundQuiver star() {
    BoundQuiver::Builder b;
    for (auto v : {"1", "2", "3", "4"}) b.add_vertex(v);
    b.add_arrow("a", "1", "2");
    b.add_arrow("b", "2", "3");
    b.add_arrow("c", "2", "4");
    b.add_relation("a", "b");
    b.add_relation("a", "c");
    return b.build();
}

}  // namespace fixtures

#endif
