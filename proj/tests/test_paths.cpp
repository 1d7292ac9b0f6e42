#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "quiverhh/corpus.hpp"
#include "quiverhh/paths.hpp"

using namespace quiverhh;

namespace {

std::vector<std::string> names(const BoundQuiver& bq, const std::vector<Path>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(bq.describe(p));
    return out;
}

std::vector<std::string> names(const BoundQuiver& bq, const std::vector<ParallelPair>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(describe(bq, p));
    return out;
}

ParallelPair pair(const BoundQuiver& bq, std::vector<std::string> rho, std::vector<std::string> gamma) {
    return {bq.path(rho), bq.path(gamma)};
}

ParallelPair cyc(const BoundQuiver& bq, std::vector<std::string> rho) {
    auto r = bq.path(rho);
    return {r, Path::trivial(r.source())};
}

using S = std::vector<std::string>;

}  // namespace

TEST_CASE("basis paths") {
    auto loop = fixtures::loop();
    CHECK(names(loop, enumerate_basis_paths(loop).paths()) == S{"e_v", "a"});
    auto cyc2 = fixtures::two_cycle();
    CHECK(names(cyc2, enumerate_basis_paths(cyc2).paths()) == S{"e_1", "e_2", "a", "b"});
    auto a3 = fixtures::a3();
    CHECK(names(a3, enumerate_basis_paths(a3).paths()) == S{"e_1", "e_2", "e_3", "a", "b"});
    auto free = fixtures::a3_free();
    auto P = enumerate_basis_paths(free);
    CHECK(P.contains(free.path({"a", "b"})));
    CHECK(P.between(VertexId{0}, VertexId{2}).size() == 1);
}

TEST_CASE("AP sets") {
    auto loop = fixtures::loop();
    CHECK(names(loop, enumerate_ap(loop, 3).elements) == S{"aaa"});
    CHECK(names(loop, enumerate_ap(loop, 0).elements) == S{"e_v"});
    auto cyc2 = fixtures::two_cycle();
    CHECK(names(cyc2, enumerate_ap(cyc2, 2).elements) == S{"ab", "ba"});
    CHECK(names(cyc2, enumerate_ap(cyc2, 1).elements) == S{"a", "b"});
    CHECK(enumerate_ap(fixtures::a3(), 3).elements.empty());
}

TEST_CASE("parallel pairs") {
    auto cyc2 = fixtures::two_cycle();
    auto P2 = enumerate_basis_paths(cyc2);
    CHECK(names(cyc2, parallel_pairs(enumerate_ap(cyc2, 2), P2)) == S{"(ab, e_1)", "(ba, e_2)"});
    auto a3 = fixtures::a3();
    CHECK(parallel_pairs(enumerate_ap(a3, 2), enumerate_basis_paths(a3)).empty());
    auto loop = fixtures::loop();
    CHECK(names(loop, parallel_pairs(enumerate_ap(loop, 0), enumerate_basis_paths(loop), 1)) == S{"(e_v, a)"});
}

TEST_CASE("pair classification") {
    auto loop = fixtures::loop();
    CHECK(classify_pair(loop, pair(loop, {"a", "a"}, {"a"})).tag == PairTag::OO);
    CHECK(classify_pair(loop, cyc(loop, {"a"})) == PairClass{PairTag::ZZ, Decoration::Plus, Decoration::Plus});
    auto cyc2 = fixtures::two_cycle();
    CHECK(classify_pair(cyc2, cyc(cyc2, {"a", "b"})) == PairClass{PairTag::ZZ, Decoration::Plus, Decoration::Plus});
    CHECK(classify_pair(cyc2, pair(cyc2, {"a"}, {"a"})).tag == PairTag::OO);

    // no arrow ends at 1 in A3: the left decoration is vacuously minus
    auto a3 = fixtures::a3();
    CHECK(left_decoration(a3, a3.trivial("1")) == Decoration::Minus);
    CHECK(right_decoration(a3, a3.path({"b"})) == Decoration::Minus);
    CHECK(right_decoration(a3, a3.trivial("1")) == Decoration::Plus);
    CHECK(left_decoration(a3, a3.path({"b"})) == Decoration::Minus);
}

TEST_CASE("the four tags partition every pair set") {
    for (const auto& bq : standard_corpus()) {
        auto P = enumerate_basis_paths(bq);
        for (std::size_t n = 1; n <= 4; ++n) {
            DegreeCensus census(bq, P, n);
            std::size_t total = 0;
            for (auto t : {PairTag::ZZ, PairTag::OZ, PairTag::ZO, PairTag::OO})
                total += census.count(t, std::nullopt, std::nullopt, GammaRange::Any);
            CHECK(total == parallel_pairs(enumerate_ap(bq, n), P).size());
        }
    }
}

TEST_CASE("rotation, order and norm") {
    auto cyc2 = fixtures::two_cycle();
    auto w = cyc(cyc2, {"a", "b"});
    CHECK(rotate(cyc2, w) == cyc(cyc2, {"b", "a"}));
    CHECK(rotate(cyc2, rotate(cyc2, w)) == w);
    CHECK(order_of(cyc2, w) == 2);
    CHECK(names(cyc2, norm_of(cyc2, w)) == S{"(ab, e_1)", "(ba, e_2)"});
    CHECK(order_of(cyc2, cyc(cyc2, {"a", "b", "a", "b"})) == 2);
    CHECK(order_of(cyc2, cyc(cyc2, {"a", "b", "a", "b", "a", "b"})) == 2);

    auto loop = fixtures::loop();
    auto aa = cyc(loop, {"a", "a"});
    CHECK(rotate(loop, aa) == aa);
    CHECK(order_of(loop, aa) == 1);
    CHECK(norm_of(loop, aa).size() == 1);
}

TEST_CASE("cyclic classification") {
    auto cyc2 = fixtures::two_cycle();
    auto c = classify_cyclic(cyc2, cyc(cyc2, {"a", "b"}));
    CHECK(c.complete);
    CHECK(c.gentle);
    CHECK(c.order == 2);
    auto loop = fixtures::loop();
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<std::string> rho(n, "a");
        auto d = classify_cyclic(loop, cyc(loop, rho));
        CHECK(d.complete);
        CHECK(d.gentle);
    }

    // x: 1 -> 2, y: 2 -> 1 with only xy = 0; yx is not a relation
    BoundQuiver::Builder b;
    b.add_vertex("1");
    b.add_vertex("2");
    b.add_arrow("x", "1", "2");
    b.add_arrow("y", "2", "1");
    b.add_relation("x", "y");
    auto q = b.build();
    auto xy = classify_cyclic(q, cyc(q, {"x", "y"}));
    CHECK_FALSE(xy.complete);
    CHECK_FALSE(xy.gentle);
    CHECK(xy.empty);  // the only arrow into 1 is y, and yx is not a relation
}

TEST_CASE("orbit counts") {
    auto cyc2 = fixtures::two_cycle();
    auto P = enumerate_basis_paths(cyc2);
    CHECK(DegreeCensus(cyc2, P, 2).gentle_orbits() == 1);
    CHECK(DegreeCensus(cyc2, P, 1).gentle_orbits() == 0);
    auto loop = fixtures::loop();
    auto PL = enumerate_basis_paths(loop);
    for (std::size_t n = 1; n <= 5; ++n) CHECK(DegreeCensus(loop, PL, n).gentle_orbits() == 1);
    auto two = fixtures::two_loops();
    CHECK(DegreeCensus(two, enumerate_basis_paths(two), 2).gentle_orbits() == 2);
}

TEST_CASE("phi is a bijection onto its target on the corpus") {
    std::size_t applied = 0;
    for (const auto& bq : standard_corpus()) {
        auto P = enumerate_basis_paths(bq);
        for (std::size_t n = 1; n <= 4; ++n) {
            DegreeCensus census(bq, P, n);
            std::vector<ParallelPair> image, target;
            for (const auto& cp : census.pairs()) {
                if (cp.cls.tag == PairTag::OZ && cp.cls.right == Decoration::Plus) {
                    auto img = phi(bq, P, cp.pair);
                    auto cls = classify_pair(bq, img);
                    CHECK(cls.tag == PairTag::ZO);
                    CHECK(cls.left == Decoration::Plus);
                    image.push_back(img);
                    ++applied;
                }
                if (cp.cls.tag == PairTag::ZO && cp.cls.left == Decoration::Plus) target.push_back(cp.pair);
            }
            std::sort(image.begin(), image.end());
            std::sort(target.begin(), target.end());
            CHECK(image == target);
        }
    }
    CHECK(applied > 0);
}
