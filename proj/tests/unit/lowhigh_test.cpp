#include "corpus.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace flowcert;

TEST_CASE("derived arcs") {
    auto g2 = fixture::diamond();
    CHECK(derived_graph(g2, dominator_tree(g2)).arcs == g2.arcs());
    auto g4 = fixture::chain();
    CHECK(derived_graph(g4, dominator_tree(g4)).arcs == g4.arcs());
    auto g6 = fixture::deep();
    CHECK(derived_graph(g6, dominator_tree(g6)).arcs == ArcSet{{1, 2}, {1, 4}, {2, 3}, {2, 4}});
}

TEST_CASE("checker on hand-made orders") {
    auto g2 = fixture::diamond();
    auto d2 = dominator_tree(g2);
    CHECK(check_low_high(g2, d2, fixture::order({1, 2, 4, 3})));
    auto bad = check_low_high(g2, d2, fixture::order({1, 2, 3, 4}));
    CHECK_FALSE(bad);
    CHECK(bad.vertex == 4);
    CHECK(bad.clause == LowHighClause::missing_high_arc);

    auto g4 = fixture::chain();
    CHECK(check_low_high(g4, dominator_tree(g4), fixture::order({1, 2, 3})));

    auto g6 = fixture::deep();
    auto d6 = dominator_tree(g6);
    CHECK(check_low_high(g6, d6, fixture::order({1, 2, 3, 4})));
    auto split = check_low_high(g6, d6, fixture::order({1, 2, 4, 3}));
    CHECK_FALSE(split);
    CHECK(split.clause == LowHighClause::not_a_preorder);
    auto late_root = check_low_high(g6, d6, fixture::order({2, 1, 3, 4}));
    CHECK(late_root.clause == LowHighClause::not_a_preorder);
}

TEST_CASE("missing low arc is reported") {
    // 4 is entered from 2 and 3 only; with 4 first among siblings both come later.
    auto g = fixture::diamond();
    auto r = check_low_high(g, dominator_tree(g), fixture::order({1, 4, 2, 3}));
    CHECK_FALSE(r);
    CHECK(r.vertex == 4);
    CHECK(r.clause == LowHighClause::missing_low_arc);
}

TEST_CASE("order constructor rejects non-permutations") {
    CHECK_THROWS_AS(fixture::order({1, 1, 2}), InputError);
    CHECK_THROWS_AS(fixture::order({1, 4, 2}), InputError);
}

TEST_CASE("brute force finds the lexicographically first order") {
    auto g2 = fixture::diamond();
    auto o2 = brute_force_low_high(g2, dominator_tree(g2));
    REQUIRE(o2);
    CHECK(o2->sequence == std::vector<Vertex>{1, 2, 4, 3});
    auto g1 = fixture::star();
    CHECK(brute_force_low_high(g1, dominator_tree(g1))->sequence == std::vector<Vertex>{1, 2, 3});
    auto g4 = fixture::chain();
    CHECK(brute_force_low_high(g4, dominator_tree(g4))->sequence == std::vector<Vertex>{1, 2, 3});
    CHECK_THROWS_AS(brute_force_low_high(random_flowgraph(10, 9, 1),
                                         dominator_tree(random_flowgraph(10, 9, 1))),
                    SizeGuardError);
}

TEST_CASE("Diamond orders are exactly those placing 4 between its in-neighbours") {
    auto g = fixture::diamond();
    auto d = dominator_tree(g);
    std::vector<Vertex> seq{1, 2, 3, 4};
    do {
        auto o = fixture::order(seq);
        bool between = (o.before(2, 4) && o.before(4, 3)) || (o.before(3, 4) && o.before(4, 2));
        CHECK(bool(check_low_high(g, d, o)) == between);
    } while (std::next_permutation(seq.begin() + 1, seq.end()));
}

TEST_CASE("construction on the worked graphs") {
    for (auto g : {fixture::star(), fixture::diamond(), fixture::chain(), fixture::deep()}) {
        auto d = dominator_tree(g);
        CHECK(check_low_high(g, d, construct_low_high(g, d)));
    }
    auto g4 = fixture::chain();
    CHECK(construct_low_high(g4, dominator_tree(g4)).sequence == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("construction agrees with the definition") {
    for (std::uint64_t seed = 1; seed <= 1500; ++seed) {
        auto inst = corpus::make(seed, 1, 30, 3 + seed % 4);
        auto d = dominator_tree(inst.graph);
        auto o = construct_low_high(inst.graph, d);
        REQUIRE(check_low_high(inst.graph, d, o));
        REQUIRE(oracle::low_high(inst.graph, o.sequence));
    }
}

TEST_CASE("checker agrees with the definition on arbitrary preorders") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        auto inst = corpus::make(seed, 1, 7, 7);
        auto d = dominator_tree(inst.graph);
        std::vector<Vertex> seq(inst.graph.n());
        std::iota(seq.begin(), seq.end(), Vertex(1));
        do {
            auto o = fixture::order(seq);
            REQUIRE(bool(check_low_high(inst.graph, d, o)) == oracle::low_high(inst.graph, seq));
        } while (std::next_permutation(seq.begin() + 1, seq.end()));
    }
}

TEST_CASE("adopting an order rewrites the preorder") {
    auto g = fixture::diamond();
    auto d = dominator_tree(g);
    auto o = construct_low_high(g, d);
    adopt_order(d, o);
    for (Vertex v = 1; v <= g.n(); ++v)
        CHECK(d.pre[v] == o.position[v]);
    auto g6 = fixture::deep();
    auto d6 = dominator_tree(g6);
    CHECK_THROWS_AS(adopt_order(d6, fixture::order({1, 2, 4, 3})), InputError);
}

TEST_CASE("construction at scale") {
    auto g = random_flowgraph(50000, 200000, 5);
    auto d = dominator_tree(g);
    CHECK(check_low_high(g, d, construct_low_high(g, d)));
}
