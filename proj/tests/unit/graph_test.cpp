#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace flowcert;

TEST_CASE("parse the diamond") {
    auto g = fixture::diamond();
    CHECK(g.n() == 4);
    CHECK(g.m() == 5);
    CHECK(g.arcs() == ArcSet{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(std::vector<Vertex>(g.in(4).begin(), g.in(4).end()) == std::vector<Vertex>{2, 3});
    CHECK(std::vector<Vertex>(g.out(1).begin(), g.out(1).end()) == std::vector<Vertex>{2, 3});
}

TEST_CASE("parse the star") {
    auto g = fixture::star();
    CHECK(g.n() == 3);
    CHECK(g.arcs() == ArcSet{{1, 2}, {1, 3}});
}

TEST_CASE("unreachable vertex is rejected") {
    CHECK_THROWS_WITH_AS(parse_flowgraph("3 1\ns 1\n1 2\n"), doctest::Contains("vertex 3"), InputError);
}

TEST_CASE("malformed graph text") {
    CHECK_THROWS_AS(parse_flowgraph(""), InputError);
    CHECK_THROWS_AS(parse_flowgraph("2 1\n1 2\n"), InputError);
    CHECK_THROWS_AS(parse_flowgraph("2 2\ns 1\n1 2\n"), InputError);
    CHECK_THROWS_AS(parse_flowgraph("2 1\ns 1\n1 3\n"), InputError);
    CHECK_THROWS_AS(parse_flowgraph("2 1\ns 0\n1 2\n"), InputError);
    CHECK_THROWS_AS(parse_flowgraph("2 1\ns 1\n1 x\n"), InputError);
    CHECK_THROWS_AS(parse_flowgraph("2 1\ns 1\n1 2 3\n"), InputError);
}

TEST_CASE("comments, self-loops and duplicates") {
    auto g = parse_flowgraph("# header\n3 5\ns 1\n1 2\n2 2\n# mid\n1 2\n2 3\n3 1\n");
    CHECK(g.m() == 3);
    CHECK(g.self_loops_dropped() == 1);
    CHECK(g.duplicates_dropped() == 1);
}

TEST_CASE("start vertex other than 1 is relabelled internally") {
    auto g = parse_flowgraph("3 2\ns 3\n3 1\n1 2\n");
    CHECK(g.external_start() == 3);
    CHECK(g.external(1) == 3);
    CHECK(g.external(3) == 1);
    CHECK(g.has_arc(1, 3));
    CHECK(g.has_arc(3, 2));
    CHECK(parse_flowgraph(serialize(g)) == g);
    CHECK(serialize(g) == "3 2\ns 3\n1 2\n3 1\n");
}

TEST_CASE("single vertex") {
    auto g = parse_flowgraph("1 0\ns 1\n");
    CHECK(g.n() == 1);
    CHECK(g.m() == 0);
    auto t = parse_tree("", g);
    CHECK(t.arcs().empty());
}

TEST_CASE("parse trees") {
    auto g = fixture::diamond();
    CHECK(fixture::diamond_tree(g).parent == fixture::parents({1, 2, 3}));
    CHECK(fixture::diamond_side_tree(g).parent == fixture::parents({1, 1, 2}));
    CHECK_THROWS_WITH_AS(parse_tree("1 2\n2 3\n4 4\n", g), doctest::Contains("not an arc"), InputError);
    CHECK_THROWS_AS(parse_tree("1 2\n2 3\n", g), InputError);
    CHECK_THROWS_AS(parse_tree("1 2\n2 3\n2 3\n", g), InputError);
    CHECK_THROWS_AS(parse_tree("1 2\n2 3\n3 4\n2 4\n", g), InputError);
    // A parent cycle needs a back arc.
    auto c = parse_flowgraph("3 3\ns 1\n1 2\n2 3\n3 2\n");
    CHECK_THROWS_AS(parse_tree("3 2\n2 3\n", c), InputError);
}

TEST_CASE("parse arc sets") {
    auto g = fixture::diamond();
    CHECK(parse_arcset("2\n2 4\n1 3\n", g) == ArcSet{{1, 3}, {2, 4}});
    CHECK(parse_arcset("0\n", g).empty());
    CHECK_THROWS_AS(parse_arcset("1\n4 1\n", g), InputError);
    CHECK_THROWS_AS(parse_arcset("2\n1 3\n", g), InputError);
}

TEST_CASE("edge-list round trip") {
    for (auto text : {fixture::star_text, fixture::diamond_text, fixture::deep_text}) {
        auto g = parse_flowgraph(text);
        CHECK(parse_flowgraph(serialize(g)) == g);
    }
}

TEST_CASE("dot output") {
    auto g1 = fixture::star();
    auto dot = serialize(g1, nullptr, Format::dot);
    std::size_t arcs = 0;
    for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 1))
        ++arcs;
    CHECK(arcs == 2);

    auto g2 = fixture::diamond();
    auto t = fixture::diamond_tree(g2);
    auto tdot = serialize(g2, &t, Format::dot);
    std::size_t bold = 0;
    for (std::size_t at = tdot.find("style=bold"); at != std::string::npos;
         at = tdot.find("style=bold", at + 1))
        ++bold;
    CHECK(bold == 3);
}

TEST_CASE("reachability") {
    auto g2 = fixture::diamond();
    CHECK(reachable_set(g2, 1, Vertex(2)) == std::vector<Vertex>{1, 3, 4});
    CHECK(reachable_set(g2, 1) == std::vector<Vertex>{1, 2, 3, 4});
    auto g6 = fixture::deep();
    CHECK(reachable_set(g6, 1, Vertex(2)) == std::vector<Vertex>{1, 4});
}

TEST_CASE("spanning tree extraction") {
    auto g1 = fixture::star();
    CHECK(extract_spanning_tree(g1, TreeStrategy::bfs).parent == fixture::parents({1, 1}));
    auto g4 = fixture::chain();
    for (auto s : {TreeStrategy::bfs, TreeStrategy::dfs, TreeStrategy::random})
        CHECK(extract_spanning_tree(g4, s, 9).parent == fixture::parents({1, 2}));
    auto g2 = fixture::diamond();
    for (std::uint64_t k = 0; k < 20; ++k)
        CHECK(extract_spanning_tree(g2, TreeStrategy::random, k) ==
              extract_spanning_tree(g2, TreeStrategy::random, k));
    CHECK(extract_spanning_tree(g2, TreeStrategy::bfs).parent == fixture::parents({1, 1, 2}));
    CHECK(extract_spanning_tree(g2, TreeStrategy::dfs).parent == fixture::parents({1, 2, 3}));
}

TEST_CASE("random graphs") {
    CHECK_THROWS_AS(random_flowgraph(4, 2, 1), InputError);
    CHECK_THROWS_AS(random_flowgraph(3, 7, 1), InputError);
    auto one = random_flowgraph(1, 0, 7);
    CHECK(one.n() == 1);
    CHECK(one.m() == 0);
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        std::size_t n = 1 + seed % 12;
        std::size_t m = (n - 1) + seed * 7 % (n * (n - 1) - (n - 1) + 1);
        auto g = random_flowgraph(n, m, seed);
        CHECK(g.n() == n);
        CHECK(g.m() == m);
        CHECK(reachable_set(g, 1).size() == n);
        CHECK(g == random_flowgraph(n, m, seed));
        CHECK(parse_flowgraph(serialize(g)) == g);
        for (auto s : {TreeStrategy::bfs, TreeStrategy::dfs, TreeStrategy::random}) {
            auto t = extract_spanning_tree(g, s, seed);
            CHECK(parse_tree(serialize_tree(g, t), g) == t);
        }
    }
    auto complete = random_flowgraph(6, 30, 3);
    CHECK(complete.m() == 30);
}

TEST_CASE("adjacency agrees in both directions") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto g = random_flowgraph(20, 60, seed);
        std::size_t total = 0;
        for (Vertex v = 1; v <= g.n(); ++v) {
            for (Vertex w : g.out(v)) {
                CHECK(g.has_arc(v, w));
                auto in = g.in(w);
                CHECK(std::find(in.begin(), in.end(), v) != in.end());
            }
            total += g.out(v).size();
        }
        CHECK(total == g.m());
    }
}
