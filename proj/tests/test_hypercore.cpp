#include <doctest.h>

#include "asym/canon.hpp"
#include "asym/constructions.hpp"
#include "asym/error.hpp"
#include "asym/hypergraph.hpp"
#include "oracles.hpp"

using namespace asym;

TEST_CASE("hypergraph normalizes and validates edges")
{
    Hypergraph h(4, {{2, 1}, {0, 3}});
    CHECK(h.edges() == std::vector<Edge>{{0, 3}, {1, 2}});
    CHECK(h.uniformity() == 2);
    CHECK(h.hasEdge(std::vector<int>{1, 2}));
    CHECK_FALSE(h.hasEdge(std::vector<int>{0, 1}));
    CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), InvalidArgument);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 1}, {1, 0}}), InvalidArgument);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 1}}, 3), InvalidArgument);
    CHECK_FALSE(Hypergraph(3, {{0, 1}, {0, 1, 2}}).uniformity().has_value());
}

TEST_CASE("degrees of the six-vertex 3-graph")
{
    auto g = genFigure2().graph;
    CHECK(degree(g, 0) == 1);
    CHECK(degree(g, 1) == 3);
    CHECK(degrees(g).perVertex == std::vector<int>{1, 3, 2, 3, 2, 1});
    CHECK(degrees(g).sortedMultiset == std::vector<int>{1, 1, 2, 2, 3, 3});
    CHECK_THROWS_AS(degree(g, 6), InvalidArgument);
    CHECK(degree(Hypergraph::edgeless(3), 2) == 0);
}

TEST_CASE("degree sum equals total edge size")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        auto h = oracle::randomHypergraph(rng, 7, false);
        auto d = degrees(h).perVertex;
        std::size_t sizes = 0;
        for (const auto& e : h.edges())
            sizes += e.size();
        CHECK(static_cast<std::size_t>(std::accumulate(d.begin(), d.end(), 0)) == sizes);
    }
}

TEST_CASE("set complement")
{
    CHECK(setComplement(Hypergraph(5, {{0, 1, 2}})) == Hypergraph(5, {{3, 4}}));
    auto g = genFigure2().graph;
    CHECK(setComplement(setComplement(g)) == g);
    CHECK(setComplement(g).uniformity() == 3);
    CHECK_THROWS_AS(setComplement(Hypergraph(3, {{0, 1}, {0, 1, 2}})), InvalidArgument);
    CHECK_THROWS_AS(setComplement(Hypergraph(3, {{0, 1, 2}})), InvalidArgument);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        auto h = oracle::randomHypergraph(rng, 7, true);
        if (!h.uniformity() || *h.uniformity() >= h.n())
            continue;
        CHECK(setComplement(setComplement(h)) == h);
    }
}

TEST_CASE("induced and spec sub-hypergraphs")
{
    auto g = genFigure2().graph;
    auto sub = inducedSub(g, std::vector<int>{0, 1, 2, 3, 4});
    CHECK(sub.graph == Hypergraph(5, {{0, 1, 2}, {1, 3, 4}, {2, 3, 4}}));
    CHECK(sub.origin == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(inducedSub(g, std::vector<int>{0, 1, 2, 3, 4, 5}).graph == g);
    CHECK(inducedSub(g, std::vector<int>{}).graph.n() == 0);

    auto gk = genGk(5).graph;
    auto one = inducedSub(gk, gk.edge(2));
    CHECK(one.graph.edgeCount() == 1);
    CHECK(one.origin == gk.edge(2));

    SubgraphSpec full{{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3}};
    CHECK(subFromSpec(g, full).graph == g);
    CHECK(subFromSpec(g, SubgraphSpec{{2, 5}, {}}).graph == Hypergraph::edgeless(2, 3));
    CHECK_THROWS_AS(subFromSpec(g, SubgraphSpec{{0, 1}, {0}}), InvalidArgument);

    // All edges of G*_k but M_{k-1}, on every vertex.
    auto star = genGkStar(5);
    auto mk1 = star.graph.edgeIndex(genGk(5).graph.edge(3));
    REQUIRE(mk1.has_value());
    SubgraphSpec drop{{}, {}};
    for (int v = 0; v < star.graph.n(); ++v)
        drop.vertices.push_back(v);
    for (std::size_t e = 0; e < star.graph.edgeCount(); ++e)
        if (e != *mk1)
            drop.edgeIndices.push_back(e);
    auto s = subFromSpec(star.graph, drop).graph;
    CHECK(s.n() == 10);
    CHECK(s.edgeCount() == 5);
    CHECK_FALSE(s.hasEdge(genGk(5).graph.edge(3)));
}

TEST_CASE("k-uniformity")
{
    auto g = genFigure2().graph;
    CHECK(isKUniform(g, 3));
    CHECK_FALSE(isKUniform(g, 2));
    CHECK(isKUniform(Hypergraph::edgeless(4), 7));
}

TEST_CASE("canonical key is invariant under relabeling")
{
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        auto h = oracle::randomHypergraph(rng, 7, i % 2 == 0);
        auto pi = oracle::randomPermutation(rng, h.n());
        CHECK(canonicalKey(h) == canonicalKey(permuted(h, pi)));
    }
    auto g = genFigure2().graph;
    CHECK(canonicalKey(g) != canonicalKey(inducedSub(g, std::vector<int>{0, 1, 2, 3, 4}).graph));
    CHECK(canonicalForm(canonicalForm(g).graph).graph == canonicalForm(g).graph);
}

TEST_CASE("canonical keys separate exactly the isomorphism classes of 3-graphs on 5 vertices")
{
    std::vector<Edge> triples;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = b + 1; c < 5; ++c)
                triples.push_back({a, b, c});
    std::set<std::string> keys;
    std::set<std::vector<std::vector<int>>> classes;
    for (unsigned mask = 0; mask < 1024; ++mask) {
        std::vector<Edge> edges;
        for (unsigned i = 0; i < 10; ++i)
            if (mask & (1u << i))
                edges.push_back(triples[i]);
        Hypergraph h(5, edges, 3);
        keys.insert(canonicalKey(h));
        classes.insert(oracle::minimalRelabeling(h));
    }
    CHECK(keys.size() == classes.size());
}
