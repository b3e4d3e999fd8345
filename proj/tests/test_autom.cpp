#include <doctest.h>

#include "asym/autom.hpp"
#include "asym/constructions.hpp"
#include "asym/error.hpp"
#include "asym/perm_group.hpp"
#include "oracles.hpp"

using namespace asym;

namespace {

std::vector<int> vec(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

} // namespace

TEST_CASE("permutation algebra")
{
    Permutation a({1, 2, 0});
    Permutation b = Permutation::transposition(3, 0, 1);
    CHECK(vec(a * b) == std::vector<int>{2, 1, 0});
    CHECK((a * a.inverse()).isIdentity());
    CHECK(a.order() == 3);
    CHECK(a.pow(3).isIdentity());
    CHECK(b.isInvolution());
    CHECK_FALSE(Permutation::identity(3).isInvolution());
    CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidArgument);
}

TEST_CASE("group orders of small structures")
{
    CHECK(automorphisms(genGk(4).graph).groupOrder == 2);
    for (int k = 4; k <= 8; ++k)
        CHECK(automorphisms(genGkStar(k).graph).groupOrder == 1);
    CHECK(automorphisms(Hypergraph::complete(4, 3)).groupOrder == 24);
    auto g31 = genGkt(3, 1).graph;
    CHECK(automorphisms(g31).groupOrder == oracle::automorphisms(g31).size());
}

TEST_CASE("interval k-graph has exactly the reflection")
{
    for (int k = 4; k <= 6; ++k) {
        auto r = automorphisms(genGk(k).graph);
        REQUIRE(r.generators.size() == 1);
        const auto& phi = r.generators.front();
        for (int i = 1; i <= 2 * k - 1; ++i)
            CHECK(phi(i - 1) == 2 * k - i - 1);
    }
}

TEST_CASE("asymmetry checks")
{
    CHECK(isAsymmetric(genFigure2().graph));
    for (int k = 2; k <= 6; ++k) {
        CHECK_FALSE(isAsymmetric(Hypergraph::complete(k + 1, k)));
        CHECK_FALSE(isAsymmetric(Hypergraph::complete(k, k)));
    }
}

TEST_CASE("involutions")
{
    auto swap = hasInvolution(Hypergraph::edgeless(2));
    REQUIRE(swap.has_value());
    CHECK(vec(*swap) == std::vector<int>{1, 0});

    // G_k without M_k.
    const int k = 5;
    auto gk = genGk(k).graph;
    std::vector<Edge> edges(gk.edges().begin(), gk.edges().end() - 1);
    Hypergraph cut(gk.n(), edges, k);
    auto inv = hasInvolution(cut);
    REQUIRE(inv.has_value());
    CHECK(isAutomorphism(cut, *inv));
    CHECK((*inv * *inv).isIdentity());
}

TEST_CASE("setwise stabilizers")
{
    for (int k = 4; k <= 8; ++k) {
        auto g = genGk(k);
        std::vector<int> tail{g.index("v_" + std::to_string(2 * k - 2)), g.index("v_" + std::to_string(2 * k - 1))};
        CHECK(automorphismsStabilizing(g.graph, tail).groupOrder == 1);
    }
    auto h = genFigure2().graph;
    CHECK(automorphismsStabilizing(h, {}).groupOrder == automorphisms(h).groupOrder);

    for (int k = 4; k <= 6; ++k) {
        auto t = tilde(genGk(k));
        std::vector<int> s{t.index("v_1"), t.index("v_" + std::to_string(2 * k - 2)),
                           t.index("v_" + std::to_string(2 * k - 1))};
        auto r = automorphismsStabilizing(t.graph, s);
        auto chain = StabilizerChain::fromStrongGenerators(t.graph.n(), r.base, r.generators);
        auto moved = chain.findElement([&](const Permutation& p) {
            for (int v = 0; v < 2 * k - 1; ++v)
                if (p(v) != v)
                    return true;
            return false;
        });
        CHECK_FALSE(moved.has_value());
    }
    CHECK_THROWS_AS(automorphismsStabilizing(h, std::vector<int>{9}), InvalidArgument);
}

TEST_CASE("brute-force oracle guard")
{
    CHECK(bruteForceAutomorphisms(genFigure2().graph).groupOrder == 1);
    CHECK(bruteForceAutomorphisms(Hypergraph::edgeless(4)).groupOrder == 24);
    CHECK(bruteForceAutomorphisms(genGktCirc(3, 1).graph).groupOrder == 1);
    CHECK_THROWS_AS(bruteForceAutomorphisms(Hypergraph::edgeless(10)), GuardError);
}

TEST_CASE("engine agrees with the n! oracle on random hypergraphs")
{
    std::mt19937_64 rng(77);
    for (int i = 0; i < 300; ++i) {
        auto h = oracle::randomHypergraph(rng, 6, i % 3 != 0);
        auto expected = oracle::automorphisms(h);
        auto r = automorphisms(h);
        CHECK(r.groupOrder == expected.size());
        CHECK(r.isAsymmetric == (expected.size() == 1));
        CHECK(r.isAsymmetric == r.generators.empty());
        const bool inv = std::any_of(expected.begin(), expected.end(), oracle::isInvolution);
        CHECK(hasInvolution(h).has_value() == inv);
        CHECK(r.hasInvolution == inv);
        CHECK(inv == (r.groupOrder % 2 == 0));
        for (const auto& g : r.generators) {
            CHECK(isAutomorphism(h, g));
            for (int v = 0; v < h.n(); ++v)
                CHECK(degree(h, v) == degree(h, g(v)));
        }
        for (std::size_t a = 0; a < r.generators.size(); ++a)
            for (std::size_t b = 0; b < r.generators.size(); ++b)
                CHECK(isAutomorphism(h, r.generators[a] * r.generators[b]));
        if (r.involutionWitness)
            CHECK((*r.involutionWitness * *r.involutionWitness).isIdentity());
    }
}

TEST_CASE("group is unchanged by set complement")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        auto h = oracle::randomHypergraph(rng, 7, true);
        if (!h.uniformity() || *h.uniformity() >= h.n())
            continue;
        auto c = setComplement(h);
        auto a = automorphisms(h), b = automorphisms(c);
        CHECK(a.groupOrder == b.groupOrder);
        for (const auto& g : a.generators)
            CHECK(isAutomorphism(c, g));
    }
}

TEST_CASE("stabilizer chain order agrees with Schreier-Sims")
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        auto h = oracle::randomHypergraph(rng, 8, true);
        auto r = automorphisms(h);
        auto chain = StabilizerChain::schreierSims(h.n(), r.generators);
        CHECK(chain.order() == r.groupOrder);
        for (const auto& g : r.generators)
            CHECK(chain.contains(g));
    }
}
