#include <doctest.h>

#include "asym/autom.hpp"
#include "asym/constructions.hpp"
#include "asym/error.hpp"
#include "asym/search.hpp"
#include "asym/verify.hpp"
#include "oracles.hpp"

using namespace asym;

namespace {

bool asymmetricOracle(const Hypergraph& h) { return oracle::automorphisms(h).size() == 1; }

bool involutionOracle(const Hypergraph& h)
{
    auto all = oracle::automorphisms(h);
    return std::any_of(all.begin(), all.end(), oracle::isInvolution);
}

/// Calls f on every sub-hypergraph (X', E'), E' within X', with |X'| >= 2.
template <class F>
bool anySub(const Hypergraph& h, bool inducedOnly, F&& f)
{
    const int n = h.n();
    for (unsigned vm = 0; vm < (1u << n); ++vm) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (vm & (1u << v))
                vs.push_back(v);
        if (vs.size() < 2)
            continue;
        std::vector<std::size_t> inside;
        for (std::size_t e = 0; e < h.edgeCount(); ++e)
            if (std::includes(vs.begin(), vs.end(), h.edge(e).begin(), h.edge(e).end()))
                inside.push_back(e);
        const unsigned top = inducedOnly ? 1u : (1u << inside.size());
        for (unsigned em = 0; em < top; ++em) {
            SubgraphSpec spec{vs, {}};
            for (std::size_t i = 0; i < inside.size(); ++i)
                if (inducedOnly || (em & (1u << i)))
                    spec.edgeIndices.push_back(inside[i]);
            const bool whole = static_cast<int>(vs.size()) == n && spec.edgeIndices.size() == h.edgeCount();
            if (f(subFromSpec(h, spec).graph, static_cast<int>(vs.size()), whole))
                return true;
        }
    }
    return false;
}

bool minimalOracle(const Hypergraph& h, bool induced)
{
    if (!asymmetricOracle(h))
        return false;
    return !anySub(h, induced, [&](const Hypergraph& s, int size, bool) { return size < h.n() && asymmetricOracle(s); });
}

bool involutionFreeOracle(const Hypergraph& h)
{
    if (involutionOracle(h))
        return false;
    return !anySub(h, false, [](const Hypergraph& s, int, bool whole) { return !whole && !involutionOracle(s); });
}

Hypergraph randomSmall(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> nd(3, 6), kd(2, 3);
    const int n = nd(rng);
    const int k = std::min(kd(rng), n - 1);
    auto all = kSubsets(n, k);
    std::shuffle(all.begin(), all.end(), rng);
    std::uniform_int_distribution<std::size_t> md(0, std::min<std::size_t>(all.size(), 7));
    all.resize(md(rng));
    return Hypergraph(n, all, k);
}

Hypergraph disjointUnion(const Hypergraph& a, const Hypergraph& b)
{
    std::vector<Edge> edges = a.edges();
    for (auto e : b.edges()) {
        for (int& v : e)
            v += a.n();
        edges.push_back(e);
    }
    return Hypergraph(a.n() + b.n(), edges);
}

void checkWitness(const Hypergraph& h, const VerificationReport& r)
{
    REQUIRE_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
    auto sub = subFromSpec(h, *r.witness).graph;
    if (r.perm) {
        CHECK(isAutomorphism(sub, *r.perm));
        CHECK_FALSE(r.perm->isIdentity());
        return;
    }
    CHECK(sub.n() >= 2);
    if (r.property == Property::MinimalInvolutionFree) {
        CHECK_FALSE(involutionOracle(sub));
    } else {
        CHECK(sub.n() < h.n());
        CHECK(asymmetricOracle(sub));
    }
}

} // namespace

TEST_CASE("asymmetry reports")
{
    auto fig = genFigure2().graph;
    auto ok = verifyAsymmetric(fig);
    CHECK(ok.holds);
    CHECK_FALSE(ok.witness.has_value());
    auto k43 = Hypergraph::complete(4, 3);
    auto bad = verify(k43, Property::Asymmetric);
    checkWitness(k43, bad);
    CHECK(bad.mode == Mode::Exhaustive);
}

TEST_CASE("known minimal and strongly minimal instances")
{
    auto fig = genFigure2().graph;
    CHECK(verifyMinimalAsymmetric(fig).holds);
    CHECK(verifyStronglyMinimal(fig).holds);
    CHECK(verifyStronglyMinimal(genGktCirc(3, 1).graph).holds);
    for (int k = 4; k <= 6; ++k) {
        CHECK(verifyStronglyMinimal(genGkStar(k).graph).holds);
        CHECK(verifyMinimalInvolutionFree(genGkStar(k).graph).holds);
    }
    CHECK(verifyMinimalInvolutionFree(genGktCirc(3, 1).graph).holds);
}

TEST_CASE("disjoint union of asymmetric graphs is not minimal")
{
    auto a = genFigure2().graph;
    auto b = fewestEdgeAsymmetric(3, 7);
    REQUIRE(b.has_value());
    auto u = disjointUnion(a, *b);
    REQUIRE(isAsymmetric(u));
    auto r = verifyMinimalAsymmetric(u);
    checkWitness(u, r);
    auto s = verifyStronglyMinimal(u);
    checkWitness(u, s);
    auto twice = disjointUnion(a, a);
    checkWitness(twice, verifyMinimalAsymmetric(twice));
}

TEST_CASE("verifiers agree with unreduced brute force")
{
    std::mt19937_64 rng(31);
    int asymmetricSeen = 0;
    for (int i = 0; i < 300; ++i) {
        auto h = randomSmall(rng);
        if (asymmetricOracle(h))
            ++asymmetricSeen;
        VerifyOptions opt;
        opt.workers = 1;
        auto strong = verifyStronglyMinimal(h, opt);
        auto minimal = verifyMinimalAsymmetric(h, opt);
        auto invFree = verifyMinimalInvolutionFree(h, opt);
        CHECK(strong.holds == minimalOracle(h, false));
        CHECK(minimal.holds == minimalOracle(h, true));
        CHECK(invFree.holds == involutionFreeOracle(h));
        if (strong.holds)
            CHECK(minimal.holds);
        for (const auto* r : {&strong, &minimal, &invFree})
            if (!r->holds)
                checkWitness(h, *r);
    }
    CHECK(asymmetricSeen > 10);
}

TEST_CASE("mode selection and guards")
{
    auto big = genGks(6, 0).graph;
    REQUIRE(big.edgeCount() > kMaxExhaustiveEdges);
    CHECK_THROWS_AS(verifyMinimalInvolutionFree(big), GuardError);
    VerifyOptions sampled;
    sampled.mode = Mode::Sampled;
    CHECK_THROWS_AS(verifyMinimalInvolutionFree(big, sampled), InvalidArgument);
    VerifyOptions exhaustive;
    exhaustive.mode = Mode::Exhaustive;
    CHECK_THROWS_AS(verifyMinimalInvolutionFree(big, exhaustive), GuardError);
    CHECK(parseProperty("strong-minimal") == Property::StronglyMinimalAsymmetric);
    CHECK(propertyName(Property::MinimalInvolutionFree) == "minimal-involution-free");
}

TEST_CASE("sampled verification is reproducible")
{
    auto g = genGks(6, 0).graph;
    VerifyOptions opt;
    opt.seed = 42;
    opt.samples = 500;
    auto a = verifyMinimalInvolutionFree(g, opt);
    opt.workers = 1;
    auto b = verifyMinimalInvolutionFree(g, opt);
    CHECK(a.mode == Mode::Sampled);
    CHECK(a.holds == b.holds);
    CHECK(a.samples == b.samples);
    CHECK(a.seed == 42);
    CHECK(a.holds);
    opt.stratified = true;
    CHECK(verifyMinimalInvolutionFree(g, opt).holds);
}

TEST_CASE("sampled failure witness on a union of asymmetric graphs")
{
    auto a = genGkStar(4).graph;
    auto u = disjointUnion(a, genGkStar(5).graph);
    REQUIRE(isAsymmetric(u));
    VerifyOptions s;
    s.mode = Mode::Sampled;
    s.seed = 3;
    s.samples = 2000;
    auto r = verifyStronglyMinimal(u, s);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
    auto sub = subFromSpec(u, *r.witness).graph;
    CHECK(sub.n() < u.n());
    CHECK(isAsymmetric(sub));
}
