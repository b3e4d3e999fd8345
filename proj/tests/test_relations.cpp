#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "asym/canon.hpp"
#include "asym/constructions.hpp"
#include "asym/error.hpp"
#include "asym/relations.hpp"
#include "asym/verify.hpp"

using namespace asym;

namespace {

/// Every permutation preserving the tuple set.
std::vector<std::vector<int>> tupleAutomorphisms(const RelationalStructure& r)
{
    std::vector<int> p(static_cast<std::size_t>(r.n()));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (const auto& t : r.tuples()) {
            Tuple img;
            for (int v : t)
                img.push_back(p[static_cast<std::size_t>(v)]);
            if (!r.hasTuple(img)) {
                ok = false;
                break;
            }
        }
        if (ok)
            out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

TEST_CASE("relational structure validation")
{
    CHECK_THROWS_AS(RelationalStructure(3, 2, {{0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(RelationalStructure(3, 2, {{0, 3}}), InvalidArgument);
    CHECK_THROWS_AS(RelationalStructure(3, 2, {{0, 1, 2}}), InvalidArgument);
    CHECK_THROWS_AS(RelationalStructure(3, 2, {{0, 1}, {0, 1}}), InvalidArgument);
    RelationalStructure r(3, 2, {{2, 1}, {0, 1}});
    CHECK(r.tuples().front() == Tuple{0, 1});
    CHECK(r.hasTuple(std::vector<int>{2, 1}));
    CHECK_FALSE(r.hasTuple(std::vector<int>{1, 2}));
}

TEST_CASE("relational automorphism groups")
{
    CHECK(automorphismsRel(genSingleArc()).groupOrder == 1);
    CHECK(automorphismsRel(RelationalStructure(2, 2, {{0, 1}, {1, 0}})).groupOrder == 2);
    auto r31 = genR3t(1);
    CHECK(automorphismsRel(r31).groupOrder == 1);
    CHECK(tupleAutomorphisms(r31).size() == 1);
    CHECK(bruteForceAutomorphismsRel(r31).groupOrder == 1);

    std::mt19937_64 rng(9);
    for (int i = 0; i < 150; ++i) {
        std::uniform_int_distribution<int> nd(2, 6), ad(2, 3);
        const int n = nd(rng);
        const int a = std::min(ad(rng), n);
        std::vector<Tuple> all;
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        std::set<Tuple> seen;
        do {
            Tuple t(p.begin(), p.begin() + a);
            if (seen.insert(t).second)
                all.push_back(t);
        } while (std::next_permutation(p.begin(), p.end()));
        std::vector<Tuple> chosen;
        std::bernoulli_distribution keep(0.3);
        for (const auto& t : all)
            if (keep(rng))
                chosen.push_back(t);
        RelationalStructure r(n, a, chosen);
        auto expected = tupleAutomorphisms(r);
        auto got = automorphismsRel(r);
        CHECK(got.groupOrder == expected.size());
        auto support = supportHypergraph(r);
        for (const auto& g : got.generators)
            CHECK(isAutomorphism(support, g));
    }
}

TEST_CASE("multiplicity")
{
    CHECK(multiplicity(genSingleArc()).maxPerSet == 1);
    CHECK(multiplicity(genR3t(1)).maxPerSet == 2);
    CHECK(multiplicity(genR3t(2)).maxPerSet == 2);
    auto cyc = cyclicClosure(3, {{0, 1, 2}});
    CHECK(cyc.tuples() == std::vector<Tuple>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    CHECK(multiplicity(cyc).maxPerSet == 3);
    auto big = cyclicClosure(6, {{0, 1, 2, 3}, {5, 4, 3, 2}});
    for (const auto& [set, count] : multiplicity(big).perSet)
        CHECK(count == 4);
    CHECK(cyclicClosure(6, big.tuples()) == big);
    CHECK_THROWS_AS(cyclicClosure(3, {{0, 1, 2}, {0, 1}}), InvalidArgument);
    CHECK_THROWS_AS(cyclicClosure(3, {{0, 0, 2}}), InvalidArgument);
}

TEST_CASE("ternary construction with multiplicity two")
{
    auto r = genR3t(1);
    CHECK(r.n() == 7);
    CHECK(r.tupleCount() == 8);
    CHECK(isAsymmetricRel(r));
    for (int t = 1; t <= 3; ++t) {
        auto s = genR3t(t);
        CHECK(canonicalKey(supportHypergraph(s)) == canonicalKey(genGktCirc(3, t).graph));
        for (const auto& tu : s.tuples()) {
            Tuple swapped = tu;
            std::swap(swapped[0], swapped[1]);
            CHECK(s.hasTuple(swapped));
        }
    }
    auto pendant = genR3t(1, ThirdCoordinate::Pendant);
    CHECK(isAsymmetricRel(pendant));
    CHECK(supportHypergraph(pendant) == supportHypergraph(r));
    CHECK_THROWS_AS(genR3t(0), InvalidArgument);
}

TEST_CASE("enlarged ternary construction")
{
    auto h = genHCirc(4, 1);
    CHECK(h.n() == 11);
    CHECK(h.tupleCount() == 8);
    CHECK(h.arity() == 4);
    CHECK(multiplicity(h).maxPerSet == 2);
    CHECK(isAsymmetricRel(h));
    CHECK_THROWS_AS(genHCirc(3, 1), InvalidArgument);
}

TEST_CASE("induced substructures and deletion")
{
    auto r = genR3t(1);
    auto sub = inducedSubRel(r, std::vector<int>{0, 3, 4});
    CHECK(sub.n() == 3);
    CHECK(sub.tupleCount() == 2);
    auto d = deleteVertex(r, 6);
    CHECK(d.n() == 6);
    CHECK(d.tupleCount() == 6);
}

TEST_CASE("minimal asymmetry of relations")
{
    CHECK(verifyMinimalAsymmetricRel(genR3t(1)).holds);
    CHECK(verifyMinimalAsymmetricRel(genSingleArc()).holds);
    auto cyc = cyclicClosure(4, {{0, 1, 2}});
    auto rep = verifyMinimalAsymmetricRel(cyc);
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.perm.has_value());
}

TEST_CASE("critical asymmetry")
{
    CHECK(isCriticalAsymmetric(genSingleArc()).critical);

    // Oriented path 0->1->2->3 plus chord 0->2: deleting 3 leaves the
    // transitive triangle, which is asymmetric.
    RelationalStructure path(4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
    REQUIRE(isAsymmetricRel(path));
    auto c = isCriticalAsymmetric(path);
    CHECK_FALSE(c.critical);
    REQUIRE(c.witness.has_value());
    CHECK(tupleAutomorphisms(deleteVertex(path, *c.witness)).size() == 1);

    CHECK_THROWS_AS(isCriticalAsymmetric(RelationalStructure(2, 2, {{0, 1}, {1, 0}})), InvalidArgument);
    CHECK_THROWS_AS(isCriticalAsymmetric(genR3t(1)), InvalidArgument);
}
