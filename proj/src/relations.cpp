#include "asym/relations.hpp"

#include <algorithm>
#include <set>

#include "asym/error.hpp"
#include "autom_engine.hpp"

namespace asym {

namespace {

void checkTuple(int n, int arity, const Tuple& t)
{
    if (static_cast<int>(t.size()) != arity)
        throw InvalidArgument("tuple length " + std::to_string(t.size()) + " differs from arity "
                              + std::to_string(arity));
    std::set<int> seen;
    for (int v : t) {
        if (v < 0 || v >= n)
            throw InvalidArgument("tuple entry " + std::to_string(v) + " out of range");
        if (!seen.insert(v).second)
            throw InvalidArgument("tuple entry " + std::to_string(v) + " repeated");
    }
}

detail::Incidence incidenceOf(const RelationalStructure& r)
{
    return detail::Incidence::fromTuples(r.n(), r.tuples());
}

} // namespace

RelationalStructure::RelationalStructure(int n, int arity, std::vector<Tuple> tuples)
    : n_(n), arity_(arity), tuples_(std::move(tuples))
{
    if (n < 0)
        throw InvalidArgument("universe size must be non-negative");
    if (arity < 1)
        throw InvalidArgument("arity must be positive");
    for (const auto& t : tuples_)
        checkTuple(n, arity, t);
    std::sort(tuples_.begin(), tuples_.end());
    if (std::adjacent_find(tuples_.begin(), tuples_.end()) != tuples_.end())
        throw InvalidArgument("duplicate tuple");
}

bool RelationalStructure::hasTuple(std::span<const int> t) const
{
    return std::binary_search(tuples_.begin(), tuples_.end(), Tuple(t.begin(), t.end()));
}

AutomResult automorphismsRel(const RelationalStructure& r)
{
    auto inc = incidenceOf(r);
    return detail::summarize(inc, detail::searchGroup(inc, false));
}

bool isAsymmetricRel(const RelationalStructure& r)
{
    auto inc = incidenceOf(r);
    return detail::searchGroup(inc, true).generators.empty();
}

AutomResult bruteForceAutomorphismsRel(const RelationalStructure& r)
{
    return detail::bruteForce(incidenceOf(r));
}

MultiplicityProfile multiplicity(const RelationalStructure& r)
{
    MultiplicityProfile p;
    for (auto t : r.tuples()) {
        std::sort(t.begin(), t.end());
        p.maxPerSet = std::max(p.maxPerSet, ++p.perSet[t]);
    }
    return p;
}

Hypergraph supportHypergraph(const RelationalStructure& r)
{
    auto m = multiplicity(r);
    std::vector<Edge> edges;
    for (const auto& [set, count] : m.perSet)
        edges.push_back(set);
    return Hypergraph(r.n(), std::move(edges), r.arity());
}

RelationalStructure inducedSubRel(const RelationalStructure& r, std::span<const int> vertices)
{
    std::vector<int> where(static_cast<std::size_t>(r.n()), -1);
    std::vector<int> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= r.n())
            throw InvalidArgument("vertex " + std::to_string(sorted[i]) + " out of range");
        where[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
    }
    std::vector<Tuple> kept;
    for (const auto& t : r.tuples()) {
        Tuple img;
        for (int v : t) {
            if (where[static_cast<std::size_t>(v)] < 0)
                break;
            img.push_back(where[static_cast<std::size_t>(v)]);
        }
        if (img.size() == t.size())
            kept.push_back(std::move(img));
    }
    return RelationalStructure(static_cast<int>(sorted.size()), r.arity(), std::move(kept));
}

RelationalStructure deleteVertex(const RelationalStructure& r, int x)
{
    if (x < 0 || x >= r.n())
        throw InvalidArgument("vertex " + std::to_string(x) + " out of range");
    std::vector<int> rest;
    for (int v = 0; v < r.n(); ++v)
        if (v != x)
            rest.push_back(v);
    return inducedSubRel(r, rest);
}

RelationalStructure cyclicClosure(int n, const std::vector<Tuple>& orderings)
{
    if (orderings.empty())
        return RelationalStructure(n, 1, {});
    const int arity = static_cast<int>(orderings.front().size());
    std::set<Tuple> all;
    for (const auto& o : orderings) {
        checkTuple(n, arity, o);
        Tuple rot = o;
        for (int i = 0; i < arity; ++i) {
            all.insert(rot);
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        }
    }
    return RelationalStructure(n, arity, {all.begin(), all.end()});
}

namespace {

/// Ordered triples of the circled 3-graph on u_i (0..3t-1), v^0_i (3t..6t-1)
/// and x (6t); entry 2 is the designated third coordinate.
std::vector<Tuple> ringTriples(int t, ThirdCoordinate third)
{
    const int ring = 3 * t;
    auto u = [&](int i) { return i % ring; };
    auto v = [&](int i) { return ring + i % ring; };
    const int x = 2 * ring;
    std::vector<Tuple> triples;
    for (int i = 0; i < ring; ++i) {
        if (third == ThirdCoordinate::NextRingVertex)
            triples.push_back({v(i), u(i), v(i + 1)});
        else
            triples.push_back({v(i), v(i + 1), u(i)});
    }
    if (third == ThirdCoordinate::NextRingVertex)
        triples.push_back({v(0), u(0), x});
    else
        triples.push_back({v(0), x, u(0)});
    return triples;
}

} // namespace

RelationalStructure genR3t(int t, ThirdCoordinate third)
{
    if (t < 1)
        throw InvalidArgument("t >= 1 required for r3t");
    std::vector<Tuple> tuples;
    for (auto tr : ringTriples(t, third)) {
        tuples.push_back(tr);
        std::swap(tr[0], tr[1]);
        tuples.push_back(tr);
    }
    return RelationalStructure(6 * t + 1, 3, std::move(tuples));
}

RelationalStructure genHCirc(int k, int t, ThirdCoordinate third)
{
    if (k < 4)
        throw InvalidArgument("k >= 4 required for hcirc (k = 3 is r3t)");
    if (t < 1)
        throw InvalidArgument("t >= 1 required for hcirc");
    const int base = 6 * t + 1;
    const int extra = k - 3;
    auto triples = ringTriples(t, third);
    std::vector<Tuple> tuples;
    for (std::size_t i = 0; i < triples.size(); ++i) {
        Tuple tu = triples[i];
        for (int j = 1; j <= extra; ++j)
            tu.push_back(base + static_cast<int>(i) * extra + (j - 1));
        tuples.push_back(tu);
        std::swap(tu[0], tu[1]);
        tuples.push_back(std::move(tu));
    }
    return RelationalStructure(base + static_cast<int>(triples.size()) * extra, k, std::move(tuples));
}

RelationalStructure genSingleArc()
{
    return RelationalStructure(2, 2, {{0, 1}});
}

} // namespace asym
