#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "asym/autom.hpp"
#include "asym/hypergraph.hpp"

namespace asym {

using Tuple = std::vector<int>;

/// k-ary relational structure on {0..n-1}. Tuples have `arity` distinct
/// entries and are kept sorted lexicographically without duplicates.
class RelationalStructure {
public:
    RelationalStructure() = default;
    /// Throws InvalidArgument on arity mismatch, repeated or out-of-range
    /// entries and duplicate tuples.
    RelationalStructure(int n, int arity, std::vector<Tuple> tuples);

    int n() const noexcept { return n_; }
    int arity() const noexcept { return arity_; }
    const std::vector<Tuple>& tuples() const noexcept { return tuples_; }
    std::size_t tupleCount() const noexcept { return tuples_.size(); }
    bool hasTuple(std::span<const int> t) const;

    friend bool operator==(const RelationalStructure&, const RelationalStructure&) = default;

private:
    int n_ = 0;
    int arity_ = 0;
    std::vector<Tuple> tuples_;
};

struct MultiplicityProfile {
    int maxPerSet = 0;
    /// Sorted entry set -> number of tuples on it.
    std::map<std::vector<int>, int> perSet;
};

AutomResult automorphismsRel(const RelationalStructure& r);
bool isAsymmetricRel(const RelationalStructure& r);
/// n! oracle for relational structures (n <= kBruteForceLimit).
AutomResult bruteForceAutomorphismsRel(const RelationalStructure& r);

MultiplicityProfile multiplicity(const RelationalStructure& r);

/// The hypergraph of entry sets (order forgotten, one edge per covered set).
Hypergraph supportHypergraph(const RelationalStructure& r);

/// Restriction to the tuples inside `vertices`, reindexed order-preservingly.
RelationalStructure inducedSubRel(const RelationalStructure& r, std::span<const int> vertices);

/// Removes one vertex (G - x), reindexing the rest.
RelationalStructure deleteVertex(const RelationalStructure& r, int x);

/// Every input ordering together with all its cyclic rotations.
/// Throws InvalidArgument on orderings with repeated or out-of-range entries
/// or of differing lengths.
RelationalStructure cyclicClosure(int n, const std::vector<Tuple>& orderings);

/// Which coordinate of each ring edge comes third in genR3t / genHCirc.
enum class ThirdCoordinate {
    NextRingVertex, ///< v^0_{i+1} for E_i, x for the closing edge
    Pendant,        ///< u_i for E_i, u_0 for the closing edge
};

/// R'_{3,t}: two tuples per edge of the circled 3-graph, differing in the
/// first two places.
RelationalStructure genR3t(int t, ThirdCoordinate third = ThirdCoordinate::NextRingVertex);

/// H°_{k,t}: R'_{3,t} with k-3 private vertices w^1_i..w^{k-3}_i appended to
/// both tuples of edge i. Vertices of R'_{3,t} keep their indices; w^j_i is
/// at index (6t+1) + i(k-3) + (j-1).
RelationalStructure genHCirc(int k, int t, ThirdCoordinate third = ThirdCoordinate::NextRingVertex);

/// ({0,1}, {(0,1)}).
RelationalStructure genSingleArc();

} // namespace asym
