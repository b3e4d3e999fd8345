#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asym/permutation.hpp"

namespace asym {

using Edge = std::vector<int>;

/// Finite hypergraph on vertices 0..n-1. Edges are stored sorted ascending and
/// the edge list is kept in lexicographic order, so two hypergraphs with the
/// same vertex count and edge set compare equal.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Normalizes edge order. Throws InvalidArgument on out-of-range or
    /// repeated vertices, duplicate edges, or edges contradicting `k`.
    /// The uniformity tag is `k` when given, else the common edge size
    /// (absent for edgeless or mixed-size input).
    Hypergraph(int n, std::vector<Edge> edges, std::optional<int> k = std::nullopt);

    static Hypergraph edgeless(int n, std::optional<int> k = std::nullopt) { return {n, {}, k}; }
    /// All k-subsets of {0..n-1}.
    static Hypergraph complete(int n, int k);

    int n() const noexcept { return n_; }
    std::size_t edgeCount() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }
    std::optional<int> uniformity() const noexcept { return k_; }

    /// `e` must be sorted.
    bool hasEdge(std::span<const int> e) const;
    std::optional<std::size_t> edgeIndex(std::span<const int> e) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::optional<int> k_;
};

/// Selects a (not necessarily induced) sub-hypergraph of a host.
struct SubgraphSpec {
    std::vector<int> vertices;
    std::vector<std::size_t> edgeIndices;

    friend bool operator==(const SubgraphSpec&, const SubgraphSpec&) = default;
};

struct DegreeProfile {
    std::vector<int> perVertex;
    std::vector<int> sortedMultiset;
};

/// A hypergraph cut out of a host, reindexed order-preservingly;
/// origin[i] is the host index of vertex i.
struct Subhypergraph {
    Hypergraph graph;
    std::vector<int> origin;
};

int degree(const Hypergraph& h, int v);
DegreeProfile degrees(const Hypergraph& h);
bool isKUniform(const Hypergraph& h, int k);

/// (X, {X - M}) for a k-uniform H with k < n.
Hypergraph setComplement(const Hypergraph& h);

Subhypergraph inducedSub(const Hypergraph& h, std::span<const int> vertices);
Subhypergraph subFromSpec(const Hypergraph& h, const SubgraphSpec& spec);

/// Vertices covered by the selected edges, ascending.
std::vector<int> supportOf(const Hypergraph& h, std::span<const std::size_t> edgeIndices);

/// The image pi.H: every edge M becomes pi(M).
Hypergraph permuted(const Hypergraph& h, const Permutation& pi);

/// True iff pi maps every edge of h onto an edge of h.
bool isAutomorphism(const Hypergraph& h, const Permutation& pi);

} // namespace asym
