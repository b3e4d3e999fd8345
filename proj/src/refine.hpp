#pragma once

// Internal: colored incidence structures and equitable refinement shared by
// the automorphism search, canonical labeling and the relational engine.

#include <span>
#include <utility>
#include <vector>

#include "asym/hypergraph.hpp"
#include "asym/permutation.hpp"

namespace asym::detail {

/// Vertices 0..n-1 plus blocks. Unordered blocks are hyperedges (stored
/// sorted); ordered blocks are relation tuples where position matters.
struct Incidence {
    int n = 0;
    bool ordered = false;
    std::vector<std::vector<int>> blocks;
    /// Per-vertex user colors; only their relative order matters.
    std::vector<int> seed;
    /// Per vertex: (block, position) pairs.
    std::vector<std::vector<std::pair<int, int>>> incident;
    int maxArity = 0;

    static Incidence fromHypergraph(const Hypergraph& h, std::span<const int> seed = {});
    static Incidence fromTuples(int n, const std::vector<std::vector<int>>& tuples, std::span<const int> seed = {});

    /// True iff p maps the block set onto itself.
    bool preserves(const Permutation& p) const;
    /// Membership of an arbitrary vertex sequence (sorted here when unordered).
    bool hasBlock(std::vector<int> b) const;

private:
    void index();
    std::vector<std::vector<int>> sortedBlocks_;
};

/// Ordered partition stored as color[v] = first position of v's cell.
using Coloring = std::vector<int>;
using Trace = std::vector<int>;

/// Initial coloring from the seed colors.
Coloring seedColoring(const Incidence& inc);

/// Refines `color` to the coarsest equitable partition of the incidence
/// structure below it. Returns a label-invariant trace of the result.
Trace refine(const Incidence& inc, Coloring& color);

/// Splits v off the front of its cell.
void individualize(Coloring& color, int v);

int cellCount(const Coloring& color);
bool isDiscrete(const Coloring& color);

/// Color of the smallest non-singleton cell (lowest position on ties), or -1.
int targetCell(const Coloring& color);
std::vector<int> cellMembers(const Coloring& color, int cell);

/// Leaf labeling: lab[position] = vertex. Requires a discrete coloring.
std::vector<int> leafLabeling(const Coloring& color);

} // namespace asym::detail
