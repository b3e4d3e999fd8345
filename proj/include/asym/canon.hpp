#pragma once

#include <string>

#include "asym/hypergraph.hpp"
#include "asym/permutation.hpp"

namespace asym {

struct CanonicalForm {
    /// labeling(v) is the canonical position of vertex v.
    Permutation labeling;
    /// permuted(h, labeling); equal for isomorphic inputs.
    Hypergraph graph;
    /// Byte encoding of `graph`.
    std::string key;
};

/// Individualization-refinement canonical labeling of the vertex/edge
/// incidence structure, with automorphism pruning.
CanonicalForm canonicalForm(const Hypergraph& h);

/// Identical for two hypergraphs iff they are isomorphic.
std::string canonicalKey(const Hypergraph& h);

} // namespace asym
