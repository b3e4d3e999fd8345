#pragma once

#include <optional>

#include "asym/autom.hpp"
#include "refine.hpp"

namespace asym::detail {

struct GroupSearch {
    std::vector<Permutation> generators;
    std::vector<int> base;
    std::vector<std::size_t> orbitSizes;
};

/// Stabilizer-chain backtracking over the first refinement path. With
/// stopAtFirst the search ends at the first non-identity automorphism and
/// orbitSizes is left empty.
GroupSearch searchGroup(const Incidence& inc, bool stopAtFirst);

AutomResult summarize(const Incidence& inc, GroupSearch&& search);
AutomResult bruteForce(const Incidence& inc);

/// First vertex transposition preserving the blocks, if any.
std::optional<Permutation> swappablePair(const Incidence& inc);

} // namespace asym::detail
