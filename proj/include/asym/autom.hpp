#pragma once

#include <optional>
#include <span>
#include <vector>

#include "asym/hypergraph.hpp"
#include "asym/permutation.hpp"

namespace asym {

/// Automorphism group summary.
///
/// isAsymmetric holds iff groupOrder == 1 iff generators is empty.
/// generators is a strong generating set relative to `base`.
struct AutomResult {
    std::vector<Permutation> generators;
    std::vector<int> base;
    BigInt groupOrder = 1;
    bool isAsymmetric = true;
    bool hasInvolution = false;
    std::optional<Permutation> involutionWitness;
};

/// Largest vertex count accepted by the n! oracle.
inline constexpr int kBruteForceLimit = 9;

/// Full group by individualization-refinement backtracking on the
/// vertex/edge incidence structure.
AutomResult automorphisms(const Hypergraph& h);

/// Setwise stabilizer of `s`: automorphisms with phi(S) = S.
AutomResult automorphismsStabilizing(const Hypergraph& h, std::span<const int> s);

/// Stops at the first non-identity automorphism.
bool isAsymmetric(const Hypergraph& h);
std::optional<Permutation> nonIdentityAutomorphism(const Hypergraph& h);

/// An involution (non-identity, self-inverse automorphism) if one exists.
/// Vertex transpositions are tried before the full group search.
std::optional<Permutation> hasInvolution(const Hypergraph& h);

/// Tests all n! permutations. Throws GuardError when n > kBruteForceLimit.
/// `s`, when given, restricts to its setwise stabilizer.
AutomResult bruteForceAutomorphisms(const Hypergraph& h, std::span<const int> s = {});

} // namespace asym
