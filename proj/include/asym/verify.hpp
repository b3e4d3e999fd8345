#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "asym/hypergraph.hpp"
#include "asym/permutation.hpp"
#include "asym/relations.hpp"

namespace asym {

enum class Property {
    Asymmetric,
    MinimalAsymmetric,
    StronglyMinimalAsymmetric,
    MinimalInvolutionFree,
};

enum class Mode { Exhaustive, Sampled };

std::string_view propertyName(Property p);
std::optional<Property> parseProperty(std::string_view name);
std::string_view modeName(Mode m);

/// Outcome of a property check.
///
/// When holds is false the witness names the violation: either the whole
/// structure with a non-identity automorphism in `perm` (perm indexes the
/// witness' own reindexed vertices), or a proper substructure that is
/// asymmetric / involution-free with no perm.
struct VerificationReport {
    Property property = Property::Asymmetric;
    bool holds = true;
    std::optional<SubgraphSpec> witness;
    std::optional<Permutation> perm;
    Mode mode = Mode::Exhaustive;
    /// Substructures examined (edge subsets, vertex subsets or samples).
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::chrono::milliseconds elapsed{0};
};

/// Edge counts up to this are verified exhaustively unless a mode is forced.
inline constexpr std::size_t kAutoExhaustiveEdges = 20;
/// Hard ceiling for forced exhaustive edge-subset scans.
inline constexpr std::size_t kMaxExhaustiveEdges = 30;
/// Hard ceiling for vertex-subset scans.
inline constexpr int kMaxExhaustiveVertices = 30;

struct VerifyOptions {
    /// Unset: exhaustive when edgeCount <= kAutoExhaustiveEdges, else sampled
    /// (which then needs a seed).
    std::optional<Mode> mode;
    std::uint64_t samples = 10000;
    std::optional<std::uint64_t> seed;
    /// Sampled mode: draw the subset size uniformly first.
    bool stratified = false;
    /// 0 = hardware concurrency.
    int workers = 0;
};

VerificationReport verifyAsymmetric(const Hypergraph& h);

/// Asymmetric, and every induced sub-hypergraph on 1 < |X'| < |X| vertices
/// is symmetric. Enumerates vertex subsets or edge-closed edge subsets,
/// whichever space is smaller. GuardError if both exceed the ceilings.
VerificationReport verifyMinimalAsymmetric(const Hypergraph& h, const VerifyOptions& opt = {});

/// Asymmetric, and every (not necessarily induced) sub-hypergraph on
/// 1 < |X'| < |X| vertices is symmetric.
VerificationReport verifyStronglyMinimal(const Hypergraph& h, const VerifyOptions& opt = {});

/// No involution, and every sub-hypergraph with >= 2 vertices other than h
/// itself has one.
VerificationReport verifyMinimalInvolutionFree(const Hypergraph& h, const VerifyOptions& opt = {});

VerificationReport verify(const Hypergraph& h, Property p, const VerifyOptions& opt = {});

/// Asymmetric, and every induced substructure on 1 < |X'| < |X| vertices is
/// symmetric. GuardError when n > kMaxExhaustiveVertices.
VerificationReport verifyMinimalAsymmetricRel(const RelationalStructure& r, const VerifyOptions& opt = {});

struct CriticalResult {
    bool critical = true;
    /// A vertex x with R - x asymmetric and larger than one vertex.
    std::optional<int> witness;
};

/// Requires arity 2 and an asymmetric R with n >= 2 (InvalidArgument otherwise).
CriticalResult isCriticalAsymmetric(const RelationalStructure& r);

} // namespace asym
