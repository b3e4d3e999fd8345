#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "asym/hypergraph.hpp"

namespace asym {

/// Largest C(n,k) accepted by exhaustive scans (2^24 labeled edge sets).
inline constexpr int kMaxScanEdges = 24;
/// Largest order accepted by the edge-count-ordered witness search.
inline constexpr int kMaxWitnessOrder = 12;

enum class Enumeration {
    /// Every labeled edge set in ascending bitmask order, deduplicated by
    /// canonical key.
    LabeledScan,
    /// Orderly generation by edge addition with canonical parent checks.
    CanonicalAugmentation,
};

struct SearchOutcome {
    int k = 0;
    int n = 0;
    /// Labeled edge sets represented (2^C(n,k)). The augmentation strategy
    /// recovers it as the sum of n!/|Aut| over its classes.
    std::uint64_t totalLabeled = 0;
    std::uint64_t isoClasses = 0;
    std::uint64_t asymmetricClasses = 0;
    /// Canonical forms ordered by canonical key (all classes or only the
    /// asymmetric ones, per request).
    std::vector<Hypergraph> witnesses;
};

struct SearchOptions {
    Enumeration strategy = Enumeration::LabeledScan;
    /// Keep every class representative, not only asymmetric ones.
    bool keepAll = false;
    int workers = 0;
};

/// All k-subsets of {0..n-1} in lexicographic order; bit i of a labeled scan
/// mask selects entry i.
std::vector<Edge> kSubsets(int n, int k);

/// Throws GuardError when C(n,k) > kMaxScanEdges.
SearchOutcome enumerateKGraphs(int k, int n, const SearchOptions& opt = {});

/// Visits each isomorphism class of k-graphs on n vertices once, by
/// canonical augmentation. The visitor receives a canonical representative.
void forEachClass(int k, int n, const std::function<void(const Hypergraph&)>& visit);

struct MinOrderResult {
    /// Smallest n in [2, nMax] admitting an asymmetric k-graph.
    std::optional<int> order;
    std::optional<Hypergraph> witness;
};

/// Scans orders upward; each order is a labeled scan restricted to edge sets
/// with at most half of all k-subsets (edge-set complementation within
/// (X choose k) preserves the group).
MinOrderResult minAsymmetricOrder(int k, int nMax, int workers = 0);

struct AllSymmetricResult {
    bool allSymmetric = true;
    std::uint64_t scanned = 0;
    /// Instances settled by a vertex transposition.
    std::uint64_t swapSettled = 0;
    /// Instances containing every k-subset.
    std::uint64_t complete = 0;
    std::optional<Hypergraph> counterexample;
};

struct ScanCheckpoint {
    /// File holding `k n lastBitmask`; empty disables checkpointing.
    std::string path;
    /// Masks between checkpoint writes.
    std::uint64_t every = 1 << 16;
};

/// Every labeled k-graph on n vertices has a non-identity automorphism.
/// Resumes after the bitmask recorded in the checkpoint file when its k and
/// n match.
AllSymmetricResult verifyLemmaAllSymmetric(int k, int n, int workers = 0, const ScanCheckpoint& checkpoint = {});

/// Canonical forms of all minimal asymmetric k-graphs on n vertices.
std::vector<Hypergraph> findMinimalAsymmetric(int k, int n, int workers = 0);

/// Minimal asymmetric k-graphs on n vertices that contain an asymmetric
/// non-trivial (non-induced) sub-k-graph.
std::vector<Hypergraph> findMinimalNotStronglyMinimal(int k, int n, int workers = 0);

/// Asymmetric k-graph on n vertices with the fewest edges, smallest canonical
/// key among those; generated level by level in the edge count.
/// GuardError when n > kMaxWitnessOrder.
std::optional<Hypergraph> fewestEdgeAsymmetric(int k, int n);

} // namespace asym
