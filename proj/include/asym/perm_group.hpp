#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "asym/permutation.hpp"

namespace asym {

/// Base and strong generating set of a permutation group on {0..n-1}.
///
/// Level i holds the generators fixing base[0..i-1] pointwise, the orbit of
/// base[i] under them and an explicit transversal. The group order is the
/// product of the orbit lengths.
class StabilizerChain {
public:
    /// Deterministic Schreier-Sims. New base points are the smallest points
    /// moved by the element that forces the extension.
    static StabilizerChain schreierSims(int n, std::span<const Permutation> generators);

    /// Trusts that `generators` is a strong generating set relative to `base`.
    static StabilizerChain fromStrongGenerators(int n, std::vector<int> base,
                                                std::span<const Permutation> generators);

    int degree() const noexcept { return n_; }
    const std::vector<int>& base() const noexcept { return base_; }
    std::vector<std::size_t> orbitSizes() const;
    BigInt order() const;
    bool contains(const Permutation& g) const;

    /// Walks the group elements (u_0 u_1 ... u_{d-1} over transversals) and
    /// returns the first element accepted by `pred`.
    std::optional<Permutation> findElement(const std::function<bool(const Permutation&)>& pred) const;

private:
    struct Level {
        int point = -1;
        std::vector<Permutation> gens;
        std::vector<int> orbit;
        std::vector<std::optional<Permutation>> transversal;
    };

    void rebuildOrbit(Level& level) const;
    /// Returns the residue and the level where sifting stopped (levels_.size() on success).
    std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;

    int n_ = 0;
    std::vector<int> base_;
    std::vector<Level> levels_;
};

/// Orbits of the group generated by `generators`, as a representative map
/// (rep[v] = smallest point of v's orbit).
std::vector<int> orbitRepresentatives(int n, std::span<const Permutation> generators);

/// An involution of the group generated by `generators`, if the group has one.
/// Tries generator powers and pairwise products before walking `chain`.
std::optional<Permutation> findInvolution(std::span<const Permutation> generators, const StabilizerChain& chain);

} // namespace asym
