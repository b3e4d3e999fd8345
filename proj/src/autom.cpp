#include "asym/autom.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "asym/error.hpp"
#include "asym/perm_group.hpp"
#include "autom_engine.hpp"

namespace asym {
namespace detail {

namespace {

struct PathNode {
    Coloring color;
    Trace trace;
    int target = -1; ///< cell individualized next, -1 at the leaf
    int base = -1;   ///< vertex individualized from `target`
};

class GroupSearcher {
public:
    GroupSearcher(const Incidence& inc, bool stopAtFirst) : inc_(inc), stopAtFirst_(stopAtFirst) {}

    GroupSearch run()
    {
        buildFirstPath();
        GroupSearch out;
        const auto depth = path_.size() - 1;
        for (std::size_t i = 0; i < depth; ++i)
            out.base.push_back(path_[i].base);
        std::vector<std::size_t> orbitSizes(depth, 1);

        for (auto level = static_cast<std::ptrdiff_t>(depth) - 1; level >= 0; --level) {
            const auto& node = path_[static_cast<std::size_t>(level)];
            auto rep = orbitRepresentatives(inc_.n, gens_);
            for (int c : cellMembers(node.color, node.target)) {
                if (rep[static_cast<std::size_t>(c)] == rep[static_cast<std::size_t>(node.base)])
                    continue;
                if (auto g = mapsTo(static_cast<std::size_t>(level) + 1, node.color, c)) {
                    gens_.push_back(std::move(*g));
                    if (stopAtFirst_) {
                        out.generators = std::move(gens_);
                        return out;
                    }
                    rep = orbitRepresentatives(inc_.n, gens_);
                }
            }
            orbitSizes[static_cast<std::size_t>(level)] = static_cast<std::size_t>(
                std::count(rep.begin(), rep.end(), rep[static_cast<std::size_t>(node.base)]));
        }
        out.generators = std::move(gens_);
        if (!stopAtFirst_)
            out.orbitSizes = std::move(orbitSizes);
        return out;
    }

private:
    void buildFirstPath()
    {
        PathNode node;
        node.color = seedColoring(inc_);
        node.trace = refine(inc_, node.color);
        for (;;) {
            node.target = targetCell(node.color);
            if (node.target < 0) {
                leaf_ = leafLabeling(node.color);
                path_.push_back(std::move(node));
                return;
            }
            node.base = cellMembers(node.color, node.target).front();
            PathNode child;
            child.color = node.color;
            individualize(child.color, node.base);
            child.trace = refine(inc_, child.color);
            path_.push_back(std::move(node));
            node = std::move(child);
        }
    }

    /// Searches for an automorphism extending the first path's prefix up to
    /// depth-1 that sends the first path's choice at that depth to `c`.
    std::optional<Permutation> mapsTo(std::size_t depth, const Coloring& parent, int c)
    {
        Coloring color = parent;
        individualize(color, c);
        if (refine(inc_, color) != path_[depth].trace)
            return std::nullopt;
        const auto& ref = path_[depth];
        if (ref.target < 0) {
            const auto lab = leafLabeling(color);
            std::vector<int> img(static_cast<std::size_t>(inc_.n));
            for (std::size_t p = 0; p < lab.size(); ++p)
                img[static_cast<std::size_t>(leaf_[p])] = lab[p];
            Permutation g(std::move(img));
            if (inc_.preserves(g))
                return g;
            return std::nullopt;
        }
        for (int y : cellMembers(color, ref.target))
            if (auto g = mapsTo(depth + 1, color, y))
                return g;
        return std::nullopt;
    }

    const Incidence& inc_;
    bool stopAtFirst_;
    std::vector<PathNode> path_;
    std::vector<int> leaf_;
    std::vector<Permutation> gens_;
};

} // namespace

GroupSearch searchGroup(const Incidence& inc, bool stopAtFirst)
{
    return GroupSearcher(inc, stopAtFirst).run();
}

AutomResult summarize(const Incidence& inc, GroupSearch&& search)
{
    AutomResult r;
    auto chain = StabilizerChain::fromStrongGenerators(inc.n, search.base, search.generators);
    r.groupOrder = chain.order();
    r.base = std::move(search.base);
    r.generators = std::move(search.generators);
    r.isAsymmetric = r.generators.empty();
    if (!r.isAsymmetric) {
        r.involutionWitness = findInvolution(r.generators, chain);
        r.hasInvolution = r.involutionWitness.has_value();
    }
    return r;
}

AutomResult bruteForce(const Incidence& inc)
{
    if (inc.n > kBruteForceLimit)
        throw GuardError("brute-force automorphisms limited to n <= " + std::to_string(kBruteForceLimit));
    std::vector<int> images(static_cast<std::size_t>(inc.n));
    std::iota(images.begin(), images.end(), 0);
    AutomResult r;
    std::size_t count = 0;
    do {
        bool colorsKept = true;
        for (std::size_t v = 0; v < images.size() && colorsKept; ++v)
            colorsKept = inc.seed[v] == inc.seed[static_cast<std::size_t>(images[v])];
        if (!colorsKept)
            continue;
        Permutation p(images);
        if (!inc.preserves(p))
            continue;
        ++count;
        if (p.isIdentity())
            continue;
        if (!r.involutionWitness && p.isInvolution())
            r.involutionWitness = p;
        r.generators.push_back(std::move(p));
    } while (std::next_permutation(images.begin(), images.end()));
    r.groupOrder = count;
    r.isAsymmetric = count == 1;
    r.hasInvolution = r.involutionWitness.has_value();
    return r;
}

std::optional<Permutation> swappablePair(const Incidence& inc)
{
    // Vertices with identical "block minus self" lists never share a block and
    // swap freely.
    std::map<std::vector<std::vector<int>>, int> byNeighbourhood;
    for (int u = 0; u < inc.n; ++u) {
        std::vector<std::vector<int>> key;
        key.push_back({inc.seed[static_cast<std::size_t>(u)]});
        for (auto [b, pos] : inc.incident[static_cast<std::size_t>(u)]) {
            auto blk = inc.blocks[static_cast<std::size_t>(b)];
            if (inc.ordered) {
                blk[static_cast<std::size_t>(pos)] = -1;
            } else {
                blk.erase(std::find(blk.begin(), blk.end(), u));
            }
            key.push_back(std::move(blk));
        }
        std::sort(key.begin() + 1, key.end());
        auto [it, fresh] = byNeighbourhood.emplace(std::move(key), u);
        if (!fresh)
            return Permutation::transposition(inc.n, it->second, u);
    }

    // Pairs sharing a block: only blocks through u or v can move.
    auto swaps = [&](int u, int v) {
        if (inc.seed[static_cast<std::size_t>(u)] != inc.seed[static_cast<std::size_t>(v)]
            || inc.incident[static_cast<std::size_t>(u)].size() != inc.incident[static_cast<std::size_t>(v)].size())
            return false;
        for (int w : {u, v}) {
            for (auto [b, pos] : inc.incident[static_cast<std::size_t>(w)]) {
                auto img = inc.blocks[static_cast<std::size_t>(b)];
                for (auto& x : img)
                    x = x == u ? v : x == v ? u : x;
                if (!inc.hasBlock(std::move(img)))
                    return false;
            }
        }
        return true;
    };
    std::optional<std::pair<int, int>> best;
    for (const auto& blk : inc.blocks)
        for (std::size_t i = 0; i < blk.size(); ++i)
            for (std::size_t j = 0; j < blk.size(); ++j) {
                const int u = std::min(blk[i], blk[j]), v = std::max(blk[i], blk[j]);
                if (u == v || (best && std::pair{u, v} >= *best))
                    continue;
                if (swaps(u, v))
                    best = std::pair{u, v};
            }
    if (best)
        return Permutation::transposition(inc.n, best->first, best->second);
    return std::nullopt;
}

} // namespace detail

AutomResult automorphisms(const Hypergraph& h)
{
    auto inc = detail::Incidence::fromHypergraph(h);
    return detail::summarize(inc, detail::searchGroup(inc, false));
}

AutomResult automorphismsStabilizing(const Hypergraph& h, std::span<const int> s)
{
    std::vector<int> seed(static_cast<std::size_t>(h.n()), 0);
    for (int v : s) {
        if (v < 0 || v >= h.n())
            throw InvalidArgument("stabilized vertex " + std::to_string(v) + " out of range");
        seed[static_cast<std::size_t>(v)] = 1;
    }
    auto inc = detail::Incidence::fromHypergraph(h, seed);
    return detail::summarize(inc, detail::searchGroup(inc, false));
}

bool isAsymmetric(const Hypergraph& h)
{
    return !nonIdentityAutomorphism(h).has_value();
}

std::optional<Permutation> nonIdentityAutomorphism(const Hypergraph& h)
{
    auto inc = detail::Incidence::fromHypergraph(h);
    auto s = detail::searchGroup(inc, true);
    if (s.generators.empty())
        return std::nullopt;
    return s.generators.front();
}

std::optional<Permutation> hasInvolution(const Hypergraph& h)
{
    auto inc = detail::Incidence::fromHypergraph(h);
    if (auto t = detail::swappablePair(inc))
        return t;
    return detail::summarize(inc, detail::searchGroup(inc, false)).involutionWitness;
}

AutomResult bruteForceAutomorphisms(const Hypergraph& h, std::span<const int> s)
{
    std::vector<int> seed(static_cast<std::size_t>(h.n()), 0);
    for (int v : s) {
        if (v < 0 || v >= h.n())
            throw InvalidArgument("stabilized vertex " + std::to_string(v) + " out of range");
        seed[static_cast<std::size_t>(v)] = 1;
    }
    return detail::bruteForce(detail::Incidence::fromHypergraph(h, seed));
}

} // namespace asym
