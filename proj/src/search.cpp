#include "asym/search.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <mutex>
#include <unordered_map>

#include "asym/autom.hpp"
#include "asym/canon.hpp"
#include "asym/error.hpp"
#include "asym/verify.hpp"
#include "autom_engine.hpp"
#include "parallel.hpp"

namespace asym {

namespace {

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t factorial(int n)
{
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i)
        r *= static_cast<std::uint64_t>(i);
    return r;
}

void checkScanGuard(int k, int n)
{
    if (k < 1 || n < 0)
        throw InvalidArgument("k >= 1 and n >= 0 required");
    if (binomial(n, k) > static_cast<std::uint64_t>(kMaxScanEdges))
        throw GuardError("C(" + std::to_string(n) + "," + std::to_string(k) + ") = " + std::to_string(binomial(n, k))
                         + " exceeds the scan limit of " + std::to_string(kMaxScanEdges) + " k-subsets");
}

Hypergraph fromMask(int n, int k, const std::vector<Edge>& subsets, std::uint64_t mask)
{
    std::vector<Edge> edges;
    while (mask) {
        edges.push_back(subsets[static_cast<std::size_t>(std::countr_zero(mask))]);
        mask &= mask - 1;
    }
    return Hypergraph(n, std::move(edges), k);
}

std::uint64_t vertexMask(const Edge& e)
{
    std::uint64_t m = 0;
    for (int v : e)
        m |= std::uint64_t{1} << v;
    return m;
}

/// A class representative with its group, as carried through augmentation.
struct Node {
    Hypergraph graph;
    AutomResult group;
    std::string key;
};

class Augmenter {
public:
    Augmenter(int k, int n) : k_(k), n_(n), subsets_(kSubsets(n, k))
    {
        if (n > 64)
            throw GuardError("augmentation limited to 64 vertices");
        for (std::size_t i = 0; i < subsets_.size(); ++i)
            rank_.emplace(vertexMask(subsets_[i]), i);
    }

    Node root() const
    {
        auto cf = canonicalForm(Hypergraph::edgeless(n_, k_));
        auto group = automorphisms(cf.graph);
        return Node{std::move(cf.graph), std::move(group), std::move(cf.key)};
    }

    std::vector<Node> children(const Node& parent) const
    {
        std::vector<char> present(subsets_.size(), 0);
        for (const auto& e : parent.graph.edges())
            present[rank_.at(vertexMask(e))] = 1;
        std::vector<std::size_t> reps;
        for (std::size_t i = 0; i < subsets_.size(); ++i)
            if (!present[i] && orbitMin(i, parent.group.generators) == i)
                reps.push_back(i);

        std::vector<Node> out;
        for (auto i : reps) {
            auto edges = parent.graph.edges();
            edges.push_back(subsets_[i]);
            Hypergraph child(n_, std::move(edges), k_);
            auto cf = canonicalForm(child);
            auto group = automorphisms(cf.graph);
            std::uint64_t added = 0;
            for (int v : subsets_[i])
                added |= std::uint64_t{1} << cf.labeling(v);
            // The canonical parent removes the lexicographically last edge
            // of the canonical form.
            const auto last = rank_.at(vertexMask(cf.graph.edges().back()));
            if (!sameOrbit(rank_.at(added), last, group.generators))
                continue;
            out.push_back(Node{std::move(cf.graph), std::move(group), std::move(cf.key)});
        }
        return out;
    }

private:
    std::size_t image(std::size_t i, const Permutation& g) const
    {
        std::uint64_t m = 0;
        for (int v : subsets_[i])
            m |= std::uint64_t{1} << g(v);
        return rank_.at(m);
    }

    std::size_t orbitMin(std::size_t i, const std::vector<Permutation>& gens) const
    {
        std::vector<std::size_t> orbit{i};
        std::size_t best = i;
        for (std::size_t at = 0; at < orbit.size(); ++at)
            for (const auto& g : gens) {
                auto j = image(orbit[at], g);
                if (std::find(orbit.begin(), orbit.end(), j) == orbit.end()) {
                    orbit.push_back(j);
                    best = std::min(best, j);
                }
            }
        return best;
    }

    bool sameOrbit(std::size_t a, std::size_t b, const std::vector<Permutation>& gens) const
    {
        return a == b || orbitMin(a, gens) == orbitMin(b, gens);
    }

    int k_, n_;
    std::vector<Edge> subsets_;
    std::unordered_map<std::uint64_t, std::size_t> rank_;
};

void sortByKey(std::vector<std::pair<std::string, Hypergraph>>& v)
{
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

} // namespace

std::vector<Edge> kSubsets(int n, int k)
{
    std::vector<Edge> out;
    if (k < 0 || k > n)
        return out;
    Edge cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        cur[static_cast<std::size_t>(i)] = i;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

void forEachClass(int k, int n, const std::function<void(const Hypergraph&)>& visit)
{
    checkScanGuard(k, n);
    Augmenter aug(k, n);
    std::vector<Node> stack{aug.root()};
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        visit(node.graph);
        auto kids = aug.children(node);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it)
            stack.push_back(std::move(*it));
    }
}

SearchOutcome enumerateKGraphs(int k, int n, const SearchOptions& opt)
{
    checkScanGuard(k, n);
    SearchOutcome out;
    out.k = k;
    out.n = n;
    std::vector<std::pair<std::string, Hypergraph>> kept;

    if (opt.strategy == Enumeration::CanonicalAugmentation) {
        Augmenter aug(k, n);
        std::vector<Node> stack{aug.root()};
        const auto nFact = factorial(n);
        while (!stack.empty()) {
            Node node = std::move(stack.back());
            stack.pop_back();
            ++out.isoClasses;
            out.totalLabeled += nFact / static_cast<std::uint64_t>(node.group.groupOrder);
            if (node.group.isAsymmetric)
                ++out.asymmetricClasses;
            if (opt.keepAll || node.group.isAsymmetric)
                kept.emplace_back(node.key, node.graph);
            for (auto& kid : aug.children(node))
                stack.push_back(std::move(kid));
        }
    } else {
        const auto subsets = kSubsets(n, k);
        const std::uint64_t end = std::uint64_t{1} << subsets.size();
        out.totalLabeled = end;
        std::mutex mutex;
        std::map<std::string, std::pair<bool, Hypergraph>> classes;
        detail::forEachSlice(0, end, opt.workers, [&](std::uint64_t lo, std::uint64_t hi, int) {
            std::map<std::string, std::pair<bool, Hypergraph>> local;
            for (auto mask = lo; mask < hi; ++mask) {
                auto cf = canonicalForm(fromMask(n, k, subsets, mask));
                if (local.count(cf.key))
                    continue;
                const bool asym = isAsymmetric(cf.graph);
                local.emplace(std::move(cf.key), std::pair{asym, std::move(cf.graph)});
            }
            std::lock_guard lock(mutex);
            classes.merge(local);
        });
        out.isoClasses = classes.size();
        for (auto& [key, entry] : classes) {
            if (entry.first)
                ++out.asymmetricClasses;
            if (opt.keepAll || entry.first)
                kept.emplace_back(key, std::move(entry.second));
        }
    }
    sortByKey(kept);
    for (auto& [key, g] : kept)
        out.witnesses.push_back(std::move(g));
    return out;
}

MinOrderResult minAsymmetricOrder(int k, int nMax, int workers)
{
    if (k < 1)
        throw InvalidArgument("k >= 1 required");
    MinOrderResult r;
    for (int n = 2; n <= nMax; ++n) {
        checkScanGuard(k, n);
        const auto subsets = kSubsets(n, k);
        const auto half = static_cast<int>(subsets.size() / 2);
        const std::uint64_t end = std::uint64_t{1} << subsets.size();
        auto hit = detail::firstMatch(0, end, workers, [&](std::uint64_t mask) {
            if (std::popcount(mask) > half)
                return false;
            auto inc = detail::Incidence::fromHypergraph(fromMask(n, k, subsets, mask));
            if (detail::swappablePair(inc))
                return false;
            return detail::searchGroup(inc, true).generators.empty();
        });
        if (hit) {
            r.order = n;
            r.witness = canonicalForm(fromMask(n, k, subsets, *hit)).graph;
            return r;
        }
    }
    return r;
}

AllSymmetricResult verifyLemmaAllSymmetric(int k, int n, int workers, const ScanCheckpoint& checkpoint)
{
    checkScanGuard(k, n);
    const auto subsets = kSubsets(n, k);
    const std::uint64_t end = std::uint64_t{1} << subsets.size();
    const std::uint64_t full = end - 1;

    std::uint64_t start = 0;
    if (!checkpoint.path.empty()) {
        std::ifstream in(checkpoint.path);
        int ck = 0, cn = 0;
        std::uint64_t last = 0;
        if (in >> ck >> cn >> last && ck == k && cn == n)
            start = last + 1;
    }

    AllSymmetricResult r;
    std::mutex mutex;
    std::optional<std::uint64_t> firstAsym;

    auto scan = [&](std::uint64_t lo, std::uint64_t hi, int) {
        AllSymmetricResult local;
        std::optional<std::uint64_t> localAsym;
        for (auto mask = lo; mask < hi; ++mask) {
            ++local.scanned;
            if (mask == full && !subsets.empty()) {
                ++local.complete;
                continue;
            }
            auto inc = detail::Incidence::fromHypergraph(fromMask(n, k, subsets, mask));
            if (detail::swappablePair(inc)) {
                ++local.swapSettled;
                continue;
            }
            if (detail::searchGroup(inc, true).generators.empty()) {
                localAsym = mask;
                break;
            }
        }
        std::lock_guard lock(mutex);
        r.scanned += local.scanned;
        r.complete += local.complete;
        r.swapSettled += local.swapSettled;
        if (localAsym && (!firstAsym || *localAsym < *firstAsym))
            firstAsym = localAsym;
    };

    if (checkpoint.path.empty()) {
        detail::forEachSlice(start, end, workers, scan);
    } else {
        const auto every = std::max<std::uint64_t>(1, checkpoint.every);
        for (auto lo = start; lo < end && !firstAsym; lo += every) {
            const auto hi = std::min(end, lo + every);
            detail::forEachSlice(lo, hi, workers, scan);
            if (!firstAsym) {
                std::ofstream outFile(checkpoint.path, std::ios::trunc);
                outFile << k << ' ' << n << ' ' << hi - 1 << '\n';
            }
        }
    }

    if (firstAsym) {
        r.allSymmetric = false;
        r.counterexample = fromMask(n, k, subsets, *firstAsym);
    }
    return r;
}

std::vector<Hypergraph> findMinimalAsymmetric(int k, int n, int workers)
{
    std::vector<std::pair<std::string, Hypergraph>> found;
    VerifyOptions opt;
    opt.workers = workers;
    forEachClass(k, n, [&](const Hypergraph& g) {
        if (!isAsymmetric(g))
            return;
        if (verifyMinimalAsymmetric(g, opt).holds)
            found.emplace_back(canonicalKey(g), g);
    });
    sortByKey(found);
    std::vector<Hypergraph> out;
    for (auto& [key, g] : found)
        out.push_back(std::move(g));
    return out;
}

std::vector<Hypergraph> findMinimalNotStronglyMinimal(int k, int n, int workers)
{
    VerifyOptions opt;
    opt.workers = workers;
    opt.mode = Mode::Exhaustive;
    std::vector<Hypergraph> out;
    for (auto& g : findMinimalAsymmetric(k, n, workers))
        if (!verifyStronglyMinimal(g, opt).holds)
            out.push_back(std::move(g));
    return out;
}

std::optional<Hypergraph> fewestEdgeAsymmetric(int k, int n)
{
    if (n > kMaxWitnessOrder)
        throw GuardError("witness search limited to n <= " + std::to_string(kMaxWitnessOrder));
    if (k < 1 || n < 2)
        return std::nullopt;
    Augmenter aug(k, n);
    std::vector<Node> level{aug.root()};
    while (!level.empty()) {
        const Node* best = nullptr;
        for (const auto& node : level)
            if (node.group.isAsymmetric && (!best || node.key < best->key))
                best = &node;
        if (best)
            return best->graph;
        std::vector<Node> next;
        for (const auto& node : level)
            for (auto& kid : aug.children(node))
                next.push_back(std::move(kid));
        level = std::move(next);
    }
    return std::nullopt;
}

} // namespace asym
