#include "asym/perm_group.hpp"

#include <algorithm>
#include <numeric>

#include "asym/error.hpp"

namespace asym {

namespace {

int firstMovedPoint(const Permutation& g, std::span<const int> exclude)
{
    for (int i = 0; i < g.size(); ++i)
        if (g(i) != i && std::find(exclude.begin(), exclude.end(), i) == exclude.end())
            return i;
    return -1;
}

bool fixesAll(const Permutation& g, std::span<const int> points)
{
    return std::all_of(points.begin(), points.end(), [&](int p) { return g(p) == p; });
}

} // namespace

void StabilizerChain::rebuildOrbit(Level& level) const
{
    level.orbit.assign(1, level.point);
    level.transversal.assign(static_cast<std::size_t>(n_), std::nullopt);
    level.transversal[static_cast<std::size_t>(level.point)] = Permutation::identity(n_);
    for (std::size_t i = 0; i < level.orbit.size(); ++i) {
        const int x = level.orbit[i];
        for (const auto& g : level.gens) {
            const int y = g(x);
            auto& slot = level.transversal[static_cast<std::size_t>(y)];
            if (!slot) {
                slot = g * *level.transversal[static_cast<std::size_t>(x)];
                level.orbit.push_back(y);
            }
        }
    }
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g, std::size_t from) const
{
    for (std::size_t i = from; i < levels_.size(); ++i) {
        const auto& t = levels_[i].transversal[static_cast<std::size_t>(g(levels_[i].point))];
        if (!t)
            return {std::move(g), i};
        g = t->inverse() * g;
    }
    return {std::move(g), levels_.size()};
}

StabilizerChain StabilizerChain::schreierSims(int n, std::span<const Permutation> generators)
{
    StabilizerChain c;
    c.n_ = n;
    std::vector<Permutation> gens;
    for (const auto& g : generators) {
        if (g.size() != n)
            throw InvalidArgument("generator degree mismatch");
        if (!g.isIdentity())
            gens.push_back(g);
    }
    if (gens.empty())
        return c;

    for (const auto& g : gens) {
        if (fixesAll(g, c.base_)) {
            c.base_.push_back(firstMovedPoint(g, c.base_));
            c.levels_.push_back(Level{c.base_.back(), {}, {}, {}});
        }
    }
    for (std::size_t i = 0; i < c.levels_.size(); ++i) {
        for (const auto& g : gens)
            if (fixesAll(g, std::span<const int>(c.base_).first(i)))
                c.levels_[i].gens.push_back(g);
        c.rebuildOrbit(c.levels_[i]);
    }

    auto i = static_cast<std::ptrdiff_t>(c.levels_.size()) - 1;
    while (i >= 0) {
        auto& level = c.levels_[static_cast<std::size_t>(i)];
        bool extended = false;
        for (std::size_t oi = 0; !extended && oi < level.orbit.size(); ++oi) {
            const int x = level.orbit[oi];
            for (std::size_t gi = 0; !extended && gi < level.gens.size(); ++gi) {
                const auto& g = level.gens[gi];
                const auto& ux = *level.transversal[static_cast<std::size_t>(x)];
                const auto& ugx = *level.transversal[static_cast<std::size_t>(g(x))];
                auto schreier = ugx.inverse() * g * ux;
                auto [h, j] = c.sift(std::move(schreier), static_cast<std::size_t>(i) + 1);
                if (j == c.levels_.size() && h.isIdentity())
                    continue;
                if (j == c.levels_.size()) {
                    c.base_.push_back(firstMovedPoint(h, c.base_));
                    c.levels_.push_back(Level{c.base_.back(), {}, {}, {}});
                }
                for (auto l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
                    c.levels_[l].gens.push_back(h);
                    c.rebuildOrbit(c.levels_[l]);
                }
                i = static_cast<std::ptrdiff_t>(j);
                extended = true;
            }
        }
        if (!extended)
            --i;
    }
    return c;
}

StabilizerChain StabilizerChain::fromStrongGenerators(int n, std::vector<int> base,
                                                      std::span<const Permutation> generators)
{
    StabilizerChain c;
    c.n_ = n;
    c.base_ = std::move(base);
    for (std::size_t i = 0; i < c.base_.size(); ++i) {
        Level level{c.base_[i], {}, {}, {}};
        for (const auto& g : generators)
            if (fixesAll(g, std::span<const int>(c.base_).first(i)) && !g.isIdentity())
                level.gens.push_back(g);
        c.rebuildOrbit(level);
        c.levels_.push_back(std::move(level));
    }
    return c;
}

std::vector<std::size_t> StabilizerChain::orbitSizes() const
{
    std::vector<std::size_t> out;
    for (const auto& l : levels_)
        out.push_back(l.orbit.size());
    return out;
}

BigInt StabilizerChain::order() const
{
    BigInt o = 1;
    for (const auto& l : levels_)
        o *= l.orbit.size();
    return o;
}

bool StabilizerChain::contains(const Permutation& g) const
{
    if (g.size() != n_)
        return false;
    auto [h, j] = sift(g, 0);
    return j == levels_.size() && h.isIdentity();
}

std::optional<Permutation> StabilizerChain::findElement(const std::function<bool(const Permutation&)>& pred) const
{
    std::optional<Permutation> found;
    std::function<bool(std::size_t, const Permutation&)> walk = [&](std::size_t depth, const Permutation& prefix) {
        if (depth == levels_.size()) {
            if (pred(prefix)) {
                found = prefix;
                return true;
            }
            return false;
        }
        for (int x : levels_[depth].orbit)
            if (walk(depth + 1, prefix * *levels_[depth].transversal[static_cast<std::size_t>(x)]))
                return true;
        return false;
    };
    walk(0, Permutation::identity(n_));
    return found;
}

std::vector<int> orbitRepresentatives(int n, std::span<const Permutation> generators)
{
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& g : generators) {
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(g(v));
            if (a != b)
                parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    }
    std::vector<int> rep(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        rep[static_cast<std::size_t>(v)] = find(v);
    return rep;
}

namespace {

std::optional<Permutation> involutionFrom(const Permutation& g)
{
    const auto ord = g.order();
    if (ord % 2 != 0)
        return std::nullopt;
    return g.pow(ord / 2);
}

} // namespace

std::optional<Permutation> findInvolution(std::span<const Permutation> generators, const StabilizerChain& chain)
{
    if (chain.order() % 2 != 0)
        return std::nullopt;
    for (const auto& g : generators)
        if (auto inv = involutionFrom(g))
            return inv;
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (auto inv = involutionFrom(generators[i] * generators[j]))
                return inv;
    auto g = chain.findElement([](const Permutation& p) { return p.order() % 2 == 0; });
    if (!g)
        return std::nullopt;
    return involutionFrom(*g);
}

} // namespace asym
