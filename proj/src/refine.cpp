#include "refine.hpp"

#include <algorithm>
#include <numeric>

#include "asym/error.hpp"

namespace asym::detail {

Incidence Incidence::fromHypergraph(const Hypergraph& h, std::span<const int> seed)
{
    Incidence inc;
    inc.n = h.n();
    inc.ordered = false;
    inc.blocks = h.edges();
    inc.seed.assign(seed.begin(), seed.end());
    inc.index();
    return inc;
}

Incidence Incidence::fromTuples(int n, const std::vector<std::vector<int>>& tuples, std::span<const int> seed)
{
    Incidence inc;
    inc.n = n;
    inc.ordered = true;
    inc.blocks = tuples;
    inc.seed.assign(seed.begin(), seed.end());
    inc.index();
    return inc;
}

void Incidence::index()
{
    if (seed.empty())
        seed.assign(static_cast<std::size_t>(n), 0);
    if (seed.size() != static_cast<std::size_t>(n))
        throw InvalidArgument("seed coloring size differs from vertex count");
    incident.assign(static_cast<std::size_t>(n), {});
    maxArity = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        maxArity = std::max(maxArity, static_cast<int>(blocks[b].size()));
        for (std::size_t p = 0; p < blocks[b].size(); ++p)
            incident[static_cast<std::size_t>(blocks[b][p])].emplace_back(static_cast<int>(b),
                                                                         ordered ? static_cast<int>(p) : 0);
    }
    sortedBlocks_ = blocks;
    if (!ordered)
        for (auto& b : sortedBlocks_)
            std::sort(b.begin(), b.end());
    std::sort(sortedBlocks_.begin(), sortedBlocks_.end());
}

bool Incidence::preserves(const Permutation& p) const
{
    if (p.size() != n)
        return false;
    std::vector<int> img;
    for (const auto& b : blocks) {
        img.clear();
        for (int v : b)
            img.push_back(p(v));
        if (!ordered)
            std::sort(img.begin(), img.end());
        if (!std::binary_search(sortedBlocks_.begin(), sortedBlocks_.end(), img))
            return false;
    }
    return true;
}

bool Incidence::hasBlock(std::vector<int> b) const
{
    if (!ordered)
        std::sort(b.begin(), b.end());
    return std::binary_search(sortedBlocks_.begin(), sortedBlocks_.end(), b);
}

Coloring seedColoring(const Incidence& inc)
{
    std::vector<int> order(static_cast<std::size_t>(inc.n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return inc.seed[static_cast<std::size_t>(a)] < inc.seed[static_cast<std::size_t>(b)];
    });
    Coloring color(static_cast<std::size_t>(inc.n));
    int start = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto v = static_cast<std::size_t>(order[i]);
        if (i > 0 && inc.seed[v] != inc.seed[static_cast<std::size_t>(order[i - 1])])
            start = static_cast<int>(i);
        color[v] = start;
    }
    return color;
}

int cellCount(const Coloring& color)
{
    std::vector<char> seen(color.size(), 0);
    int c = 0;
    for (int x : color)
        if (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = 1;
            ++c;
        }
    return c;
}

bool isDiscrete(const Coloring& color)
{
    return cellCount(color) == static_cast<int>(color.size());
}

Trace refine(const Incidence& inc, Coloring& color)
{
    const auto n = static_cast<std::size_t>(inc.n);
    const auto m = inc.blocks.size();
    const long long radix = inc.maxArity + 1;

    std::vector<std::vector<int>> bsig(m);
    std::vector<int> bOrder(m), blockColor(m);
    std::vector<std::vector<long long>> vsig(n);
    std::vector<int> vOrder(n);
    Coloring next(n);

    int cells = cellCount(color);
    for (;;) {
        for (std::size_t b = 0; b < m; ++b) {
            auto& s = bsig[b];
            s.clear();
            for (int v : inc.blocks[b])
                s.push_back(color[static_cast<std::size_t>(v)]);
            if (!inc.ordered)
                std::sort(s.begin(), s.end());
        }
        std::iota(bOrder.begin(), bOrder.end(), 0);
        std::sort(bOrder.begin(), bOrder.end(), [&](int a, int b) {
            return bsig[static_cast<std::size_t>(a)] < bsig[static_cast<std::size_t>(b)];
        });
        int rank = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (i > 0 && bsig[static_cast<std::size_t>(bOrder[i])] != bsig[static_cast<std::size_t>(bOrder[i - 1])])
                ++rank;
            blockColor[static_cast<std::size_t>(bOrder[i])] = rank;
        }

        for (std::size_t v = 0; v < n; ++v) {
            auto& s = vsig[v];
            s.clear();
            s.push_back(color[v]);
            for (auto [b, pos] : inc.incident[v])
                s.push_back(blockColor[static_cast<std::size_t>(b)] * radix + pos);
            std::sort(s.begin() + 1, s.end());
        }
        std::iota(vOrder.begin(), vOrder.end(), 0);
        std::sort(vOrder.begin(), vOrder.end(), [&](int a, int b) {
            return vsig[static_cast<std::size_t>(a)] < vsig[static_cast<std::size_t>(b)];
        });
        int start = 0, newCells = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto v = static_cast<std::size_t>(vOrder[i]);
            if (i == 0 || vsig[v] != vsig[static_cast<std::size_t>(vOrder[i - 1])]) {
                start = static_cast<int>(i);
                ++newCells;
            }
            next[v] = start;
        }
        color.swap(next);
        if (newCells == cells)
            break;
        cells = newCells;
    }

    // The partition is stable, so bsig/vsig describe the final quotient.
    Trace t;
    t.push_back(cells);
    t.push_back(static_cast<int>(m));
    for (std::size_t i = 0; i < m; ++i) {
        const auto& s = bsig[static_cast<std::size_t>(bOrder[i])];
        t.push_back(static_cast<int>(s.size()));
        t.insert(t.end(), s.begin(), s.end());
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = static_cast<std::size_t>(vOrder[i]);
        if (i > 0 && color[v] == color[static_cast<std::size_t>(vOrder[i - 1])])
            continue;
        const auto& s = vsig[v];
        t.push_back(static_cast<int>(s.size()));
        for (auto x : s)
            t.push_back(static_cast<int>(x));
    }
    return t;
}

void individualize(Coloring& color, int v)
{
    const int c = color[static_cast<std::size_t>(v)];
    for (std::size_t u = 0; u < color.size(); ++u)
        if (color[u] == c && static_cast<int>(u) != v)
            color[u] = c + 1;
}

int targetCell(const Coloring& color)
{
    std::vector<int> size(color.size(), 0);
    for (int c : color)
        ++size[static_cast<std::size_t>(c)];
    int best = -1;
    for (std::size_t c = 0; c < size.size(); ++c)
        if (size[c] > 1 && (best < 0 || size[c] < size[static_cast<std::size_t>(best)]))
            best = static_cast<int>(c);
    return best;
}

std::vector<int> cellMembers(const Coloring& color, int cell)
{
    std::vector<int> out;
    for (std::size_t v = 0; v < color.size(); ++v)
        if (color[v] == cell)
            out.push_back(static_cast<int>(v));
    return out;
}

std::vector<int> leafLabeling(const Coloring& color)
{
    std::vector<int> lab(color.size());
    for (std::size_t v = 0; v < color.size(); ++v)
        lab[static_cast<std::size_t>(color[v])] = static_cast<int>(v);
    return lab;
}

} // namespace asym::detail
