#include "asym/hypergraph.hpp"

#include <algorithm>
#include <numeric>

#include "asym/error.hpp"

namespace asym {

Hypergraph::Hypergraph(int n, std::vector<Edge> edges, std::optional<int> k)
    : n_(n), edges_(std::move(edges)), k_(k)
{
    if (n < 0)
        throw InvalidArgument("vertex count must be non-negative");
    for (auto& e : edges_) {
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw InvalidArgument("edge repeats a vertex");
        if (!e.empty() && (e.front() < 0 || e.back() >= n))
            throw InvalidArgument("edge vertex out of range 0.." + std::to_string(n - 1));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InvalidArgument("duplicate edge");

    if (k_) {
        for (const auto& e : edges_)
            if (static_cast<int>(e.size()) != *k_)
                throw InvalidArgument("edge size differs from uniformity " + std::to_string(*k_));
    } else if (!edges_.empty()) {
        const auto sz = edges_.front().size();
        if (std::all_of(edges_.begin(), edges_.end(), [sz](const Edge& e) { return e.size() == sz; }))
            k_ = static_cast<int>(sz);
    }
}

Hypergraph Hypergraph::complete(int n, int k)
{
    if (k < 0 || k > n)
        throw InvalidArgument("complete k-graph needs 0 <= k <= n");
    std::vector<Edge> edges;
    std::vector<char> pick(static_cast<std::size_t>(n), 0);
    std::fill(pick.begin(), pick.begin() + k, 1);
    // prev_permutation over a 1..10..0 mask walks subsets in lexicographic order
    do {
        Edge e;
        for (int i = 0; i < n; ++i)
            if (pick[static_cast<std::size_t>(i)])
                e.push_back(i);
        edges.push_back(std::move(e));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return {n, std::move(edges), k};
}

bool Hypergraph::hasEdge(std::span<const int> e) const
{
    return edgeIndex(e).has_value();
}

std::optional<std::size_t> Hypergraph::edgeIndex(std::span<const int> e) const
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e, [](const Edge& a, std::span<const int> b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    if (it == edges_.end() || !std::equal(it->begin(), it->end(), e.begin(), e.end()))
        return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

int degree(const Hypergraph& h, int v)
{
    if (v < 0 || v >= h.n())
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    int d = 0;
    for (const auto& e : h.edges())
        d += std::binary_search(e.begin(), e.end(), v) ? 1 : 0;
    return d;
}

DegreeProfile degrees(const Hypergraph& h)
{
    DegreeProfile p;
    p.perVertex.assign(static_cast<std::size_t>(h.n()), 0);
    for (const auto& e : h.edges())
        for (int v : e)
            ++p.perVertex[static_cast<std::size_t>(v)];
    p.sortedMultiset = p.perVertex;
    std::sort(p.sortedMultiset.begin(), p.sortedMultiset.end());
    return p;
}

bool isKUniform(const Hypergraph& h, int k)
{
    return std::all_of(h.edges().begin(), h.edges().end(),
                       [k](const Edge& e) { return static_cast<int>(e.size()) == k; });
}

Hypergraph setComplement(const Hypergraph& h)
{
    const auto k = h.uniformity();
    if (!k)
        throw InvalidArgument("set-complement needs a uniform hypergraph");
    if (*k >= h.n())
        throw InvalidArgument("set-complement needs k < n");
    std::vector<Edge> edges;
    edges.reserve(h.edgeCount());
    for (const auto& e : h.edges()) {
        Edge c;
        std::size_t j = 0;
        for (int v = 0; v < h.n(); ++v) {
            if (j < e.size() && e[j] == v)
                ++j;
            else
                c.push_back(v);
        }
        edges.push_back(std::move(c));
    }
    return {h.n(), std::move(edges), h.n() - *k};
}

namespace {

Subhypergraph restrict(const Hypergraph& h, std::vector<int> vertices, std::vector<Edge> hostEdges)
{
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<int> index(static_cast<std::size_t>(h.n()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const int v = vertices[i];
        if (v < 0 || v >= h.n())
            throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
        index[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    for (auto& e : hostEdges)
        for (auto& v : e)
            v = index[static_cast<std::size_t>(v)];
    return {Hypergraph(static_cast<int>(vertices.size()), std::move(hostEdges), h.uniformity()),
            std::move(vertices)};
}

} // namespace

Subhypergraph inducedSub(const Hypergraph& h, std::span<const int> vertices)
{
    std::vector<char> in(static_cast<std::size_t>(h.n()), 0);
    for (int v : vertices) {
        if (v < 0 || v >= h.n())
            throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
        in[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<Edge> kept;
    for (const auto& e : h.edges())
        if (std::all_of(e.begin(), e.end(), [&](int v) { return in[static_cast<std::size_t>(v)]; }))
            kept.push_back(e);
    return restrict(h, {vertices.begin(), vertices.end()}, std::move(kept));
}

Subhypergraph subFromSpec(const Hypergraph& h, const SubgraphSpec& spec)
{
    std::vector<char> in(static_cast<std::size_t>(h.n()), 0);
    for (int v : spec.vertices) {
        if (v < 0 || v >= h.n())
            throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
        in[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<Edge> kept;
    for (auto i : spec.edgeIndices) {
        if (i >= h.edgeCount())
            throw InvalidArgument("edge index " + std::to_string(i) + " out of range");
        const auto& e = h.edge(i);
        if (!std::all_of(e.begin(), e.end(), [&](int v) { return in[static_cast<std::size_t>(v)]; }))
            throw InvalidArgument("selected edge " + std::to_string(i) + " not inside selected vertices");
        kept.push_back(e);
    }
    return restrict(h, spec.vertices, std::move(kept));
}

std::vector<int> supportOf(const Hypergraph& h, std::span<const std::size_t> edgeIndices)
{
    std::vector<char> in(static_cast<std::size_t>(h.n()), 0);
    for (auto i : edgeIndices)
        for (int v : h.edge(i))
            in[static_cast<std::size_t>(v)] = 1;
    std::vector<int> out;
    for (int v = 0; v < h.n(); ++v)
        if (in[static_cast<std::size_t>(v)])
            out.push_back(v);
    return out;
}

Hypergraph permuted(const Hypergraph& h, const Permutation& pi)
{
    if (pi.size() != h.n())
        throw InvalidArgument("permutation size differs from vertex count");
    std::vector<Edge> edges;
    edges.reserve(h.edgeCount());
    for (const auto& e : h.edges()) {
        Edge img;
        img.reserve(e.size());
        for (int v : e)
            img.push_back(pi(v));
        edges.push_back(std::move(img));
    }
    return {h.n(), std::move(edges), h.uniformity()};
}

bool isAutomorphism(const Hypergraph& h, const Permutation& pi)
{
    if (pi.size() != h.n())
        return false;
    Edge img;
    for (const auto& e : h.edges()) {
        img.clear();
        for (int v : e)
            img.push_back(pi(v));
        std::sort(img.begin(), img.end());
        if (!h.hasEdge(img))
            return false;
    }
    return true;
}

} // namespace asym
