#include "asym/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

#include "asym/error.hpp"
#include "asym/search.hpp"

namespace asym {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 11> kFamilyNames{{
    {Family::Gkt, "gkt"},
    {Family::GktCirc, "gkt-circ"},
    {Family::Gk, "gk"},
    {Family::GkStar, "gk-star"},
    {Family::Tilde, "tilde-gk"},
    {Family::Gks, "gks"},
    {Family::Figure2, "figure2"},
    {Family::AsymWitness2Graph, "asym-witness"},
    {Family::Hcirc, "hcirc"},
    {Family::R3t, "r3t"},
    {Family::SingleArc, "single-arc"},
}};

std::string sup(int j, int i) { return "v^" + std::to_string(j) + "_" + std::to_string(i); }

/// Vertex indices for the G_{k,t} ring: u_i first, then v^j_i row by row.
struct RingIndex {
    int k, ring;
    int u(int i) const { return mod(i); }
    int v(int j, int i) const { return ring * (1 + j) + mod(i); }
    int mod(int i) const { return ((i % ring) + ring) % ring; }
};

LabeledHypergraph makeGkt(int k, int t, bool circ)
{
    checkParams({circ ? Family::GktCirc : Family::Gkt, k, t, 0, 0});
    const int ring = t * k;
    const RingIndex ix{k, ring};
    const int base = ring * (k - 1);

    LabeledHypergraph out;
    out.labels.resize(static_cast<std::size_t>(base + (circ ? 1 : 0)));
    for (int i = 0; i < ring; ++i) {
        out.labels[static_cast<std::size_t>(ix.u(i))] = "u_" + std::to_string(i);
        for (int j = 0; j <= k - 3; ++j)
            out.labels[static_cast<std::size_t>(ix.v(j, i))] = sup(j, i);
    }

    std::vector<Edge> edges;
    for (int i = 0; i < ring; ++i) {
        Edge e{ix.v(0, i), ix.u(i)};
        for (int j = 1; j <= k - 3; ++j)
            e.push_back(ix.v(j, i));
        e.push_back(ix.v(0, i + 1));
        edges.push_back(std::move(e));
    }
    for (int j = 1; j <= k - 3; ++j) {
        for (int s = 0; s < t; ++s) {
            const int i = j + s * k - 1;
            Edge e;
            for (int d = 0; d < k; ++d)
                e.push_back(ix.v(j, i + d));
            edges.push_back(std::move(e));
        }
    }
    if (circ) {
        const int x = base;
        out.labels[static_cast<std::size_t>(x)] = "x";
        Edge e{ix.v(0, 0), ix.u(0)};
        for (int j = 1; j <= k - 3; ++j)
            e.push_back(ix.v(j, 0));
        e.push_back(x);
        edges.push_back(std::move(e));
    }
    out.graph = Hypergraph(static_cast<int>(out.labels.size()), std::move(edges), k);
    return out;
}

/// Edges M_1..M_k of G_k on local indices 0..2k-2, offset by `at`.
std::vector<Edge> intervalEdges(int k, int at)
{
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        Edge e;
        for (int d = 0; d < k; ++d)
            e.push_back(at + i + d);
        edges.push_back(std::move(e));
    }
    return edges;
}

Edge starEdge(int k, int at)
{
    Edge e{at + 2 * k - 1};
    for (int i = 0; i < k - 2; ++i)
        e.push_back(at + i);
    e.push_back(at + k + 1);
    return e;
}

std::string coordName(const std::vector<int>& coord)
{
    std::string s = "G(";
    for (std::size_t i = 0; i < coord.size(); ++i)
        s += (i ? "," : "") + std::to_string(coord[i]);
    return s + ")";
}

} // namespace

int LabeledHypergraph::index(std::string_view label) const
{
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
        throw InvalidArgument("no vertex labeled " + std::string(label));
    return static_cast<int>(it - labels.begin());
}

std::string_view familyName(Family f)
{
    for (auto [fam, name] : kFamilyNames)
        if (fam == f)
            return name;
    return "?";
}

std::optional<Family> parseFamily(std::string_view name)
{
    for (auto [fam, n] : kFamilyNames)
        if (n == name)
            return fam;
    return std::nullopt;
}

bool isRelationalFamily(Family f)
{
    return f == Family::Hcirc || f == Family::R3t || f == Family::SingleArc;
}

void checkParams(const FamilyParams& p)
{
    switch (p.family) {
    case Family::Gkt:
    case Family::GktCirc:
        if (p.k < 3)
            throw InvalidArgument("k >= 3 required for " + std::string(familyName(p.family)));
        if (p.t < p.k - 2)
            throw InvalidArgument("t >= k-2 required for " + std::string(familyName(p.family)));
        break;
    case Family::Gk:
    case Family::GkStar:
    case Family::Tilde:
        if (p.k < 4)
            throw InvalidArgument("k >= 4 required for " + std::string(familyName(p.family)));
        break;
    case Family::Gks:
        if (p.k < 6)
            throw InvalidArgument("k >= 6 required for gks");
        if (p.s < 0)
            throw InvalidArgument("s >= 0 required for gks");
        break;
    case Family::AsymWitness2Graph:
        if (p.n < 6)
            throw InvalidArgument("n >= 6 required: no asymmetric graph has fewer than 6 vertices");
        break;
    case Family::R3t:
        if (p.t < 1)
            throw InvalidArgument("t >= 1 required for r3t");
        break;
    case Family::Hcirc:
        if (p.k < 4)
            throw InvalidArgument("k >= 4 required for hcirc (k = 3 is r3t)");
        if (p.t < 1)
            throw InvalidArgument("t >= 1 required for hcirc");
        break;
    case Family::Figure2:
    case Family::SingleArc:
        break;
    }
}

LabeledHypergraph genGkt(int k, int t) { return makeGkt(k, t, false); }

LabeledHypergraph genGktCirc(int k, int t) { return makeGkt(k, t, true); }

LabeledHypergraph genGk(int k)
{
    checkParams({Family::Gk, k, 0, 0, 0});
    LabeledHypergraph out;
    for (int i = 1; i <= 2 * k - 1; ++i)
        out.labels.push_back("v_" + std::to_string(i));
    out.graph = Hypergraph(2 * k - 1, intervalEdges(k, 0), k);
    return out;
}

LabeledHypergraph genGkStar(int k)
{
    checkParams({Family::GkStar, k, 0, 0, 0});
    auto out = genGk(k);
    out.labels.push_back("x");
    auto edges = out.graph.edges();
    edges.push_back(starEdge(k, 0));
    out.graph = Hypergraph(2 * k, std::move(edges), k);
    return out;
}

LabeledHypergraph tilde(const LabeledHypergraph& h)
{
    LabeledHypergraph out;
    out.labels = h.labels;
    std::vector<Edge> edges;
    int next = h.graph.n();
    for (std::size_t i = 0; i < h.graph.edgeCount(); ++i) {
        Edge e = h.graph.edge(i);
        e.push_back(next++);
        e.push_back(next++);
        out.labels.push_back("a_" + std::to_string(i + 1));
        out.labels.push_back("b_" + std::to_string(i + 1));
        edges.push_back(std::move(e));
    }
    std::optional<int> k;
    if (auto hk = h.graph.uniformity())
        k = *hk + 2;
    out.graph = Hypergraph(next, std::move(edges), k);
    return out;
}

LabeledHypergraph genGks(int k, int s)
{
    checkParams({Family::Gks, k, 0, s, 0});
    const int small = k - 2;

    // layers[l-1] lists the coordinates (i_l, ..., i_{s+1}) of layer-l copies,
    // lexicographically.
    std::vector<std::vector<std::vector<int>>> layers(static_cast<std::size_t>(s + 1));
    for (int i = 1; i <= k - 1; ++i)
        layers[static_cast<std::size_t>(s)].push_back({i});
    for (int l = s; l >= 1; --l) {
        for (int i = 1; i <= small; ++i)
            for (const auto& parent : layers[static_cast<std::size_t>(l)]) {
                std::vector<int> c{i};
                c.insert(c.end(), parent.begin(), parent.end());
                layers[static_cast<std::size_t>(l - 1)].push_back(std::move(c));
            }
        std::sort(layers[static_cast<std::size_t>(l - 1)].begin(), layers[static_cast<std::size_t>(l - 1)].end());
    }

    LabeledHypergraph out;
    std::map<std::vector<int>, int> offset;
    std::vector<Edge> edges;

    // Tail pair of a copy: v_{2q-2}, v_{2q-1} of G_q.
    auto tail = [&](const std::vector<int>& coord, int q) {
        const int at = offset.at(coord);
        return std::pair{at + 2 * q - 3, at + 2 * q - 2};
    };

    for (std::size_t l = 0; l < layers.size(); ++l) {
        const int q = l == 0 ? k : small;
        for (const auto& coord : layers[l]) {
            const int at = static_cast<int>(out.labels.size());
            offset[coord] = at;
            for (int i = 1; i <= 2 * q - 1; ++i)
                out.labels.push_back(coordName(coord) + ".v_" + std::to_string(i));
            auto local = intervalEdges(q, at);
            if (l > 0) {
                for (int i = 1; i <= small; ++i) {
                    std::vector<int> child{i};
                    child.insert(child.end(), coord.begin(), coord.end());
                    auto [a, b] = tail(child, l == 1 ? k : small);
                    local[static_cast<std::size_t>(i - 1)].push_back(a);
                    local[static_cast<std::size_t>(i - 1)].push_back(b);
                }
            }
            edges.insert(edges.end(), local.begin(), local.end());
        }
    }

    const int top = static_cast<int>(out.labels.size());
    for (int i = 1; i <= 2 * small - 1; ++i)
        out.labels.push_back("G*.v_" + std::to_string(i));
    out.labels.push_back("G*.x");
    auto topEdges = intervalEdges(small, top);
    topEdges.push_back(starEdge(small, top));
    for (int j = 1; j <= k - 1; ++j) {
        auto [a, b] = tail({j}, s == 0 ? k : small);
        topEdges[static_cast<std::size_t>(j - 1)].push_back(a);
        topEdges[static_cast<std::size_t>(j - 1)].push_back(b);
    }
    edges.insert(edges.end(), topEdges.begin(), topEdges.end());

    out.graph = Hypergraph(static_cast<int>(out.labels.size()), std::move(edges), k);
    return out;
}

LabeledHypergraph genFigure2()
{
    LabeledHypergraph out;
    for (int i = 1; i <= 6; ++i)
        out.labels.push_back("v_" + std::to_string(i));
    out.graph = Hypergraph(6, {{0, 1, 2}, {1, 3, 4}, {1, 3, 5}, {2, 3, 4}}, 3);
    return out;
}

LabeledHypergraph genAsymWitness2Graph(int n)
{
    checkParams({Family::AsymWitness2Graph, 0, 0, 0, n});
    static std::mutex mutex;
    static std::map<int, Hypergraph> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end())
            return unlabeled(it->second);
    }
    auto w = fewestEdgeAsymmetric(2, n);
    if (!w)
        throw InvalidArgument("no asymmetric 2-graph of order " + std::to_string(n));
    std::lock_guard lock(mutex);
    cache.emplace(n, *w);
    return unlabeled(*w);
}

LabeledHypergraph unlabeled(Hypergraph h)
{
    LabeledHypergraph out;
    for (int i = 0; i < h.n(); ++i)
        out.labels.push_back(std::to_string(i));
    out.graph = std::move(h);
    return out;
}

LabeledHypergraph generate(const FamilyParams& p)
{
    checkParams(p);
    switch (p.family) {
    case Family::Gkt:
        return genGkt(p.k, p.t);
    case Family::GktCirc:
        return genGktCirc(p.k, p.t);
    case Family::Gk:
        return genGk(p.k);
    case Family::GkStar:
        return genGkStar(p.k);
    case Family::Tilde:
        return tilde(genGk(p.k));
    case Family::Gks:
        return genGks(p.k, p.s);
    case Family::Figure2:
        return genFigure2();
    case Family::AsymWitness2Graph:
        return genAsymWitness2Graph(p.n);
    default:
        throw InvalidArgument(std::string(familyName(p.family)) + " is a relational family");
    }
}

RelationalStructure generateRelation(const FamilyParams& p)
{
    checkParams(p);
    switch (p.family) {
    case Family::R3t:
        return genR3t(p.t);
    case Family::Hcirc:
        return genHCirc(p.k, p.t);
    case Family::SingleArc:
        return genSingleArc();
    default:
        throw InvalidArgument(std::string(familyName(p.family)) + " is a hypergraph family");
    }
}

} // namespace asym
