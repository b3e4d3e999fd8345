#include "asym/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <random>

#include "asym/autom.hpp"
#include "asym/error.hpp"
#include "parallel.hpp"

namespace asym {

namespace {

constexpr std::array<std::pair<Property, std::string_view>, 4> kPropertyNames{{
    {Property::Asymmetric, "asymmetric"},
    {Property::MinimalAsymmetric, "minimal-asymmetric"},
    {Property::StronglyMinimalAsymmetric, "strong-minimal"},
    {Property::MinimalInvolutionFree, "minimal-involution-free"},
}};

using Clock = std::chrono::steady_clock;

std::uint64_t splitmix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::vector<std::size_t> maskToEdges(std::uint64_t mask)
{
    std::vector<std::size_t> out;
    while (mask) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

std::vector<int> maskToVertices(std::uint64_t mask)
{
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

/// Support of an edge selection plus a cheap symmetry certificate: two
/// vertices lying in exactly the same selected edges swap freely.
struct Support {
    std::vector<int> vertices;
    bool twins = false;
};

Support analyse(const Hypergraph& h, std::span<const std::size_t> sel)
{
    std::vector<std::uint64_t> sig(static_cast<std::size_t>(h.n()), 0);
    std::vector<char> covered(static_cast<std::size_t>(h.n()), 0);
    for (auto e : sel)
        for (int v : h.edge(e)) {
            sig[static_cast<std::size_t>(v)] ^= splitmix(e + 1);
            covered[static_cast<std::size_t>(v)] = 1;
        }
    Support s;
    for (int v = 0; v < h.n(); ++v)
        if (covered[static_cast<std::size_t>(v)])
            s.vertices.push_back(v);
    std::vector<int> bySig = s.vertices;
    std::sort(bySig.begin(), bySig.end(), [&](int a, int b) { return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)]; });
    auto contains = [&](std::size_t e, int v) {
        const auto& ed = h.edge(e);
        return std::binary_search(ed.begin(), ed.end(), v);
    };
    for (std::size_t i = 1; i < bySig.size() && !s.twins; ++i) {
        const int a = bySig[i - 1], b = bySig[i];
        if (sig[static_cast<std::size_t>(a)] != sig[static_cast<std::size_t>(b)])
            continue;
        s.twins = std::all_of(sel.begin(), sel.end(), [&](std::size_t e) { return contains(e, a) == contains(e, b); });
    }
    return s;
}

Hypergraph supportGraph(const Hypergraph& h, const std::vector<int>& vertices, std::span<const std::size_t> sel)
{
    return subFromSpec(h, SubgraphSpec{vertices, {sel.begin(), sel.end()}}).graph;
}

int firstOutside(const std::vector<int>& sorted, int n)
{
    for (int v = 0; v < n; ++v)
        if (!std::binary_search(sorted.begin(), sorted.end(), v))
            return v;
    return -1;
}

std::vector<int> withVertex(std::vector<int> s, int v)
{
    s.insert(std::upper_bound(s.begin(), s.end(), v), v);
    return s;
}

/// Vertex set of a violating sub-hypergraph with edge selection `sel`, if any.
using Violation = std::function<std::optional<std::vector<int>>(const std::vector<std::size_t>&)>;

Violation strongViolation(const Hypergraph& h)
{
    return [&h](const std::vector<std::size_t>& sel) -> std::optional<std::vector<int>> {
        if (sel.empty())
            return std::nullopt;
        const int n = h.n();
        auto s = analyse(h, sel);
        const int size = static_cast<int>(s.vertices.size());
        const bool bare = size > 1 && size < n;
        const bool padded = size + 1 > 1 && size + 1 < n;
        if ((!bare && !padded) || s.twins)
            return std::nullopt;
        if (!isAsymmetric(supportGraph(h, s.vertices, sel)))
            return std::nullopt;
        if (bare)
            return s.vertices;
        return withVertex(s.vertices, firstOutside(s.vertices, n));
    };
}

Violation involutionViolation(const Hypergraph& h)
{
    return [&h](const std::vector<std::size_t>& sel) -> std::optional<std::vector<int>> {
        if (sel.empty())
            return std::nullopt;
        const int n = h.n();
        const bool all = sel.size() == h.edgeCount();
        auto s = analyse(h, sel);
        const int size = static_cast<int>(s.vertices.size());
        const bool bare = size >= 2 && !(all && size == n);
        const bool padded = size + 1 <= n && size + 1 >= 2 && !(all && size + 1 == n);
        if ((!bare && !padded) || s.twins)
            return std::nullopt;
        if (hasInvolution(supportGraph(h, s.vertices, sel)))
            return std::nullopt;
        if (bare)
            return s.vertices;
        return withVertex(s.vertices, firstOutside(s.vertices, n));
    };
}

/// Greedily drops edges while the violation persists.
SubgraphSpec minimizeEdges(std::vector<std::size_t> sel, std::vector<int> vertices, const Violation& violates)
{
    for (std::size_t i = 0; i < sel.size();) {
        auto fewer = sel;
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
        if (auto vs = violates(fewer)) {
            sel = std::move(fewer);
            vertices = std::move(*vs);
        } else {
            ++i;
        }
    }
    return {std::move(vertices), std::move(sel)};
}

Mode chooseMode(const VerifyOptions& opt, std::size_t edges)
{
    Mode mode = opt.mode ? *opt.mode : (edges <= kAutoExhaustiveEdges ? Mode::Exhaustive : Mode::Sampled);
    if (mode == Mode::Exhaustive && edges > kMaxExhaustiveEdges)
        throw GuardError("exhaustive scan over 2^" + std::to_string(edges) + " edge subsets refused; use sampled mode");
    if (mode == Mode::Sampled && !opt.seed) {
        if (!opt.mode)
            throw GuardError("exhaustive scan over 2^" + std::to_string(edges)
                             + " edge subsets refused; sampled mode needs a seed");
        throw InvalidArgument("sampled mode requires a seed");
    }
    return mode;
}

std::vector<std::vector<std::size_t>> drawSamples(std::size_t m, std::uint64_t count, std::uint64_t seed, bool stratified,
                                                  const std::function<bool(const std::vector<std::size_t>&)>& admissible)
{
    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> order(m);
    std::size_t rejectRun = 0;
    while (out.size() < count && rejectRun < 10000) {
        std::vector<std::size_t> sel;
        if (stratified && m > 0) {
            std::uniform_int_distribution<std::size_t> size(1, m);
            const auto want = size(rng);
            std::iota(order.begin(), order.end(), 0);
            for (std::size_t i = 0; i < want; ++i) {
                std::uniform_int_distribution<std::size_t> pick(i, m - 1);
                std::swap(order[i], order[pick(rng)]);
            }
            sel.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(want));
            std::sort(sel.begin(), sel.end());
        } else {
            for (std::size_t e = 0; e < m; ++e)
                if (rng() & 1u)
                    sel.push_back(e);
        }
        if (!admissible(sel)) {
            ++rejectRun;
            continue;
        }
        rejectRun = 0;
        out.push_back(std::move(sel));
    }
    return out;
}

/// Shared driver for the edge-subset properties.
VerificationReport scanEdgeSubsets(const Hypergraph& h, Property property, const VerifyOptions& opt,
                                   const Violation& violates,
                                   const std::function<bool(const std::vector<std::size_t>&)>& admissible)
{
    VerificationReport r;
    r.property = property;
    const auto m = h.edgeCount();
    r.mode = chooseMode(opt, m);

    auto fail = [&](std::vector<std::size_t> sel, std::vector<int> vertices) {
        r.holds = false;
        r.witness = minimizeEdges(std::move(sel), std::move(vertices), violates);
    };

    if (r.mode == Mode::Exhaustive) {
        const std::uint64_t end = std::uint64_t{1} << m;
        auto hit = detail::firstMatch(1, end, opt.workers,
                                      [&](std::uint64_t mask) { return violates(maskToEdges(mask)).has_value(); });
        if (hit) {
            r.samples = *hit;
            auto sel = maskToEdges(*hit);
            fail(sel, *violates(sel));
        } else {
            r.samples = end - 1;
        }
        return r;
    }

    r.seed = *opt.seed;
    auto samples = drawSamples(m, opt.samples, r.seed, opt.stratified, admissible);
    auto hit = detail::firstMatch(0, samples.size(), opt.workers,
                                  [&](std::uint64_t i) { return violates(samples[i]).has_value(); });
    if (hit) {
        r.samples = *hit + 1;
        fail(samples[*hit], *violates(samples[*hit]));
    } else {
        r.samples = samples.size();
    }
    return r;
}

SubgraphSpec fullSpec(const Hypergraph& h)
{
    SubgraphSpec s;
    s.vertices.resize(static_cast<std::size_t>(h.n()));
    std::iota(s.vertices.begin(), s.vertices.end(), 0);
    s.edgeIndices.resize(h.edgeCount());
    std::iota(s.edgeIndices.begin(), s.edgeIndices.end(), std::size_t{0});
    return s;
}

std::vector<std::size_t> edgesInside(const Hypergraph& h, const std::vector<int>& sortedVertices)
{
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < h.edgeCount(); ++e) {
        const auto& ed = h.edge(e);
        if (std::includes(sortedVertices.begin(), sortedVertices.end(), ed.begin(), ed.end()))
            out.push_back(e);
    }
    return out;
}

/// Induced sub-hypergraph on `vs` is asymmetric and non-trivial.
bool inducedAsymmetric(const Hypergraph& h, const std::vector<int>& vs)
{
    const int size = static_cast<int>(vs.size());
    if (size <= 1 || size >= h.n())
        return false;
    auto sel = edgesInside(h, vs);
    auto s = analyse(h, sel);
    if (size - static_cast<int>(s.vertices.size()) >= 2 || s.twins)
        return false;
    return isAsymmetric(inducedSub(h, vs).graph);
}

void stamp(VerificationReport& r, Clock::time_point start)
{
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

} // namespace

std::string_view propertyName(Property p)
{
    for (auto [prop, name] : kPropertyNames)
        if (prop == p)
            return name;
    return "?";
}

std::optional<Property> parseProperty(std::string_view name)
{
    for (auto [prop, n] : kPropertyNames)
        if (n == name)
            return prop;
    return std::nullopt;
}

std::string_view modeName(Mode m)
{
    return m == Mode::Exhaustive ? "exhaustive" : "sampled";
}

VerificationReport verifyAsymmetric(const Hypergraph& h)
{
    const auto start = Clock::now();
    VerificationReport r;
    r.property = Property::Asymmetric;
    r.samples = 1;
    if (auto g = nonIdentityAutomorphism(h)) {
        r.holds = false;
        r.witness = fullSpec(h);
        r.perm = std::move(g);
    }
    stamp(r, start);
    return r;
}

VerificationReport verifyMinimalAsymmetric(const Hypergraph& h, const VerifyOptions& opt)
{
    const auto start = Clock::now();
    auto r = verifyAsymmetric(h);
    r.property = Property::MinimalAsymmetric;
    if (!r.holds)
        return r;

    const int n = h.n();
    const auto m = h.edgeCount();
    const bool byVertices = n <= static_cast<int>(m) || m > kMaxExhaustiveEdges;
    if (byVertices && n > kMaxExhaustiveVertices)
        throw GuardError("minimal asymmetry scan refused: n = " + std::to_string(n) + " and m = " + std::to_string(m));

    std::optional<std::vector<int>> found;
    if (byVertices) {
        const std::uint64_t end = std::uint64_t{1} << n;
        auto hit = detail::firstMatch(1, end, opt.workers,
                                      [&](std::uint64_t mask) { return inducedAsymmetric(h, maskToVertices(mask)); });
        r.samples = hit ? *hit : end - 1;
        if (hit)
            found = maskToVertices(*hit);
    } else {
        // Induced sub-hypergraphs with at most one isolated vertex are the
        // supports of edge-closed selections, optionally plus one vertex that
        // closes no further edge.
        auto candidate = [&](const std::vector<std::size_t>& sel) -> std::optional<std::vector<int>> {
            auto s = analyse(h, sel);
            if (edgesInside(h, s.vertices).size() != sel.size() || s.twins)
                return std::nullopt;
            const int size = static_cast<int>(s.vertices.size());
            std::optional<std::vector<int>> xs;
            if (size > 1 && size < n) {
                xs = s.vertices;
            } else if (size + 1 > 1 && size + 1 < n) {
                for (int v = 0; v < n && !xs; ++v) {
                    if (std::binary_search(s.vertices.begin(), s.vertices.end(), v))
                        continue;
                    auto with = withVertex(s.vertices, v);
                    if (edgesInside(h, with).size() == sel.size())
                        xs = std::move(with);
                }
            }
            if (!xs || !isAsymmetric(supportGraph(h, s.vertices, sel)))
                return std::nullopt;
            return xs;
        };
        const std::uint64_t end = std::uint64_t{1} << m;
        auto hit = detail::firstMatch(1, end, opt.workers,
                                      [&](std::uint64_t mask) { return candidate(maskToEdges(mask)).has_value(); });
        r.samples = hit ? *hit : end - 1;
        if (hit)
            found = candidate(maskToEdges(*hit));
    }

    if (found) {
        auto vs = std::move(*found);
        for (std::size_t i = 0; i < vs.size();) {
            auto fewer = vs;
            fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
            if (inducedAsymmetric(h, fewer))
                vs = std::move(fewer);
            else
                ++i;
        }
        r.holds = false;
        r.witness = SubgraphSpec{vs, edgesInside(h, vs)};
    }
    stamp(r, start);
    return r;
}

VerificationReport verifyStronglyMinimal(const Hypergraph& h, const VerifyOptions& opt)
{
    const auto start = Clock::now();
    auto whole = verifyAsymmetric(h);
    if (!whole.holds) {
        whole.property = Property::StronglyMinimalAsymmetric;
        stamp(whole, start);
        return whole;
    }
    auto violates = strongViolation(h);
    const int n = h.n();
    auto r = scanEdgeSubsets(h, Property::StronglyMinimalAsymmetric, opt, violates,
                             [&](const std::vector<std::size_t>& sel) {
                                 if (sel.empty())
                                     return false;
                                 const int size = static_cast<int>(supportOf(h, sel).size());
                                 return (size > 1 && size < n) || (size + 1 > 1 && size + 1 < n);
                             });
    stamp(r, start);
    return r;
}

VerificationReport verifyMinimalInvolutionFree(const Hypergraph& h, const VerifyOptions& opt)
{
    const auto start = Clock::now();
    VerificationReport r;
    r.property = Property::MinimalInvolutionFree;
    if (auto inv = hasInvolution(h)) {
        r.holds = false;
        r.samples = 1;
        r.witness = fullSpec(h);
        r.perm = std::move(inv);
        stamp(r, start);
        return r;
    }
    auto violates = involutionViolation(h);
    const int n = h.n();
    const auto m = h.edgeCount();
    r = scanEdgeSubsets(h, Property::MinimalInvolutionFree, opt, violates,
                        [&](const std::vector<std::size_t>& sel) {
                            if (sel.empty())
                                return false;
                            const bool all = sel.size() == m;
                            const int size = static_cast<int>(supportOf(h, sel).size());
                            return (size >= 2 && !(all && size == n)) || (size + 1 <= n && !(all && size + 1 == n));
                        });
    stamp(r, start);
    return r;
}

VerificationReport verify(const Hypergraph& h, Property p, const VerifyOptions& opt)
{
    switch (p) {
    case Property::Asymmetric:
        return verifyAsymmetric(h);
    case Property::MinimalAsymmetric:
        return verifyMinimalAsymmetric(h, opt);
    case Property::StronglyMinimalAsymmetric:
        return verifyStronglyMinimal(h, opt);
    case Property::MinimalInvolutionFree:
        return verifyMinimalInvolutionFree(h, opt);
    }
    throw InvalidArgument("unknown property");
}

VerificationReport verifyMinimalAsymmetricRel(const RelationalStructure& rel, const VerifyOptions& opt)
{
    const auto start = Clock::now();
    VerificationReport r;
    r.property = Property::MinimalAsymmetric;
    r.samples = 1;
    auto whole = automorphismsRel(rel);
    if (!whole.isAsymmetric) {
        r.holds = false;
        r.witness = SubgraphSpec{};
        r.witness->vertices.resize(static_cast<std::size_t>(rel.n()));
        std::iota(r.witness->vertices.begin(), r.witness->vertices.end(), 0);
        r.witness->edgeIndices.resize(rel.tupleCount());
        std::iota(r.witness->edgeIndices.begin(), r.witness->edgeIndices.end(), std::size_t{0});
        r.perm = whole.generators.front();
        stamp(r, start);
        return r;
    }
    const int n = rel.n();
    if (n > kMaxExhaustiveVertices)
        throw GuardError("vertex-subset scan refused for n = " + std::to_string(n));

    auto asymmetricPart = [&](std::uint64_t mask) {
        const int size = std::popcount(mask);
        if (size <= 1 || size >= n)
            return false;
        std::uint64_t covered = 0;
        for (const auto& t : rel.tuples()) {
            std::uint64_t tm = 0;
            for (int v : t)
                tm |= std::uint64_t{1} << v;
            if ((tm & mask) == tm)
                covered |= tm;
        }
        if (size - std::popcount(covered) >= 2)
            return false;
        return isAsymmetricRel(inducedSubRel(rel, maskToVertices(mask)));
    };
    const std::uint64_t end = std::uint64_t{1} << n;
    auto hit = detail::firstMatch(1, end, opt.workers, asymmetricPart);
    r.samples = hit ? *hit : end - 1;
    if (hit) {
        r.holds = false;
        auto vs = maskToVertices(*hit);
        SubgraphSpec spec{vs, {}};
        for (std::size_t i = 0; i < rel.tupleCount(); ++i) {
            const auto& t = rel.tuples()[i];
            if (std::all_of(t.begin(), t.end(), [&](int v) { return std::binary_search(vs.begin(), vs.end(), v); }))
                spec.edgeIndices.push_back(i);
        }
        r.witness = std::move(spec);
    }
    stamp(r, start);
    return r;
}

CriticalResult isCriticalAsymmetric(const RelationalStructure& r)
{
    if (r.arity() != 2)
        throw InvalidArgument("critical asymmetry is defined for binary relations");
    if (r.n() < 2)
        throw InvalidArgument("critical asymmetry needs at least two vertices");
    if (!isAsymmetricRel(r))
        throw InvalidArgument("relation is not asymmetric");
    CriticalResult out;
    for (int x = 0; x < r.n(); ++x) {
        if (r.n() - 1 == 1)
            continue;
        if (isAsymmetricRel(deleteVertex(r, x))) {
            out.critical = false;
            out.witness = x;
            break;
        }
    }
    return out;
}

} // namespace asym
