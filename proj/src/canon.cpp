#include "asym/canon.hpp"

#include <algorithm>
#include <limits>

#include "asym/perm_group.hpp"
#include "canon_engine.hpp"

namespace asym {
namespace detail {

namespace {

constexpr std::size_t kNoJump = std::numeric_limits<std::size_t>::max();

struct Leaf {
    std::vector<Trace> traces;
    std::vector<int> path;
    std::vector<int> lab;
    std::vector<int> cert;
};

std::size_t commonPrefix(const std::vector<int>& a, const std::vector<int>& b)
{
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i])
        ++i;
    return i;
}

std::vector<int> makeCertificate(const Incidence& inc, const std::vector<int>& lab)
{
    std::vector<int> pos(lab.size());
    for (std::size_t p = 0; p < lab.size(); ++p)
        pos[static_cast<std::size_t>(lab[p])] = static_cast<int>(p);

    std::vector<std::vector<int>> blocks;
    blocks.reserve(inc.blocks.size());
    for (const auto& b : inc.blocks) {
        std::vector<int> img;
        img.reserve(b.size());
        for (int v : b)
            img.push_back(pos[static_cast<std::size_t>(v)]);
        if (!inc.ordered)
            std::sort(img.begin(), img.end());
        blocks.push_back(std::move(img));
    }
    std::sort(blocks.begin(), blocks.end());

    std::vector<int> cert;
    cert.push_back(inc.n);
    cert.push_back(inc.ordered ? 1 : 0);
    for (int v : lab)
        cert.push_back(inc.seed[static_cast<std::size_t>(v)]);
    cert.push_back(static_cast<int>(blocks.size()));
    for (const auto& b : blocks) {
        cert.push_back(static_cast<int>(b.size()));
        cert.insert(cert.end(), b.begin(), b.end());
    }
    return cert;
}

class CanonSearcher {
public:
    explicit CanonSearcher(const Incidence& inc) : inc_(inc) {}

    CanonResult run()
    {
        auto color = seedColoring(inc_);
        traces_.push_back(refine(inc_, color));
        visit(color);
        CanonResult r;
        r.labeling.resize(best_.lab.size());
        for (std::size_t p = 0; p < best_.lab.size(); ++p)
            r.labeling[static_cast<std::size_t>(best_.lab[p])] = static_cast<int>(p);
        r.certificate = std::move(best_.cert);
        return r;
    }

private:
    /// Lexicographic comparison of the current trace prefix with a leaf's.
    int comparePrefix(const Leaf& l) const
    {
        const auto len = std::min(traces_.size(), l.traces.size());
        for (std::size_t i = 0; i < len; ++i) {
            if (traces_[i] < l.traces[i])
                return -1;
            if (traces_[i] > l.traces[i])
                return 1;
        }
        if (traces_.size() == l.traces.size())
            return 0;
        return traces_.size() < l.traces.size() ? -1 : 1;
    }

    /// Returns the depth at which the search should resume, or kNoJump.
    std::size_t visit(const Coloring& color)
    {
        const auto depth = path_.size();
        const int cell = targetCell(color);
        if (haveLeaf_ && cell >= 0 && prefixBelow(best_))
            return kNoJump;
        if (cell < 0)
            return leaf(color);

        for (int c : cellMembers(color, cell)) {
            if (prunedByOrbit(c))
                continue;
            Coloring child = color;
            individualize(child, c);
            path_.push_back(c);
            traces_.push_back(refine(inc_, child));
            const auto jump = visit(child);
            traces_.pop_back();
            path_.pop_back();
            if (jump < depth)
                return jump;
        }
        return kNoJump;
    }

    /// True when the current prefix is already smaller than the same-length
    /// prefix of `l`, so no leaf below can beat it.
    bool prefixBelow(const Leaf& l) const
    {
        const auto len = std::min(traces_.size(), l.traces.size());
        for (std::size_t i = 0; i < len; ++i) {
            if (traces_[i] != l.traces[i])
                return traces_[i] < l.traces[i];
        }
        return false;
    }

    std::size_t leaf(const Coloring& color)
    {
        Leaf l{traces_, path_, leafLabeling(color), {}};
        l.cert = makeCertificate(inc_, l.lab);
        if (!haveLeaf_) {
            haveLeaf_ = true;
            first_ = l;
            best_ = std::move(l);
            return kNoJump;
        }
        if (comparePrefix(first_) == 0 && l.cert == first_.cert) {
            recordAutomorphism(first_.lab, l.lab);
            return commonPrefix(path_, first_.path);
        }
        const int vsBest = comparePrefix(best_);
        if (vsBest == 0 && l.cert == best_.cert) {
            recordAutomorphism(best_.lab, l.lab);
            return commonPrefix(path_, best_.path);
        }
        if (vsBest > 0 || (vsBest == 0 && l.cert > best_.cert))
            best_ = std::move(l);
        return kNoJump;
    }

    void recordAutomorphism(const std::vector<int>& from, const std::vector<int>& to)
    {
        std::vector<int> img(from.size());
        for (std::size_t p = 0; p < from.size(); ++p)
            img[static_cast<std::size_t>(from[p])] = to[p];
        autos_.emplace_back(std::move(img));
    }

    /// c is skipped when an automorphism fixing the current path maps a
    /// smaller candidate onto it.
    bool prunedByOrbit(int c) const
    {
        if (autos_.empty())
            return false;
        std::vector<Permutation> fixing;
        for (const auto& g : autos_)
            if (std::all_of(path_.begin(), path_.end(), [&](int v) { return g(v) == v; }))
                fixing.push_back(g);
        if (fixing.empty())
            return false;
        return orbitRepresentatives(inc_.n, fixing)[static_cast<std::size_t>(c)] != c;
    }

    const Incidence& inc_;
    std::vector<int> path_;
    std::vector<Trace> traces_;
    bool haveLeaf_ = false;
    Leaf first_, best_;
    std::vector<Permutation> autos_;
};

} // namespace

CanonResult canonicalize(const Incidence& inc)
{
    return CanonSearcher(inc).run();
}

std::string certificateKey(const std::vector<int>& cert)
{
    std::string key;
    key.reserve(cert.size() * 4);
    for (int x : cert) {
        const auto u = static_cast<std::uint32_t>(x);
        for (int s = 0; s < 32; s += 8)
            key.push_back(static_cast<char>((u >> s) & 0xffu));
    }
    return key;
}

} // namespace detail

CanonicalForm canonicalForm(const Hypergraph& h)
{
    auto inc = detail::Incidence::fromHypergraph(h);
    auto r = detail::canonicalize(inc);
    Permutation labeling(std::move(r.labeling));
    auto g = permuted(h, labeling);
    return {std::move(labeling), std::move(g), detail::certificateKey(r.certificate)};
}

std::string canonicalKey(const Hypergraph& h)
{
    auto inc = detail::Incidence::fromHypergraph(h);
    return detail::certificateKey(detail::canonicalize(inc).certificate);
}

} // namespace asym
