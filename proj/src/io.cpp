#include "asym/io.hpp"

#include <charconv>
#include <sstream>

#include "asym/error.hpp"

namespace asym {

namespace {

struct Line {
    std::size_t number;
    std::vector<long long> values;
};

/// Numeric lines of a document, comments and blanks dropped.
std::vector<Line> numericLines(std::string_view text)
{
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        const auto eol = text.find('\n');
        auto line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#')
            continue;
        Line l{number, {}};
        std::size_t i = first;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t') {
                ++i;
                continue;
            }
            long long v = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
            if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
                throw ParseError("line " + std::to_string(number) + ": expected integers");
            l.values.push_back(v);
            i = static_cast<std::size_t>(ptr - line.data());
        }
        out.push_back(std::move(l));
    }
    return out;
}

struct Header {
    int n, m, k;
};

Header readHeader(const std::vector<Line>& lines, const char* what)
{
    if (lines.empty())
        throw ParseError(std::string("empty ") + what + " document");
    const auto& h = lines.front();
    if (h.values.size() != 3)
        throw ParseError("line " + std::to_string(h.number) + ": header must be `n m k`");
    for (auto v : h.values)
        if (v < 0 || v > 1'000'000'000)
            throw ParseError("line " + std::to_string(h.number) + ": header values out of range");
    const Header hd{static_cast<int>(h.values[0]), static_cast<int>(h.values[1]), static_cast<int>(h.values[2])};
    if (lines.size() - 1 != static_cast<std::size_t>(hd.m))
        throw ParseError(std::string(what) + " header announces " + std::to_string(hd.m) + " lines, found "
                         + std::to_string(lines.size() - 1));
    return hd;
}

template <class Range>
void joinInts(std::ostringstream& os, const Range& r)
{
    bool first = true;
    for (auto v : r) {
        if (!first)
            os << ' ';
        os << v;
        first = false;
    }
    os << '\n';
}

std::vector<std::string_view> splitDocuments(std::string_view text)
{
    std::vector<std::string_view> docs;
    std::size_t start = 0, pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        const auto end = eol == std::string_view::npos ? text.size() : eol;
        auto line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line == "---") {
            docs.push_back(text.substr(start, pos - start));
            start = end + 1;
        }
        if (eol == std::string_view::npos)
            break;
        pos = eol + 1;
    }
    if (start < text.size())
        docs.push_back(text.substr(start));
    return docs;
}

std::string reportLine(const VerificationReport& r)
{
    std::ostringstream os;
    os << "# asymwb " << ASYM_VERSION << '\n';
    os << propertyName(r.property) << ' ' << (r.holds ? "true" : "false") << ' ' << modeName(r.mode) << ' '
       << r.samples << ' ' << r.seed << ' ' << r.elapsed.count() << '\n';
    return os.str();
}

std::string permLine(const VerificationReport& r)
{
    if (!r.perm)
        return {};
    std::ostringstream os;
    os << "perm";
    for (int v : r.perm->images())
        os << ' ' << v;
    os << '\n';
    return os.str();
}

std::string verticesLine(const SubgraphSpec& s)
{
    std::ostringstream os;
    os << "# vertices";
    for (int v : s.vertices)
        os << ' ' << v;
    os << '\n';
    return os.str();
}

} // namespace

std::string toHgf(const Hypergraph& h)
{
    std::ostringstream os;
    os << h.n() << ' ' << h.edgeCount() << ' ' << h.uniformity().value_or(0) << '\n';
    for (const auto& e : h.edges())
        joinInts(os, e);
    return os.str();
}

Hypergraph parseHgf(std::string_view text)
{
    auto lines = numericLines(text);
    const auto hd = readHeader(lines, "HGF");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        Edge e;
        for (auto v : l.values) {
            if (v < 0 || v >= hd.n)
                throw ParseError("line " + std::to_string(l.number) + ": vertex " + std::to_string(v) + " out of range");
            if (!e.empty() && v <= e.back())
                throw ParseError("line " + std::to_string(l.number) + ": vertex indices must ascend");
            e.push_back(static_cast<int>(v));
        }
        if (hd.k > 0 && e.size() != static_cast<std::size_t>(hd.k))
            throw ParseError("line " + std::to_string(l.number) + ": edge size " + std::to_string(e.size())
                             + " differs from k = " + std::to_string(hd.k));
        edges.push_back(std::move(e));
    }
    try {
        return Hypergraph(hd.n, std::move(edges), hd.k > 0 ? std::optional<int>(hd.k) : std::nullopt);
    } catch (const InvalidArgument& ex) {
        throw ParseError(ex.what());
    }
}

std::string toHgfStream(const std::vector<Hypergraph>& hs)
{
    std::string out;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        if (i)
            out += "---\n";
        out += toHgf(hs[i]);
    }
    return out;
}

std::vector<Hypergraph> parseHgfStream(std::string_view text)
{
    std::vector<Hypergraph> out;
    for (auto doc : splitDocuments(text))
        out.push_back(parseHgf(doc));
    return out;
}

std::string toRel(const RelationalStructure& r)
{
    std::ostringstream os;
    os << r.n() << ' ' << r.tupleCount() << ' ' << r.arity() << '\n';
    for (const auto& t : r.tuples())
        joinInts(os, t);
    return os.str();
}

RelationalStructure parseRel(std::string_view text)
{
    auto lines = numericLines(text);
    const auto hd = readHeader(lines, "REL");
    std::vector<Tuple> tuples;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.values.size() != static_cast<std::size_t>(hd.k))
            throw ParseError("line " + std::to_string(l.number) + ": tuple length differs from k = " + std::to_string(hd.k));
        Tuple t;
        for (auto v : l.values) {
            if (v < 0 || v >= hd.n)
                throw ParseError("line " + std::to_string(l.number) + ": vertex " + std::to_string(v) + " out of range");
            t.push_back(static_cast<int>(v));
        }
        tuples.push_back(std::move(t));
    }
    try {
        return RelationalStructure(hd.n, hd.k, std::move(tuples));
    } catch (const InvalidArgument& ex) {
        throw ParseError(ex.what());
    }
}

std::string toLabelTable(const std::vector<std::string>& labels)
{
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i)
        out += std::to_string(i) + ' ' + labels[i] + '\n';
    return out;
}

std::vector<std::string> parseLabelTable(std::string_view text)
{
    std::vector<std::string> labels;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::size_t index = 0;
        std::string name;
        if (!(ls >> index >> name) || index != labels.size())
            throw ParseError("label line " + std::to_string(number) + ": expected `" + std::to_string(labels.size())
                             + " name`");
        labels.push_back(std::move(name));
    }
    return labels;
}

std::string toReport(const VerificationReport& r, const Hypergraph& host)
{
    auto out = reportLine(r);
    if (r.witness) {
        out += verticesLine(*r.witness);
        out += toHgf(subFromSpec(host, *r.witness).graph);
    }
    return out + permLine(r);
}

std::string toReport(const VerificationReport& r, const RelationalStructure& host)
{
    auto out = reportLine(r);
    if (r.witness) {
        out += verticesLine(*r.witness);
        out += toRel(inducedSubRel(host, r.witness->vertices));
    }
    return out + permLine(r);
}

} // namespace asym
