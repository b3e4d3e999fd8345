#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "asym/hypergraph.hpp"
#include "asym/relations.hpp"
#include "asym/verify.hpp"

namespace asym {

/// HGF: `n m k` (k = 0 without a uniformity tag), then m lines of ascending
/// vertex indices. Lines starting with '#' and blank lines are skipped.
std::string toHgf(const Hypergraph& h);
/// Throws ParseError with a line number.
Hypergraph parseHgf(std::string_view text);

/// Documents separated by `---` lines.
std::string toHgfStream(const std::vector<Hypergraph>& hs);
std::vector<Hypergraph> parseHgfStream(std::string_view text);

/// REL: `n m k`, then m lines of k indices in tuple order.
std::string toRel(const RelationalStructure& r);
RelationalStructure parseRel(std::string_view text);

/// One `index name` line per vertex.
std::string toLabelTable(const std::vector<std::string>& labels);
std::vector<std::string> parseLabelTable(std::string_view text);

/// `# asymwb <version>` header, then `property holds mode samples seed
/// elapsed_ms`. A failing report adds `# vertices ...` (host indices of the
/// witness), the witness in HGF, and `perm ...` when an automorphism is part
/// of the witness.
std::string toReport(const VerificationReport& r, const Hypergraph& host);
std::string toReport(const VerificationReport& r, const RelationalStructure& host);

} // namespace asym
