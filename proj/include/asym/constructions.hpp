#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asym/hypergraph.hpp"
#include "asym/relations.hpp"

namespace asym {

/// A generated hypergraph together with the symbolic name of every vertex.
struct LabeledHypergraph {
    Hypergraph graph;
    std::vector<std::string> labels;

    /// Index of the vertex called `label`; throws InvalidArgument if absent.
    int index(std::string_view label) const;
};

enum class Family {
    Gkt,
    GktCirc,
    Gk,
    GkStar,
    Tilde,
    Gks,
    Figure2,
    AsymWitness2Graph,
    Hcirc,
    R3t,
    SingleArc,
};

struct FamilyParams {
    Family family = Family::Figure2;
    int k = 0;
    int t = 0;
    int s = 0;
    int n = 0;
};

/// Family names as used on the command line ("gkt", "gkt-circ", ...).
std::string_view familyName(Family f);
std::optional<Family> parseFamily(std::string_view name);
bool isRelationalFamily(Family f);

/// Throws InvalidArgument naming the violated constraint.
void checkParams(const FamilyParams& p);

/// Ring construction on tk(k-1) vertices u_i, v^j_i (i in [tk], j in [k-2])
/// with edges E_i and E_{i,j}; requires k >= 3, t >= k-2.
LabeledHypergraph genGkt(int k, int t);
/// genGkt plus a vertex x and the edge E^0 = {v^0_0, u_0, v^1_0, ..., v^{k-3}_0, x}.
LabeledHypergraph genGktCirc(int k, int t);
/// Interval k-graph on v_1..v_{2k-1} with edges M_i = {v_i..v_{i+k-1}}, k >= 4.
LabeledHypergraph genGk(int k);
/// genGk plus x and M* = {x, v_1..v_{k-2}, v_{k+2}}.
LabeledHypergraph genGkStar(int k);
/// Adds a private fresh pair {a_i, b_i} to the i-th edge (edge order of the input).
LabeledHypergraph tilde(const LabeledHypergraph& h);
/// Layered k-graph G_{k,s}, k >= 6, s >= 0.
LabeledHypergraph genGks(int k, int s);
/// Six-vertex asymmetric 3-graph with edges {v1v2v3, v2v4v5, v2v4v6, v3v4v5}.
LabeledHypergraph genFigure2();
/// Asymmetric 2-graph of order n (n >= 6) with the fewest edges, smallest
/// canonical key among those. Results are cached per n.
LabeledHypergraph genAsymWitness2Graph(int n);

/// Dispatches on p.family for hypergraph families (throws for relational ones).
LabeledHypergraph generate(const FamilyParams& p);
/// Dispatches on p.family for relational families.
RelationalStructure generateRelation(const FamilyParams& p);

/// Default labels "0".."n-1".
LabeledHypergraph unlabeled(Hypergraph h);

} // namespace asym
