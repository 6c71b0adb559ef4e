#ifndef CHAINGRAPH_MARKOV_STRUCTURES_HPP
#define CHAINGRAPH_MARKOV_STRUCTURES_HPP

#include <compare>
#include <set>
#include <string>
#include <vector>

#include <chaingraph/chain_graph.hpp>

namespace chaingraph {

enum class FlagKind {
    immorality,  // a -> c <- b
    arrow_line,  // a -> c - b
    line_arrow,  // a - c <- b
};

/// A flag (a, c, b): a and b are non-adjacent, both send an edge into the
/// center c, and at least one of those edges is an arrow.
///
/// Detectors emit flags in canonical form: immoralities with a < b, and every
/// other flag as arrow_line with `a` at the arrow tail. `line_arrow` records
/// only appear when built by hand and canonicalize to their mirror image.
struct Flag {
    Vertex a;
    Vertex c;
    Vertex b;
    FlagKind kind = FlagKind::immorality;

    Flag canonical() const;
    auto operator<=>(const Flag&) const = default;
};

/// A double flag (a, c, d, b): a -> c - d <- b with a, d and b, c non-adjacent.
/// The pair a, b may be in any adjacency state. Stored as the smaller of the
/// tuples (a, c, d, b) and (b, d, c, a).
struct DoubleFlag {
    Vertex a;
    Vertex c;
    Vertex d;
    Vertex b;

    auto operator<=>(const DoubleFlag&) const = default;
};

/// A minimal complex (a, C, b) with a < b. `path` lists C as the chordless
/// line path c1 - ... - ck inside one chain component with a -> c1 and
/// b -> ck, and no other edges between {a, b} and C.
struct MinimalComplex {
    Vertex a;
    std::vector<Vertex> path;
    Vertex b;

    VertexSet members() const { return {path.begin(), path.end()}; }
    auto operator<=>(const MinimalComplex&) const = default;
};

std::set<Flag> flags(const ChainGraph& g);
std::set<Flag> immoralities(const ChainGraph& g);
std::set<DoubleFlag> double_flags(const ChainGraph& g);
std::set<MinimalComplex> minimal_complexes(const ChainGraph& g);

/// G^a: the skeleton plus a - b for every flag (a, c, b) and a - d, b - c,
/// a - b for every double flag (a, c, d, b).
ChainGraph augmented(const ChainGraph& g);

/// G^m: the skeleton plus a - b for every minimal complex (a, C, b).
///
/// Computed without enumerating complexes: a - b is added iff a and b are
/// non-adjacent parents of a common chain component. The whole component is
/// then a complex for (a, b) and therefore contains a minimal one.
ChainGraph moral(const ChainGraph& g);

/// G[A] = G_{An(A)} united with the lines of G inside Co(An(A)).
ChainGraph extended_subgraph(const ChainGraph& g, const VertexSet& a);
/// G(A) = G_{At(A)}.
ChainGraph spanned_subgraph(const ChainGraph& g, const VertexSet& a);

std::string to_string(FlagKind kind);
std::string to_string(const Flag& flag);
std::string to_string(const DoubleFlag& flag);
std::string to_string(const MinimalComplex& complex);

}  // namespace chaingraph

#endif  // CHAINGRAPH_MARKOV_STRUCTURES_HPP
