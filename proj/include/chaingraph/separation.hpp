#ifndef CHAINGRAPH_SEPARATION_HPP
#define CHAINGRAPH_SEPARATION_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <chaingraph/chain_graph.hpp>

namespace chaingraph {

/// Which global Markov interpretation of a chain graph is in force.
enum class Criterion { lwf, amp };

/// A ⊥ B | S over pairwise disjoint vertex sets.
struct CIQuery {
    VertexSet a;
    VertexSet b;
    VertexSet s;

    auto operator<=>(const CIQuery&) const = default;
};

enum class StatementSource {
    lwf_global,
    amp_global,
    block_a,
    block_b,
    block_b_star,
    block_c,
    adg_local,
    udg_global,
};

struct CIStatement {
    CIQuery query;
    StatementSource source;

    auto operator<=>(const CIStatement&) const = default;
};

enum class TripleMode { pairwise, full };

inline constexpr std::size_t default_pairwise_guard = 8;
inline constexpr std::size_t default_full_guard = 5;

/// True iff every path of the UDG `u` between A and B meets S. Vacuously true
/// when A or B is empty. Throws NotUndirected, Overlap, UnknownVertex.
bool udg_separated(const ChainGraph& u, const VertexSet& a, const VertexSet& b, const VertexSet& s);

/// The UDG on which a global query over A u B u S is decided: G(A u B u S)^m
/// for LWF and G[A u B u S]^a for AMP.
ChainGraph separation_graph(const ChainGraph& g, Criterion criterion, const VertexSet& relevant);

bool lwf_separated(const ChainGraph& g, const VertexSet& a, const VertexSet& b, const VertexSet& s);
bool amp_separated(const ChainGraph& g, const VertexSet& a, const VertexSet& b, const VertexSet& s);
bool separated(const ChainGraph& g, Criterion criterion, const CIQuery& query);

/// Block-recursive statements: clauses (a), (b) and (c) for LWF, with (b*)
/// in place of (b) for AMP. Component-level parent sets are expanded to vertex
/// unions; statements with an empty side are dropped.
std::vector<CIStatement> block_recursive_statements(const ChainGraph& g, Criterion variant);

/// v ⊥ nd(v) \ pa(v) | pa(v) for every vertex of an ADG. Throws NotAdg.
std::vector<CIStatement> adg_local_statements(const ChainGraph& d);

/// Every separated triple, sorted. Pairwise mode yields ({v}, {w}, S) with
/// v < w; full mode yields all disjoint (A, B, S) with non-empty A < B.
/// Throws TooLarge when |V| exceeds the guard (defaults 8 and 5).
std::vector<CIQuery> enumerate_triples(const ChainGraph& g, Criterion criterion, TripleMode mode,
                                       std::optional<std::size_t> max_vertices = std::nullopt);

std::string to_string(Criterion criterion);
std::string to_string(StatementSource source);
/// "{a} _||_ {b} | {c,d}"
std::string to_string(const CIQuery& query);

}  // namespace chaingraph

#endif  // CHAINGRAPH_SEPARATION_HPP
