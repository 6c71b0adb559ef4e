#ifndef CHAINGRAPH_CHAIN_GRAPH_HPP
#define CHAINGRAPH_CHAIN_GRAPH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <chaingraph/errors.hpp>

namespace chaingraph {

using Vertex = std::string;
/// Sorted by identifier, so iteration order is reproducible.
using VertexSet = std::set<Vertex>;
using Edge = std::pair<Vertex, Vertex>;
using EdgeSet = std::set<Edge>;

/// A chain graph: a finite vertex set together with a set of ordered pairs of
/// distinct vertices that contains no semi-directed cycle.
///
/// The ordered-pair relation is the only stored structure. A line v - w is the
/// presence of both (v, w) and (w, v); an arrow v -> w is (v, w) alone. Every
/// instance is validated on construction and immutable afterwards.
class ChainGraph {
public:
    /// The empty graph.
    ChainGraph() = default;

    /// Builds a chain graph from explicit vertices and edge lists. Endpoints
    /// must be declared. Repeated edges are merged; supplying both v -> w and
    /// w -> v yields the line v - w.
    static ChainGraph build(const std::vector<Vertex>& vertices,
                            const std::vector<Edge>& directed,
                            const std::vector<Edge>& undirected);

    /// Builds a chain graph directly from the ordered-pair relation.
    static ChainGraph from_edge_set(const VertexSet& vertices, const EdgeSet& edges);

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }

    /// Vertex identifiers in sorted order. Position in this vector is the
    /// vertex index used by the index-level accessors.
    const std::vector<Vertex>& vertices() const noexcept { return names_; }
    VertexSet vertex_set() const { return {names_.begin(), names_.end()}; }
    bool contains(const Vertex& v) const;

    /// Throws UnknownVertex when `v` is not a vertex.
    std::size_t index_of(const Vertex& v) const;

    /// The ordered-pair relation E.
    EdgeSet edges() const;
    /// Ordered pairs (v, w) with v -> w.
    EdgeSet arrows() const;
    /// Unordered lines, reported once as (v, w) with v < w.
    EdgeSet lines() const;

    bool has_edge(const Vertex& v, const Vertex& w) const;
    bool has_arrow(const Vertex& v, const Vertex& w) const;
    bool has_line(const Vertex& v, const Vertex& w) const;
    bool adjacent(const Vertex& v, const Vertex& w) const;

    // Index-level views used by the algorithms.
    bool edge_at(std::size_t i, std::size_t j) const noexcept { return adjacency_[i * size() + j] != 0; }
    bool arrow_at(std::size_t i, std::size_t j) const noexcept { return edge_at(i, j) && !edge_at(j, i); }
    bool line_at(std::size_t i, std::size_t j) const noexcept { return edge_at(i, j) && edge_at(j, i); }
    bool adjacent_at(std::size_t i, std::size_t j) const noexcept { return edge_at(i, j) || edge_at(j, i); }

    /// True when every edge is a line (a UDG).
    bool is_undirected() const noexcept;
    /// True when no edge is a line (an ADG, since cycles are excluded).
    bool is_directed() const noexcept;

    /// G' is a subgraph of G when V' is a subset of V and E' of E.
    bool is_subgraph_of(const ChainGraph& other) const;

    friend bool operator==(const ChainGraph& a, const ChainGraph& b) {
        return a.names_ == b.names_ && a.adjacency_ == b.adjacency_;
    }

private:
    ChainGraph(std::vector<Vertex> names, std::vector<unsigned char> adjacency);

    std::vector<Vertex> names_;
    std::vector<unsigned char> adjacency_;  // row-major, (i, j) set iff (v_i, v_j) in E
};

/// Partition of V into chain components plus the component ADG D(G).
/// Components are numbered in order of their smallest vertex identifier.
struct ComponentStructure {
    std::vector<VertexSet> components;
    std::map<Vertex, std::size_t> component_of;
    /// (s, t) is present iff some v in component s has an arrow into component t.
    std::set<std::pair<std::size_t, std::size_t>> dag;

    std::size_t count() const noexcept { return components.size(); }
    std::vector<std::size_t> dag_parents(std::size_t component) const;
    std::vector<std::size_t> dag_children(std::size_t component) const;
    /// Components reachable from `component` by a directed path in D(G), excluding itself.
    std::set<std::size_t> dag_descendants(std::size_t component) const;
    /// Kahn order with the smallest ready component first.
    std::vector<std::size_t> topological_order() const;
    /// Union of the members of the given components.
    VertexSet members(const std::vector<std::size_t>& ids) const;
};

// ---- Derived graphs -------------------------------------------------------

/// G^v: every adjacency becomes a line.
ChainGraph skeleton(const ChainGraph& g);
/// G^^: arrows removed, lines kept.
ChainGraph undirected_part(const ChainGraph& g);
/// G_A = (A, E restricted to A x A).
ChainGraph induced_subgraph(const ChainGraph& g, const VertexSet& a);
/// Union of vertex and edge sets; throws SemiDirectedCycle when the union is
/// not a chain graph.
ChainGraph graph_union(const ChainGraph& g1, const ChainGraph& g2);

// ---- Vertex-relative sets (all disjoint from A) --------------------------

VertexSet boundary(const ChainGraph& g, const VertexSet& a);
VertexSet parents(const ChainGraph& g, const VertexSet& a);
VertexSet neighbors(const ChainGraph& g, const VertexSet& a);
VertexSet children(const ChainGraph& g, const VertexSet& a);
VertexSet closure(const ChainGraph& g, const VertexSet& a);

// ---- Chain components and closures ---------------------------------------

ComponentStructure chain_components(const ChainGraph& g);
std::vector<VertexSet> terminal_components(const ChainGraph& g);

/// Smallest coherent set containing A: the union of components meeting A.
VertexSet co_closure(const ChainGraph& g, const VertexSet& a);
/// Smallest ancestral set containing A: A plus every v with a directed path into A.
VertexSet an_closure(const ChainGraph& g, const VertexSet& a);
/// Smallest anterior set containing A: A plus every v with any path into A.
VertexSet at_closure(const ChainGraph& g, const VertexSet& a);

bool is_coherent(const ChainGraph& g, const VertexSet& a);
bool is_ancestral(const ChainGraph& g, const VertexSet& a);
bool is_anterior(const ChainGraph& g, const VertexSet& a);

namespace detail {

/// Semi-directed cycle search on a raw n x n ordered-pair relation. Lines are
/// contracted into components and the component digraph is searched; a hit is
/// lifted back to a vertex-level closed walk (first index repeated at the end).
std::optional<std::vector<std::size_t>> find_semi_directed_cycle(
    std::size_t n, std::span<const unsigned char> adjacency);

}  // namespace detail

}  // namespace chaingraph

#endif  // CHAINGRAPH_CHAIN_GRAPH_HPP
