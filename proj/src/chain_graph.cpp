#include <chaingraph/chain_graph.hpp>

#include <algorithm>
#include <deque>
#include <functional>

namespace chaingraph {

SemiDirectedCycle::SemiDirectedCycle(std::vector<std::string> witness)
    : Error("SemiDirectedCycle",
            [&] {
                std::string text = "semi-directed cycle:";
                for (const auto& v : witness) text += " " + v;
                return text;
            }()),
      witness_(std::move(witness)) {}

namespace detail {
namespace {

bool edge_in(std::span<const unsigned char> adj, std::size_t n, std::size_t i, std::size_t j) {
    return adj[i * n + j] != 0;
}

bool line_in(std::span<const unsigned char> adj, std::size_t n, std::size_t i, std::size_t j) {
    return edge_in(adj, n, i, j) && edge_in(adj, n, j, i);
}

// Connected components of the line relation; labels assigned in index order.
std::vector<std::size_t> line_components(std::size_t n, std::span<const unsigned char> adj) {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(n, unset);
    std::size_t next = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (label[s] != unset) continue;
        label[s] = next;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (std::size_t w = 0; w < n; ++w) {
                if (label[w] == unset && line_in(adj, n, v, w)) {
                    label[w] = next;
                    queue.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

// Shortest path along lines from `from` to `to`; both in the same component.
std::vector<std::size_t> line_path(std::size_t n, std::span<const unsigned char> adj,
                                   std::size_t from, std::size_t to) {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> prev(n, unset);
    prev[from] = from;
    std::deque<std::size_t> queue{from};
    while (!queue.empty() && prev[to] == unset) {
        auto v = queue.front();
        queue.pop_front();
        for (std::size_t w = 0; w < n; ++w) {
            if (prev[w] == unset && line_in(adj, n, v, w)) {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    std::vector<std::size_t> path{to};
    while (path.back() != from) path.push_back(prev[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_semi_directed_cycle(
    std::size_t n, std::span<const unsigned char> adj) {
    const auto comp = line_components(n, adj);
    const std::size_t m = n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;

    // Representative arrow for every component-level edge.
    std::vector<std::vector<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>>> out(m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!edge_in(adj, n, i, j) || edge_in(adj, n, j, i)) continue;
            if (comp[i] == comp[j]) {
                // i -> j closed by the line path j ... i.
                auto back = line_path(n, adj, j, i);
                std::vector<std::size_t> witness{i};
                witness.insert(witness.end(), back.begin(), back.end());
                return witness;
            }
            auto& list = out[comp[i]];
            if (std::none_of(list.begin(), list.end(),
                             [&](const auto& e) { return e.first == comp[j]; })) {
                list.push_back({comp[j], {i, j}});
            }
        }
    }

    // Depth-first search on the component digraph.
    enum class Mark { fresh, active, done };
    std::vector<Mark> mark(m, Mark::fresh);
    std::vector<std::pair<std::size_t, std::size_t>> stack_arrows;  // arrows on the DFS path
    std::vector<std::size_t> stack_components;
    std::optional<std::vector<std::pair<std::size_t, std::size_t>>> cycle_arrows;

    std::function<bool(std::size_t)> visit = [&](std::size_t c) {
        mark[c] = Mark::active;
        stack_components.push_back(c);
        for (const auto& [target, arrow] : out[c]) {
            if (mark[target] == Mark::active) {
                auto pos = std::find(stack_components.begin(), stack_components.end(), target) -
                           stack_components.begin();
                std::vector<std::pair<std::size_t, std::size_t>> arrows(
                    stack_arrows.begin() + pos, stack_arrows.end());
                arrows.push_back(arrow);
                cycle_arrows = std::move(arrows);
                return true;
            }
            if (mark[target] == Mark::fresh) {
                stack_arrows.push_back(arrow);
                if (visit(target)) return true;
                stack_arrows.pop_back();
            }
        }
        stack_components.pop_back();
        mark[c] = Mark::done;
        return false;
    };
    for (std::size_t c = 0; c < m && !cycle_arrows; ++c) {
        if (mark[c] == Mark::fresh) visit(c);
    }
    if (!cycle_arrows) return std::nullopt;

    // Lift: tail_0 -> head_0 ~ tail_1 -> head_1 ~ ... ~ tail_0.
    const auto& arrows = *cycle_arrows;
    std::vector<std::size_t> witness;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        auto [tail, head] = arrows[k];
        auto next_tail = arrows[(k + 1) % arrows.size()].first;
        if (witness.empty()) witness.push_back(tail);
        auto path = line_path(n, adj, head, next_tail);
        witness.insert(witness.end(), path.begin(), path.end());
    }
    return witness;
}

}  // namespace detail

// ---- ChainGraph -----------------------------------------------------------

ChainGraph::ChainGraph(std::vector<Vertex> names, std::vector<unsigned char> adjacency)
    : names_(std::move(names)), adjacency_(std::move(adjacency)) {
    const auto n = names_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (adjacency_[i * n + i]) throw SelfLoop(names_[i]);
    }
    if (auto cycle = detail::find_semi_directed_cycle(n, adjacency_)) {
        std::vector<std::string> witness;
        witness.reserve(cycle->size());
        for (auto i : *cycle) witness.push_back(names_[i]);
        throw SemiDirectedCycle(std::move(witness));
    }
}

ChainGraph ChainGraph::build(const std::vector<Vertex>& vertices,
                             const std::vector<Edge>& directed,
                             const std::vector<Edge>& undirected) {
    std::vector<Vertex> names = vertices;
    std::sort(names.begin(), names.end());
    if (auto dup = std::adjacent_find(names.begin(), names.end()); dup != names.end()) {
        throw DuplicateVertex(*dup);
    }
    const auto n = names.size();
    auto index = [&](const Vertex& v) {
        auto it = std::lower_bound(names.begin(), names.end(), v);
        if (it == names.end() || *it != v) throw UnknownVertex(v);
        return static_cast<std::size_t>(it - names.begin());
    };
    std::vector<unsigned char> adjacency(n * n, 0);
    for (const auto& [v, w] : directed) {
        auto i = index(v), j = index(w);
        if (i == j) throw SelfLoop(v);
        adjacency[i * n + j] = 1;
    }
    for (const auto& [v, w] : undirected) {
        auto i = index(v), j = index(w);
        if (i == j) throw SelfLoop(v);
        adjacency[i * n + j] = 1;
        adjacency[j * n + i] = 1;
    }
    return ChainGraph(std::move(names), std::move(adjacency));
}

ChainGraph ChainGraph::from_edge_set(const VertexSet& vertices, const EdgeSet& edges) {
    std::vector<Vertex> names(vertices.begin(), vertices.end());
    const auto n = names.size();
    auto index = [&](const Vertex& v) {
        auto it = std::lower_bound(names.begin(), names.end(), v);
        if (it == names.end() || *it != v) throw UnknownVertex(v);
        return static_cast<std::size_t>(it - names.begin());
    };
    std::vector<unsigned char> adjacency(n * n, 0);
    for (const auto& [v, w] : edges) {
        auto i = index(v), j = index(w);
        if (i == j) throw SelfLoop(v);
        adjacency[i * n + j] = 1;
    }
    return ChainGraph(std::move(names), std::move(adjacency));
}

bool ChainGraph::contains(const Vertex& v) const {
    return std::binary_search(names_.begin(), names_.end(), v);
}

std::size_t ChainGraph::index_of(const Vertex& v) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), v);
    if (it == names_.end() || *it != v) throw UnknownVertex(v);
    return static_cast<std::size_t>(it - names_.begin());
}

EdgeSet ChainGraph::edges() const {
    EdgeSet out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (edge_at(i, j)) out.emplace(names_[i], names_[j]);
    return out;
}

EdgeSet ChainGraph::arrows() const {
    EdgeSet out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (arrow_at(i, j)) out.emplace(names_[i], names_[j]);
    return out;
}

EdgeSet ChainGraph::lines() const {
    EdgeSet out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (line_at(i, j)) out.emplace(names_[i], names_[j]);
    return out;
}

bool ChainGraph::has_edge(const Vertex& v, const Vertex& w) const {
    return edge_at(index_of(v), index_of(w));
}
bool ChainGraph::has_arrow(const Vertex& v, const Vertex& w) const {
    return arrow_at(index_of(v), index_of(w));
}
bool ChainGraph::has_line(const Vertex& v, const Vertex& w) const {
    return line_at(index_of(v), index_of(w));
}
bool ChainGraph::adjacent(const Vertex& v, const Vertex& w) const {
    return adjacent_at(index_of(v), index_of(w));
}

bool ChainGraph::is_undirected() const noexcept {
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (arrow_at(i, j)) return false;
    return true;
}

bool ChainGraph::is_directed() const noexcept {
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (line_at(i, j)) return false;
    return true;
}

bool ChainGraph::is_subgraph_of(const ChainGraph& other) const {
    for (const auto& v : names_)
        if (!other.contains(v)) return false;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (edge_at(i, j) && !other.has_edge(names_[i], names_[j])) return false;
    return true;
}

// ---- ComponentStructure ---------------------------------------------------

std::vector<std::size_t> ComponentStructure::dag_parents(std::size_t component) const {
    std::vector<std::size_t> out;
    for (const auto& [s, t] : dag)
        if (t == component) out.push_back(s);
    return out;
}

std::vector<std::size_t> ComponentStructure::dag_children(std::size_t component) const {
    std::vector<std::size_t> out;
    for (const auto& [s, t] : dag)
        if (s == component) out.push_back(t);
    return out;
}

std::set<std::size_t> ComponentStructure::dag_descendants(std::size_t component) const {
    std::set<std::size_t> seen;
    std::vector<std::size_t> todo{component};
    while (!todo.empty()) {
        auto c = todo.back();
        todo.pop_back();
        for (auto child : dag_children(c))
            if (seen.insert(child).second) todo.push_back(child);
    }
    return seen;
}

std::vector<std::size_t> ComponentStructure::topological_order() const {
    std::vector<std::size_t> indegree(count(), 0);
    for (const auto& edge : dag) ++indegree[edge.second];
    std::set<std::size_t> ready;
    for (std::size_t c = 0; c < count(); ++c)
        if (indegree[c] == 0) ready.insert(c);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
        auto c = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(c);
        for (auto child : dag_children(c))
            if (--indegree[child] == 0) ready.insert(child);
    }
    return order;
}

VertexSet ComponentStructure::members(const std::vector<std::size_t>& ids) const {
    VertexSet out;
    for (auto id : ids) out.insert(components[id].begin(), components[id].end());
    return out;
}

// ---- Derived graphs -------------------------------------------------------

namespace {

std::vector<unsigned char> membership(const ChainGraph& g, const VertexSet& a) {
    std::vector<unsigned char> in(g.size(), 0);
    for (const auto& v : a) in[g.index_of(v)] = 1;
    return in;
}

VertexSet collect(const ChainGraph& g, const std::vector<unsigned char>& in) {
    VertexSet out;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (in[i]) out.insert(g.vertices()[i]);
    return out;
}

// Vertices outside A related to some member of A by `rel(outside, member)`.
template <typename Relation>
VertexSet relative_set(const ChainGraph& g, const VertexSet& a, Relation rel) {
    const auto in = membership(g, a);
    std::vector<unsigned char> out(g.size(), 0);
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (in[v]) continue;
        for (std::size_t m = 0; m < g.size() && !out[v]; ++m)
            if (in[m] && rel(v, m)) out[v] = 1;
    }
    return collect(g, out);
}

// Backward reachability: everything that reaches A through `step(from, to)`.
template <typename Step>
VertexSet backward_closure(const ChainGraph& g, const VertexSet& a, Step step) {
    auto in = membership(g, a);
    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (in[i]) todo.push_back(i);
    while (!todo.empty()) {
        auto w = todo.back();
        todo.pop_back();
        for (std::size_t v = 0; v < g.size(); ++v) {
            if (!in[v] && step(v, w)) {
                in[v] = 1;
                todo.push_back(v);
            }
        }
    }
    return collect(g, in);
}

}  // namespace

ChainGraph skeleton(const ChainGraph& g) {
    EdgeSet edges;
    for (const auto& [v, w] : g.edges()) {
        edges.emplace(v, w);
        edges.emplace(w, v);
    }
    return ChainGraph::from_edge_set(g.vertex_set(), edges);
}

ChainGraph undirected_part(const ChainGraph& g) {
    EdgeSet edges;
    for (const auto& [v, w] : g.lines()) {
        edges.emplace(v, w);
        edges.emplace(w, v);
    }
    return ChainGraph::from_edge_set(g.vertex_set(), edges);
}

ChainGraph induced_subgraph(const ChainGraph& g, const VertexSet& a) {
    const auto in = membership(g, a);
    EdgeSet edges;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (in[i] && in[j] && g.edge_at(i, j)) edges.emplace(g.vertices()[i], g.vertices()[j]);
    return ChainGraph::from_edge_set(a, edges);
}

ChainGraph graph_union(const ChainGraph& g1, const ChainGraph& g2) {
    auto vertices = g1.vertex_set();
    vertices.insert(g2.vertices().begin(), g2.vertices().end());
    auto edges = g1.edges();
    edges.merge(g2.edges());
    return ChainGraph::from_edge_set(vertices, edges);
}

VertexSet boundary(const ChainGraph& g, const VertexSet& a) {
    return relative_set(g, a, [&](auto v, auto m) { return g.edge_at(v, m); });
}

VertexSet parents(const ChainGraph& g, const VertexSet& a) {
    return relative_set(g, a, [&](auto v, auto m) { return g.arrow_at(v, m); });
}

VertexSet neighbors(const ChainGraph& g, const VertexSet& a) {
    return relative_set(g, a, [&](auto v, auto m) { return g.line_at(v, m); });
}

VertexSet children(const ChainGraph& g, const VertexSet& a) {
    return relative_set(g, a, [&](auto v, auto m) { return g.arrow_at(m, v); });
}

VertexSet closure(const ChainGraph& g, const VertexSet& a) {
    auto out = boundary(g, a);
    out.insert(a.begin(), a.end());
    return out;
}

// ---- Components and closures ---------------------------------------------

ComponentStructure chain_components(const ChainGraph& g) {
    ComponentStructure cs;
    const auto n = g.size();
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(n, unset);
    for (std::size_t s = 0; s < n; ++s) {
        if (label[s] != unset) continue;
        const auto id = cs.components.size();
        cs.components.emplace_back();
        label[s] = id;
        std::vector<std::size_t> todo{s};
        while (!todo.empty()) {
            auto v = todo.back();
            todo.pop_back();
            cs.components[id].insert(g.vertices()[v]);
            cs.component_of[g.vertices()[v]] = id;
            for (std::size_t w = 0; w < n; ++w) {
                if (label[w] == unset && g.line_at(v, w)) {
                    label[w] = id;
                    todo.push_back(w);
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g.arrow_at(i, j)) cs.dag.emplace(label[i], label[j]);
    return cs;
}

std::vector<VertexSet> terminal_components(const ChainGraph& g) {
    const auto cs = chain_components(g);
    std::vector<VertexSet> out;
    for (std::size_t c = 0; c < cs.count(); ++c)
        if (cs.dag_children(c).empty()) out.push_back(cs.components[c]);
    return out;
}

VertexSet co_closure(const ChainGraph& g, const VertexSet& a) {
    return backward_closure(g, a, [&](auto v, auto w) { return g.line_at(v, w); });
}

VertexSet an_closure(const ChainGraph& g, const VertexSet& a) {
    return backward_closure(g, a, [&](auto v, auto w) { return g.arrow_at(v, w); });
}

VertexSet at_closure(const ChainGraph& g, const VertexSet& a) {
    return backward_closure(g, a, [&](auto v, auto w) { return g.edge_at(v, w); });
}

bool is_coherent(const ChainGraph& g, const VertexSet& a) { return neighbors(g, a).empty(); }
bool is_ancestral(const ChainGraph& g, const VertexSet& a) { return parents(g, a).empty(); }
bool is_anterior(const ChainGraph& g, const VertexSet& a) { return boundary(g, a).empty(); }

}  // namespace chaingraph
