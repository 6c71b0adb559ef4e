// Fixtures and brute-force oracles shared by the test suites. Everything here
// works from the raw definitions and deliberately avoids the library's own
// algorithms beyond reading the edge relation.
#ifndef CHAINGRAPH_TESTS_SUPPORT_HPP
#define CHAINGRAPH_TESTS_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <chaingraph/chain_graph.hpp>
#include <chaingraph/equivalence.hpp>
#include <chaingraph/separation.hpp>

namespace chaingraph::testing {

inline VertexSet vs(std::initializer_list<const char*> names) {
    VertexSet out;
    for (const auto* n : names) out.insert(n);
    return out;
}

inline CIQuery q(std::initializer_list<const char*> a, std::initializer_list<const char*> b,
                 std::initializer_list<const char*> s) {
    return {vs(a), vs(b), vs(s)};
}

// 1 - 2, 3 - 4, 1 -> 3, 2 -> 4
inline ChainGraph two_blocks() {
    return ChainGraph::build({"1", "2", "3", "4"}, {{"1", "3"}, {"2", "4"}}, {{"1", "2"}, {"3", "4"}});
}

// a -> c - b
inline ChainGraph flag_graph() {
    return ChainGraph::build({"a", "b", "c"}, {{"a", "c"}}, {{"c", "b"}});
}

// a - c - b
inline ChainGraph udg_path() {
    return ChainGraph::build({"a", "b", "c"}, {}, {{"a", "c"}, {"c", "b"}});
}

// a -> c - d <- b
inline ChainGraph double_flag_graph() {
    return ChainGraph::build({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "d"}}, {{"c", "d"}});
}

// a -> d, b - d, c - d
inline ChainGraph star_graph() {
    return ChainGraph::build({"a", "b", "c", "d"}, {{"a", "d"}}, {{"b", "d"}, {"c", "d"}});
}

// Three components {a,b}, {c,d}, {e,f} with D(G) = t1 -> t2 -> t3 and t1 -> t3.
inline ChainGraph three_components() {
    return ChainGraph::build({"a", "b", "c", "d", "e", "f"}, {{"a", "c"}, {"b", "e"}, {"d", "f"}},
                             {{"a", "b"}, {"c", "d"}, {"e", "f"}});
}

inline std::vector<VertexSet> subsets(const VertexSet& base) {
    const std::vector<Vertex> items(base.begin(), base.end());
    std::vector<VertexSet> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << items.size()); ++mask) {
        VertexSet s;
        for (std::size_t k = 0; k < items.size(); ++k)
            if (mask & (std::size_t{1} << k)) s.insert(items[k]);
        out.push_back(std::move(s));
    }
    return out;
}

inline bool subset_of(const VertexSet& x, const VertexSet& y) {
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

inline VertexSet united(const VertexSet& x, const VertexSet& y) {
    VertexSet out = x;
    out.insert(y.begin(), y.end());
    return out;
}

inline VertexSet intersected(const VertexSet& x, const VertexSet& y) {
    VertexSet out;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::inserter(out, out.end()));
    return out;
}

// ---- Brute-force oracles ---------------------------------------------------

/// Semi-directed cycle test by enumerating every vertex sequence.
inline bool brute_force_has_semi_directed_cycle(std::size_t n, const std::vector<unsigned char>& adj) {
    auto edge = [&](std::size_t i, std::size_t j) { return adj[i * n + j] != 0; };
    std::vector<std::size_t> cycle;
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> grow = [&](std::size_t depth) -> bool {
        if (depth >= 2) {
            bool closed = true, strict = false;
            for (std::size_t k = 0; k < cycle.size(); ++k) {
                auto v = cycle[k], w = cycle[(k + 1) % cycle.size()];
                closed = closed && edge(v, w);
                strict = strict || (edge(v, w) && !edge(w, v));
            }
            if (closed && strict) return true;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            cycle.push_back(v);
            if (grow(depth + 1)) return true;
            cycle.pop_back();
            used[v] = false;
        }
        return false;
    };
    return grow(0);
}

/// Is `walk` (v0, ..., vk = v0) a semi-directed cycle of g?
inline bool is_semi_directed_cycle(const ChainGraph& g, const std::vector<std::string>& walk) {
    if (walk.size() < 3 || walk.front() != walk.back()) return false;
    std::set<std::string> distinct(walk.begin(), walk.end() - 1);
    if (distinct.size() != walk.size() - 1) return false;
    bool strict = false;
    for (std::size_t k = 0; k + 1 < walk.size(); ++k) {
        if (!g.has_edge(walk[k], walk[k + 1])) return false;
        strict = strict || !g.has_edge(walk[k + 1], walk[k]);
    }
    return strict;
}

/// Reachability matrix by Floyd-Warshall over the relation `step`.
template <typename Step>
std::vector<std::vector<bool>> reach(const ChainGraph& g, Step step) {
    const auto n = g.size();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        r[i][i] = true;
        for (std::size_t j = 0; j < n; ++j)
            if (step(i, j)) r[i][j] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (r[i][k] && r[k][j]) r[i][j] = true;
    return r;
}

/// {v | v related to some a in A}, with `rel` a reachability matrix.
inline VertexSet predecessors(const ChainGraph& g, const std::vector<std::vector<bool>>& rel,
                              const VertexSet& a) {
    VertexSet out;
    for (std::size_t v = 0; v < g.size(); ++v)
        for (const auto& x : a)
            if (rel[v][g.index_of(x)]) out.insert(g.vertices()[v]);
    return out;
}

/// Connected subsets of a UDG-relation restricted to `within`.
inline bool connected_by_lines(const ChainGraph& g, const VertexSet& c) {
    if (c.empty()) return false;
    VertexSet seen{*c.begin()};
    std::vector<Vertex> todo{*c.begin()};
    while (!todo.empty()) {
        auto v = todo.back();
        todo.pop_back();
        for (const auto& w : c)
            if (!seen.contains(w) && g.has_line(v, w)) {
                seen.insert(w);
                todo.push_back(w);
            }
    }
    return seen.size() == c.size();
}

struct BruteComplex {
    Vertex a;
    VertexSet c;
    Vertex b;
    auto operator<=>(const BruteComplex&) const = default;
};

/// Minimal complexes straight from the definition: C connected inside one
/// component tau, a and b non-adjacent members of bd(tau) and bd(C), and no
/// proper connected subset of C works for the same (a, b).
inline std::set<BruteComplex> brute_force_minimal_complexes(const ChainGraph& g) {
    const auto lines = reach(g, [&](auto i, auto j) { return g.line_at(i, j); });
    std::set<BruteComplex> out;
    const auto all = g.vertex_set();
    auto bd = [&](const VertexSet& set) {
        VertexSet out_set;
        for (const auto& v : all)
            if (!set.contains(v))
                for (const auto& x : set)
                    if (g.has_edge(v, x)) out_set.insert(v);
        return out_set;
    };
    auto is_complex = [&](const Vertex& a, const VertexSet& c, const Vertex& b) {
        if (!connected_by_lines(g, c)) return false;
        // c inside a single component
        VertexSet tau = predecessors(g, lines, {*c.begin()});
        if (!subset_of(c, tau)) return false;
        const auto bd_tau = bd(tau), bd_c = bd(c);
        return !g.adjacent(a, b) && bd_tau.contains(a) && bd_tau.contains(b) && bd_c.contains(a) &&
               bd_c.contains(b);
    };
    for (const auto& c : subsets(all)) {
        if (c.empty()) continue;
        for (const auto& a : all)
            for (const auto& b : all) {
                if (!(a < b) || c.contains(a) || c.contains(b)) continue;
                if (!is_complex(a, c, b)) continue;
                bool minimal = true;
                for (const auto& sub : subsets(c))
                    if (!sub.empty() && sub != c && is_complex(a, sub, b)) minimal = false;
                if (minimal) out.insert({a, c, b});
            }
    }
    return out;
}

/// Moral graph by closing every brute-force minimal complex.
inline ChainGraph moral_from_complexes(const ChainGraph& g) {
    EdgeSet edges;
    for (const auto& [v, w] : g.edges()) {
        edges.emplace(v, w);
        edges.emplace(w, v);
    }
    for (const auto& mc : brute_force_minimal_complexes(g)) {
        edges.emplace(mc.a, mc.b);
        edges.emplace(mc.b, mc.a);
    }
    return ChainGraph::from_edge_set(g.vertex_set(), edges);
}

/// All disjoint (A, B, S) with non-empty A < B over V.
inline std::vector<CIQuery> all_full_triples(const ChainGraph& g) {
    std::vector<CIQuery> out;
    const auto& names = g.vertices();
    std::vector<int> role(names.size(), 0);
    while (true) {
        CIQuery query;
        for (std::size_t k = 0; k < names.size(); ++k) {
            if (role[k] == 1) query.a.insert(names[k]);
            if (role[k] == 2) query.b.insert(names[k]);
            if (role[k] == 3) query.s.insert(names[k]);
        }
        if (!query.a.empty() && !query.b.empty() && query.a < query.b) out.push_back(query);
        std::size_t k = 0;
        while (k < role.size() && role[k] == 3) role[k++] = 0;
        if (k == role.size()) break;
        ++role[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Every chain graph on 1..max_n labeled vertices.
inline std::vector<ChainGraph> small_chain_graphs(std::size_t max_n) {
    std::vector<ChainGraph> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        auto batch = enumerate_chain_graphs(n);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

}  // namespace chaingraph::testing

#endif  // CHAINGRAPH_TESTS_SUPPORT_HPP
