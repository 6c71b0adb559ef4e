#include <chaingraph/markov_structures.hpp>

#include <algorithm>

namespace chaingraph {

Flag Flag::canonical() const {
    switch (kind) {
        case FlagKind::immorality:
            return a < b ? *this : Flag{b, c, a, kind};
        case FlagKind::line_arrow:
            return Flag{b, c, a, FlagKind::arrow_line};
        case FlagKind::arrow_line:
            break;
    }
    return *this;
}

namespace {

using Adjacency = std::vector<unsigned char>;

void add_line(Adjacency& adj, std::size_t n, std::size_t i, std::size_t j) {
    adj[i * n + j] = 1;
    adj[j * n + i] = 1;
}

Adjacency skeleton_adjacency(const ChainGraph& g) {
    const auto n = g.size();
    Adjacency adj(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g.adjacent_at(i, j)) adj[i * n + j] = 1;
    return adj;
}

ChainGraph from_adjacency(const ChainGraph& g, const Adjacency& adj) {
    const auto n = g.size();
    EdgeSet edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (adj[i * n + j]) edges.emplace(g.vertices()[i], g.vertices()[j]);
    return ChainGraph::from_edge_set(g.vertex_set(), edges);
}

// Calls visit(a, c, b) for every ordered flag triple; each flag is seen twice.
template <typename Visit>
void for_each_flag_triple(const ChainGraph& g, Visit visit) {
    const auto n = g.size();
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t a = 0; a < n; ++a) {
            if (a == c || !g.edge_at(a, c)) continue;
            for (std::size_t b = 0; b < n; ++b) {
                if (b == a || b == c || !g.edge_at(b, c) || g.adjacent_at(a, b)) continue;
                if (g.line_at(a, c) && g.line_at(b, c)) continue;
                visit(a, c, b);
            }
        }
}

template <typename Visit>
void for_each_double_flag(const ChainGraph& g, Visit visit) {
    const auto n = g.size();
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
            if (!g.line_at(c, d)) continue;
            for (std::size_t a = 0; a < n; ++a) {
                if (a == d || !g.arrow_at(a, c) || g.adjacent_at(a, d)) continue;
                for (std::size_t b = 0; b < n; ++b) {
                    if (b == a || b == c || !g.arrow_at(b, d) || g.adjacent_at(b, c)) continue;
                    visit(a, c, d, b);
                }
            }
        }
}

}  // namespace

std::set<Flag> flags(const ChainGraph& g) {
    const auto& name = g.vertices();
    std::set<Flag> out;
    for_each_flag_triple(g, [&](auto a, auto c, auto b) {
        if (g.arrow_at(a, c) && g.arrow_at(b, c)) {
            out.insert(Flag{name[a], name[c], name[b], FlagKind::immorality}.canonical());
        } else if (g.arrow_at(a, c)) {
            out.insert(Flag{name[a], name[c], name[b], FlagKind::arrow_line});
        }
    });
    return out;
}

std::set<Flag> immoralities(const ChainGraph& g) {
    std::set<Flag> out;
    for (const auto& flag : flags(g))
        if (flag.kind == FlagKind::immorality) out.insert(flag);
    return out;
}

std::set<DoubleFlag> double_flags(const ChainGraph& g) {
    const auto& name = g.vertices();
    std::set<DoubleFlag> out;
    for_each_double_flag(g, [&](auto a, auto c, auto d, auto b) {
        DoubleFlag forward{name[a], name[c], name[d], name[b]};
        DoubleFlag reverse{name[b], name[d], name[c], name[a]};
        out.insert(std::min(forward, reverse));
    });
    return out;
}

std::set<MinimalComplex> minimal_complexes(const ChainGraph& g) {
    const auto& name = g.vertices();
    const auto cs = chain_components(g);
    std::set<MinimalComplex> out;

    for (const auto& component : cs.components) {
        std::vector<std::size_t> tau;
        for (const auto& v : component) tau.push_back(g.index_of(v));
        std::vector<std::size_t> pa;
        for (const auto& v : parents(g, component)) pa.push_back(g.index_of(v));

        for (std::size_t x = 0; x < pa.size(); ++x)
            for (std::size_t y = x + 1; y < pa.size(); ++y) {
                const auto a = pa[x], b = pa[y];
                if (g.adjacent_at(a, b)) continue;

                // Induced line paths starting at a child of a; a touches only the
                // first vertex and b only the last.
                std::vector<std::size_t> path;
                auto extend = [&](auto& self) -> void {
                    const auto last = path.back();
                    if (g.arrow_at(b, last)) {
                        MinimalComplex mc{name[a], {}, name[b]};
                        for (auto v : path) mc.path.push_back(name[v]);
                        out.insert(std::move(mc));
                        return;
                    }
                    for (auto next : tau) {
                        if (!g.line_at(last, next) || g.adjacent_at(a, next)) continue;
                        if (std::find(path.begin(), path.end(), next) != path.end()) continue;
                        bool chord = false;
                        for (std::size_t k = 0; k + 1 < path.size(); ++k)
                            chord = chord || g.adjacent_at(path[k], next);
                        if (chord) continue;
                        path.push_back(next);
                        self(self);
                        path.pop_back();
                    }
                };
                for (auto start : tau) {
                    if (!g.arrow_at(a, start)) continue;
                    path = {start};
                    extend(extend);
                }
            }
    }
    return out;
}

ChainGraph augmented(const ChainGraph& g) {
    const auto n = g.size();
    auto adj = skeleton_adjacency(g);
    for_each_flag_triple(g, [&](auto a, auto, auto b) { add_line(adj, n, a, b); });
    for_each_double_flag(g, [&](auto a, auto c, auto d, auto b) {
        add_line(adj, n, a, d);
        add_line(adj, n, b, c);
        add_line(adj, n, a, b);
    });
    return from_adjacency(g, adj);
}

ChainGraph moral(const ChainGraph& g) {
    const auto n = g.size();
    auto adj = skeleton_adjacency(g);
    const auto cs = chain_components(g);
    for (const auto& component : cs.components) {
        std::vector<std::size_t> pa;
        for (const auto& v : parents(g, component)) pa.push_back(g.index_of(v));
        for (std::size_t x = 0; x < pa.size(); ++x)
            for (std::size_t y = x + 1; y < pa.size(); ++y)
                if (!g.adjacent_at(pa[x], pa[y])) add_line(adj, n, pa[x], pa[y]);
    }
    return from_adjacency(g, adj);
}

ChainGraph extended_subgraph(const ChainGraph& g, const VertexSet& a) {
    const auto ancestral = an_closure(g, a);
    const auto coherent = co_closure(g, ancestral);
    EdgeSet edges;
    for (const auto& [v, w] : g.edges()) {
        if (ancestral.contains(v) && ancestral.contains(w)) {
            edges.emplace(v, w);
        } else if (coherent.contains(v) && coherent.contains(w) && g.has_edge(w, v)) {
            edges.emplace(v, w);
        }
    }
    return ChainGraph::from_edge_set(coherent, edges);
}

ChainGraph spanned_subgraph(const ChainGraph& g, const VertexSet& a) {
    return induced_subgraph(g, at_closure(g, a));
}

std::string to_string(FlagKind kind) {
    switch (kind) {
        case FlagKind::immorality: return "immorality";
        case FlagKind::arrow_line: return "arrow_line";
        case FlagKind::line_arrow: return "line_arrow";
    }
    return "unknown";
}

std::string to_string(const Flag& flag) {
    return "(" + flag.a + "," + flag.c + "," + flag.b + ") " + to_string(flag.kind);
}

std::string to_string(const DoubleFlag& flag) {
    return "(" + flag.a + "," + flag.c + "," + flag.d + "," + flag.b + ")";
}

std::string to_string(const MinimalComplex& complex) {
    std::string text = "(" + complex.a + ",{";
    bool first = true;
    for (const auto& v : complex.members()) {
        text += (first ? "" : ",") + v;
        first = false;
    }
    return text + "}," + complex.b + ")";
}

}  // namespace chaingraph
