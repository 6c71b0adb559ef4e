#include <chaingraph/separation.hpp>

#include <algorithm>
#include <map>

#include <chaingraph/markov_structures.hpp>

namespace chaingraph {

namespace {

void check_query(const ChainGraph& g, const VertexSet& a, const VertexSet& b, const VertexSet& s) {
    for (const auto* set : {&a, &b, &s})
        for (const auto& v : *set)
            if (!g.contains(v)) throw UnknownVertex(v);
    auto overlap = [](const VertexSet& x, const VertexSet& y) {
        return std::any_of(x.begin(), x.end(), [&](const Vertex& v) { return y.contains(v); });
    };
    if (overlap(a, b) || overlap(a, s) || overlap(b, s))
        throw Overlap("query sets must be pairwise disjoint");
}

VertexSet united(const VertexSet& x, const VertexSet& y) {
    VertexSet out = x;
    out.insert(y.begin(), y.end());
    return out;
}

VertexSet minus(const VertexSet& x, const VertexSet& y) {
    VertexSet out;
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::inserter(out, out.end()));
    return out;
}

std::string braced(const VertexSet& set) {
    std::string text = "{";
    bool first = true;
    for (const auto& v : set) {
        text += (first ? "" : ",") + v;
        first = false;
    }
    return text + "}";
}

}  // namespace

bool udg_separated(const ChainGraph& u, const VertexSet& a, const VertexSet& b, const VertexSet& s) {
    if (!u.is_undirected()) throw NotUndirected();
    check_query(u, a, b, s);
    if (a.empty() || b.empty()) return true;

    const auto n = u.size();
    std::vector<unsigned char> blocked(n, 0), target(n, 0), seen(n, 0);
    for (const auto& v : s) blocked[u.index_of(v)] = 1;
    for (const auto& v : b) target[u.index_of(v)] = 1;
    std::vector<std::size_t> todo;
    for (const auto& v : a) {
        auto i = u.index_of(v);
        seen[i] = 1;
        todo.push_back(i);
    }
    while (!todo.empty()) {
        auto v = todo.back();
        todo.pop_back();
        for (std::size_t w = 0; w < n; ++w) {
            if (seen[w] || blocked[w] || !u.edge_at(v, w)) continue;
            if (target[w]) return false;
            seen[w] = 1;
            todo.push_back(w);
        }
    }
    return true;
}

ChainGraph separation_graph(const ChainGraph& g, Criterion criterion, const VertexSet& relevant) {
    return criterion == Criterion::lwf ? moral(spanned_subgraph(g, relevant))
                                       : augmented(extended_subgraph(g, relevant));
}

bool lwf_separated(const ChainGraph& g, const VertexSet& a, const VertexSet& b, const VertexSet& s) {
    return separated(g, Criterion::lwf, {a, b, s});
}

bool amp_separated(const ChainGraph& g, const VertexSet& a, const VertexSet& b, const VertexSet& s) {
    return separated(g, Criterion::amp, {a, b, s});
}

bool separated(const ChainGraph& g, Criterion criterion, const CIQuery& q) {
    check_query(g, q.a, q.b, q.s);
    if (q.a.empty() || q.b.empty()) return true;
    const auto relevant = united(united(q.a, q.b), q.s);
    return udg_separated(separation_graph(g, criterion, relevant), q.a, q.b, q.s);
}

std::vector<CIStatement> block_recursive_statements(const ChainGraph& g, Criterion variant) {
    const auto cs = chain_components(g);
    std::vector<CIStatement> out;
    auto emit = [&](VertexSet a, VertexSet b, VertexSet s, StatementSource source) {
        if (!a.empty() && !b.empty()) out.push_back({{std::move(a), std::move(b), std::move(s)}, source});
    };

    for (auto t : cs.topological_order()) {
        const auto& tau = cs.components[t];
        const auto pa_d = cs.members(cs.dag_parents(t));

        // (a): local Markov property of D(G), expanded to vertices.
        const auto descendants = cs.dag_descendants(t);
        std::vector<std::size_t> nondescendants;
        for (std::size_t c = 0; c < cs.count(); ++c)
            if (c != t && !descendants.contains(c)) nondescendants.push_back(c);
        emit(tau, minus(cs.members(nondescendants), pa_d), pa_d, StatementSource::block_a);

        // (b) / (b*): every non-empty sigma within tau.
        const std::vector<Vertex> members(tau.begin(), tau.end());
        const std::size_t subsets = std::size_t{1} << members.size();
        for (std::size_t mask = 1; mask < subsets; ++mask) {
            VertexSet sigma;
            for (std::size_t k = 0; k < members.size(); ++k)
                if (mask & (std::size_t{1} << k)) sigma.insert(members[k]);
            const auto pa_sigma = parents(g, sigma);
            if (variant == Criterion::lwf) {
                emit(sigma, minus(pa_d, pa_sigma), united(pa_sigma, minus(tau, sigma)),
                     StatementSource::block_b);
            } else {
                emit(sigma, minus(pa_d, pa_sigma), pa_sigma, StatementSource::block_b_star);
            }
        }

        // (c): separations inside G_tau, conditioned additionally on pa_D(tau).
        if (members.size() < 2) continue;
        const auto g_tau = induced_subgraph(g, tau);
        std::vector<int> role(members.size(), 0);  // 0 unused, 1 sigma1, 2 sigma2, 3 separator
        while (true) {
            VertexSet s1, s2, sep;
            for (std::size_t k = 0; k < members.size(); ++k) {
                if (role[k] == 1) s1.insert(members[k]);
                if (role[k] == 2) s2.insert(members[k]);
                if (role[k] == 3) sep.insert(members[k]);
            }
            if (!s1.empty() && !s2.empty() && s1 < s2 && udg_separated(g_tau, s1, s2, sep))
                emit(s1, s2, united(sep, pa_d), StatementSource::block_c);
            std::size_t k = 0;
            while (k < role.size() && role[k] == 3) role[k++] = 0;
            if (k == role.size()) break;
            ++role[k];
        }
    }
    return out;
}

std::vector<CIStatement> adg_local_statements(const ChainGraph& d) {
    if (!d.is_directed()) throw NotAdg();
    std::vector<CIStatement> out;
    for (const auto& v : d.vertices()) {
        VertexSet descendants;
        std::vector<Vertex> todo{v};
        while (!todo.empty()) {
            auto x = todo.back();
            todo.pop_back();
            for (const auto& w : children(d, {x}))
                if (descendants.insert(w).second) todo.push_back(w);
        }
        auto nondescendants = minus(d.vertex_set(), descendants);
        nondescendants.erase(v);
        const auto pa = parents(d, {v});
        auto rest = minus(nondescendants, pa);
        if (!rest.empty()) out.push_back({{{v}, std::move(rest), pa}, StatementSource::adg_local});
    }
    return out;
}

std::vector<CIQuery> enumerate_triples(const ChainGraph& g, Criterion criterion, TripleMode mode,
                                       std::optional<std::size_t> max_vertices) {
    const auto guard = max_vertices.value_or(mode == TripleMode::pairwise ? default_pairwise_guard
                                                                          : default_full_guard);
    if (g.size() > guard) throw TooLarge(g.size(), guard);

    const auto& names = g.vertices();
    const auto n = names.size();
    std::map<VertexSet, ChainGraph> cache;
    auto decide = [&](const CIQuery& q) {
        const auto relevant = united(united(q.a, q.b), q.s);
        auto it = cache.find(relevant);
        if (it == cache.end())
            it = cache.emplace(relevant, separation_graph(g, criterion, relevant)).first;
        return udg_separated(it->second, q.a, q.b, q.s);
    };

    std::vector<CIQuery> out;
    if (mode == TripleMode::pairwise) {
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t w = v + 1; w < n; ++w) {
                std::vector<std::size_t> rest;
                for (std::size_t x = 0; x < n; ++x)
                    if (x != v && x != w) rest.push_back(x);
                for (std::size_t mask = 0; mask < (std::size_t{1} << rest.size()); ++mask) {
                    CIQuery q{{names[v]}, {names[w]}, {}};
                    for (std::size_t k = 0; k < rest.size(); ++k)
                        if (mask & (std::size_t{1} << k)) q.s.insert(names[rest[k]]);
                    if (decide(q)) out.push_back(std::move(q));
                }
            }
    } else {
        std::vector<int> role(n, 0);  // 0 unused, 1 A, 2 B, 3 S
        while (true) {
            CIQuery q;
            for (std::size_t k = 0; k < n; ++k) {
                if (role[k] == 1) q.a.insert(names[k]);
                if (role[k] == 2) q.b.insert(names[k]);
                if (role[k] == 3) q.s.insert(names[k]);
            }
            if (!q.a.empty() && !q.b.empty() && q.a < q.b && decide(q)) out.push_back(std::move(q));
            std::size_t k = 0;
            while (k < n && role[k] == 3) role[k++] = 0;
            if (k == n) break;
            ++role[k];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(Criterion criterion) {
    return criterion == Criterion::lwf ? "lwf" : "amp";
}

std::string to_string(StatementSource source) {
    switch (source) {
        case StatementSource::lwf_global: return "lwf_global";
        case StatementSource::amp_global: return "amp_global";
        case StatementSource::block_a: return "block_a";
        case StatementSource::block_b: return "block_b";
        case StatementSource::block_b_star: return "block_b_star";
        case StatementSource::block_c: return "block_c";
        case StatementSource::adg_local: return "adg_local";
        case StatementSource::udg_global: return "udg_global";
    }
    return "unknown";
}

std::string to_string(const CIQuery& query) {
    return braced(query.a) + " _||_ " + braced(query.b) + " | " + braced(query.s);
}

}  // namespace chaingraph
