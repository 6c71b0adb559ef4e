#include <chaingraph/equivalence.hpp>

#include <algorithm>

namespace chaingraph {

namespace {

StructuralFeature unordered(StructuralFeature::Kind kind, const Vertex& x, VertexSet centers,
                            const Vertex& y) {
    return x < y ? StructuralFeature{kind, x, std::move(centers), y}
                 : StructuralFeature{kind, y, std::move(centers), x};
}

template <typename Set>
Set only_in(const Set& x, const Set& y) {
    Set out;
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::inserter(out, out.end()));
    return out;
}

}  // namespace

EquivFingerprint fingerprint(const ChainGraph& g, EquivalenceCriterion criterion) {
    EquivFingerprint fp;
    fp.skeleton = skeleton(g).lines();
    switch (criterion) {
        case EquivalenceCriterion::adg:
            if (!g.is_directed()) throw NotAdg();
            for (const auto& f : immoralities(g))
                fp.features.insert(unordered(StructuralFeature::Kind::immorality, f.a, {f.c}, f.b));
            break;
        case EquivalenceCriterion::amp:
            for (const auto& f : flags(g))
                fp.features.insert(unordered(StructuralFeature::Kind::flag, f.a, {f.c}, f.b));
            break;
        case EquivalenceCriterion::lwf:
            for (const auto& mc : minimal_complexes(g))
                fp.features.insert(
                    unordered(StructuralFeature::Kind::minimal_complex, mc.a, mc.members(), mc.b));
            break;
    }
    return fp;
}

FingerprintDifference compare_fingerprints(const ChainGraph& g1, const ChainGraph& g2,
                                           EquivalenceCriterion criterion) {
    if (g1.vertices() != g2.vertices()) throw VertexMismatch();
    const auto f1 = fingerprint(g1, criterion);
    const auto f2 = fingerprint(g2, criterion);
    return {only_in(f1.skeleton, f2.skeleton), only_in(f2.skeleton, f1.skeleton),
            only_in(f1.features, f2.features), only_in(f2.features, f1.features)};
}

bool same_skeleton(const ChainGraph& g1, const ChainGraph& g2) {
    if (g1.vertices() != g2.vertices()) throw VertexMismatch();
    return skeleton(g1) == skeleton(g2);
}

bool equivalent(const ChainGraph& g1, const ChainGraph& g2, EquivalenceCriterion criterion) {
    return compare_fingerprints(g1, g2, criterion).empty();
}

bool adg_equivalent(const ChainGraph& g1, const ChainGraph& g2) {
    return equivalent(g1, g2, EquivalenceCriterion::adg);
}
bool lwf_equivalent(const ChainGraph& g1, const ChainGraph& g2) {
    return equivalent(g1, g2, EquivalenceCriterion::lwf);
}
bool amp_equivalent(const ChainGraph& g1, const ChainGraph& g2) {
    return equivalent(g1, g2, EquivalenceCriterion::amp);
}

std::optional<Flag> coincidence_witness(const ChainGraph& g) {
    for (const auto& f : flags(g))
        if (f.kind != FlagKind::immorality) return f;
    return std::nullopt;
}

bool lwf_amp_coincide(const ChainGraph& g) { return !coincidence_witness(g).has_value(); }

std::vector<Vertex> enumeration_labels(std::size_t n) {
    std::vector<Vertex> labels;
    for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
    return labels;
}

void for_each_chain_graph(std::size_t n, const std::function<void(const ChainGraph&)>& visit) {
    if (n > max_enumeration_vertices) throw TooLarge(n, max_enumeration_vertices);
    const auto labels = enumeration_labels(n);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<int> state(pairs.size(), 0);  // 0 none, 1 line, 2 i -> j, 3 j -> i
    std::vector<unsigned char> adjacency(n * n);
    while (true) {
        std::fill(adjacency.begin(), adjacency.end(), 0);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            auto [i, j] = pairs[k];
            if (state[k] == 1 || state[k] == 2) adjacency[i * n + j] = 1;
            if (state[k] == 1 || state[k] == 3) adjacency[j * n + i] = 1;
        }
        if (!detail::find_semi_directed_cycle(n, adjacency)) {
            EdgeSet edges;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (adjacency[i * n + j]) edges.emplace(labels[i], labels[j]);
            visit(ChainGraph::from_edge_set({labels.begin(), labels.end()}, edges));
        }
        std::size_t k = 0;
        while (k < state.size() && state[k] == 3) state[k++] = 0;
        if (k == state.size()) break;
        ++state[k];
    }
}

std::vector<ChainGraph> enumerate_chain_graphs(std::size_t n) {
    std::vector<ChainGraph> out;
    for_each_chain_graph(n, [&](const ChainGraph& g) { out.push_back(g); });
    return out;
}

std::string to_string(EquivalenceCriterion criterion) {
    switch (criterion) {
        case EquivalenceCriterion::adg: return "adg";
        case EquivalenceCriterion::lwf: return "lwf";
        case EquivalenceCriterion::amp: return "amp";
    }
    return "unknown";
}

std::string to_string(const StructuralFeature& feature) {
    std::string centers;
    for (const auto& v : feature.centers) centers += (centers.empty() ? "" : ",") + v;
    switch (feature.kind) {
        case StructuralFeature::Kind::immorality:
            return "immorality (" + feature.a + "," + centers + "," + feature.b + ")";
        case StructuralFeature::Kind::flag:
            return "flag (" + feature.a + "," + centers + "," + feature.b + ")";
        case StructuralFeature::Kind::minimal_complex:
            return "complex (" + feature.a + ",{" + centers + "}," + feature.b + ")";
    }
    return "unknown";
}

}  // namespace chaingraph
