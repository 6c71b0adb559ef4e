#ifndef CHAINGRAPH_EQUIVALENCE_HPP
#define CHAINGRAPH_EQUIVALENCE_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <chaingraph/chain_graph.hpp>
#include <chaingraph/markov_structures.hpp>

namespace chaingraph {

enum class EquivalenceCriterion { adg, lwf, amp };

/// Orientation-free record of a flag, immorality, or minimal complex used when
/// comparing graphs. The end points satisfy a < b; `centers` is c for flags
/// and immoralities and the set C for minimal complexes.
struct StructuralFeature {
    enum class Kind { immorality, flag, minimal_complex };

    Kind kind = Kind::flag;
    Vertex a;
    VertexSet centers;
    Vertex b;

    auto operator<=>(const StructuralFeature&) const = default;
};

struct EquivFingerprint {
    EdgeSet skeleton;  // unordered adjacencies as (v, w) with v < w
    std::set<StructuralFeature> features;

    bool operator==(const EquivFingerprint&) const = default;
    auto operator<=>(const EquivFingerprint&) const = default;
};

/// What sets two fingerprints apart; empty iff they are equal.
struct FingerprintDifference {
    EdgeSet skeleton_only_first;
    EdgeSet skeleton_only_second;
    std::set<StructuralFeature> features_only_first;
    std::set<StructuralFeature> features_only_second;

    bool empty() const noexcept {
        return skeleton_only_first.empty() && skeleton_only_second.empty() &&
               features_only_first.empty() && features_only_second.empty();
    }
};

/// Skeleton plus immoralities (adg), minimal complexes (lwf) or flags (amp).
/// The adg fingerprint throws NotAdg for graphs with lines.
EquivFingerprint fingerprint(const ChainGraph& g, EquivalenceCriterion criterion);
FingerprintDifference compare_fingerprints(const ChainGraph& g1, const ChainGraph& g2,
                                           EquivalenceCriterion criterion);

/// Throws VertexMismatch when the vertex sets differ.
bool same_skeleton(const ChainGraph& g1, const ChainGraph& g2);
bool adg_equivalent(const ChainGraph& g1, const ChainGraph& g2);
bool lwf_equivalent(const ChainGraph& g1, const ChainGraph& g2);
bool amp_equivalent(const ChainGraph& g1, const ChainGraph& g2);
bool equivalent(const ChainGraph& g1, const ChainGraph& g2, EquivalenceCriterion criterion);

/// True iff every flag of G is an immorality, in which case the LWF and AMP
/// global properties of G agree.
bool lwf_amp_coincide(const ChainGraph& g);
/// The first flag that is not an immorality, if any.
std::optional<Flag> coincidence_witness(const ChainGraph& g);

inline constexpr std::size_t max_enumeration_vertices = 5;

/// Labels used for enumerated graphs: "a", "b", ...
std::vector<Vertex> enumeration_labels(std::size_t n);

/// Visits every labeled chain graph on n vertices exactly once. Each
/// unordered pair takes one of four states (none, line, arrow either way) and
/// candidates with a semi-directed cycle are skipped. Throws TooLarge for n > 5.
void for_each_chain_graph(std::size_t n, const std::function<void(const ChainGraph&)>& visit);
std::vector<ChainGraph> enumerate_chain_graphs(std::size_t n);

std::string to_string(EquivalenceCriterion criterion);
/// "flag (a,c,b)", "immorality (a,c,b)", "complex (a,{c,d},b)"
std::string to_string(const StructuralFeature& feature);

}  // namespace chaingraph

#endif  // CHAINGRAPH_EQUIVALENCE_HPP
