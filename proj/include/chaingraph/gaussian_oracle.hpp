#ifndef CHAINGRAPH_GAUSSIAN_ORACLE_HPP
#define CHAINGRAPH_GAUSSIAN_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include <chaingraph/chain_graph.hpp>
#include <chaingraph/separation.hpp>

namespace chaingraph {

/// A dense real matrix whose rows and columns are indexed by vertex labels.
struct LabeledMatrix {
    std::vector<Vertex> labels;
    Eigen::MatrixXd values;

    std::size_t position(const Vertex& v) const;
    double at(const Vertex& row, const Vertex& col) const;
    Eigen::MatrixXd block(const VertexSet& rows, const VertexSet& cols) const;
};

/// One chain component of a recursive Gaussian model:
/// X_members = beta * X_regressors + eps,  eps ~ N(0, lambda).
struct SemBlock {
    std::vector<Vertex> members;     // the component, sorted
    std::vector<Vertex> regressors;  // pa_D(component) as a vertex union, sorted
    Eigen::MatrixXd beta;            // members x regressors
    Eigen::MatrixXd lambda;          // members x members, symmetric positive definite
};

/// Blocks are listed in a topological order of the component ADG.
///
/// AMP variant: beta(u, v) = 0 unless v is a parent of u, and the precision
/// matrix inverse(lambda) vanishes off the lines of the component.
/// LWF variant: the same precision pattern, and gamma = inverse(lambda) * beta
/// vanishes unless v is a parent of u.
struct GaussianSem {
    Criterion variant = Criterion::amp;
    std::vector<SemBlock> blocks;
};

struct MagnitudeRange {
    double low = 0.5;
    double high = 1.5;
};

/// Draws a random model of the given variant. Free coefficients are uniform on
/// +-[low, high]; precision off-diagonals on lines are uniform on +-[0.1, 0.3]
/// with the diagonal set to the absolute row sum plus one.
GaussianSem sample_sem(const ChainGraph& g, Criterion variant, std::uint64_t seed,
                       MagnitudeRange range = {});

/// inverse(lambda) * beta for one block; throws NumericalFailure.
Eigen::MatrixXd natural_coefficients(const SemBlock& block);

/// Joint covariance over all vertices, labels sorted. Throws NumericalFailure
/// when the result fails the Cholesky certificate.
LabeledMatrix joint_covariance(const GaussianSem& sem);

/// Sigma_AB - Sigma_AS inverse(Sigma_SS) Sigma_SB.
Eigen::MatrixXd partial_covariance(const LabeledMatrix& sigma, const VertexSet& a,
                                   const VertexSet& b, const VertexSet& s);
/// Largest absolute entry of the partial covariance (0 when A or B is empty).
double partial_covariance_magnitude(const LabeledMatrix& sigma, const VertexSet& a,
                                    const VertexSet& b, const VertexSet& s);
/// A ⊥ B | S holds when every partial covariance entry is below `tol`.
bool gaussian_ci(const LabeledMatrix& sigma, const VertexSet& a, const VertexSet& b,
                 const VertexSet& s, double tol);

struct CertificationOptions {
    std::size_t seeds = 5;
    std::uint64_t base_seed = 1;
    double sound_tol = 1e-9;
    double complete_threshold = 1e-4;
    MagnitudeRange range{};
};

struct CertificationViolation {
    CIQuery query;
    std::string origin;  // "global" or a block clause name
    std::uint64_t seed = 0;  // seed of the offending draw; unused for completeness failures
    double magnitude = 0.0;  // completeness failures report the maximum across seeds
};

struct CertificationReport {
    Criterion criterion = Criterion::amp;
    CertificationOptions options;
    std::size_t separated_triples = 0;
    std::size_t block_statements = 0;
    std::size_t dependent_pairs = 0;
    std::vector<CertificationViolation> soundness_violations;
    std::vector<CertificationViolation> completeness_failures;

    bool passed() const noexcept {
        return soundness_violations.empty() && completeness_failures.empty();
    }
};

inline constexpr std::size_t max_certify_vertices = 6;

/// Checks every separated triple (full mode) and every block-recursive
/// statement against `seeds` sampled models of the matching variant, and
/// checks that every pairwise triple that is not separated shows a partial
/// covariance above the completeness threshold in at least one draw.
CertificationReport certify(const ChainGraph& g, Criterion criterion,
                            const CertificationOptions& options = {});

}  // namespace chaingraph

#endif  // CHAINGRAPH_GAUSSIAN_ORACLE_HPP
