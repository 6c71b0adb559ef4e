#include <chaingraph/gaussian_oracle.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace chaingraph {

std::size_t LabeledMatrix::position(const Vertex& v) const {
    auto it = std::find(labels.begin(), labels.end(), v);
    if (it == labels.end()) throw UnknownVertex(v);
    return static_cast<std::size_t>(it - labels.begin());
}

double LabeledMatrix::at(const Vertex& row, const Vertex& col) const {
    return values(static_cast<Eigen::Index>(position(row)), static_cast<Eigen::Index>(position(col)));
}

Eigen::MatrixXd LabeledMatrix::block(const VertexSet& rows, const VertexSet& cols) const {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    Eigen::Index r = 0;
    for (const auto& u : rows) {
        Eigen::Index c = 0;
        for (const auto& v : cols) out(r, c++) = at(u, v);
        ++r;
    }
    return out;
}

namespace {

class CoefficientSource {
public:
    explicit CoefficientSource(std::uint64_t seed) : engine_(seed) {}

    double signed_uniform(double low, double high) {
        std::uniform_real_distribution<double> magnitude(low, high);
        std::bernoulli_distribution negative(0.5);
        const double value = magnitude(engine_);
        return negative(engine_) ? -value : value;
    }

private:
    std::mt19937_64 engine_;
};

Eigen::MatrixXd spd_inverse(const Eigen::MatrixXd& m, const char* what) {
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() != Eigen::Success) throw NumericalFailure(std::string(what) + " is not positive definite");
    Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(m.rows(), m.cols()));
    return (inv + inv.transpose()) / 2.0;
}

}  // namespace

GaussianSem sample_sem(const ChainGraph& g, Criterion variant, std::uint64_t seed, MagnitudeRange range) {
    CoefficientSource source(seed);
    const auto cs = chain_components(g);
    GaussianSem sem;
    sem.variant = variant;

    for (auto t : cs.topological_order()) {
        SemBlock block;
        block.members.assign(cs.components[t].begin(), cs.components[t].end());
        const auto regressors = cs.members(cs.dag_parents(t));
        block.regressors.assign(regressors.begin(), regressors.end());
        const auto m = static_cast<Eigen::Index>(block.members.size());
        const auto r = static_cast<Eigen::Index>(block.regressors.size());

        // Precision matrix supported on the lines of G_tau, diagonally dominant.
        Eigen::MatrixXd precision = Eigen::MatrixXd::Zero(m, m);
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = i + 1; j < m; ++j)
                if (g.has_line(block.members[static_cast<std::size_t>(i)],
                               block.members[static_cast<std::size_t>(j)])) {
                    precision(i, j) = precision(j, i) = source.signed_uniform(0.1, 0.3);
                }
        for (Eigen::Index i = 0; i < m; ++i) precision(i, i) = precision.row(i).cwiseAbs().sum() + 1.0;
        block.lambda = spd_inverse(precision, "precision matrix");

        Eigen::MatrixXd coefficients = Eigen::MatrixXd::Zero(m, r);
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j < r; ++j)
                if (g.has_arrow(block.regressors[static_cast<std::size_t>(j)],
                                block.members[static_cast<std::size_t>(i)])) {
                    coefficients(i, j) = source.signed_uniform(range.low, range.high);
                }
        block.beta = variant == Criterion::amp ? coefficients : Eigen::MatrixXd(block.lambda * coefficients);
        sem.blocks.push_back(std::move(block));
    }
    return sem;
}

Eigen::MatrixXd natural_coefficients(const SemBlock& block) {
    Eigen::LLT<Eigen::MatrixXd> llt(block.lambda);
    if (llt.info() != Eigen::Success) throw NumericalFailure("error covariance is not positive definite");
    return llt.solve(block.beta);
}

LabeledMatrix joint_covariance(const GaussianSem& sem) {
    std::vector<Vertex> order;
    Eigen::MatrixXd sigma(0, 0);

    for (const auto& block : sem.blocks) {
        const auto m = static_cast<Eigen::Index>(block.members.size());
        const auto r = static_cast<Eigen::Index>(block.regressors.size());
        if (block.beta.rows() != m || block.beta.cols() != r || block.lambda.rows() != m ||
            block.lambda.cols() != m) {
            throw std::invalid_argument("SEM block dimensions do not match its labels");
        }
        std::vector<Eigen::Index> reg;
        for (const auto& v : block.regressors) {
            auto it = std::find(order.begin(), order.end(), v);
            if (it == order.end()) throw std::invalid_argument("regressor '" + v + "' not defined earlier");
            reg.push_back(it - order.begin());
        }
        const auto k = static_cast<Eigen::Index>(order.size());
        Eigen::MatrixXd rows_of_regressors(r, k);
        for (Eigen::Index i = 0; i < r; ++i) rows_of_regressors.row(i) = sigma.row(reg[static_cast<std::size_t>(i)]);
        Eigen::MatrixXd regressor_cov(r, r);
        for (Eigen::Index j = 0; j < r; ++j) regressor_cov.col(j) = rows_of_regressors.col(reg[static_cast<std::size_t>(j)]);

        const Eigen::MatrixXd cross = block.beta * rows_of_regressors;  // m x k
        const Eigen::MatrixXd own = block.beta * regressor_cov * block.beta.transpose() + block.lambda;

        Eigen::MatrixXd grown(k + m, k + m);
        grown.topLeftCorner(k, k) = sigma;
        grown.bottomLeftCorner(m, k) = cross;
        grown.topRightCorner(k, m) = cross.transpose();
        grown.bottomRightCorner(m, m) = (own + own.transpose()) / 2.0;
        sigma = std::move(grown);
        order.insert(order.end(), block.members.begin(), block.members.end());
    }

    LabeledMatrix out;
    out.labels = order;
    std::sort(out.labels.begin(), out.labels.end());
    const auto n = static_cast<Eigen::Index>(order.size());
    std::vector<Eigen::Index> from(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i)
        from[static_cast<std::size_t>(i)] =
            std::find(order.begin(), order.end(), out.labels[static_cast<std::size_t>(i)]) - order.begin();
    out.values.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            out.values(i, j) = sigma(from[static_cast<std::size_t>(i)], from[static_cast<std::size_t>(j)]);

    if (n > 0 && Eigen::LLT<Eigen::MatrixXd>(out.values).info() != Eigen::Success)
        throw NumericalFailure("joint covariance is not positive definite");
    return out;
}

Eigen::MatrixXd partial_covariance(const LabeledMatrix& sigma, const VertexSet& a, const VertexSet& b,
                                   const VertexSet& s) {
    Eigen::MatrixXd ab = sigma.block(a, b);
    if (s.empty() || a.empty() || b.empty()) return ab;
    Eigen::LLT<Eigen::MatrixXd> llt(sigma.block(s, s));
    if (llt.info() != Eigen::Success) throw NumericalFailure("conditioning block is not positive definite");
    return ab - sigma.block(a, s) * llt.solve(sigma.block(s, b));
}

double partial_covariance_magnitude(const LabeledMatrix& sigma, const VertexSet& a, const VertexSet& b,
                                    const VertexSet& s) {
    if (a.empty() || b.empty()) return 0.0;
    return partial_covariance(sigma, a, b, s).cwiseAbs().maxCoeff();
}

bool gaussian_ci(const LabeledMatrix& sigma, const VertexSet& a, const VertexSet& b, const VertexSet& s,
                 double tol) {
    return partial_covariance_magnitude(sigma, a, b, s) < tol;
}

CertificationReport certify(const ChainGraph& g, Criterion criterion, const CertificationOptions& options) {
    if (g.size() > max_certify_vertices) throw TooLarge(g.size(), max_certify_vertices);

    CertificationReport report;
    report.criterion = criterion;
    report.options = options;

    const auto triples = enumerate_triples(g, criterion, TripleMode::full, max_certify_vertices);
    const auto statements = block_recursive_statements(g, criterion);
    const auto pairwise = enumerate_triples(g, criterion, TripleMode::pairwise, max_certify_vertices);
    const std::set<CIQuery> separated_pairs(pairwise.begin(), pairwise.end());

    std::vector<CIQuery> dependent;
    const auto& names = g.vertices();
    for (std::size_t v = 0; v < names.size(); ++v)
        for (std::size_t w = v + 1; w < names.size(); ++w) {
            std::vector<Vertex> rest;
            for (std::size_t x = 0; x < names.size(); ++x)
                if (x != v && x != w) rest.push_back(names[x]);
            for (std::size_t mask = 0; mask < (std::size_t{1} << rest.size()); ++mask) {
                CIQuery q{{names[v]}, {names[w]}, {}};
                for (std::size_t k = 0; k < rest.size(); ++k)
                    if (mask & (std::size_t{1} << k)) q.s.insert(rest[k]);
                if (!separated_pairs.contains(q)) dependent.push_back(std::move(q));
            }
        }
    std::sort(dependent.begin(), dependent.end());

    report.separated_triples = triples.size();
    report.block_statements = statements.size();
    report.dependent_pairs = dependent.size();

    std::vector<double> strongest(dependent.size(), 0.0);
    for (std::size_t draw = 0; draw < options.seeds; ++draw) {
        const auto seed = options.base_seed + draw;
        const auto sigma = joint_covariance(sample_sem(g, criterion, seed, options.range));
        for (const auto& q : triples) {
            const double magnitude = partial_covariance_magnitude(sigma, q.a, q.b, q.s);
            if (!(magnitude < options.sound_tol))
                report.soundness_violations.push_back({q, "global", seed, magnitude});
        }
        for (const auto& st : statements) {
            const double magnitude = partial_covariance_magnitude(sigma, st.query.a, st.query.b, st.query.s);
            if (!(magnitude < options.sound_tol))
                report.soundness_violations.push_back({st.query, to_string(st.source), seed, magnitude});
        }
        for (std::size_t k = 0; k < dependent.size(); ++k) {
            const auto& q = dependent[k];
            strongest[k] = std::max(strongest[k], partial_covariance_magnitude(sigma, q.a, q.b, q.s));
        }
    }
    for (std::size_t k = 0; k < dependent.size(); ++k)
        if (!(strongest[k] > options.complete_threshold))
            report.completeness_failures.push_back({dependent[k], "pairwise", 0, strongest[k]});
    return report;
}

}  // namespace chaingraph
