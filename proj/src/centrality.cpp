#include "hypercen/centrality.hpp"

#include "hypercen/errors.hpp"
#include "hypercen/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace hypercen::centrality {

namespace {

constexpr double kSeriesIncrementTol = 1e-12;  // inf-norm stop on increments
constexpr int kSeriesTermCap = 100000;

struct SeriesSum {
    Eigen::VectorXd sum;
    int terms = 0;
    bool truncated = false;
};

// sum_{k>=0} (beta*M)^k * rhs, accumulated until the increment inf-norm
// falls below the tolerance or the term cap is reached.
SeriesSum series_resolvent(const Eigen::MatrixXd& m, double beta, const Eigen::VectorXd& rhs) {
    SeriesSum out;
    Eigen::VectorXd term = rhs;
    out.sum = rhs;
    out.terms = 1;
    while (term.lpNorm<Eigen::Infinity>() >= kSeriesIncrementTol) {
        if (out.terms >= kSeriesTermCap) {
            out.truncated = true;
            break;
        }
        term = beta * (m * term);
        out.sum += term;
        ++out.terms;
    }
    return out;
}

// (I - beta*M) x = rhs. The caller has already run the pole guard.
Eigen::VectorXd solve_resolvent(const Eigen::MatrixXd& m, double beta, const Eigen::VectorXd& rhs) {
    if (beta == 0.0) return rhs;
    const Eigen::MatrixXd system =
        Eigen::MatrixXd::Identity(m.rows(), m.cols()) - beta * m;
    return system.partialPivLu().solve(rhs);
}

double residual_inf(const Eigen::MatrixXd& m, double beta, const Eigen::VectorXd& x,
                    const Eigen::VectorXd& rhs) {
    if (x.size() == 0) return 0.0;
    return (x - beta * (m * x) - rhs).lpNorm<Eigen::Infinity>();
}

struct SpectrumGuard {
    Eigen::VectorXd eigenvalues;  // descending
    double lambda_max = 0.0;
    double rho = 0.0;  // spectral radius
};

SpectrumGuard guarded_spectrum(const Eigen::MatrixXd& m, double beta) {
    SpectrumGuard g;
    g.eigenvalues = spectral::spectrum(m);
    if (g.eigenvalues.size() > 0) {
        g.lambda_max = g.eigenvalues(0);
        g.rho = g.eigenvalues.cwiseAbs().maxCoeff();
    }
    const auto check = spectral::is_pole_of_spectrum(beta, g.eigenvalues);
    if (check.pole) throw PoleError(beta, check.eigenvalue, check.distance);
    return g;
}

void require_series_radius(double beta, double rho) {
    if (rho > 0.0 && std::abs(beta) * rho >= 1.0)
        throw SeriesDivergenceError(beta, rho);
}

} // namespace

CentralityResult eigencentrality_graph(const Eigen::MatrixXd& a) {
    CentralityResult result;
    result.node_scores = spectral::perron_vector(a);
    result.meta.method = Method::eigenvector;
    result.meta.lambda_max = spectral::lambda_max(a);
    return result;
}

CentralityResult eigencentrality_hyper(const Hypergraph& h) {
    if (h.edge_count() == 0 || h.weights().cwiseAbs().maxCoeff() <= 0.0)
        throw ZeroSpectrumError("zero weight matrix has no eigenvector centrality");
    const Eigen::MatrixXd& w = h.weights();
    CentralityResult result;
    result.node_scores = spectral::perron_vector(Eigen::MatrixXd(w * w.transpose()));
    result.edge_scores = spectral::perron_vector(Eigen::MatrixXd(w.transpose() * w));
    result.meta.method = Method::eigenvector;
    result.meta.lambda_max = spectral::lambda_max(Eigen::MatrixXd(w * w.transpose()));
    return result;
}

CentralityResult general_centrality_graph(const Eigen::MatrixXd& a,
                                          const GraphCentralityParams& params,
                                          Method method) {
    if (method == Method::eigenvector)
        throw std::invalid_argument("use eigencentrality_graph for the eigenvector method");
    const auto guard = guarded_spectrum(a, params.beta);
    const Eigen::VectorXd degree = a * Eigen::VectorXd::Ones(a.cols());

    CentralityResult result;
    result.meta.method = method;
    result.meta.lambda_max = guard.lambda_max;
    result.meta.non_communicative = std::abs(params.beta) * guard.lambda_max > 1.0;

    if (params.beta == 0.0) {
        // c(alpha, 0) is exactly alpha times the weighted degree.
        result.node_scores = params.alpha * degree;
        return result;
    }

    if (method == Method::neumann_series) {
        require_series_radius(params.beta, guard.rho);
        auto series = series_resolvent(a, params.beta, degree);
        result.node_scores = params.alpha * series.sum;
        result.meta.series_terms = series.terms;
        result.meta.series_truncated = series.truncated;
    } else {
        result.node_scores = params.alpha * solve_resolvent(a, params.beta, degree);
    }
    result.meta.residual_norm =
        residual_inf(a, params.beta, result.node_scores, params.alpha * degree);
    return result;
}

CentralityResult general_centrality_hyper(const Hypergraph& h,
                                          const HyperCentralityParams& params,
                                          Method method) {
    if (method == Method::eigenvector)
        throw std::invalid_argument("use eigencentrality_hyper for the eigenvector method");
    const Eigen::MatrixXd& w = h.weights();
    const Eigen::MatrixXd m_node = w * w.transpose();
    const double beta = params.beta1 * params.beta2;
    const auto guard = guarded_spectrum(m_node, beta);

    const Eigen::VectorXd ones_e = Eigen::VectorXd::Ones(h.edge_count());
    const Eigen::VectorXd ones_v = Eigen::VectorXd::Ones(h.node_count());
    const Eigen::VectorXd node_degree = w * ones_e;
    const Eigen::VectorXd edge_degree = w.transpose() * ones_v;

    // x rhs: W(a1*1 + b1*a2*W^T*1); y rhs: W^T(a2*1 + b2*a1*W*1)
    const Eigen::VectorXd rhs_x = params.alpha1 * node_degree + params.beta1 * params.alpha2 * (m_node * ones_v);
    const Eigen::VectorXd rhs_y =
        params.alpha2 * edge_degree + params.beta2 * params.alpha1 * (w.transpose() * node_degree);

    CentralityResult result;
    result.meta.method = method;
    result.meta.lambda_max = guard.lambda_max;
    result.meta.non_communicative = std::abs(beta) * guard.lambda_max > 1.0;

    if (method == Method::neumann_series) {
        require_series_radius(beta, guard.rho);
        auto combined = series_resolvent(m_node, beta, rhs_x);
        result.node_scores = combined.sum;
        result.meta.series_terms = combined.terms;
        result.meta.series_truncated = combined.truncated;
        // Split: communications ending at edges vs at nodes.
        auto to_edges = series_resolvent(m_node, beta, Eigen::VectorXd(params.alpha1 * node_degree));
        auto to_nodes = series_resolvent(
            m_node, beta, Eigen::VectorXd(params.beta1 * params.alpha2 * (m_node * ones_v)));
        result.edge_communications = to_edges.sum;
        result.node_communications = to_nodes.sum;
        if (h.edge_count() > 0) {
            const Eigen::MatrixXd m_edge = w.transpose() * w;
            auto y_series = series_resolvent(m_edge, beta, rhs_y);
            result.edge_scores = y_series.sum;
        } else {
            result.edge_scores = Eigen::VectorXd(0);
        }
    } else {
        result.node_scores = solve_resolvent(m_node, beta, rhs_x);
        if (h.edge_count() > 0) {
            const Eigen::MatrixXd m_edge = w.transpose() * w;
            result.edge_scores = solve_resolvent(m_edge, beta, rhs_y);
        } else {
            result.edge_scores = Eigen::VectorXd(0);
        }
    }
    result.meta.residual_norm = residual_inf(m_node, beta, result.node_scores, rhs_x);
    return result;
}

CentralityResult general_centrality_directed(const DirectedHypergraph& dh,
                                             const HyperCentralityParams& params) {
    const Eigen::MatrixXd& w = dh.base().weights();
    const Eigen::MatrixXd zt = dh.z().transpose();
    const Eigen::MatrixXd m_node = w * zt;  // node-to-node communication weights
    const double beta = params.beta1 * params.beta2;

    const Eigen::VectorXd ones_e = Eigen::VectorXd::Ones(w.cols());
    const Eigen::VectorXd ones_v = Eigen::VectorXd::Ones(w.rows());
    const Eigen::VectorXd rhs_x =
        params.alpha1 * (w * ones_e) + params.beta1 * params.alpha2 * (w * (zt * ones_v));
    const Eigen::VectorXd rhs_y =
        params.alpha2 * (zt * ones_v) + params.beta2 * params.alpha1 * (zt * (w * ones_e));

    CentralityResult result;
    result.meta.method = Method::direct_solve;

    const Eigen::MatrixXd sys_x =
        Eigen::MatrixXd::Identity(m_node.rows(), m_node.cols()) - beta * m_node;
    Eigen::FullPivLU<Eigen::MatrixXd> lu_x(sys_x);
    if (!lu_x.isInvertible())
        throw PoleError(beta, beta != 0.0 ? 1.0 / beta : 0.0, 0.0);
    result.node_scores = lu_x.solve(rhs_x);

    if (w.cols() > 0) {
        const Eigen::MatrixXd m_edge = zt * w;
        const Eigen::MatrixXd sys_y =
            Eigen::MatrixXd::Identity(m_edge.rows(), m_edge.cols()) - beta * m_edge;
        Eigen::FullPivLU<Eigen::MatrixXd> lu_y(sys_y);
        if (!lu_y.isInvertible())
            throw PoleError(beta, beta != 0.0 ? 1.0 / beta : 0.0, 0.0);
        result.edge_scores = lu_y.solve(rhs_y);
    } else {
        result.edge_scores = Eigen::VectorXd(0);
    }
    result.meta.residual_norm = residual_inf(m_node, beta, result.node_scores, rhs_x);
    return result;
}

std::vector<Eigen::VectorXd> neumann_partial_sums(const Eigen::MatrixXd& a, double c,
                                                  const Eigen::VectorXd& probe, int k_max) {
    if (k_max < 0) throw std::invalid_argument("k_max must be non-negative");
    std::vector<Eigen::VectorXd> sums;
    sums.reserve(static_cast<std::size_t>(k_max) + 1);
    Eigen::VectorXd term = probe;
    Eigen::VectorXd sum = probe;
    sums.push_back(sum);
    for (int k = 1; k <= k_max; ++k) {
        term = c * (a * term);
        sum += term;
        sums.push_back(sum);
    }
    return sums;
}

CentralityResult rescale_to_average(const CentralityResult& result) {
    const double sq = result.node_scores.squaredNorm();
    if (sq <= 0.0)
        throw DomainError("ZERO_SCORES", "cannot rescale an all-zero score vector");
    const double s = std::sqrt(static_cast<double>(result.node_scores.size()) / sq);
    CentralityResult scaled = result;
    scaled.node_scores *= s;
    if (scaled.edge_scores) *scaled.edge_scores *= s;
    if (scaled.edge_communications) *scaled.edge_communications *= s;
    if (scaled.node_communications) *scaled.node_communications *= s;
    scaled.meta.rescaled = true;
    return scaled;
}

double expected_communication_length(double beta) {
    if (beta < 0.0 || beta >= 1.0)
        throw std::invalid_argument("expected_communication_length needs 0 <= beta < 1");
    return 1.0 / (1.0 - beta);
}

BalanceReport balance_report(const Eigen::MatrixXd& a, double beta,
                             const CentralityResult& result) {
    if (result.node_scores.size() != a.rows())
        throw std::invalid_argument("balance_report: result does not match the matrix");
    const Eigen::VectorXd degree = a * Eigen::VectorXd::Ones(a.cols());
    BalanceReport report;
    report.rows.resize(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i) {
        BalanceRow& row = report.rows[static_cast<std::size_t>(i)];
        row.degree = degree(i);
        for (int j = 0; j < a.cols(); ++j) {
            const double contribution = a(i, j) * result.node_scores(j);
            if (result.node_scores(j) > 0.0)
                row.positive_neighbor_sum += contribution;
            else if (result.node_scores(j) < 0.0)
                row.negative_neighbor_sum += contribution;
        }
        row.residual = row.degree +
                       beta * (row.positive_neighbor_sum + row.negative_neighbor_sum) -
                       result.node_scores(i);
        report.max_abs_residual = std::max(report.max_abs_residual, std::abs(row.residual));
    }
    return report;
}

} // namespace hypercen::centrality
