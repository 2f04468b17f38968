#pragma once

#include "hypercen/hypergraph.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace hypercen::centrality {

enum class Method { direct_solve, neumann_series, eigenvector };

struct GraphCentralityParams {
    double alpha = 1.0;  // scale factor, no effect on the distribution
    double beta = 0.5;   // pass probability / attenuation; negative allowed
};

struct HyperCentralityParams {
    double alpha1 = 1.0;  // node-side scale
    double alpha2 = 1.0;  // edge-side scale
    double beta1 = 1.0;   // chance an edge relays
    double beta2 = 0.5;   // chance a node selects
};

struct ResultMeta {
    Method method = Method::direct_solve;
    double lambda_max = 0.0;      // of the matrix behind the solve
    int series_terms = 0;         // terms accumulated (series mode)
    bool series_truncated = false;  // hit the term cap before the tolerance
    double residual_norm = 0.0;   // inf-norm of (I - beta*A)c - rhs
    bool non_communicative = false;  // |beta| * lambda_max > 1, solve mode
    bool rescaled = false;
};

struct CentralityResult {
    Eigen::VectorXd node_scores;
    std::optional<Eigen::VectorXd> edge_scores;
    // Series mode on hypergraphs: the two accumulated sums. Their FP sum
    // reproduces node_scores to 1e-10.
    std::optional<Eigen::VectorXd> edge_communications;
    std::optional<Eigen::VectorXd> node_communications;
    ResultMeta meta;
};

struct BalanceRow {
    double degree = 0.0;
    double positive_neighbor_sum = 0.0;
    double negative_neighbor_sum = 0.0;
    double residual = 0.0;  // degree + beta*(pos+neg) - score
};

struct BalanceReport {
    std::vector<BalanceRow> rows;
    double max_abs_residual = 0.0;
};

// Perron eigenvector centrality of a graph adjacency matrix.
CentralityResult eigencentrality_graph(const Eigen::MatrixXd& a);

// Coupled node/edge eigenvector centrality: x from W W^T, y from W^T W.
CentralityResult eigencentrality_hyper(const Hypergraph& h);

// c(alpha, beta) = alpha * (I - beta*A)^-1 * A * 1, either by direct solve
// or by the equivalent power series when |beta| < 1/lambda_max. Throws
// PoleError at beta = 1/lambda and SeriesDivergenceError outside the series
// radius. In solve mode beta beyond 1/lambda_max is allowed and flagged
// non_communicative.
CentralityResult general_centrality_graph(const Eigen::MatrixXd& a,
                                          const GraphCentralityParams& params,
                                          Method method = Method::direct_solve);

// Node and edge centrality of a hypergraph:
//   x = (I - b1*b2*W*W^T)^-1 * W * (a1*1 + b1*a2*W^T*1)
//   y = (I - b1*b2*W^T*W)^-1 * W^T * (a2*1 + b2*a1*W*1)
// Series mode also fills the edge/node communication split.
CentralityResult general_centrality_hyper(const Hypergraph& h,
                                          const HyperCentralityParams& params,
                                          Method method = Method::direct_solve);

// Directed variant with Z^T in place of W^T. Solve mode only; the series
// convergence condition is stated for symmetric matrices.
CentralityResult general_centrality_directed(const DirectedHypergraph& dh,
                                             const HyperCentralityParams& params);

// Partial sums S_n * probe for S_n = sum_{k=0..n} (c*A)^k, n = 0..k_max.
// Divergence outside |c| < 1/lambda_max is left observable to the caller.
std::vector<Eigen::VectorXd> neumann_partial_sums(const Eigen::MatrixXd& a, double c,
                                                  const Eigen::VectorXd& probe, int k_max);

// Scales node scores so that sum of squares equals the node count (score 1
// is average). Edge scores, when present, are scaled by the same factor to
// keep the node/edge coupling intact.
CentralityResult rescale_to_average(const CentralityResult& result);

// 1/(1-beta): expected length of a relay chain with pass chance beta.
double expected_communication_length(double beta);

// Decomposes score_i = degree_i + beta * (sum over positively scored
// neighbors + sum over negatively scored neighbors), weighted by A_ij.
// `result` must come from general_centrality_graph(a, {1, beta}).
BalanceReport balance_report(const Eigen::MatrixXd& a, double beta,
                             const CentralityResult& result);

} // namespace hypercen::centrality
