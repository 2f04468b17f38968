#pragma once

#include "hypercen/hypergraph.hpp"

#include <Eigen/Dense>

#include <cstdint>

namespace hypercen::propagation {

struct PropagationConfig {
    double pass_probability_edge = 1.0;   // beta1: chance an edge relays
    double pass_probability_node = 0.5;   // beta2: chance a node selects
    int walks_per_node = 10000;
    std::uint64_t rng_seed = 0;
    int max_hops = 64;  // cap on communication length (bipartite hops in hypergraph mode)
    int threads = 1;
};

struct PropagationStats {
    Eigen::VectorXd estimate;           // expected communications per start node
    Eigen::VectorXd standard_error;
    Eigen::VectorXd mean_chain_length;  // hops actually made per walk
    // Hypergraph mode split; estimate = edge_estimate + node_estimate.
    Eigen::VectorXd edge_estimate;
    Eigen::VectorXd node_estimate;
    double truncation_bound = 0.0;  // (beta*lambda_max)^(max_hops+1)/(1-beta*lambda_max)
    int walks_per_node = 0;
    int max_hops = 0;
};

// Monte-Carlo estimate of the communication count series
//   sum_{k=0}^{max_hops-1} beta^k (A^{k+1} 1)_i
// per start node i, with beta = pass_probability_node. Each walk hops to a
// neighbor sampled proportionally to the row weights while the path carries
// the product of row sums, so a length-(k+1) communication contributes its
// exact path weight and the Bernoulli continuations supply the beta^k
// factor. The estimator is unbiased for the truncated series.
PropagationStats simulate_graph(const Eigen::MatrixXd& a, const PropagationConfig& config);

// Alternating node->edge (weights W, relay chance beta1) and edge->node
// (weights W^T, select chance beta2) walk. Counts communications landing on
// edges and on nodes separately; expectations match the two sums
//   sum_k (b1 b2)^k ((W W^T)^k W 1)    (to edges)
//   b1 sum_k (b1 b2)^k ((W W^T)^{k+1} 1)  (to nodes)
// truncated at max_hops bipartite hops.
PropagationStats simulate_hyper(const Hypergraph& h, const PropagationConfig& config);

// Exact oracles: enumerate every walk up to the hop cap and add up
// beta-weighted path weights. Exponential in max_hops; intended for small
// instances (n <= 6, hops <= 8).
Eigen::VectorXd enumerate_graph(const Eigen::MatrixXd& a, double beta, int max_hops);

struct HyperCommunicationSums {
    Eigen::VectorXd to_edges;
    Eigen::VectorXd to_nodes;
};

HyperCommunicationSums enumerate_hyper(const Hypergraph& h, double beta1, double beta2,
                                       int max_hops);

// Truncated analytic series evaluated by repeated matrix-vector products;
// the expectation the simulators and enumerators are checked against.
Eigen::VectorXd truncated_series_graph(const Eigen::MatrixXd& a, double beta, int max_hops);
HyperCommunicationSums truncated_series_hyper(const Hypergraph& h, double beta1, double beta2,
                                              int max_hops);

} // namespace hypercen::propagation
