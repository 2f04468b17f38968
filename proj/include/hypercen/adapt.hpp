#pragma once

#include "hypercen/centrality.hpp"
#include "hypercen/hypergraph.hpp"

#include <Eigen/Dense>

#include <functional>
#include <utility>
#include <vector>

namespace hypercen::adapt {

struct Challenge {
    Eigen::VectorXd values;
    double norm() const { return values.norm(); }
};

// The relaxation applied by a node to a challenge. The embedding
// application supplies real processors; linear_contraction is the shipped
// default used in tests and the demo loop.
using ProcessingFunction = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

ProcessingFunction linear_contraction(double kappa = 0.5);

struct LearningConfig {
    double rate = 0.1;        // r: reward step per unit of norm reduction
    double punishment = 0.0;  // p: step when a challenge is not selected
};

struct FitnessConfig {
    double proportionality = 1.0;  // constant in mutation_rate = constant / fitness
    double fitness_floor = 1e-6;   // fitness values at or below this are floored
    double rate_cap() const { return 1e6 * proportionality; }
};

struct FitnessEntry {
    double fitness = 0.0;
    double mutation_rate = 0.0;
    int samples = 0;
};

struct UpdateOutcome {
    double old_weight = 0.0;
    double new_weight = 0.0;
    bool clamped = false;
};

// W_ij += rate * (|c| - |f(c)|), clamped to [0,1]. The node must be in the
// edge (W_ij > 0). In-place and functional variants agree bit-exactly.
UpdateOutcome delta_update_inplace(Hypergraph& h, int node, int edge, const Challenge& challenge,
                                   const ProcessingFunction& processor,
                                   const LearningConfig& config);
std::pair<Hypergraph, UpdateOutcome> delta_update(const Hypergraph& h, int node, int edge,
                                                  const Challenge& challenge,
                                                  const ProcessingFunction& processor,
                                                  const LearningConfig& config);

// W_ij -= punishment, clamped at 0. A weight driven to 0 leaves the edge's
// incidence pattern.
UpdateOutcome punish_inplace(Hypergraph& h, int node, int edge, const LearningConfig& config);
std::pair<Hypergraph, UpdateOutcome> punish(const Hypergraph& h, int node, int edge,
                                            const LearningConfig& config);

// fitness(E_j) = sum over processed challenges of (|c| - |relaxed|), divided
// by the unweighted edge degree. mutation_rate = proportionality / fitness,
// floored and capped per FitnessConfig so non-positive fitness stays finite.
FitnessEntry edge_fitness(const Hypergraph& h, int edge,
                          const std::vector<std::pair<Challenge, Challenge>>& processed,
                          const FitnessConfig& config = {});

// Communication chances from every node to every edge:
//   (I - b1*b2*W*W^T)^-1 * W
// With exclude_members, W is subtracted so current members score on their
// indirect reach only (raw values, may be negative).
Eigen::MatrixXd node_to_edge_scores(const Hypergraph& h, double beta1, double beta2,
                                    centrality::Method method = centrality::Method::direct_solve,
                                    bool exclude_members = false);

// One-step chance only: b1*b2 * W*W^T*W.
Eigen::MatrixXd node_to_edge_one_step(const Hypergraph& h, double beta1, double beta2);

// Node-to-node communication chances:
//   b1 * (I - b1*b2*W*W^T)^-1 * W*W^T
// With exclude_linked, b1*W*W^T is subtracted to ignore direct co-members.
Eigen::MatrixXd node_to_node_scores(const Hypergraph& h, double beta1, double beta2,
                                    centrality::Method method = centrality::Method::direct_solve,
                                    bool exclude_linked = false);

// Closest candidates only: b1^2*b2 * (W*W^T)^2.
Eigen::MatrixXd node_to_node_closest(const Hypergraph& h, double beta1, double beta2);

struct HyperedgeProposal {
    std::vector<int> members;  // best-scoring partners of the seed, score order
    bool short_list = false;   // fewer positive-score candidates than requested
};

// Seeds a new hyperedge from one node: ranks other nodes by the seed's row
// of node_to_node_scores, drops non-positive scores, breaks ties by lower
// node index.
HyperedgeProposal propose_hyperedge(const Hypergraph& h, int seed_node, double beta1,
                                    double beta2, int size, bool exclude_linked = false);

} // namespace hypercen::adapt
