#pragma once

#include "hypercen/hypergraph.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace hypercen::netgen {

enum class StartMode { new_node, random_existing, preferential_by_degree };
enum class PreferenceMode { degree, centrality, local_centrality, cluster_coefficient };
enum class NetMode { graph, hypergraph };

struct GenConfig {
    NetMode mode = NetMode::graph;
    StartMode start = StartMode::new_node;
    PreferenceMode preference = PreferenceMode::degree;
    int iterations = 0;
    int links_per_step = 1;   // m
    double edge_weight = 0.1;
    double beta = 0.5;        // used by centrality-flavored preferences
    double p_join = 0.5;      // hypergraph growth: chance to join an existing edge
    std::uint64_t rng_seed = 0;
};

struct StepRecord {
    int start = -1;
    std::vector<int> target_nodes;
    std::vector<int> joined_edges;  // hypergraph mode
    bool fallback = false;          // degenerate all-zero preference, uniform draw
};

using Logger = std::function<void(const std::string&)>;

struct GrownNetwork {
    NetMode mode = NetMode::graph;
    Eigen::MatrixXd adjacency;  // graph mode
    Hypergraph hyper;           // hypergraph mode
    GenConfig config;
    std::vector<StepRecord> steps;
    int fallback_events = 0;

    int node_count() const;
    // Matrix the analysis operations run on: the adjacency itself for
    // graphs, W W^T for hypergraphs.
    Eigen::MatrixXd analysis_adjacency() const;
    // Graph as a hypergraph with one 2-node hyperedge per link, member
    // weights equal to the link weight. Used for file output.
    Hypergraph as_hypergraph() const;
};

// Triangle of 3 nodes (pairwise 2-node hyperedges in hypergraph mode), all
// weights equal to config.edge_weight.
GrownNetwork seed_network(const GenConfig& config);

// Preferential attachment from the 3-node seed: each step picks a starting
// node per config.start, then attaches links_per_step links to targets
// sampled proportionally to the preference scores. Negative scores are
// floored at 0 and every candidate keeps a 1e-9 uniform floor; an all-zero
// preference falls back to uniform and is counted and logged.
GrownNetwork grow(const GenConfig& config, const Logger& logger = {});

// Wraps an existing adjacency for add_edges and analysis.
GrownNetwork from_adjacency(Eigen::MatrixXd adjacency, GenConfig config);

struct AddEdgesOutcome {
    GrownNetwork network;
    int achieved = 0;  // may fall short when the network saturates
};

// Adds links between existing nodes (no new nodes). Start mode must be
// random_existing or preferential_by_degree. Self-links and duplicates are
// never produced; a saturated network ends the run early.
AddEdgesOutcome add_edges(const GrownNetwork& network, const GenConfig& config, int count);

// Local clustering coefficient on the binarized (weight > 0) simple graph,
// self-loops ignored. Degree below 2 scores 0.
Eigen::VectorXd cluster_coefficient(const Eigen::MatrixXd& adjacency);

struct PowerLawFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    bool valid = false;
};

// Least squares on log10(bin center) vs log10(count density) over
// logarithmic bins (at least 5) of the degree frequency.
PowerLawFit fit_power_law(const std::map<int, int>& degree_histogram);

struct TopologyReport {
    Eigen::VectorXi degrees;  // unweighted neighbor counts
    Eigen::VectorXd centrality;
    bool centrality_valid = false;
    std::string centrality_note;  // set when the centrality column is skipped
    Eigen::VectorXd cluster;
    std::map<int, int> degree_histogram;
    PowerLawFit fit;
    double lambda_max = 0.0;
};

// Degree histogram, centrality-vs-degree and cluster-vs-degree columns,
// power-law fit, and lambda_max. A pole at the requested beta skips the
// centrality column with a note instead of failing.
TopologyReport analyze(const Eigen::MatrixXd& adjacency, double beta);

std::vector<std::pair<double, TopologyReport>> beta_sweep(const Eigen::MatrixXd& adjacency,
                                                          const std::vector<double>& betas);

} // namespace hypercen::netgen
