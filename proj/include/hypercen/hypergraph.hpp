#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace hypercen {

enum class Weighting { unweighted, weighted };

// Weighted hypergraph held as its |V| x |E| node-in-edge weight matrix W.
// Entries are expected in [0,1]; the incidence pattern is W_ij > 0.
//
// Construction does not range-check the weights so that validate() can
// report violations found in loaded data. Values are immutable in normal
// use; set_weight() exists for the single-writer learning and generation
// loops.
class Hypergraph {
public:
    Hypergraph() : weights_(Eigen::MatrixXd::Zero(1, 0)) {}

    explicit Hypergraph(Eigen::MatrixXd weights,
                        std::vector<std::string> node_labels = {},
                        std::vector<std::string> edge_labels = {});

    int node_count() const { return static_cast<int>(weights_.rows()); }
    int edge_count() const { return static_cast<int>(weights_.cols()); }

    const Eigen::MatrixXd& weights() const { return weights_; }
    double weight(int node, int edge) const { return weights_(node, edge); }

    // Single-writer contexts only (learning loop, generator).
    void set_weight(int node, int edge, double value);
    void append_edge(const std::vector<std::pair<int, double>>& members,
                     std::string label = {});
    void append_node(std::string label = {});

    // Incidence pattern R: R_ij = 1 iff W_ij > 0.
    Eigen::MatrixXi incidence() const;

    bool has_node_labels() const { return !node_labels_.empty(); }
    bool has_edge_labels() const { return !edge_labels_.empty(); }
    const std::vector<std::string>& node_labels() const { return node_labels_; }
    const std::vector<std::string>& edge_labels() const { return edge_labels_; }

    // Stored label, or a generated "n<i+1>" / "e<j+1>" fallback.
    std::string node_label(int node) const;
    std::string edge_label(int edge) const;

private:
    Eigen::MatrixXd weights_;
    std::vector<std::string> node_labels_;
    std::vector<std::string> edge_labels_;
};

// Adds the edge-to-node weight matrix Z (same shape as W). The input node
// set of an edge is the nonzero pattern of W's column, the output set the
// nonzero pattern of Z's column.
class DirectedHypergraph {
public:
    DirectedHypergraph(Hypergraph base, Eigen::MatrixXd z);

    const Hypergraph& base() const { return base_; }
    const Eigen::MatrixXd& z() const { return z_; }

private:
    Hypergraph base_;
    Eigen::MatrixXd z_;
};

// Node-to-node graph induced by shared hyperedge membership.
// Undirected: A = W W^T (symmetric PSD, diagonal retained).
// Directed:   A = W Z^T (Z stored node-by-edge, so Z^T plays the role the
//             edge-to-node matrix has in the product).
struct ProjectedGraph {
    Eigen::MatrixXd adjacency;
    std::vector<std::string> node_labels;
    bool directed = false;
};

struct BipartiteGraph {
    int left_count = 0;   // nodes
    int right_count = 0;  // hyperedges
    Eigen::MatrixXd biadjacency;
    std::vector<std::string> left_labels;
    std::vector<std::string> right_labels;
};

struct ValidationIssue {
    enum class Kind { weight_out_of_range, nonfinite_weight, empty_edge, isolated_node };
    Kind kind;
    int node = -1;  // -1 when not node-specific
    int edge = -1;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> errors;
    std::vector<ValidationIssue> warnings;
    bool valid() const { return errors.empty(); }
};

// Reports out-of-range or non-finite weights as errors, empty edges and
// isolated nodes as warnings. Never mutates.
ValidationReport validate(const Hypergraph& h);

ProjectedGraph project(const Hypergraph& h);
ProjectedGraph project(const DirectedHypergraph& dh);

BipartiteGraph to_bipartite(const Hypergraph& h);
Hypergraph from_bipartite(const BipartiteGraph& b);

// Unweighted: number of incident edges (nonzeros per row). Weighted: W * 1.
Eigen::VectorXd node_degrees(const Hypergraph& h, Weighting w = Weighting::weighted);
// Unweighted: number of member nodes (nonzeros per column). Weighted: W^T * 1.
Eigen::VectorXd edge_degrees(const Hypergraph& h, Weighting w = Weighting::weighted);

} // namespace hypercen
