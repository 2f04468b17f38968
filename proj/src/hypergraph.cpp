#include "hypercen/hypergraph.hpp"

#include <cmath>
#include <stdexcept>

namespace hypercen {

Hypergraph::Hypergraph(Eigen::MatrixXd weights,
                       std::vector<std::string> node_labels,
                       std::vector<std::string> edge_labels)
    : weights_(std::move(weights)),
      node_labels_(std::move(node_labels)),
      edge_labels_(std::move(edge_labels)) {
    if (weights_.rows() < 1)
        throw std::invalid_argument("hypergraph needs at least one node");
    if (!node_labels_.empty() &&
        static_cast<int>(node_labels_.size()) != node_count())
        throw std::invalid_argument("node label count does not match node count");
    if (!edge_labels_.empty() &&
        static_cast<int>(edge_labels_.size()) != edge_count())
        throw std::invalid_argument("edge label count does not match edge count");
}

void Hypergraph::set_weight(int node, int edge, double value) {
    if (node < 0 || node >= node_count() || edge < 0 || edge >= edge_count())
        throw std::out_of_range("set_weight: index out of range");
    weights_(node, edge) = value;
}

void Hypergraph::append_edge(const std::vector<std::pair<int, double>>& members,
                             std::string label) {
    weights_.conservativeResize(Eigen::NoChange, weights_.cols() + 1);
    weights_.col(weights_.cols() - 1).setZero();
    for (const auto& [node, w] : members) {
        if (node < 0 || node >= node_count())
            throw std::out_of_range("append_edge: node index out of range");
        weights_(node, weights_.cols() - 1) = w;
    }
    if (!edge_labels_.empty() || !label.empty()) {
        while (static_cast<int>(edge_labels_.size()) < edge_count() - 1)
            edge_labels_.push_back("e" + std::to_string(edge_labels_.size() + 1));
        edge_labels_.push_back(label.empty() ? "e" + std::to_string(edge_count())
                                             : std::move(label));
    }
}

void Hypergraph::append_node(std::string label) {
    weights_.conservativeResize(weights_.rows() + 1, Eigen::NoChange);
    weights_.row(weights_.rows() - 1).setZero();
    if (!node_labels_.empty() || !label.empty()) {
        while (static_cast<int>(node_labels_.size()) < node_count() - 1)
            node_labels_.push_back("n" + std::to_string(node_labels_.size() + 1));
        node_labels_.push_back(label.empty() ? "n" + std::to_string(node_count())
                                             : std::move(label));
    }
}

Eigen::MatrixXi Hypergraph::incidence() const {
    return (weights_.array() > 0.0).cast<int>();
}

std::string Hypergraph::node_label(int node) const {
    if (node < static_cast<int>(node_labels_.size())) return node_labels_[node];
    return "n" + std::to_string(node + 1);
}

std::string Hypergraph::edge_label(int edge) const {
    if (edge < static_cast<int>(edge_labels_.size())) return edge_labels_[edge];
    return "e" + std::to_string(edge + 1);
}

DirectedHypergraph::DirectedHypergraph(Hypergraph base, Eigen::MatrixXd z)
    : base_(std::move(base)), z_(std::move(z)) {
    if (z_.rows() != base_.weights().rows() || z_.cols() != base_.weights().cols())
        throw std::invalid_argument("Z must have the same shape as W");
}

ValidationReport validate(const Hypergraph& h) {
    ValidationReport report;
    const auto& w = h.weights();
    for (int j = 0; j < h.edge_count(); ++j) {
        for (int i = 0; i < h.node_count(); ++i) {
            const double v = w(i, j);
            if (!std::isfinite(v)) {
                report.errors.push_back({ValidationIssue::Kind::nonfinite_weight, i, j,
                                         "non-finite weight at (" + h.node_label(i) + ", " +
                                             h.edge_label(j) + ")"});
            } else if (v < 0.0 || v > 1.0) {
                report.errors.push_back({ValidationIssue::Kind::weight_out_of_range, i, j,
                                         "weight " + std::to_string(v) + " outside [0,1] at (" +
                                             h.node_label(i) + ", " + h.edge_label(j) + ")"});
            }
        }
        if (h.node_count() > 0 && (w.col(j).array() > 0.0).count() == 0)
            report.warnings.push_back({ValidationIssue::Kind::empty_edge, -1, j,
                                       "empty edge " + h.edge_label(j)});
    }
    for (int i = 0; i < h.node_count(); ++i) {
        if (h.edge_count() == 0 || (w.row(i).array() > 0.0).count() == 0)
            report.warnings.push_back({ValidationIssue::Kind::isolated_node, i, -1,
                                       "isolated node " + h.node_label(i)});
    }
    return report;
}

ProjectedGraph project(const Hypergraph& h) {
    ProjectedGraph g;
    // Rank update fills the lower triangle; mirroring keeps A bitwise
    // symmetric, which a plain W * W^T product does not guarantee.
    g.adjacency = Eigen::MatrixXd::Zero(h.node_count(), h.node_count());
    g.adjacency.selfadjointView<Eigen::Lower>().rankUpdate(h.weights());
    g.adjacency.triangularView<Eigen::StrictlyUpper>() =
        g.adjacency.transpose().triangularView<Eigen::StrictlyUpper>();
    g.node_labels = h.node_labels();
    g.directed = false;
    return g;
}

ProjectedGraph project(const DirectedHypergraph& dh) {
    ProjectedGraph g;
    g.adjacency = dh.base().weights() * dh.z().transpose();
    g.node_labels = dh.base().node_labels();
    g.directed = true;
    return g;
}

BipartiteGraph to_bipartite(const Hypergraph& h) {
    BipartiteGraph b;
    b.left_count = h.node_count();
    b.right_count = h.edge_count();
    b.biadjacency = h.weights();
    b.left_labels = h.node_labels();
    b.right_labels = h.edge_labels();
    return b;
}

Hypergraph from_bipartite(const BipartiteGraph& b) {
    return Hypergraph(b.biadjacency, b.left_labels, b.right_labels);
}

Eigen::VectorXd node_degrees(const Hypergraph& h, Weighting w) {
    if (w == Weighting::weighted) return h.weights().rowwise().sum();
    return (h.weights().array() > 0.0).cast<double>().rowwise().sum();
}

Eigen::VectorXd edge_degrees(const Hypergraph& h, Weighting w) {
    if (w == Weighting::weighted) return h.weights().colwise().sum().transpose();
    return (h.weights().array() > 0.0).cast<double>().colwise().sum().transpose();
}

} // namespace hypercen
