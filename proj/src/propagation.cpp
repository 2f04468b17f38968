#include "hypercen/propagation.hpp"

#include "hypercen/rng.hpp"
#include "hypercen/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace hypercen::propagation {

namespace {

void check_config(const PropagationConfig& config) {
    if (config.pass_probability_edge < 0.0 || config.pass_probability_edge > 1.0 ||
        config.pass_probability_node < 0.0 || config.pass_probability_node > 1.0)
        throw std::invalid_argument("pass probabilities must be in [0,1]");
    if (config.walks_per_node < 1)
        throw std::invalid_argument("walks_per_node must be at least 1");
    if (config.max_hops < 1)
        throw std::invalid_argument("max_hops must be at least 1");
    if (config.threads < 1)
        throw std::invalid_argument("threads must be at least 1");
}

// Cumulative row weights for O(log n) target sampling.
struct WeightedRows {
    std::vector<std::vector<double>> cumulative;
    std::vector<double> total;

    explicit WeightedRows(const Eigen::MatrixXd& w) {
        const auto rows = w.rows();
        const auto cols = w.cols();
        cumulative.resize(static_cast<std::size_t>(rows));
        total.resize(static_cast<std::size_t>(rows), 0.0);
        for (Eigen::Index i = 0; i < rows; ++i) {
            auto& row = cumulative[static_cast<std::size_t>(i)];
            row.resize(static_cast<std::size_t>(cols));
            double acc = 0.0;
            for (Eigen::Index j = 0; j < cols; ++j) {
                acc += w(i, j);
                row[static_cast<std::size_t>(j)] = acc;
            }
            total[static_cast<std::size_t>(i)] = acc;
        }
    }

    // Sample an index proportional to the row weights; -1 on a dead row.
    int sample(int row, Rng& rng) const {
        const double t = total[static_cast<std::size_t>(row)];
        if (t <= 0.0) return -1;
        const double u = rng.uniform01() * t;
        const auto& cum = cumulative[static_cast<std::size_t>(row)];
        const auto it = std::upper_bound(cum.begin(), cum.end(), u);
        const auto idx = static_cast<int>(it - cum.begin());
        return std::min(idx, static_cast<int>(cum.size()) - 1);
    }
};

struct Accumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
    double edge_sum = 0.0;
    double node_sum = 0.0;
    double hops_sum = 0.0;
};

void finalize(const std::vector<Accumulator>& acc, int walks, PropagationStats& stats) {
    const auto n = static_cast<Eigen::Index>(acc.size());
    stats.estimate.resize(n);
    stats.standard_error.resize(n);
    stats.mean_chain_length.resize(n);
    stats.edge_estimate.resize(n);
    stats.node_estimate.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& a = acc[static_cast<std::size_t>(i)];
        const double mean = a.sum / walks;
        stats.estimate(i) = mean;
        double variance = 0.0;
        if (walks > 1)
            variance = std::max(0.0, (a.sum_sq - walks * mean * mean) / (walks - 1));
        stats.standard_error(i) = std::sqrt(variance / walks);
        stats.mean_chain_length(i) = a.hops_sum / walks;
        stats.edge_estimate(i) = a.edge_sum / walks;
        stats.node_estimate(i) = a.node_sum / walks;
    }
}

void run_over_nodes(int node_count, const PropagationConfig& config,
                    std::vector<Accumulator>& acc,
                    const std::function<Accumulator(int, Rng&)>& per_node) {
    const Rng master(config.rng_seed);
    auto work = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            Rng stream = master.substream(static_cast<std::uint64_t>(i));
            acc[static_cast<std::size_t>(i)] = per_node(i, stream);
        }
    };
    const int threads = std::min(config.threads, std::max(1, node_count));
    if (threads == 1) {
        work(0, node_count);
        return;
    }
    std::vector<std::thread> pool;
    const int chunk = (node_count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const int begin = t * chunk;
        const int end = std::min(node_count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
}

double truncation_bound_for(double beta, double lambda, int max_hops) {
    const double r = beta * lambda;
    if (r <= 0.0 || r >= 1.0) return 0.0;
    return std::pow(r, max_hops + 1) / (1.0 - r);
}

} // namespace

PropagationStats simulate_graph(const Eigen::MatrixXd& a, const PropagationConfig& config) {
    check_config(config);
    if (a.rows() != a.cols()) throw std::invalid_argument("adjacency must be square");
    const int n = static_cast<int>(a.rows());
    const double beta = config.pass_probability_node;
    const WeightedRows rows(a);

    std::vector<Accumulator> acc(static_cast<std::size_t>(n));
    run_over_nodes(n, config, acc, [&](int start, Rng& rng) {
        Accumulator node_acc;
        for (int walk = 0; walk < config.walks_per_node; ++walk) {
            double contribution = 0.0;
            int hops = 0;
            int at = start;
            double path_weight = 1.0;
            while (hops < config.max_hops) {
                const double row_total = rows.total[static_cast<std::size_t>(at)];
                if (row_total <= 0.0) break;  // dead end
                const int next = rows.sample(at, rng);
                path_weight *= row_total;
                ++hops;
                contribution += path_weight;
                at = next;
                if (!rng.bernoulli(beta)) break;
            }
            node_acc.sum += contribution;
            node_acc.sum_sq += contribution * contribution;
            node_acc.hops_sum += hops;
        }
        return node_acc;
    });

    PropagationStats stats;
    finalize(acc, config.walks_per_node, stats);
    stats.edge_estimate.setZero();
    stats.node_estimate.setZero();
    stats.walks_per_node = config.walks_per_node;
    stats.max_hops = config.max_hops;
    stats.truncation_bound = truncation_bound_for(beta, spectral::lambda_max(a), config.max_hops);
    return stats;
}

PropagationStats simulate_hyper(const Hypergraph& h, const PropagationConfig& config) {
    check_config(config);
    const int n = h.node_count();
    const double beta1 = config.pass_probability_edge;
    const double beta2 = config.pass_probability_node;
    const WeightedRows node_rows(h.weights());
    const WeightedRows edge_rows(Eigen::MatrixXd(h.weights().transpose()));

    std::vector<Accumulator> acc(static_cast<std::size_t>(n));
    run_over_nodes(n, config, acc, [&](int start, Rng& rng) {
        Accumulator node_acc;
        for (int walk = 0; walk < config.walks_per_node; ++walk) {
            double edge_contribution = 0.0;
            double node_contribution = 0.0;
            int hops = 0;
            int at_node = start;
            double path_weight = 1.0;
            while (hops < config.max_hops) {
                // node -> edge
                const double out_total = node_rows.total[static_cast<std::size_t>(at_node)];
                if (out_total <= 0.0) break;
                const int edge = node_rows.sample(at_node, rng);
                path_weight *= out_total;
                ++hops;
                edge_contribution += path_weight;
                if (hops >= config.max_hops) break;
                if (!rng.bernoulli(beta1)) break;  // edge does not relay
                // edge -> node
                const double in_total = edge_rows.total[static_cast<std::size_t>(edge)];
                if (in_total <= 0.0) break;
                at_node = edge_rows.sample(edge, rng);
                path_weight *= in_total;
                ++hops;
                node_contribution += path_weight;
                if (!rng.bernoulli(beta2)) break;  // node does not select
            }
            const double total = edge_contribution + node_contribution;
            node_acc.sum += total;
            node_acc.sum_sq += total * total;
            node_acc.edge_sum += edge_contribution;
            node_acc.node_sum += node_contribution;
            node_acc.hops_sum += hops;
        }
        return node_acc;
    });

    PropagationStats stats;
    finalize(acc, config.walks_per_node, stats);
    // The per-walk total is edge + node by construction; keep the reported
    // estimate exactly equal to the sum of its parts.
    stats.estimate = stats.edge_estimate + stats.node_estimate;
    stats.walks_per_node = config.walks_per_node;
    stats.max_hops = config.max_hops;
    const Eigen::MatrixXd m = h.weights() * h.weights().transpose();
    stats.truncation_bound =
        truncation_bound_for(beta1 * beta2, spectral::lambda_max(m), config.max_hops);
    return stats;
}

Eigen::VectorXd enumerate_graph(const Eigen::MatrixXd& a, double beta, int max_hops) {
    if (a.rows() != a.cols()) throw std::invalid_argument("adjacency must be square");
    const int n = static_cast<int>(a.rows());
    Eigen::VectorXd totals = Eigen::VectorXd::Zero(n);

    // All walks of length 1..max_hops; a walk of m hops contributes
    // beta^(m-1) times the product of its hop weights.
    struct Frame {
        const Eigen::MatrixXd& a;
        int max_hops;
        double beta;
        double* total;
        void visit(int node, double path_weight, double prob_factor, int hops) {
            for (int next = 0; next < a.cols(); ++next) {
                const double w = a(node, next);
                if (w <= 0.0) continue;
                const double pw = path_weight * w;
                *total += pw * prob_factor;
                if (hops + 1 < max_hops && beta > 0.0)
                    visit(next, pw, prob_factor * beta, hops + 1);
            }
        }
    };
    for (int start = 0; start < n; ++start) {
        Frame frame{a, max_hops, beta, &totals(start)};
        frame.visit(start, 1.0, 1.0, 0);
    }
    return totals;
}

HyperCommunicationSums enumerate_hyper(const Hypergraph& h, double beta1, double beta2,
                                       int max_hops) {
    const int n = h.node_count();
    const Eigen::MatrixXd& w = h.weights();
    HyperCommunicationSums sums;
    sums.to_edges = Eigen::VectorXd::Zero(n);
    sums.to_nodes = Eigen::VectorXd::Zero(n);

    struct Frame {
        const Eigen::MatrixXd& w;
        int max_hops;
        double beta1, beta2;
        double* edge_total;
        double* node_total;

        void from_node(int node, double path_weight, double prob_factor, int hops) {
            if (hops >= max_hops) return;
            for (int edge = 0; edge < w.cols(); ++edge) {
                const double we = w(node, edge);
                if (we <= 0.0) continue;
                const double pw = path_weight * we;
                *edge_total += pw * prob_factor;
                if (beta1 > 0.0) from_edge(edge, pw, prob_factor * beta1, hops + 1);
            }
        }

        void from_edge(int edge, double path_weight, double prob_factor, int hops) {
            if (hops >= max_hops) return;
            for (int node = 0; node < w.rows(); ++node) {
                const double wn = w(node, edge);
                if (wn <= 0.0) continue;
                const double pw = path_weight * wn;
                *node_total += pw * prob_factor;
                if (beta2 > 0.0) from_node(node, pw, prob_factor * beta2, hops + 1);
            }
        }
    };
    for (int start = 0; start < n; ++start) {
        Frame frame{w, max_hops, beta1, beta2, &sums.to_edges(start), &sums.to_nodes(start)};
        frame.from_node(start, 1.0, 1.0, 0);
    }
    return sums;
}

Eigen::VectorXd truncated_series_graph(const Eigen::MatrixXd& a, double beta, int max_hops) {
    Eigen::VectorXd term = a * Eigen::VectorXd::Ones(a.cols());
    Eigen::VectorXd sum = term;
    for (int k = 1; k < max_hops; ++k) {
        term = beta * (a * term);
        sum += term;
    }
    return sum;
}

HyperCommunicationSums truncated_series_hyper(const Hypergraph& h, double beta1, double beta2,
                                              int max_hops) {
    const Eigen::MatrixXd& w = h.weights();
    const Eigen::MatrixXd m = w * w.transpose();
    const double beta = beta1 * beta2;
    HyperCommunicationSums sums;

    // Communications to edges live at odd hop counts 2k+1 <= max_hops.
    Eigen::VectorXd term = w * Eigen::VectorXd::Ones(h.edge_count());
    sums.to_edges = term;
    const int k_edges = (max_hops - 1) / 2;
    for (int k = 1; k <= k_edges; ++k) {
        term = beta * (m * term);
        sums.to_edges += term;
    }

    // Communications to nodes live at even hop counts 2k+2 <= max_hops.
    sums.to_nodes = Eigen::VectorXd::Zero(h.node_count());
    if (max_hops >= 2) {
        Eigen::VectorXd node_term = beta1 * (m * Eigen::VectorXd::Ones(h.node_count()));
        sums.to_nodes = node_term;
        const int k_nodes = (max_hops - 2) / 2;
        for (int k = 1; k <= k_nodes; ++k) {
            node_term = beta * (m * node_term);
            sums.to_nodes += node_term;
        }
    }
    return sums;
}

} // namespace hypercen::propagation
