#include "hypercen/netgen.hpp"

#include "hypercen/centrality.hpp"
#include "hypercen/errors.hpp"
#include "hypercen/rng.hpp"
#include "hypercen/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hypercen::netgen {

namespace {

constexpr double kUniformFloor = 1e-9;

void check_config(const GenConfig& config) {
    if (config.iterations < 0) throw std::invalid_argument("iterations must be non-negative");
    if (config.links_per_step < 1) throw std::invalid_argument("links_per_step must be >= 1");
    if (config.edge_weight <= 0.0 || config.edge_weight > 1.0)
        throw std::invalid_argument("edge_weight must be in (0,1]");
    if (config.p_join < 0.0 || config.p_join > 1.0)
        throw std::invalid_argument("p_join must be in [0,1]");
    if (config.preference == PreferenceMode::local_centrality &&
        config.start == StartMode::new_node)
        throw std::invalid_argument(
            "local_centrality preference needs an existing starting node");
}

// Weighted draw over candidates. Raw scores are floored at 0 and padded
// with a small uniform term; an all-nonpositive score vector degenerates to
// a uniform draw and sets `fallback`.
int sample_preference(Rng& rng, const std::vector<int>& candidates,
                      const std::vector<double>& scores, bool& fallback) {
    double positive_mass = 0.0;
    double total = 0.0;
    std::vector<double> cumulative(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
        const double s = std::max(scores[i], 0.0);
        positive_mass += s;
        total += s + kUniformFloor;
        cumulative[i] = total;
    }
    if (positive_mass <= 0.0) fallback = true;
    const double u = rng.uniform01() * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const auto idx = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()),
                                           scores.size() - 1);
    return candidates[idx];
}

Eigen::VectorXd solve_resolvent(const Eigen::MatrixXd& m, double beta,
                                const Eigen::VectorXd& rhs) {
    if (beta == 0.0) return rhs;
    const Eigen::MatrixXd system =
        Eigen::MatrixXd::Identity(m.rows(), m.cols()) - beta * m;
    return system.partialPivLu().solve(rhs);
}

void guard_pole(const Eigen::MatrixXd& m, double beta, int step) {
    const auto check = spectral::is_pole(beta, m);
    if (check.pole) {
        (void)step;
        throw PoleError(beta, check.eigenvalue, check.distance);
    }
}

// Preference scores over the nodes of the current network. `start` is -1
// when no starting node applies (start-node selection itself).
Eigen::VectorXd node_preference_scores(const GrownNetwork& net, PreferenceMode pref,
                                       int start, double beta, int step) {
    switch (pref) {
        case PreferenceMode::degree: {
            if (net.mode == NetMode::hypergraph)
                return node_degrees(net.hyper, Weighting::weighted);
            return net.adjacency * Eigen::VectorXd::Ones(net.adjacency.cols());
        }
        case PreferenceMode::centrality: {
            centrality::GraphCentralityParams params;
            params.beta = beta;
            return centrality::general_centrality_graph(net.analysis_adjacency(), params)
                .node_scores;
        }
        case PreferenceMode::local_centrality: {
            // Chance of communication from the starting node to each node:
            // row `start` of (I - beta*A)^-1 * A (A symmetric, so a column).
            const Eigen::MatrixXd a = net.analysis_adjacency();
            guard_pole(a, beta, step);
            return solve_resolvent(a, beta, Eigen::VectorXd(a.col(start)));
        }
        case PreferenceMode::cluster_coefficient:
            return cluster_coefficient(net.analysis_adjacency());
    }
    throw std::logic_error("unreachable");
}

// Preference scores over hyperedges for the join move.
Eigen::VectorXd edge_preference_scores(const GrownNetwork& net, PreferenceMode pref,
                                       int start, double beta, int step) {
    const Hypergraph& h = net.hyper;
    switch (pref) {
        case PreferenceMode::degree:
            return edge_degrees(h, Weighting::weighted);
        case PreferenceMode::centrality: {
            centrality::HyperCentralityParams params;
            params.alpha1 = 1.0;
            params.alpha2 = 1.0;
            params.beta1 = 1.0;
            params.beta2 = beta;
            auto result = centrality::general_centrality_hyper(h, params);
            return *result.edge_scores;
        }
        case PreferenceMode::local_centrality: {
            // Row `start` of (I - beta*W*W^T)^-1 * W.
            const Eigen::MatrixXd m = h.weights() * h.weights().transpose();
            guard_pole(m, beta, step);
            Eigen::VectorXd unit = Eigen::VectorXd::Zero(h.node_count());
            unit(start) = 1.0;
            return h.weights().transpose() * solve_resolvent(m, beta, unit);
        }
        case PreferenceMode::cluster_coefficient: {
            // Mean member cluster coefficient on the projection.
            const Eigen::VectorXd cc = cluster_coefficient(net.analysis_adjacency());
            Eigen::VectorXd scores = Eigen::VectorXd::Zero(h.edge_count());
            for (int e = 0; e < h.edge_count(); ++e) {
                double sum = 0.0;
                int members = 0;
                for (int i = 0; i < h.node_count(); ++i) {
                    if (h.weight(i, e) > 0.0) {
                        sum += cc(i);
                        ++members;
                    }
                }
                scores(e) = members > 0 ? sum / members : 0.0;
            }
            return scores;
        }
    }
    throw std::logic_error("unreachable");
}

int pick_start(GrownNetwork& net, const GenConfig& config, Rng& rng, StepRecord& record,
               int step) {
    switch (config.start) {
        case StartMode::new_node:
            if (net.mode == NetMode::graph) {
                net.adjacency.conservativeResize(net.adjacency.rows() + 1,
                                                 net.adjacency.cols() + 1);
                net.adjacency.row(net.adjacency.rows() - 1).setZero();
                net.adjacency.col(net.adjacency.cols() - 1).setZero();
                return static_cast<int>(net.adjacency.rows()) - 1;
            }
            net.hyper.append_node();
            return net.hyper.node_count() - 1;
        case StartMode::random_existing:
            return static_cast<int>(rng.below(static_cast<std::uint64_t>(net.node_count())));
        case StartMode::preferential_by_degree: {
            const Eigen::VectorXd scores =
                node_preference_scores(net, PreferenceMode::degree, -1, config.beta, step);
            std::vector<int> candidates(static_cast<std::size_t>(net.node_count()));
            std::vector<double> values(candidates.size());
            for (int i = 0; i < net.node_count(); ++i) {
                candidates[static_cast<std::size_t>(i)] = i;
                values[static_cast<std::size_t>(i)] = scores(i);
            }
            return sample_preference(rng, candidates, values, record.fallback);
        }
    }
    throw std::logic_error("unreachable");
}

void attach_graph_links(GrownNetwork& net, const GenConfig& config, Rng& rng, int start,
                        StepRecord& record, int step) {
    for (int link = 0; link < config.links_per_step; ++link) {
        std::vector<int> candidates;
        for (int v = 0; v < net.node_count(); ++v)
            if (v != start && net.adjacency(start, v) <= 0.0) candidates.push_back(v);
        if (candidates.empty()) break;
        const Eigen::VectorXd scores =
            node_preference_scores(net, config.preference, start, config.beta, step);
        std::vector<double> values(candidates.size());
        for (std::size_t i = 0; i < candidates.size(); ++i)
            values[i] = scores(candidates[i]);
        const int target = sample_preference(rng, candidates, values, record.fallback);
        net.adjacency(start, target) = config.edge_weight;
        net.adjacency(target, start) = config.edge_weight;
        record.target_nodes.push_back(target);
    }
}

void attach_hyper_links(GrownNetwork& net, const GenConfig& config, Rng& rng, int start,
                        StepRecord& record, int step) {
    Hypergraph& h = net.hyper;
    for (int link = 0; link < config.links_per_step; ++link) {
        bool joined = false;
        if (h.edge_count() > 0 && rng.bernoulli(config.p_join)) {
            std::vector<int> edges;
            for (int e = 0; e < h.edge_count(); ++e)
                if (h.weight(start, e) <= 0.0) edges.push_back(e);
            if (!edges.empty()) {
                const Eigen::VectorXd scores =
                    edge_preference_scores(net, config.preference, start, config.beta, step);
                std::vector<double> values(edges.size());
                for (std::size_t i = 0; i < edges.size(); ++i) values[i] = scores(edges[i]);
                const int edge = sample_preference(rng, edges, values, record.fallback);
                h.set_weight(start, edge, config.edge_weight);
                record.joined_edges.push_back(edge);
                joined = true;
            }
        }
        if (!joined) {
            std::vector<int> candidates;
            for (int v = 0; v < h.node_count(); ++v)
                if (v != start) candidates.push_back(v);
            if (candidates.empty()) break;
            const Eigen::VectorXd scores =
                node_preference_scores(net, config.preference, start, config.beta, step);
            std::vector<double> values(candidates.size());
            for (std::size_t i = 0; i < candidates.size(); ++i)
                values[i] = scores(candidates[i]);
            const int target = sample_preference(rng, candidates, values, record.fallback);
            h.append_edge({{start, config.edge_weight}, {target, config.edge_weight}});
            record.target_nodes.push_back(target);
        }
    }
}

void run_step(GrownNetwork& net, const GenConfig& config, Rng& rng, int step,
              const Logger& logger) {
    StepRecord record;
    record.start = pick_start(net, config, rng, record, step);
    if (net.mode == NetMode::graph)
        attach_graph_links(net, config, rng, record.start, record, step);
    else
        attach_hyper_links(net, config, rng, record.start, record, step);
    if (record.fallback) {
        ++net.fallback_events;
        if (logger)
            logger("step " + std::to_string(step) +
                   ": all-zero preference, uniform fallback used");
    }
    net.steps.push_back(std::move(record));
}

} // namespace

int GrownNetwork::node_count() const {
    return mode == NetMode::graph ? static_cast<int>(adjacency.rows()) : hyper.node_count();
}

Eigen::MatrixXd GrownNetwork::analysis_adjacency() const {
    if (mode == NetMode::graph) return adjacency;
    return hyper.weights() * hyper.weights().transpose();
}

Hypergraph GrownNetwork::as_hypergraph() const {
    if (mode == NetMode::hypergraph) return hyper;
    std::vector<std::pair<int, int>> links;
    for (int i = 0; i < adjacency.rows(); ++i)
        for (int j = i + 1; j < adjacency.cols(); ++j)
            if (adjacency(i, j) > 0.0) links.emplace_back(i, j);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(adjacency.rows(),
                                              static_cast<Eigen::Index>(links.size()));
    for (std::size_t e = 0; e < links.size(); ++e) {
        w(links[e].first, static_cast<Eigen::Index>(e)) = adjacency(links[e].first, links[e].second);
        w(links[e].second, static_cast<Eigen::Index>(e)) = adjacency(links[e].first, links[e].second);
    }
    return Hypergraph(std::move(w));
}

GrownNetwork seed_network(const GenConfig& config) {
    check_config(config);
    GrownNetwork net;
    net.mode = config.mode;
    net.config = config;
    const double w = config.edge_weight;
    if (config.mode == NetMode::graph) {
        net.adjacency = Eigen::MatrixXd::Zero(3, 3);
        net.adjacency << 0, w, w, w, 0, w, w, w, 0;
    } else {
        Eigen::MatrixXd weights(3, 3);
        // Pairwise 2-node hyperedges {1,2}, {2,3}, {1,3}.
        weights << w, 0, w,
                   w, w, 0,
                   0, w, w;
        net.hyper = Hypergraph(weights);
    }
    return net;
}

GrownNetwork grow(const GenConfig& config, const Logger& logger) {
    GrownNetwork net = seed_network(config);
    Rng rng(config.rng_seed);
    for (int step = 0; step < config.iterations; ++step)
        run_step(net, config, rng, step, logger);
    return net;
}

GrownNetwork from_adjacency(Eigen::MatrixXd adjacency, GenConfig config) {
    if (adjacency.rows() != adjacency.cols())
        throw std::invalid_argument("adjacency must be square");
    GrownNetwork net;
    net.mode = NetMode::graph;
    net.adjacency = std::move(adjacency);
    net.config = config;
    return net;
}

AddEdgesOutcome add_edges(const GrownNetwork& network, const GenConfig& config, int count) {
    check_config(config);
    if (config.start == StartMode::new_node)
        throw std::invalid_argument("add_edges needs an existing-node start mode");
    if (count < 0) throw std::invalid_argument("count must be non-negative");

    AddEdgesOutcome outcome;
    outcome.network = network;
    outcome.network.config = config;
    GrownNetwork& net = outcome.network;
    Rng rng(config.rng_seed);

    auto graph_saturated = [&]() {
        for (int i = 0; i < net.node_count(); ++i)
            for (int j = i + 1; j < net.node_count(); ++j)
                if (net.adjacency(i, j) <= 0.0) return false;
        return true;
    };

    for (int added = 0; added < count; ++added) {
        if (net.mode == NetMode::graph && graph_saturated()) break;
        StepRecord record;
        int start = -1;
        if (net.mode == NetMode::graph) {
            // Resample the start until it has a legal partner; bounded, then
            // scan deterministically.
            const int attempts_cap = 10 * std::max(1, net.node_count());
            for (int attempt = 0; attempt < attempts_cap; ++attempt) {
                const int candidate = pick_start(net, config, rng, record, added);
                bool has_legal = false;
                for (int v = 0; v < net.node_count(); ++v)
                    if (v != candidate && net.adjacency(candidate, v) <= 0.0) {
                        has_legal = true;
                        break;
                    }
                if (has_legal) {
                    start = candidate;
                    break;
                }
            }
            if (start < 0) {
                for (int candidate = 0; candidate < net.node_count() && start < 0; ++candidate)
                    for (int v = 0; v < net.node_count(); ++v)
                        if (v != candidate && net.adjacency(candidate, v) <= 0.0) {
                            start = candidate;
                            break;
                        }
            }
            if (start < 0) break;
            record.start = start;
            GenConfig one_link = config;
            one_link.links_per_step = 1;
            attach_graph_links(net, one_link, rng, start, record, added);
            if (record.target_nodes.empty()) break;
        } else {
            record.start = pick_start(net, config, rng, record, added);
            GenConfig one_link = config;
            one_link.links_per_step = 1;
            attach_hyper_links(net, one_link, rng, record.start, record, added);
        }
        if (record.fallback) ++net.fallback_events;
        net.steps.push_back(std::move(record));
        ++outcome.achieved;
    }
    return outcome;
}

Eigen::VectorXd cluster_coefficient(const Eigen::MatrixXd& adjacency) {
    const int n = static_cast<int>(adjacency.rows());
    Eigen::VectorXd coefficients = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> neighbors;
        for (int j = 0; j < n; ++j)
            if (j != i && adjacency(i, j) > 0.0) neighbors.push_back(j);
        const auto d = static_cast<double>(neighbors.size());
        if (d < 2.0) continue;
        int links = 0;
        for (std::size_t u = 0; u < neighbors.size(); ++u)
            for (std::size_t v = u + 1; v < neighbors.size(); ++v)
                if (adjacency(neighbors[u], neighbors[v]) > 0.0) ++links;
        coefficients(i) = links / (d * (d - 1.0) / 2.0);
    }
    return coefficients;
}

PowerLawFit fit_power_law(const std::map<int, int>& degree_histogram) {
    PowerLawFit fit;
    int kmin = 0;
    int kmax = 0;
    for (const auto& [degree, count] : degree_histogram) {
        if (degree < 1 || count < 1) continue;
        if (kmin == 0) kmin = degree;
        kmax = degree;
    }
    if (kmin == 0 || kmax <= kmin) return fit;

    const int bins = std::max(5, static_cast<int>(std::ceil(
                                     std::log2(static_cast<double>(kmax) / kmin))));
    const double ratio = std::pow(static_cast<double>(kmax) / kmin * (1.0 + 1e-9),
                                  1.0 / bins);
    std::vector<double> edges(static_cast<std::size_t>(bins) + 1);
    for (int b = 0; b <= bins; ++b) edges[static_cast<std::size_t>(b)] = kmin * std::pow(ratio, b);
    std::vector<double> counts(static_cast<std::size_t>(bins), 0.0);
    for (const auto& [degree, count] : degree_histogram) {
        if (degree < 1 || count < 1) continue;
        const int b = std::min(bins - 1,
                               static_cast<int>(std::log(static_cast<double>(degree) / kmin) /
                                                std::log(ratio)));
        counts[static_cast<std::size_t>(b)] += count;
    }

    std::vector<double> xs;
    std::vector<double> ys;
    for (int b = 0; b < bins; ++b) {
        if (counts[static_cast<std::size_t>(b)] <= 0.0) continue;
        const double lo = edges[static_cast<std::size_t>(b)];
        const double hi = edges[static_cast<std::size_t>(b) + 1];
        xs.push_back(std::log10(std::sqrt(lo * hi)));
        ys.push_back(std::log10(counts[static_cast<std::size_t>(b)] / (hi - lo)));
    }
    if (xs.size() < 3) return fit;

    const auto n = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom <= 0.0) return fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss_res = 0.0, ss_tot = 0.0;
    const double mean_y = sy / n;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double predicted = fit.slope * xs[i] + fit.intercept;
        ss_res += (ys[i] - predicted) * (ys[i] - predicted);
        ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
    }
    fit.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 0.0;
    fit.valid = true;
    return fit;
}

TopologyReport analyze(const Eigen::MatrixXd& adjacency, double beta) {
    TopologyReport report;
    const int n = static_cast<int>(adjacency.rows());
    report.degrees.resize(n);
    for (int i = 0; i < n; ++i) {
        int d = 0;
        for (int j = 0; j < n; ++j)
            if (j != i && adjacency(i, j) > 0.0) ++d;
        report.degrees(i) = d;
        ++report.degree_histogram[d];
    }
    report.cluster = cluster_coefficient(adjacency);
    report.lambda_max = spectral::lambda_max(adjacency);
    try {
        centrality::GraphCentralityParams params;
        params.alpha = 1.0;
        params.beta = beta;
        report.centrality =
            centrality::general_centrality_graph(adjacency, params).node_scores;
        report.centrality_valid = true;
    } catch (const PoleError& e) {
        report.centrality = Eigen::VectorXd::Zero(n);
        report.centrality_note = std::string("centrality skipped: ") + e.what();
    }
    report.fit = fit_power_law(report.degree_histogram);
    return report;
}

std::vector<std::pair<double, TopologyReport>> beta_sweep(const Eigen::MatrixXd& adjacency,
                                                          const std::vector<double>& betas) {
    std::vector<std::pair<double, TopologyReport>> reports;
    reports.reserve(betas.size());
    for (const double beta : betas) reports.emplace_back(beta, analyze(adjacency, beta));
    return reports;
}

} // namespace hypercen::netgen
