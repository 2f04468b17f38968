#include "hypercen/adapt.hpp"

#include "hypercen/errors.hpp"
#include "hypercen/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hypercen::adapt {

namespace {

constexpr double kSeriesIncrementTol = 1e-12;
constexpr int kSeriesTermCap = 100000;

void require_member(const Hypergraph& h, int node, int edge) {
    if (node < 0 || node >= h.node_count() || edge < 0 || edge >= h.edge_count())
        throw std::out_of_range("node or edge index out of range");
    if (h.weight(node, edge) <= 0.0)
        throw std::invalid_argument("node " + h.node_label(node) + " is not in edge " +
                                    h.edge_label(edge));
}

double clamp_unit(double v, bool& clamped) {
    if (v < 0.0) {
        clamped = true;
        return 0.0;
    }
    if (v > 1.0) {
        clamped = true;
        return 1.0;
    }
    return v;
}

// (I - beta*M)^-1 * B by direct solve or term-by-term series, shared by the
// two score matrices.
Eigen::MatrixXd resolvent_times(const Eigen::MatrixXd& m, double beta, const Eigen::MatrixXd& b,
                                centrality::Method method) {
    if (b.size() == 0) return b;
    const auto spectrum = spectral::spectrum(m);
    const auto check = spectral::is_pole_of_spectrum(beta, spectrum);
    if (check.pole) throw PoleError(beta, check.eigenvalue, check.distance);
    if (beta == 0.0) return b;
    if (method == centrality::Method::neumann_series) {
        const double rho = spectrum.size() > 0 ? spectrum.cwiseAbs().maxCoeff() : 0.0;
        if (rho > 0.0 && std::abs(beta) * rho >= 1.0)
            throw SeriesDivergenceError(beta, rho);
        Eigen::MatrixXd term = b;
        Eigen::MatrixXd sum = b;
        int terms = 1;
        while (term.cwiseAbs().maxCoeff() >= kSeriesIncrementTol && terms < kSeriesTermCap) {
            term = beta * (m * term);
            sum += term;
            ++terms;
        }
        return sum;
    }
    const Eigen::MatrixXd system = Eigen::MatrixXd::Identity(m.rows(), m.cols()) - beta * m;
    return system.partialPivLu().solve(b);
}

} // namespace

ProcessingFunction linear_contraction(double kappa) {
    return [kappa](const Eigen::VectorXd& c) { return Eigen::VectorXd(kappa * c); };
}

UpdateOutcome delta_update_inplace(Hypergraph& h, int node, int edge, const Challenge& challenge,
                                   const ProcessingFunction& processor,
                                   const LearningConfig& config) {
    require_member(h, node, edge);
    const Eigen::VectorXd relaxed = processor(challenge.values);
    if (relaxed.size() != challenge.values.size())
        throw std::invalid_argument("processor changed the challenge dimension");
    const double reduction = challenge.norm() - relaxed.norm();
    UpdateOutcome outcome;
    outcome.old_weight = h.weight(node, edge);
    outcome.new_weight =
        clamp_unit(outcome.old_weight + config.rate * reduction, outcome.clamped);
    h.set_weight(node, edge, outcome.new_weight);
    return outcome;
}

std::pair<Hypergraph, UpdateOutcome> delta_update(const Hypergraph& h, int node, int edge,
                                                  const Challenge& challenge,
                                                  const ProcessingFunction& processor,
                                                  const LearningConfig& config) {
    Hypergraph copy = h;
    UpdateOutcome outcome = delta_update_inplace(copy, node, edge, challenge, processor, config);
    return {std::move(copy), outcome};
}

UpdateOutcome punish_inplace(Hypergraph& h, int node, int edge, const LearningConfig& config) {
    require_member(h, node, edge);
    UpdateOutcome outcome;
    outcome.old_weight = h.weight(node, edge);
    outcome.new_weight = clamp_unit(outcome.old_weight - config.punishment, outcome.clamped);
    h.set_weight(node, edge, outcome.new_weight);
    return outcome;
}

std::pair<Hypergraph, UpdateOutcome> punish(const Hypergraph& h, int node, int edge,
                                            const LearningConfig& config) {
    Hypergraph copy = h;
    UpdateOutcome outcome = punish_inplace(copy, node, edge, config);
    return {std::move(copy), outcome};
}

FitnessEntry edge_fitness(const Hypergraph& h, int edge,
                          const std::vector<std::pair<Challenge, Challenge>>& processed,
                          const FitnessConfig& config) {
    if (edge < 0 || edge >= h.edge_count()) throw std::out_of_range("edge index out of range");
    const double size = (h.weights().col(edge).array() > 0.0).count();
    if (size <= 0.0)
        throw std::invalid_argument("edge " + h.edge_label(edge) + " has no members");
    FitnessEntry entry;
    entry.samples = static_cast<int>(processed.size());
    double total = 0.0;
    for (const auto& [challenge, relaxed] : processed)
        total += challenge.norm() - relaxed.norm();
    entry.fitness = total / size;
    entry.mutation_rate = std::min(
        config.rate_cap(),
        config.proportionality / std::max(entry.fitness, config.fitness_floor));
    return entry;
}

Eigen::MatrixXd node_to_edge_scores(const Hypergraph& h, double beta1, double beta2,
                                    centrality::Method method, bool exclude_members) {
    const Eigen::MatrixXd& w = h.weights();
    const Eigen::MatrixXd m = w * w.transpose();
    Eigen::MatrixXd scores = resolvent_times(m, beta1 * beta2, w, method);
    if (exclude_members) scores -= w;
    return scores;
}

Eigen::MatrixXd node_to_edge_one_step(const Hypergraph& h, double beta1, double beta2) {
    const Eigen::MatrixXd& w = h.weights();
    return beta1 * beta2 * (w * w.transpose() * w);
}

Eigen::MatrixXd node_to_node_scores(const Hypergraph& h, double beta1, double beta2,
                                    centrality::Method method, bool exclude_linked) {
    const Eigen::MatrixXd& w = h.weights();
    const Eigen::MatrixXd m = w * w.transpose();
    Eigen::MatrixXd scores = beta1 * resolvent_times(m, beta1 * beta2, m, method);
    if (exclude_linked) scores -= beta1 * m;
    return scores;
}

Eigen::MatrixXd node_to_node_closest(const Hypergraph& h, double beta1, double beta2) {
    const Eigen::MatrixXd& w = h.weights();
    const Eigen::MatrixXd m = w * w.transpose();
    return beta1 * beta1 * beta2 * (m * m);
}

HyperedgeProposal propose_hyperedge(const Hypergraph& h, int seed_node, double beta1,
                                    double beta2, int size, bool exclude_linked) {
    if (seed_node < 0 || seed_node >= h.node_count())
        throw std::out_of_range("seed node out of range");
    if (size < 1) throw std::invalid_argument("proposal size must be at least 1");

    const Eigen::MatrixXd scores =
        node_to_node_scores(h, beta1, beta2, centrality::Method::direct_solve);
    const Eigen::MatrixXd m = h.weights() * h.weights().transpose();

    std::vector<int> candidates;
    for (int v = 0; v < h.node_count(); ++v) {
        if (v == seed_node) continue;
        if (exclude_linked && m(seed_node, v) > 0.0) continue;
        if (scores(seed_node, v) > 0.0) candidates.push_back(v);
    }
    std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
        const double sa = scores(seed_node, a);
        const double sb = scores(seed_node, b);
        if (sa != sb) return sa > sb;
        return a < b;  // deterministic tie-break
    });

    HyperedgeProposal proposal;
    proposal.short_list = static_cast<int>(candidates.size()) < size;
    const int take = std::min<int>(size, static_cast<int>(candidates.size()));
    proposal.members.assign(candidates.begin(), candidates.begin() + take);
    return proposal;
}

} // namespace hypercen::adapt
