#include "hypercen/propagation.hpp"

#include "hypercen/centrality.hpp"
#include "hypercen/spectral.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

using namespace hypercen;
namespace prop = hypercen::propagation;

namespace {

prop::PropagationConfig config_with(double beta1, double beta2, int walks,
                                    std::uint64_t seed = 7, int max_hops = 64) {
    prop::PropagationConfig config;
    config.pass_probability_edge = beta1;
    config.pass_probability_node = beta2;
    config.walks_per_node = walks;
    config.rng_seed = seed;
    config.max_hops = max_hops;
    return config;
}

Eigen::MatrixXd k2() {
    Eigen::MatrixXd a(2, 2);
    a << 0, 1, 1, 0;
    return a;
}

// Rational weights exactly representable in binary keep the enumerator and
// the matrix-power series bit-tight.
Eigen::MatrixXd dyadic_adjacency(hypercen::Rng& rng, int n) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    const double steps[] = {0.25, 0.5, 0.75, 1.0};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform01() < 0.6) {
                const double w = steps[rng.below(4)];
                a(i, j) = w;
                a(j, i) = w;
            }
    return a;
}

} // namespace

TEST_CASE("zero pass probability reports the weighted degree with no variance") {
    const auto stats = prop::simulate_graph(k2(), config_with(1.0, 0.0, 100));
    CHECK(stats.estimate(0) == 1.0);
    CHECK(stats.estimate(1) == 1.0);
    CHECK(stats.standard_error(0) == 0.0);
    CHECK(stats.mean_chain_length(0) == 1.0);
}

TEST_CASE("K2 at beta = 0.5 estimates the geometric series value 2") {
    const auto stats = prop::simulate_graph(k2(), config_with(1.0, 0.5, 200000));
    for (int i = 0; i < 2; ++i) {
        const double margin = 3.0 * stats.standard_error(i) + 1e-12;
        CHECK(std::abs(stats.estimate(i) - 2.0) <= margin);
    }
}

TEST_CASE("star estimates match the direct solve within three standard errors") {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3, 3);
    a(0, 1) = a(1, 0) = 1;
    a(0, 2) = a(2, 0) = 1;
    const auto analytic = centrality::general_centrality_graph(a, {1.0, 0.3});
    const auto stats = prop::simulate_graph(a, config_with(1.0, 0.3, 200000));
    for (int i = 0; i < 3; ++i) {
        const double margin = 3.0 * stats.standard_error(i) + 1e-12;
        CHECK(std::abs(stats.estimate(i) - analytic.node_scores(i)) <= margin);
    }
}

TEST_CASE("graph enumerator equals the truncated series exactly") {
    auto rng = testutil::make_rng(41);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(5));  // up to 6 nodes
        const Eigen::MatrixXd a = dyadic_adjacency(rng, n);
        const double beta = 0.5;
        for (const int hops : {1, 2, 5, 8}) {
            const Eigen::VectorXd enumerated = prop::enumerate_graph(a, beta, hops);
            const Eigen::VectorXd series = prop::truncated_series_graph(a, beta, hops);
            CHECK((enumerated - series).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }
}

TEST_CASE("monte carlo is unbiased against the exact enumerator") {
    auto rng = testutil::make_rng(42);
    const Eigen::MatrixXd a = dyadic_adjacency(rng, 5);
    const int hops = 6;
    const Eigen::VectorXd exact = prop::enumerate_graph(a, 0.4, hops);
    const auto stats = prop::simulate_graph(a, config_with(1.0, 0.4, 400000, 3, hops));
    for (int i = 0; i < 5; ++i) {
        const double margin = 3.5 * stats.standard_error(i) + 1e-12;
        CHECK(std::abs(stats.estimate(i) - exact(i)) <= margin);
    }
}

TEST_CASE("self-looped node keeps the chain alive for 1/(1-beta) hops") {
    Eigen::MatrixXd loop(1, 1);
    loop << 1;
    const auto stats = prop::simulate_graph(loop, config_with(1.0, 0.5, 200000));
    CHECK(stats.mean_chain_length(0) == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("identical config and seed reproduce the statistics bit for bit") {
    auto rng = testutil::make_rng(43);
    const Eigen::MatrixXd a = testutil::random_adjacency(rng, 6);
    const auto first = prop::simulate_graph(a, config_with(1.0, 0.4, 5000));
    const auto second = prop::simulate_graph(a, config_with(1.0, 0.4, 5000));
    CHECK(first.estimate == second.estimate);
    CHECK(first.standard_error == second.standard_error);
    CHECK(first.mean_chain_length == second.mean_chain_length);
}

TEST_CASE("thread count does not change the results") {
    auto rng = testutil::make_rng(44);
    const Eigen::MatrixXd w = testutil::random_weights(rng, 8, 6, 0.5);
    const Hypergraph h(w);
    auto serial_config = config_with(0.9, 0.4, 4000);
    auto parallel_config = serial_config;
    parallel_config.threads = 4;
    const auto serial = prop::simulate_hyper(h, serial_config);
    const auto parallel = prop::simulate_hyper(h, parallel_config);
    CHECK(serial.estimate == parallel.estimate);
    CHECK(serial.edge_estimate == parallel.edge_estimate);
    CHECK(serial.standard_error == parallel.standard_error);
}

TEST_CASE("hyper walk with both probabilities zero counts only first-hop edges") {
    Eigen::MatrixXd w(3, 2);
    w << 0.5, 0, 1, 0.25, 0, 1;
    const Hypergraph h(w);
    const auto stats = prop::simulate_hyper(h, config_with(0.0, 0.0, 2000));
    const Eigen::VectorXd degree = node_degrees(h);
    CHECK((stats.edge_estimate - degree).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(stats.node_estimate.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("single shared edge with beta1 = 1, beta2 = 0") {
    Eigen::MatrixXd w(2, 1);
    w << 1, 1;
    const Hypergraph h(w);
    const auto stats = prop::simulate_hyper(h, config_with(1.0, 0.0, 2000));
    // Deterministic walk: one communication to the edge (weight 1), one to a
    // node (path weight 2), then the chain stops.
    CHECK(stats.edge_estimate(0) == 1.0);
    CHECK(stats.edge_estimate(1) == 1.0);
    CHECK(stats.node_estimate(0) == 2.0);
    CHECK(stats.node_estimate(1) == 2.0);
    CHECK(stats.standard_error(0) == 0.0);
}

TEST_CASE("hyper enumerator equals the truncated two-sum series exactly") {
    auto rng = testutil::make_rng(45);
    for (int trial = 0; trial < 5; ++trial) {
        const int nodes = 2 + static_cast<int>(rng.below(4));
        const int edges = 1 + static_cast<int>(rng.below(4));
        Eigen::MatrixXd w = Eigen::MatrixXd::Zero(nodes, edges);
        const double steps[] = {0.25, 0.5, 1.0};
        for (int i = 0; i < nodes; ++i)
            for (int j = 0; j < edges; ++j)
                if (rng.uniform01() < 0.6) w(i, j) = steps[rng.below(3)];
        const Hypergraph h(w);
        for (const int hops : {1, 2, 3, 8}) {
            const auto enumerated = prop::enumerate_hyper(h, 1.0, 0.5, hops);
            const auto series = prop::truncated_series_hyper(h, 1.0, 0.5, hops);
            CHECK((enumerated.to_edges - series.to_edges).cwiseAbs().maxCoeff() <= 1e-12);
            CHECK((enumerated.to_nodes - series.to_nodes).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }
}

TEST_CASE("edge and node communications add up to the total estimate") {
    auto rng = testutil::make_rng(46);
    const Eigen::MatrixXd w = testutil::random_weights(rng, 7, 5, 0.5);
    const Hypergraph h(w);
    const auto stats = prop::simulate_hyper(h, config_with(0.8, 0.3, 3000));
    CHECK((stats.edge_estimate + stats.node_estimate - stats.estimate)
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
}

TEST_CASE("hyper monte carlo matches the reduction solve") {
    auto rng = testutil::make_rng(47);
    const Eigen::MatrixXd w = testutil::random_weights(rng, 5, 4, 0.6);
    const Hypergraph h(w);
    const Eigen::MatrixXd m = w * w.transpose();
    const double lambda = spectral::lambda_max(m);
    const double beta2 = 0.5 / lambda;

    centrality::HyperCentralityParams params;
    params.alpha1 = 1.0;
    params.alpha2 = 1.0;
    params.beta1 = 1.0;
    params.beta2 = beta2;
    const auto analytic = centrality::general_centrality_hyper(h, params);

    const auto stats = prop::simulate_hyper(h, config_with(1.0, beta2, 300000));
    for (int i = 0; i < 5; ++i) {
        const double margin = 3.5 * stats.standard_error(i) + 1e-12;
        CHECK(std::abs(stats.estimate(i) - analytic.node_scores(i)) <= margin);
    }
}

TEST_CASE("truncation bound reflects the series tail") {
    const auto stats = prop::simulate_graph(k2(), config_with(1.0, 0.5, 10, 1, 16));
    // beta * lambda = 0.5; tail after 16 hops is 0.5^17 / 0.5.
    CHECK(stats.truncation_bound == doctest::Approx(std::pow(0.5, 17) / 0.5).epsilon(1e-12));
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(prop::simulate_graph(k2(), config_with(1.0, 1.5, 10)),
                    std::invalid_argument);
    CHECK_THROWS_AS(prop::simulate_graph(k2(), config_with(1.0, 0.5, 0)),
                    std::invalid_argument);
    auto bad_hops = config_with(1.0, 0.5, 10);
    bad_hops.max_hops = 0;
    CHECK_THROWS_AS(prop::simulate_graph(k2(), bad_hops), std::invalid_argument);
}
