#include "hypercen/centrality.hpp"

#include "hypercen/errors.hpp"
#include "hypercen/spectral.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

using namespace hypercen;
namespace cen = hypercen::centrality;

namespace {

Eigen::MatrixXd ones2() {
    Eigen::MatrixXd a(2, 2);
    a << 1, 1, 1, 1;
    return a;
}

Eigen::MatrixXd k2() {
    Eigen::MatrixXd a(2, 2);
    a << 0, 1, 1, 0;
    return a;
}

// Star with `leaves` leaves, node 0 in the center, unit weights.
Eigen::MatrixXd star(int leaves) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(leaves + 1, leaves + 1);
    for (int leaf = 1; leaf <= leaves; ++leaf) {
        a(0, leaf) = 1;
        a(leaf, 0) = 1;
    }
    return a;
}

Hypergraph single_edge_pair() {
    Eigen::MatrixXd w(2, 1);
    w << 1, 1;
    return Hypergraph(w);
}

} // namespace

TEST_CASE("eigencentrality of K3 is uniform") {
    Eigen::MatrixXd a(3, 3);
    a << 0, 1, 1, 1, 0, 1, 1, 1, 0;
    const auto result = cen::eigencentrality_graph(a);
    for (int i = 0; i < 3; ++i)
        CHECK(result.node_scores(i) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-10));
    CHECK(result.meta.method == cen::Method::eigenvector);
}

TEST_CASE("eigencentrality of the 2-leaf star weights the center by sqrt 2") {
    const auto result = cen::eigencentrality_graph(star(2));
    CHECK(result.node_scores(0) / result.node_scores(1) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    CHECK(result.node_scores(1) == doctest::Approx(result.node_scores(2)).epsilon(1e-12));
}

TEST_CASE("disconnected isolated node scores zero") {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3, 3);
    a(0, 1) = a(1, 0) = 1;
    const auto result = cen::eigencentrality_graph(a);
    CHECK(std::abs(result.node_scores(2)) <= 1e-12);
    CHECK(result.node_scores(0) == doctest::Approx(result.node_scores(1)).epsilon(1e-10));
}

TEST_CASE("hypergraph eigencentrality of a single shared edge") {
    const auto result = cen::eigencentrality_hyper(single_edge_pair());
    CHECK(result.node_scores(0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
    CHECK(result.node_scores(1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
    REQUIRE(result.edge_scores);
    CHECK((*result.edge_scores)(0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("hypergraph eigencentrality couples x and y through W") {
    Eigen::MatrixXd w(3, 2);
    w << 1, 0, 1, 1, 0, 1;
    const auto result = cen::eigencentrality_hyper(Hypergraph(w));
    REQUIRE(result.edge_scores);
    const Eigen::VectorXd via_edges = (w * (*result.edge_scores)).normalized();
    CHECK((via_edges - result.node_scores).cwiseAbs().maxCoeff() <= 1e-8);
    const Eigen::VectorXd via_nodes = (w.transpose() * result.node_scores).normalized();
    CHECK((via_nodes - *result.edge_scores).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("eigenvector scores ignore a uniform weight scale") {
    Eigen::MatrixXd w(3, 2);
    w << 1, 0, 1, 1, 0, 1;
    const auto base = cen::eigencentrality_hyper(Hypergraph(w));
    const auto scaled = cen::eigencentrality_hyper(Hypergraph(Eigen::MatrixXd(0.1 * w)));
    CHECK((base.node_scores - scaled.node_scores).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK((*base.edge_scores - *scaled.edge_scores).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("eigencentrality of an all-zero hypergraph fails loudly") {
    CHECK_THROWS_AS(cen::eigencentrality_hyper(Hypergraph(Eigen::MatrixXd::Zero(3, 2))),
                    ZeroSpectrumError);
}

TEST_CASE("beta = 0 centrality is alpha times the weighted degree") {
    auto rng = testutil::make_rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        const Eigen::MatrixXd a = testutil::random_adjacency(rng, 8);
        const Eigen::VectorXd degree = a * Eigen::VectorXd::Ones(8);
        for (const double alpha : {1.0, 2.5}) {
            const auto result = cen::general_centrality_graph(a, {alpha, 0.0});
            CHECK((result.node_scores - alpha * degree).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }
}

TEST_CASE("the 2-cycle at beta = 0.5 solves to (2,2)") {
    const auto solve = cen::general_centrality_graph(k2(), {1.0, 0.5});
    CHECK(solve.node_scores(0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(solve.node_scores(1) == doctest::Approx(2.0).epsilon(1e-12));

    const auto series =
        cen::general_centrality_graph(k2(), {1.0, 0.5}, cen::Method::neumann_series);
    CHECK((series.node_scores - solve.node_scores).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(series.meta.series_terms > 1);

    // Independent summation oracle.
    const Eigen::VectorXd oracle = testutil::brute_force_series(k2(), 1.0, 0.5, 60);
    CHECK((solve.node_scores - oracle).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("an exact pole raises PoleError") {
    CHECK_THROWS_AS(cen::general_centrality_graph(ones2(), {1.0, 0.5}), PoleError);
    CHECK_THROWS_AS(
        cen::general_centrality_graph(ones2(), {1.0, 0.5}, cen::Method::neumann_series),
        PoleError);
    // Slightly off the pole the solve goes through.
    CHECK_NOTHROW(cen::general_centrality_graph(ones2(), {1.0, 0.5 + 1e-3}));
    CHECK_NOTHROW(cen::general_centrality_graph(ones2(), {1.0, 0.5 - 1e-3}));
}

TEST_CASE("series outside the convergence radius raises SeriesDivergenceError") {
    CHECK_THROWS_AS(
        cen::general_centrality_graph(ones2(), {1.0, 0.6}, cen::Method::neumann_series),
        SeriesDivergenceError);
}

TEST_CASE("solve beyond the radius is flagged non-communicative") {
    const auto result = cen::general_centrality_graph(ones2(), {1.0, 0.8});
    CHECK(result.meta.non_communicative);
    // (I - 0.8 A) c = A 1 on the all-ones matrix: c = (-10/3, -10/3).
    CHECK(result.node_scores(0) == doctest::Approx(-10.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("alpha is an exact scale factor") {
    auto rng = testutil::make_rng(32);
    const Eigen::MatrixXd a = testutil::random_adjacency(rng, 7);
    const auto one = cen::general_centrality_graph(a, {1.0, 0.2});
    const auto two = cen::general_centrality_graph(a, {2.0, 0.2});
    CHECK((two.node_scores - 2.0 * one.node_scores).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("series and solve agree on random graphs") {
    auto rng = testutil::make_rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(20));
        const Eigen::MatrixXd a = testutil::random_adjacency(rng, n, 0.5);
        if (a.cwiseAbs().maxCoeff() == 0.0) continue;
        const double lambda = spectral::lambda_max(a);
        for (const double target : {0.1, 0.5, 0.9}) {
            const double beta = target / lambda;
            const auto solve = cen::general_centrality_graph(a, {1.0, beta});
            const auto series =
                cen::general_centrality_graph(a, {1.0, beta}, cen::Method::neumann_series);
            const double scale = solve.node_scores.cwiseAbs().maxCoeff();
            CHECK((series.node_scores - solve.node_scores).cwiseAbs().maxCoeff() / scale <=
                  1e-8);
        }
    }
}

TEST_CASE("negative beta is supported in both modes") {
    const auto solve = cen::general_centrality_graph(star(4), {1.0, -0.3});
    const auto series =
        cen::general_centrality_graph(star(4), {1.0, -0.3}, cen::Method::neumann_series);
    CHECK((series.node_scores - solve.node_scores).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("hypergraph centrality at beta1 = beta2 = 0 returns pure degrees") {
    Eigen::MatrixXd w(3, 2);
    w << 0.5, 0, 1, 0.5, 0, 1;
    const Hypergraph h(w);
    cen::HyperCentralityParams params;
    params.alpha1 = 2.0;
    params.alpha2 = 3.0;
    params.beta1 = 0.0;
    params.beta2 = 0.0;
    const auto result = cen::general_centrality_hyper(h, params);
    CHECK((result.node_scores - 2.0 * node_degrees(h)).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((*result.edge_scores - 3.0 * edge_degrees(h)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("single-edge hypergraph at beta2 = 0 evaluates the closed form") {
    cen::HyperCentralityParams params;
    params.beta1 = 1.0;
    params.beta2 = 0.0;
    const auto result = cen::general_centrality_hyper(single_edge_pair(), params);
    // x = W(1 + W^T 1) = (3,3); y = W^T 1 = (2).
    CHECK(result.node_scores(0) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(result.node_scores(1) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK((*result.edge_scores)(0) == doctest::Approx(2.0).epsilon(1e-12));

    const auto series = cen::general_centrality_hyper(single_edge_pair(), params,
                                                      cen::Method::neumann_series);
    CHECK((series.node_scores - result.node_scores).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("hypergraph reduction to the projected graph") {
    auto rng = testutil::make_rng(34);
    for (int trial = 0; trial < 8; ++trial) {
        const int nodes = 3 + static_cast<int>(rng.below(6));
        const int edges = 2 + static_cast<int>(rng.below(5));
        const Eigen::MatrixXd w = testutil::random_weights(rng, nodes, edges, 0.5);
        const Hypergraph h(w);
        const Eigen::MatrixXd m = w * w.transpose();
        const double lambda = spectral::lambda_max(m);
        if (lambda <= 0.0) continue;
        const double beta2 = 0.4 / lambda;

        cen::HyperCentralityParams params;
        params.alpha1 = 0.0;
        params.alpha2 = 1.0;
        params.beta1 = 1.0;
        params.beta2 = beta2;
        const auto hyper = cen::general_centrality_hyper(h, params);
        const auto graph = cen::general_centrality_graph(m, {1.0, beta2});
        CHECK((hyper.node_scores - graph.node_scores).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("series mode splits communications to edges and to nodes") {
    auto rng = testutil::make_rng(35);
    const Eigen::MatrixXd w = testutil::random_weights(rng, 6, 5, 0.6);
    const Hypergraph h(w);
    const double lambda = spectral::lambda_max(Eigen::MatrixXd(w * w.transpose()));
    cen::HyperCentralityParams params;
    params.beta1 = 1.0;
    params.beta2 = 0.5 / lambda;
    const auto result =
        cen::general_centrality_hyper(h, params, cen::Method::neumann_series);
    REQUIRE(result.edge_communications);
    REQUIRE(result.node_communications);
    const Eigen::VectorXd recombined = *result.edge_communications + *result.node_communications;
    CHECK((recombined - result.node_scores).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("directed centrality with Z = W matches the undirected solve") {
    Eigen::MatrixXd w(3, 2);
    w << 1, 0, 0.5, 0.5, 0, 1;
    const Hypergraph h(w);
    cen::HyperCentralityParams params;
    params.beta1 = 0.7;
    params.beta2 = 0.3;
    const auto undirected = cen::general_centrality_hyper(h, params);
    const auto directed = cen::general_centrality_directed(DirectedHypergraph(h, w), params);
    CHECK((undirected.node_scores - directed.node_scores).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK((*undirected.edge_scores - *directed.edge_scores).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("neumann partial sums at c = 0 reproduce the probe") {
    const Eigen::VectorXd probe = Eigen::Vector2d(3, -1);
    const auto sums = cen::neumann_partial_sums(ones2(), 0.0, probe, 4);
    REQUIRE(sums.size() == 5);
    for (const auto& s : sums) CHECK((s - probe).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("neumann partial sums converge geometrically on the rank-1 matrix") {
    // c*A has eigenvalue 0.5 on the ones vector: S_n 1 = 2(1 - 0.5^(n+1)).
    const auto sums = cen::neumann_partial_sums(ones2(), 0.25, Eigen::Vector2d(1, 1), 20);
    for (std::size_t n = 0; n < sums.size(); ++n) {
        const double expected = 2.0 * (1.0 - std::pow(0.5, static_cast<double>(n) + 1.0));
        CHECK(sums[n](0) == doctest::Approx(expected).epsilon(1e-12));
        CHECK(sums[n](1) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("neumann partial sums expose divergence beyond the radius") {
    const auto sums = cen::neumann_partial_sums(ones2(), 0.6, Eigen::Vector2d(1, 1), 30);
    CHECK(sums.back()(0) > sums[10](0));
    CHECK(sums.back()(0) > 1e3);
}

TEST_CASE("partial sums satisfy the resolvent identity") {
    auto rng = testutil::make_rng(36);
    const Eigen::MatrixXd a = testutil::random_adjacency(rng, 6);
    const double lambda = spectral::lambda_max(a);
    const double c = 0.7 / lambda;
    const Eigen::VectorXd probe = Eigen::VectorXd::Ones(6);
    const auto sums = cen::neumann_partial_sums(a, c, probe, 12);
    Eigen::VectorXd power = probe;  // (cA)^(n+1) probe
    for (std::size_t n = 0; n < sums.size(); ++n) {
        power = c * (a * power);
        const Eigen::VectorXd identity = sums[n] - c * (a * sums[n]);
        CHECK((identity - (probe - power)).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("rescale_to_average fixes the sum of squares") {
    cen::CentralityResult result;
    result.node_scores = Eigen::Vector4d(1, 1, 1, 1);
    const auto same = cen::rescale_to_average(result);
    CHECK((same.node_scores - result.node_scores).cwiseAbs().maxCoeff() == 0.0);

    result.node_scores = Eigen::Vector4d(2, 0, 0, 0);
    const auto spike = cen::rescale_to_average(result);
    CHECK((spike.node_scores - result.node_scores).cwiseAbs().maxCoeff() == 0.0);

    result.node_scores = Eigen::Vector2d(3, 4);
    const auto scaled = cen::rescale_to_average(result);
    const double s = std::sqrt(2.0 / 25.0);
    CHECK(scaled.node_scores(0) == doctest::Approx(3 * s).epsilon(1e-12));
    CHECK(scaled.node_scores(1) == doctest::Approx(4 * s).epsilon(1e-12));
    CHECK(scaled.node_scores.squaredNorm() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(scaled.meta.rescaled);

    // Idempotent up to roundoff, ratios preserved.
    const auto twice = cen::rescale_to_average(scaled);
    CHECK((twice.node_scores - scaled.node_scores).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(scaled.node_scores(1) / scaled.node_scores(0) ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("rescale of an all-zero vector fails") {
    cen::CentralityResult result;
    result.node_scores = Eigen::VectorXd::Zero(3);
    CHECK_THROWS_AS(cen::rescale_to_average(result), DomainError);
}

TEST_CASE("expected communication length") {
    CHECK(cen::expected_communication_length(0.0) == 1.0);
    CHECK(cen::expected_communication_length(0.5) == 2.0);
    CHECK(cen::expected_communication_length(0.9) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK_THROWS_AS(cen::expected_communication_length(1.0), std::invalid_argument);
    CHECK_THROWS_AS(cen::expected_communication_length(-0.1), std::invalid_argument);
}

TEST_CASE("balance report at beta = 0 reduces to the degree") {
    auto rng = testutil::make_rng(37);
    const Eigen::MatrixXd a = testutil::random_adjacency(rng, 6);
    const auto result = cen::general_centrality_graph(a, {1.0, 0.0});
    const auto report = cen::balance_report(a, 0.0, result);
    CHECK(report.max_abs_residual <= 1e-12);
}

TEST_CASE("balance report reconstructs every solve") {
    auto rng = testutil::make_rng(38);
    for (int trial = 0; trial < 5; ++trial) {
        const Eigen::MatrixXd a = testutil::random_adjacency(rng, 9);
        if (a.cwiseAbs().maxCoeff() == 0.0) continue;
        const double beta = 0.6 / spectral::lambda_max(a);
        const auto result = cen::general_centrality_graph(a, {1.0, beta});
        const auto report = cen::balance_report(a, beta, result);
        CHECK(report.max_abs_residual <= 1e-8);
    }
}

TEST_CASE("negative beta on the 4-leaf star flips the leaf sign") {
    // Closed form of (I + 0.3 A) c = A 1: center 4.375, leaves -0.3125.
    const Eigen::MatrixXd a = star(4);
    const auto result = cen::general_centrality_graph(a, {1.0, -0.3});
    CHECK(result.node_scores(0) == doctest::Approx(4.375).epsilon(1e-10));
    CHECK(result.node_scores(1) == doctest::Approx(-0.3125).epsilon(1e-10));

    // Cross-check with the independent series oracle (|beta| lambda = 0.6).
    const Eigen::VectorXd oracle = testutil::brute_force_series(a, 1.0, -0.3, 200);
    CHECK((result.node_scores - oracle).cwiseAbs().maxCoeff() <= 1e-9);

    const auto report = cen::balance_report(a, -0.3, result);
    CHECK(report.max_abs_residual <= 1e-8);
    CHECK(result.node_scores(0) > 0.0);
    for (int leaf = 1; leaf <= 4; ++leaf) CHECK(result.node_scores(leaf) < 0.0);
    // The center sees only negatively scored neighbors and vice versa.
    CHECK(report.rows[0].positive_neighbor_sum == 0.0);
    CHECK(report.rows[0].negative_neighbor_sum < 0.0);
    CHECK(report.rows[1].positive_neighbor_sum > 0.0);
}

TEST_CASE("balance report rejects a result of the wrong size") {
    cen::CentralityResult stale;
    stale.node_scores = Eigen::Vector2d(1, 1);
    CHECK_THROWS_AS(cen::balance_report(star(3), 0.1, stale), std::invalid_argument);
}
