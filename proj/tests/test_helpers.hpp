#pragma once

#include "hypercen/hypergraph.hpp"
#include "hypercen/rng.hpp"

#include <Eigen/Dense>

// Shared generators and independent oracles. Everything here stays clear of
// the library's solve/series code paths so the checks do not verify an
// implementation against itself.
namespace testutil {

inline hypercen::Rng make_rng(std::uint64_t seed) { return hypercen::Rng(seed); }

// Random symmetric non-negative adjacency with zero diagonal: each pair is
// linked with probability `density`, weights uniform in (0, 1].
inline Eigen::MatrixXd random_adjacency(hypercen::Rng& rng, int n, double density = 0.5) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform01() < density) {
                const double w = 1.0 - rng.uniform01();  // (0, 1]
                a(i, j) = w;
                a(j, i) = w;
            }
    return a;
}

// Random hypergraph weight matrix with the given fill density.
inline Eigen::MatrixXd random_weights(hypercen::Rng& rng, int nodes, int edges,
                                      double density = 0.4) {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(nodes, edges);
    for (int i = 0; i < nodes; ++i)
        for (int j = 0; j < edges; ++j)
            if (rng.uniform01() < density) w(i, j) = 1.0 - rng.uniform01();
    return w;
}

// Brute-force projection: a_ik = sum_j w_ij * w_kj by explicit loops.
inline Eigen::MatrixXd brute_force_projection(const Eigen::MatrixXd& w) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(w.rows(), w.rows());
    for (Eigen::Index i = 0; i < w.rows(); ++i)
        for (Eigen::Index k = 0; k < w.rows(); ++k)
            for (Eigen::Index j = 0; j < w.cols(); ++j) a(i, k) += w(i, j) * w(k, j);
    return a;
}

// Series oracle: alpha * sum_{k=0}^{terms-1} beta^k M^{k+1} 1 by repeated
// explicit matrix-vector products.
inline Eigen::VectorXd brute_force_series(const Eigen::MatrixXd& m, double alpha, double beta,
                                          int terms) {
    Eigen::VectorXd term = m * Eigen::VectorXd::Ones(m.cols());
    Eigen::VectorXd sum = term;
    for (int k = 1; k < terms; ++k) {
        term = beta * (m * term);
        sum += term;
    }
    return alpha * sum;
}

// Largest root of det(A - lambda I) for a 3x3 matrix, found by bisection on
// the characteristic polynomial. Independent of any eigensolver.
inline double cubic_lambda_max(const Eigen::Matrix3d& a) {
    const auto char_poly = [&](double lambda) {
        Eigen::Matrix3d shifted = a;
        shifted.diagonal().array() -= lambda;
        return shifted(0, 0) * (shifted(1, 1) * shifted(2, 2) - shifted(1, 2) * shifted(2, 1)) -
               shifted(0, 1) * (shifted(1, 0) * shifted(2, 2) - shifted(1, 2) * shifted(2, 0)) +
               shifted(0, 2) * (shifted(1, 0) * shifted(2, 1) - shifted(1, 1) * shifted(2, 0));
    };
    // det(A - x I) -> -x^3 as x -> +inf, so the polynomial is negative past
    // every root; bisect down from a Gershgorin-style upper bound.
    double hi = 1.0 + a.cwiseAbs().rowwise().sum().maxCoeff();
    double lo = -hi;
    for (double x = hi; x > lo; x -= hi / 1024.0) {
        if (char_poly(x) > 0.0 || x == lo) {
            lo = x;
            break;
        }
    }
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (char_poly(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace testutil
