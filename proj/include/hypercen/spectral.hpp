#pragma once

#include <Eigen/Dense>

namespace hypercen::spectral {

struct SpectralInfo {
    double lambda_max = 0.0;
    Eigen::VectorXd perron_vector;  // unit norm, non-negative after sign fix
    Eigen::VectorXd spectrum;       // all eigenvalues, descending
};

struct PoleCheck {
    bool pole = false;
    double nearest_pole = 0.0;       // the 1/lambda closest to beta
    double distance = 0.0;           // |beta - nearest_pole|
    double eigenvalue = 0.0;         // lambda behind the nearest pole
};

// Largest eigenvalue of a symmetric non-negative matrix. Power iteration
// (all-ones start, 1e-12 angle tolerance, 10000 iterations max) with a full
// symmetric eigendecomposition fallback whenever the iteration stalls or its
// residual is not tight, so the result is never silently wrong.
double lambda_max(const Eigen::MatrixXd& a);

// Unit eigenvector for lambda_max, sign-normalized so the largest-magnitude
// entry is positive. On a degenerate top eigenvalue (disconnected support)
// returns the projection of the all-ones vector onto the top eigenspace,
// which is the non-negative representative. Throws ZeroSpectrumError when
// lambda_max <= 0.
Eigen::VectorXd perron_vector(const Eigen::MatrixXd& a);

// Full eigenvalue list of a symmetric matrix, descending.
Eigen::VectorXd spectrum(const Eigen::MatrixXd& a);

// Invertibility guard for I - beta*A: beta hits a pole iff it lies within
// eps_pole of 1/lambda for some nonzero eigenvalue lambda, with
// eps_pole = 1e-8 * (|beta| + 1/lambda_abs_max).
PoleCheck is_pole(double beta, const Eigen::MatrixXd& a);
PoleCheck is_pole_of_spectrum(double beta, const Eigen::VectorXd& eigenvalues);

SpectralInfo analyze(const Eigen::MatrixXd& a);

} // namespace hypercen::spectral
