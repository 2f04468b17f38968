#include "hypercen/spectral.hpp"

#include "hypercen/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace hypercen::spectral {

namespace {

constexpr double kAngleTol = 1e-12;
constexpr int kMaxIterations = 10000;

void require_symmetric(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("matrix must be square");
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw std::invalid_argument("matrix must be symmetric");
}

struct PowerResult {
    double lambda;
    Eigen::VectorXd vector;
};

// Deterministic power iteration from the all-ones vector. Returns nothing
// when the iterate angle fails to settle (e.g. near-bipartite spectra with
// |lambda_min| close to lambda_max) or the converged pair has a loose
// residual; callers then use the full decomposition.
std::optional<PowerResult> power_iteration(const Eigen::MatrixXd& a) {
    const auto n = a.rows();
    Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
    x.normalize();
    const double a_scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        Eigen::VectorXd y = a * x;
        const double norm = y.norm();
        if (norm <= 0.0) return std::nullopt;  // ones is in the kernel
        y /= norm;
        const double angle_gap = 1.0 - std::abs(x.dot(y));
        x = y;
        if (angle_gap <= kAngleTol) {
            const double lambda = x.dot(a * x);
            if (lambda <= 0.0) return std::nullopt;
            if ((a * x - lambda * x).norm() > 1e-9 * a_scale) return std::nullopt;
            return PowerResult{lambda, x};
        }
    }
    return std::nullopt;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> full_decomposition(const Eigen::MatrixXd& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("symmetric eigendecomposition failed");
    return es;
}

} // namespace

double lambda_max(const Eigen::MatrixXd& a) {
    require_symmetric(a);
    if (auto p = power_iteration(a)) return p->lambda;
    const auto es = full_decomposition(a);
    return es.eigenvalues().maxCoeff();
}

Eigen::VectorXd perron_vector(const Eigen::MatrixXd& a) {
    require_symmetric(a);
    Eigen::VectorXd v;
    if (auto p = power_iteration(a)) {
        v = p->vector;
    } else {
        const auto es = full_decomposition(a);
        const auto& vals = es.eigenvalues();
        const double top = vals.maxCoeff();
        if (top <= 0.0)
            throw ZeroSpectrumError("zero spectrum: no positive eigenvalue");
        // Project all-ones onto the top eigenspace. For a reducible matrix
        // this picks the non-negative combination of per-component vectors.
        const double tol = 1e-12 * std::max(1.0, std::abs(top));
        Eigen::VectorXd proj = Eigen::VectorXd::Zero(a.rows());
        const Eigen::VectorXd ones = Eigen::VectorXd::Ones(a.rows());
        for (int k = 0; k < vals.size(); ++k) {
            if (top - vals(k) <= tol)
                proj += es.eigenvectors().col(k).dot(ones) * es.eigenvectors().col(k);
        }
        if (proj.norm() > 1e-12) {
            v = proj.normalized();
        } else {
            int top_index = 0;
            vals.maxCoeff(&top_index);
            v = es.eigenvectors().col(top_index);
        }
    }
    int max_index = 0;
    v.cwiseAbs().maxCoeff(&max_index);
    if (v(max_index) < 0.0) v = -v;
    return v;
}

Eigen::VectorXd spectrum(const Eigen::MatrixXd& a) {
    require_symmetric(a);
    Eigen::VectorXd vals = full_decomposition(a).eigenvalues();
    std::sort(vals.data(), vals.data() + vals.size(), std::greater<double>());
    return vals;
}

PoleCheck is_pole_of_spectrum(double beta, const Eigen::VectorXd& eigenvalues) {
    PoleCheck check;
    check.distance = std::numeric_limits<double>::infinity();
    const double lam_abs_max =
        eigenvalues.size() == 0 ? 0.0 : eigenvalues.cwiseAbs().maxCoeff();
    if (lam_abs_max <= 0.0) return check;  // no nonzero eigenvalues, no poles
    const double zero_tol = 1e-12 * lam_abs_max;
    const double eps_pole = 1e-8 * (std::abs(beta) + 1.0 / lam_abs_max);
    for (int k = 0; k < eigenvalues.size(); ++k) {
        const double lam = eigenvalues(k);
        if (std::abs(lam) <= zero_tol) continue;
        const double pole = 1.0 / lam;
        const double d = std::abs(beta - pole);
        if (d < check.distance) {
            check.distance = d;
            check.nearest_pole = pole;
            check.eigenvalue = lam;
        }
    }
    check.pole = check.distance <= eps_pole;
    return check;
}

PoleCheck is_pole(double beta, const Eigen::MatrixXd& a) {
    return is_pole_of_spectrum(beta, spectrum(a));
}

SpectralInfo analyze(const Eigen::MatrixXd& a) {
    SpectralInfo info;
    info.spectrum = spectrum(a);
    info.lambda_max = info.spectrum.size() > 0 ? info.spectrum(0) : 0.0;
    info.perron_vector = perron_vector(a);
    return info;
}

} // namespace hypercen::spectral
