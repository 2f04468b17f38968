#include "hypercen/errors.hpp"

#include <sstream>

namespace hypercen {

namespace {

std::string format_double(double v) {
    std::ostringstream out;
    out.precision(12);
    out << v;
    return out.str();
}

} // namespace

PoleError::PoleError(double beta, double eigenvalue, double distance)
    : DomainError("POLE",
                  "beta=" + format_double(beta) + " is within pole tolerance of 1/lambda for lambda=" +
                      format_double(eigenvalue) + " (distance " + format_double(distance) + ")",
                  "beta=" + format_double(beta) + " lambda=" + format_double(eigenvalue)),
      beta_(beta),
      eigenvalue_(eigenvalue),
      distance_(distance) {}

SeriesDivergenceError::SeriesDivergenceError(double beta, double lambda_max)
    : DomainError("SERIES_DIVERGENCE",
                  "series diverges: |beta|=" + format_double(std::abs(beta)) +
                      " is not below 1/lambda_max with lambda_max=" + format_double(lambda_max),
                  "beta=" + format_double(beta) + " lambda_max=" + format_double(lambda_max)),
      beta_(beta),
      lambda_max_(lambda_max) {}

} // namespace hypercen
