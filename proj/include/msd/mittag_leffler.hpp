#pragma once

#include <optional>

namespace msd {

/// Two-parameter Mittag-Leffler function E_{alpha,beta}(x) = sum_k x^k / Gamma(alpha k + beta).
struct MLParams {
    double alpha; ///< in (0, 2]
    double beta;  ///< > 0
};

/// Evaluates E_{alpha,beta}(x) to about 1e-10 relative accuracy or better.
///
/// Negative arguments are the main use. Small positive arguments are accepted
/// (the series has no cancellation there). Throws std::invalid_argument for
/// parameters outside their ranges and std::domain_error when neither
/// evaluation branch can certify its accuracy.
double ml_eval(MLParams params, double x);

/// Taylor branch, summed in quad precision. Empty when the term cancellation
/// would exceed what the working precision can absorb.
std::optional<double> ml_series(MLParams params, double x);

/// Large-|x| branch for x < 0: -sum_k x^{-k} / Gamma(beta - alpha k), plus the
/// oscillatory pole contributions when alpha >= 1. Empty when the smallest
/// term of the divergent expansion is not below the requested accuracy.
std::optional<double> ml_asymptotic(MLParams params, double x);

/// Solution of d^alpha u + lambda u = 1, u(0) = 0, alpha in (0, 1), lambda > 0:
/// u(t) = (1 - E_{alpha,1}(-lambda t^alpha)) / lambda.
double relaxation_exact(double alpha, double lambda, double t);

} // namespace msd
