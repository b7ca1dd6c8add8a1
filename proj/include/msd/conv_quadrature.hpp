#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace msd {

/// Trapezoidal convolution quadrature for I^alpha on a uniform mesh with
/// step tau:
///   Q_m(phi) = tau^alpha sum_{p=0}^{m} omega_p phi^{m-p} + chi_m phi^0.
/// omega_p are the power-series coefficients of 2^{-alpha}(1+z)^alpha(1-z)^{-alpha};
/// chi_m makes the rule exact on constants.
struct CQWeights {
    double alpha = 0.0;
    double step = 0.0;
    std::size_t count = 0;
    std::vector<double> omega; ///< omega_0..omega_M
    std::vector<double> chi;   ///< chi_0..chi_M, chi_0 chosen so that Q_0(1) = 0
};

/// Throws std::invalid_argument unless alpha in (0, 1), tau > 0, M >= 1.
CQWeights build_cq(double alpha, double tau, std::size_t levels);

/// Q_m(phi) with m = values.size() - 1. Throws std::invalid_argument for an
/// empty sequence or m > M.
double apply_cq(const CQWeights& w, std::span<const double> values);

} // namespace msd
