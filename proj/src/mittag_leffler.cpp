#include "msd/mittag_leffler.hpp"

#include "msd/numerics.hpp"

#include <quadmath.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace msd {

namespace {

using quad = __float128;

// Largest tolerated ratio between the biggest series term and the result.
constexpr double kMaxCancellation = 1e18;
constexpr int kMaxSeriesTerms = 4000;
constexpr int kMaxAsymptoticTerms = 4000;
constexpr double kAsymptoticTolerance = 1e-15;

void validate(MLParams p) {
    if (!(p.alpha > 0.0 && p.alpha <= 2.0)) {
        throw std::invalid_argument("Mittag-Leffler alpha must lie in (0, 2], got " +
                                    std::to_string(p.alpha));
    }
    if (!(p.beta > 0.0) || !std::isfinite(p.beta)) {
        throw std::invalid_argument("Mittag-Leffler beta must be positive, got " +
                                    std::to_string(p.beta));
    }
}

// log of the largest series term magnitude, scanned in double precision.
double log_peak_term(MLParams p, double x) {
    const double log_x = std::log(std::abs(x));
    double peak = -std::lgamma(p.beta);
    for (int k = 1; k < kMaxSeriesTerms; ++k) {
        const double value = k * log_x - std::lgamma(p.alpha * k + p.beta);
        if (value > peak) {
            peak = value;
        } else if (p.alpha * k + p.beta > 2.0 && value < peak - 200.0) {
            break;
        }
    }
    return peak;
}

} // namespace

std::optional<double> ml_series(MLParams p, double x) {
    validate(p);
    if (x == 0.0) {
        return 1.0 / gamma_fn(p.beta);
    }
    if (x < 0.0 && log_peak_term(p, x) > std::log(kMaxCancellation) + 2.0) {
        return std::nullopt;
    }
    const quad log_x = logq(static_cast<quad>(std::abs(x)));
    const bool alternating = x < 0.0;
    quad sum = 0;
    quad peak = 0;
    for (int k = 0; k < kMaxSeriesTerms; ++k) {
        const quad arg = static_cast<quad>(p.alpha) * k + static_cast<quad>(p.beta);
        const quad magnitude = expq(log_x * k - lgammaq(arg));
        const quad term = (alternating && (k % 2 == 1)) ? -magnitude : magnitude;
        sum += term;
        if (magnitude > peak) {
            peak = magnitude;
        }
        if (arg > 2 && magnitude < peak && magnitude <= static_cast<quad>(1e-36) * fabsq(sum)) {
            const double result = static_cast<double>(sum);
            if (!std::isfinite(result)) {
                return std::nullopt;
            }
            if (alternating && static_cast<double>(peak / fabsq(sum)) > kMaxCancellation) {
                return std::nullopt;
            }
            return result;
        }
    }
    return std::nullopt;
}

std::optional<double> ml_asymptotic(MLParams p, double x) {
    validate(p);
    if (!(x < 0.0)) {
        return std::nullopt;
    }
    const double y = -x;

    double pole_part = 0.0;
    if (p.alpha >= 1.0) {
        // Residues at s = y^{1/alpha} e^{+-i pi/alpha}; at alpha = 1 the pair
        // collapses onto the cut and each branch carries half weight.
        const std::complex<double> zeta =
            std::polar(std::pow(y, 1.0 / p.alpha), std::numbers::pi / p.alpha);
        const double weight = (p.alpha == 1.0 ? 1.0 : 2.0) / p.alpha;
        pole_part = weight * std::real(std::pow(zeta, 1.0 - p.beta) * std::exp(zeta));
    }

    // For z <= 0, 1/Gamma(z) = sin(pi z) Gamma(1 - z) / pi; the factor
    // Gamma(1 - z) / pi bounds the term magnitude regardless of where the zeros
    // of 1/Gamma fall and is log-convex in k, so once it starts growing the
    // expansion is past its optimal truncation point.
    CompensatedSum sum;
    const double log_y = std::log(y);
    double previous_envelope = INFINITY;
    bool previous_bounded = false;
    for (int k = 1; k <= kMaxAsymptoticTerms; ++k) {
        const double arg = p.beta - p.alpha * k;
        double magnitude = 0.0; // y^{-k} / Gamma(arg), signed
        double envelope = 0.0;
        const bool bounded = arg <= 0.0;
        if (!bounded) {
            magnitude = std::exp(-k * log_y) / std::tgamma(arg);
            envelope = std::abs(magnitude);
        } else {
            envelope = std::exp(std::lgamma(1.0 - arg) - std::log(std::numbers::pi) - k * log_y);
            magnitude = arg == std::floor(arg) ? 0.0 : std::sin(std::numbers::pi * arg) * envelope;
        }
        if (!std::isfinite(envelope) || (bounded && previous_bounded && envelope > previous_envelope)) {
            break;
        }
        const double scale = std::abs(sum.value() + pole_part);
        if (bounded && envelope <= kAsymptoticTolerance * scale * 1e-2) {
            return sum.value() + pole_part;
        }
        // -x^{-k} / Gamma(arg) with x^{-k} = (-1)^k y^{-k}
        const double sign = (k % 2 == 0) ? -1.0 : 1.0;
        sum.add(sign * magnitude);
        previous_envelope = envelope;
        previous_bounded = bounded;
    }
    const double total = sum.value() + pole_part;
    if (previous_envelope <= kAsymptoticTolerance * std::abs(total)) {
        return total;
    }
    return std::nullopt;
}

double ml_eval(MLParams p, double x) {
    validate(p);
    if (!std::isfinite(x)) {
        throw std::domain_error("Mittag-Leffler argument must be finite");
    }
    if (p.alpha == 1.0 && p.beta == 1.0) {
        return std::exp(x);
    }
    if (auto s = ml_series(p, x)) {
        return *s;
    }
    if (auto a = ml_asymptotic(p, x)) {
        return *a;
    }
    throw std::domain_error("Mittag-Leffler evaluation not certified for alpha=" +
                            std::to_string(p.alpha) + ", beta=" + std::to_string(p.beta) +
                            ", x=" + std::to_string(x));
}

double relaxation_exact(double alpha, double lambda, double t) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("relaxation_exact requires alpha in (0, 1)");
    }
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("relaxation_exact requires lambda > 0");
    }
    if (!(t >= 0.0)) {
        throw std::invalid_argument("relaxation_exact requires t >= 0");
    }
    if (t == 0.0) {
        return 0.0;
    }
    return (1.0 - ml_eval({alpha, 1.0}, -lambda * std::pow(t, alpha))) / lambda;
}

} // namespace msd
