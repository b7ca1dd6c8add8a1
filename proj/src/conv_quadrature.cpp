#include "msd/conv_quadrature.hpp"

#include "msd/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace msd {

CQWeights build_cq(double alpha, double tau, std::size_t levels) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("convolution quadrature requires alpha in (0, 1), got " +
                                    std::to_string(alpha));
    }
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        throw std::invalid_argument("convolution quadrature step must be positive");
    }
    if (levels == 0) {
        throw std::invalid_argument("convolution quadrature needs at least one step");
    }

    // Binomial series: (1+z)^alpha -> b_k, (1-z)^{-alpha} -> g_k.
    std::vector<double> b(levels + 1);
    std::vector<double> g(levels + 1);
    b[0] = 1.0;
    g[0] = 1.0;
    for (std::size_t k = 1; k <= levels; ++k) {
        const double kk = static_cast<double>(k);
        b[k] = b[k - 1] * (alpha - kk + 1.0) / kk;
        g[k] = g[k - 1] * (alpha + kk - 1.0) / kk;
    }

    CQWeights w;
    w.alpha = alpha;
    w.step = tau;
    w.count = levels;
    w.omega.assign(levels + 1, 0.0);
    const double scale = std::pow(2.0, -alpha);
    for (std::size_t p = 0; p <= levels; ++p) {
        double acc = 0.0;
        for (std::size_t k = 0; k <= p; ++k) {
            acc += b[k] * g[p - k];
        }
        w.omega[p] = scale * acc;
    }

    w.chi.assign(levels + 1, 0.0);
    const double tau_alpha = std::pow(tau, alpha);
    const double inv_gamma = 1.0 / gamma_fn(1.0 + alpha);
    CompensatedSum partial;
    for (std::size_t m = 0; m <= levels; ++m) {
        partial.add(w.omega[m]);
        const double tm = static_cast<double>(m) * tau;
        w.chi[m] = std::pow(tm, alpha) * inv_gamma - tau_alpha * partial.value();
    }
    return w;
}

double apply_cq(const CQWeights& w, std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("apply_cq needs at least phi^0");
    }
    const std::size_t m = values.size() - 1;
    if (m > w.count) {
        throw std::invalid_argument("apply_cq: " + std::to_string(m) +
                                    " steps exceed the weight count " + std::to_string(w.count));
    }
    double acc = 0.0;
    for (std::size_t p = 0; p <= m; ++p) {
        acc += w.omega[p] * values[m - p];
    }
    return std::pow(w.step, w.alpha) * acc + w.chi[m] * values[0];
}

} // namespace msd
