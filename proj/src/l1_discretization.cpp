#include "msd/l1_discretization.hpp"

#include "msd/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace msd {

namespace {

void require_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("L1 discretization requires alpha in (0, 1), got " +
                                    std::to_string(alpha));
    }
}

} // namespace

void l1_weight_row(const GradedMesh& mesh, double alpha, std::size_t m, std::span<double> out,
                   L1WeightEvaluation evaluation) {
    require_alpha(alpha);
    if (m == 0 || m > mesh.levels()) {
        throw std::out_of_range("L1 weight row index out of range");
    }
    if (out.size() < m) {
        throw std::invalid_argument("L1 weight row buffer too small");
    }
    const auto nodes = mesh.nodes();
    const auto steps = mesh.steps();
    const double exponent = 1.0 - alpha;
    const double scale = 1.0 / gamma_fn(2.0 - alpha);
    const double tm = nodes[m];
    if (evaluation == L1WeightEvaluation::Compensated) {
        for (std::size_t k = 1; k <= m; ++k) {
            const double tau = steps[k - 1];
            out[m - k] = scale * pow_diff(tm - nodes[k - 1], tau, exponent) / tau;
        }
        return;
    }
    double upper = std::pow(tm, exponent);
    for (std::size_t k = 1; k <= m; ++k) {
        const double lower = k == m ? 0.0 : std::pow(tm - nodes[k], exponent);
        out[m - k] = scale * (upper - lower) / steps[k - 1];
        upper = lower;
    }
}

L1System::L1System(GradedMesh mesh, double alpha, L1WeightEvaluation evaluation)
    : mesh_(std::move(mesh)), alpha_(alpha) {
    require_alpha(alpha);
    const std::size_t levels = mesh_.levels();
    if (levels > kMaxLevels) {
        throw std::invalid_argument("L1System dense storage supports at most 8192 levels");
    }
    const std::size_t total = levels * (levels + 1) / 2;
    weights_.assign(total, 0.0);
    kernels_.assign(total, 0.0);

    for (std::size_t m = 1; m <= levels; ++m) {
        l1_weight_row(mesh_, alpha_, m, std::span<double>(weights_).subspan(offset(m, 0), m),
                      evaluation);
    }

    for (std::size_t m = 1; m <= levels; ++m) {
        // P^{(m)}_{m-k} for k = m down to 1.
        kernels_[offset(m, 0)] = 1.0 / weights_[offset(m, 0)];
        for (std::size_t k = m - 1; k >= 1; --k) {
            double acc = 0.0;
            for (std::size_t j = k + 1; j <= m; ++j) {
                const double diff =
                    weights_[offset(j, j - k - 1)] - weights_[offset(j, j - k)];
                acc += diff * kernels_[offset(m, m - j)];
            }
            kernels_[offset(m, m - k)] = acc / weights_[offset(k, 0)];
        }
    }
}

void L1System::check_index(std::size_t m, std::size_t j) const {
    if (m == 0 || m > mesh_.levels() || j >= m) {
        throw std::out_of_range("L1System index (" + std::to_string(m) + ", " +
                                std::to_string(j) + ") out of range");
    }
}

double L1System::weight(std::size_t m, std::size_t j) const {
    check_index(m, j);
    return weights_[offset(m, j)];
}

double L1System::kernel(std::size_t m, std::size_t j) const {
    check_index(m, j);
    return kernels_[offset(m, j)];
}

double apply_dfrac(const L1System& sys, std::span<const double> values) {
    if (values.size() < 2) {
        throw std::invalid_argument("apply_dfrac needs at least v^0 and v^1");
    }
    const std::size_t m = values.size() - 1;
    if (m > sys.levels()) {
        throw std::invalid_argument("apply_dfrac: " + std::to_string(m) +
                                    " steps exceed the mesh level count");
    }
    double acc = 0.0;
    for (std::size_t k = 1; k <= m; ++k) {
        acc += sys.weight(m, m - k) * (values[k] - values[k - 1]);
    }
    return acc;
}

} // namespace msd
