#include "msd/numerics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace msd {

double gamma_fn(double x) {
    if (x <= 0.0 && x == std::floor(x)) {
        throw std::domain_error("gamma function pole at " + std::to_string(x));
    }
    return std::tgamma(x);
}

double gamma_ratio(double a, double b) {
    if (a <= 0.0 || b <= 0.0) {
        throw std::domain_error("gamma_ratio requires positive arguments");
    }
    if (a < 170.0 && b < 170.0) {
        return std::tgamma(a) / std::tgamma(b);
    }
    return std::exp(std::lgamma(a) - std::lgamma(b));
}

double pow_diff(double x, double h, double p) {
    if (h <= 0.0) {
        return 0.0;
    }
    const double rest = x - h;
    if (rest <= 0.0) {
        return std::pow(x, p);
    }
    const double ratio = h / x;
    if (ratio < 0.5) {
        return -std::pow(x, p) * std::expm1(p * std::log1p(-ratio));
    }
    return std::pow(x, p) - std::pow(rest, p);
}

void solve_dense(std::span<double> a, std::span<double> b, std::size_t n) {
    if (a.size() != n * n || b.size() != n) {
        throw std::invalid_argument("solve_dense: dimension mismatch");
    }
    double scale = 0.0;
    for (double v : a) {
        scale = std::max(scale, std::abs(v));
    }
    const double tiny = scale * 64.0 * std::numeric_limits<double>::epsilon();

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::abs(a[row * n + col]) > std::abs(a[pivot * n + col])) {
                pivot = row;
            }
        }
        if (!(std::abs(a[pivot * n + col]) > tiny)) {
            throw std::runtime_error("solve_dense: singular matrix at column " +
                                     std::to_string(col));
        }
        if (pivot != col) {
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(a[col * n + k], a[pivot * n + k]);
            }
            std::swap(b[col], b[pivot]);
        }
        for (std::size_t row = col + 1; row < n; ++row) {
            const double factor = a[row * n + col] / a[col * n + col];
            if (factor == 0.0) {
                continue;
            }
            for (std::size_t k = col; k < n; ++k) {
                a[row * n + k] -= factor * a[col * n + k];
            }
            b[row] -= factor * b[col];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[i];
        for (std::size_t k = i + 1; k < n; ++k) {
            acc -= a[i * n + k] * b[k];
        }
        b[i] = acc / a[i * n + i];
    }
}

} // namespace msd
