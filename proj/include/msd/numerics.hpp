#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace msd {

/// Raised when a time-marching solve cannot proceed (degenerate step matrix,
/// failed factorization).
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Gamma function on the positive axis and on non-integer negatives.
double gamma_fn(double x);

/// Gamma(a) / Gamma(b) for a, b > 0 without intermediate overflow.
double gamma_ratio(double a, double b);

/// x^p - (x - h)^p for 0 <= h <= x, accurate when h << x.
double pow_diff(double x, double h, double p);

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double value) noexcept {
        const double t = sum_ + value;
        if (std::abs(sum_) >= std::abs(value)) {
            compensation_ += (sum_ - t) + value;
        } else {
            compensation_ += (value - t) + sum_;
        }
        sum_ = t;
    }
    [[nodiscard]] double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

/// Solves the dense system A x = b in place (row-major n x n) by Gaussian
/// elimination with partial pivoting. Throws std::runtime_error if A is
/// numerically singular.
void solve_dense(std::span<double> matrix, std::span<double> rhs, std::size_t n);

} // namespace msd
