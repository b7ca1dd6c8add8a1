#include "msd/conv_quadrature.hpp"

#include "msd/numerics.hpp"

#include "oracles/oracle_values.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace msd;

TEST(CQWeights, LeadingCoefficients) {
    for (const double alpha : {0.25, 0.5, 0.75}) {
        const CQWeights w = build_cq(alpha, 0.1, 8);
        EXPECT_NEAR(w.omega[0], std::pow(2.0, -alpha), 1e-15);
        EXPECT_NEAR(w.omega[1], std::pow(2.0, -alpha) * 2.0 * alpha, 1e-15);
    }
}

TEST(CQWeights, MatchHighPrecisionTable) {
    for (const auto& row : oracle::kCqWeights) {
        const auto index = static_cast<std::size_t>(row.index);
        const CQWeights w = build_cq(row.alpha, 1.0, 64);
        EXPECT_NEAR(w.omega[index], row.value, 1e-12 * std::abs(row.value))
            << "alpha " << row.alpha << " p " << index;
    }
}

TEST(CQWeights, ExactOnConstants) {
    const double alpha = 0.4;
    const double tau = 1.0 / 64.0;
    const CQWeights w = build_cq(alpha, tau, 64);
    std::vector<double> ones(65, 1.0);
    for (std::size_t m = 0; m <= 64; ++m) {
        const double t = m * tau;
        const double expected = std::pow(t, alpha) / gamma_fn(1.0 + alpha);
        EXPECT_NEAR(apply_cq(w, std::span<const double>(ones).first(m + 1)), expected, 1e-13);
    }
}

TEST(CQWeights, LinearDataExample) {
    // I^{1/4} applied to t^{1/2}... here phi = t with alpha = 0.5: I^{1/2} t = t^{1.5} / Gamma(2.5)
    const std::size_t levels = 1024;
    const double tau = 1.0 / levels;
    const CQWeights w = build_cq(0.5, tau, levels);
    std::vector<double> phi(levels + 1);
    for (std::size_t m = 0; m <= levels; ++m) {
        phi[m] = m * tau;
    }
    EXPECT_NEAR(apply_cq(w, phi), 0.7522528, 1e-5);
}

TEST(CQWeights, SecondOrderOnQuadratics) {
    const double alpha = 0.5;
    const double exact = 2.0 / gamma_fn(3.5); // I^alpha t^2 at t = 1
    double previous = 0.0;
    for (std::size_t levels : {64u, 128u, 256u, 512u}) {
        const double tau = 1.0 / levels;
        const CQWeights w = build_cq(alpha, tau, levels);
        std::vector<double> phi(levels + 1);
        for (std::size_t m = 0; m <= levels; ++m) {
            phi[m] = (m * tau) * (m * tau);
        }
        const double err = std::abs(apply_cq(w, phi) - exact);
        if (previous > 0.0) {
            EXPECT_NEAR(std::log2(previous / err), 2.0, 0.1);
        }
        previous = err;
    }
}

TEST(CQWeights, QuadraticFormIsPositive) {
    // sum_m phi^m sum_p omega_p phi^{m-p} >= 0
    std::mt19937_64 rng(5);
    std::normal_distribution<double> normal;
    const std::size_t levels = 200;
    for (int trial = 0; trial < 100; ++trial) {
        const double alpha = 0.05 + 0.9 * (trial % 10) / 9.0;
        const CQWeights w = build_cq(alpha, 1.0, levels);
        std::vector<double> phi(levels + 1);
        for (auto& x : phi) {
            x = normal(rng);
        }
        double form = 0.0;
        for (std::size_t m = 0; m <= levels; ++m) {
            double conv = 0.0;
            for (std::size_t p = 0; p <= m; ++p) {
                conv += w.omega[p] * phi[m - p];
            }
            form += phi[m] * conv;
        }
        EXPECT_GE(form, -1e-10) << "trial " << trial;
    }
}

TEST(CQWeights, PartialSumsTrackPowerLaw) {
    // sum_{p<=m} omega_p ~ m^alpha / Gamma(1 + alpha)
    for (const double alpha : {0.25, 0.5, 0.75}) {
        const CQWeights w = build_cq(alpha, 1.0, 1024);
        double sum = 0.0;
        for (const double omega : w.omega) {
            sum += omega;
        }
        const double expected = std::pow(1024.0, alpha) / gamma_fn(1.0 + alpha);
        EXPECT_NEAR(sum / expected, 1.0, 0.05);
    }
}

TEST(CQWeights, RejectsBadParameters) {
    EXPECT_THROW(build_cq(0.0, 1.0, 4), std::invalid_argument);
    EXPECT_THROW(build_cq(1.0, 1.0, 4), std::invalid_argument);
    EXPECT_THROW(build_cq(0.5, 0.0, 4), std::invalid_argument);
    EXPECT_THROW(build_cq(0.5, 1.0, 0), std::invalid_argument);
    const CQWeights w = build_cq(0.5, 1.0, 4);
    EXPECT_THROW((void)apply_cq(w, std::vector<double>{}), std::invalid_argument);
    EXPECT_THROW((void)apply_cq(w, std::vector<double>(6, 1.0)), std::invalid_argument);
}
