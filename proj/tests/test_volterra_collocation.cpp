#include "msd/volterra_collocation.hpp"

#include "msd/mittag_leffler.hpp"
#include "msd/numerics.hpp"

#include "oracles/oracle_values.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace msd;

namespace {

VolterraProblem resolvent_problem(double alpha, std::size_t depth) {
    VolterraProblem prob;
    prob.alpha = alpha;
    prob.kernel = VolterraKernel::constant(1.0 / gamma_fn(1.0 - alpha));
    prob.depth = depth;
    return prob;
}

// u = E_{1-alpha}(t^{1-alpha}) solves u = I^{1-alpha} u + 1.
double resolvent_exact(double alpha, double t) {
    return ml_eval({1.0 - alpha, 1.0}, std::pow(t, 1.0 - alpha));
}

double nodal_error(const CollocationTrace& trace, double alpha) {
    double err = 0.0;
    for (std::size_t m = 1; m <= trace.mesh.levels(); ++m) {
        err = std::max(err, std::abs(trace.node_value(m) - resolvent_exact(alpha, trace.mesh.node(m))));
    }
    return err;
}

} // namespace

TEST(SingularMoment, MatchesQuadratureTable) {
    for (const auto& row : oracle::kSingularMoment) {
        const double got = singular_moment(row.alpha, static_cast<unsigned>(row.k), row.t_star, row.a, row.b);
        EXPECT_NEAR(got, row.value, 1e-11 * std::abs(row.value))
            << row.alpha << " " << row.k << " " << row.t_star << " " << row.a << " " << row.b;
    }
}

TEST(SingularMoment, RejectsBadInterval) {
    EXPECT_THROW(singular_moment(0.5, 0, 1.0, 0.5, 0.25), std::invalid_argument);
    EXPECT_THROW(singular_moment(0.5, 0, 1.0, 0.0, 1.5), std::invalid_argument);
    EXPECT_THROW(singular_moment(1.0, 0, 1.0, 0.0, 1.0), std::invalid_argument);
    EXPECT_EQ(singular_moment(0.5, 2, 1.0, 0.3, 0.3), 0.0);
}

TEST(VolterraTransform, Examples) {
    VolterraProblem zero = resolvent_problem(0.25, 0);
    zero.forcing = ForcingFunction::analytic(TimeProfile{});
    EXPECT_TRUE(volterra_transform(zero).is_zero());

    const TimeProfile ft = volterra_transform(resolvent_problem(0.25, 0));
    EXPECT_NEAR(ft(1.0), 1.0881, 1e-4);
    EXPECT_NEAR(ft(1.0), 1.0 / gamma_fn(1.75), 1e-15);
    EXPECT_EQ(ft(0.0), 0.0);

    // f = 1 + t, K = kappa: f~ = kappa t^{1-alpha} / (1 - alpha) + t
    VolterraProblem lin;
    lin.alpha = 0.4;
    lin.kernel = VolterraKernel::constant(2.0);
    lin.forcing = ForcingFunction::analytic(TimeProfile({{1.0, 0.0}, {1.0, 1.0}}));
    const TimeProfile g = volterra_transform(lin);
    for (const double t : {0.1, 0.7, 1.0}) {
        EXPECT_NEAR(g(t), 2.0 * std::pow(t, 0.6) / 0.6 + t, 1e-13);
    }
}

TEST(VolterraTransform, RequiresConstantKernel) {
    VolterraProblem prob;
    prob.kernel = VolterraKernel::general([](double s, double t) { return 1.0 + s * t; });
    EXPECT_THROW(volterra_transform(prob), std::invalid_argument);
}

TEST(MsdVolterraForcing, Examples) {
    const auto n0 = msd_volterra_forcing(resolvent_problem(0.25, 0));
    EXPECT_TRUE(n0.reconstruction.is_zero());
    EXPECT_EQ(n0.forcing, volterra_transform(resolvent_problem(0.25, 0)));

    const auto n1 = msd_volterra_forcing(resolvent_problem(0.25, 1));
    EXPECT_NEAR(n1.forcing(1.0), 0.7522528, 1e-7);
    EXPECT_NEAR(n1.reconstruction(1.0), 1.0 / gamma_fn(1.75), 1e-15);

    const auto n2 = msd_volterra_forcing(resolvent_problem(0.25, 2));
    EXPECT_NEAR(n2.forcing(1.0), 0.39227116491407547, 1e-14);
    EXPECT_NEAR(n2.forcing(2.0), std::pow(2.0, 2.25) / gamma_fn(3.25), 1e-13);
}

TEST(SolveVolterra, ZeroForcingGivesZero) {
    VolterraProblem prob = resolvent_problem(0.5, 1);
    prob.forcing = ForcingFunction::analytic(TimeProfile{});
    const auto trace = solve_volterra(prob, 16);
    for (const double u : trace.u) {
        EXPECT_EQ(u, 0.0);
    }
}

TEST(SolveVolterra, CollocationEquationsHold) {
    for (const std::size_t depth : {0u, 2u}) {
        const auto prob = resolvent_problem(0.5, depth);
        const auto trace = solve_volterra(prob, 64);
        EXPECT_LE(collocation_residual(prob, trace), 1e-10) << "n = " << depth;
    }
}

TEST(SolveVolterra, ConvergesToExactSolution) {
    for (const double alpha : {0.25, 0.75}) {
        const std::size_t depth = volterra_depth_for_order(alpha);
        const auto coarse = solve_volterra(resolvent_problem(alpha, depth), 256);
        const auto fine = solve_volterra(resolvent_problem(alpha, depth), 512);
        const double e1 = nodal_error(coarse, alpha);
        const double e2 = nodal_error(fine, alpha);
        EXPECT_LT(e2, 5e-5) << "alpha = " << alpha;
        EXPECT_GT(std::log2(e1 / e2), 1.8) << "alpha = " << alpha;
    }
}

TEST(SolveVolterra, DecompositionSharpensOrder) {
    const double alpha = 0.75;
    auto rate = [&](std::size_t depth) {
        const double e1 = nodal_error(solve_volterra(resolvent_problem(alpha, depth), 128), alpha);
        const double e2 = nodal_error(solve_volterra(resolvent_problem(alpha, depth), 256), alpha);
        return std::log2(e1 / e2);
    };
    // n = 0 is still pre-asymptotic here and approaches its limit 0.5 from above
    const double plain = rate(0);
    EXPECT_GT(plain, volterra_theory_order(alpha, 0, 2) - 0.05);
    EXPECT_LT(plain, 0.8);
    EXPECT_GT(rate(3), 1.8);
}

TEST(SolveVolterra, GeneralKernelMatchesConstantPath) {
    const double alpha = 0.5;
    const double kappa = 1.0 / gamma_fn(0.5);
    VolterraProblem exact = resolvent_problem(alpha, 1);
    VolterraProblem general = exact;
    general.kernel = VolterraKernel::general([kappa](double, double) { return kappa; });
    // The general path builds the separated terms by product quadrature of a
    // singular profile, which converges more slowly than the exact terms.
    auto gap_at = [&](std::size_t levels) {
        const auto a = solve_volterra(exact, levels);
        const auto b = solve_volterra(general, levels);
        EXPECT_FALSE(a.approximate_terms);
        EXPECT_TRUE(b.approximate_terms);
        double gap = 0.0;
        for (std::size_t m = 1; m <= levels; ++m) {
            gap = std::max(gap, std::abs(a.node_value(m) - b.node_value(m)));
        }
        return gap;
    };
    const double g1 = gap_at(128);
    const double g2 = gap_at(512);
    EXPECT_LT(g2, 1e-3);
    EXPECT_LT(g2, 0.5 * g1);
}

TEST(SolveVolterra, SmoothVariableKernel) {
    // u(t) = t solves u = int (t - s)^{-alpha} e^{s} u ds + f with the matching f,
    // f(t) = t - int_0^t (t - s)^{-alpha} s e^s ds computed by the moment series.
    const double alpha = 0.3;
    VolterraProblem prob;
    prob.alpha = alpha;
    prob.kernel = VolterraKernel::general([](double s, double) { return std::exp(s); });
    prob.forcing = ForcingFunction::tabulated([alpha](double t) {
        double sum = 0.0;
        double fact = 1.0;
        for (unsigned k = 0; k < 20; ++k) {
            if (k > 0) {
                fact *= k;
            }
            sum += singular_moment(alpha, k + 1, t, 0.0, t) / fact;
        }
        return t - sum;
    });
    const auto trace = solve_volterra(prob, 128);
    double err = 0.0;
    for (std::size_t m = 1; m <= 128; ++m) {
        err = std::max(err, std::abs(trace.node_value(m) - trace.mesh.node(m)));
    }
    EXPECT_LT(err, 1e-4);
}

TEST(CollocationTrace, NodeValueNeedsEndpointCollocation) {
    VolterraProblem prob = resolvent_problem(0.5, 0);
    prob.collocation = {0.25, 0.75};
    const auto trace = solve_volterra(prob, 8);
    EXPECT_THROW((void)trace.node_value(1), std::logic_error);
    EXPECT_NEAR(trace.point(2, 1), 2.75 / 8.0, 1e-15);
}

TEST(SolveVolterra, RejectsBadParameters) {
    VolterraProblem prob = resolvent_problem(0.5, 0);
    prob.collocation = {0.5, 0.5};
    EXPECT_THROW(solve_volterra(prob, 8), std::invalid_argument);
    prob.collocation = {0.0, 1.0};
    EXPECT_THROW(solve_volterra(prob, 8), std::invalid_argument);
    prob.collocation = {};
    EXPECT_THROW(solve_volterra(prob, 8), std::invalid_argument);
    prob = resolvent_problem(0.5, 0);
    EXPECT_THROW(solve_volterra(prob, 0), std::invalid_argument);
    prob.alpha = 1.0;
    EXPECT_THROW(solve_volterra(prob, 8), std::invalid_argument);
}

TEST(VolterraDepth, Helpers) {
    EXPECT_EQ(volterra_depth_for_order(0.25), 1u);
    EXPECT_EQ(volterra_depth_for_order(0.75), 3u);
    EXPECT_EQ(volterra_depth_for_order(0.5), 1u);
    EXPECT_DOUBLE_EQ(volterra_theory_order(0.75, 0, 2), 0.5);
    EXPECT_DOUBLE_EQ(volterra_theory_order(0.75, 3, 2), 2.0);
    EXPECT_DOUBLE_EQ(volterra_theory_order(0.25, 0, 2), 1.5);
}
