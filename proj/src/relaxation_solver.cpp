#include "msd/relaxation_solver.hpp"

#include "msd/l1_discretization.hpp"

#include <algorithm>
#include <cmath>

namespace msd {

namespace {

void validate(const RelaxationProblem& prob) {
    if (!(prob.alpha > 0.0 && prob.alpha < 1.0)) {
        throw std::invalid_argument("relaxation alpha must lie in (0, 1), got " +
                                    std::to_string(prob.alpha));
    }
    if (!std::isfinite(prob.lambda)) {
        throw std::invalid_argument("relaxation lambda must be finite");
    }
    if (!(prob.horizon > 0.0) || !std::isfinite(prob.horizon)) {
        throw std::invalid_argument("relaxation horizon must be positive");
    }
}

} // namespace

TimeProfile msd_forcing(const RelaxationProblem& prob) {
    validate(prob);
    TimeProfile g = prob.forcing.profile();
    for (std::size_t i = 0; i < prob.depth; ++i) {
        g = frac_integrate(g, prob.alpha) * (-prob.lambda);
    }
    return g;
}

TimeProfile msd_reconstruction(const RelaxationProblem& prob) {
    validate(prob);
    TimeProfile g = prob.forcing.profile();
    TimeProfile sum;
    for (std::size_t i = 0; i < prob.depth; ++i) {
        const TimeProfile integrated = frac_integrate(g, prob.alpha);
        sum += integrated;
        g = integrated * (-prob.lambda);
    }
    return sum;
}

MsdNodalTerms msd_nodal_terms(const RelaxationProblem& prob, const GradedMesh& mesh) {
    validate(prob);
    const auto nodes = mesh.nodes();
    MsdNodalTerms out;
    out.forcing.resize(nodes.size(), 0.0);
    out.reconstruction.resize(nodes.size(), 0.0);

    if (prob.forcing.is_analytic()) {
        const TimeProfile forcing = msd_forcing(prob);
        const TimeProfile recon = msd_reconstruction(prob);
        for (std::size_t m = 1; m < nodes.size(); ++m) {
            out.forcing[m] = forcing(nodes[m]);
            out.reconstruction[m] = recon(nodes[m]);
        }
        if (!forcing.is_singular_at_zero()) {
            out.forcing[0] = forcing(0.0);
        }
        return out;
    }

    std::vector<double> g(nodes.size());
    for (std::size_t m = 0; m < nodes.size(); ++m) {
        g[m] = prob.forcing(nodes[m]);
    }
    for (std::size_t i = 0; i < prob.depth; ++i) {
        std::vector<double> h = frac_integrate_nodal(g, prob.alpha, mesh);
        for (std::size_t m = 0; m < nodes.size(); ++m) {
            out.reconstruction[m] += h[m];
            g[m] = -prob.lambda * h[m];
        }
    }
    out.forcing = std::move(g);
    out.approximate = prob.depth > 0;
    return out;
}

ScalarTrace solve_relaxation(const RelaxationProblem& prob, const GradedMesh& mesh) {
    validate(prob);
    if (std::abs(mesh.horizon() - prob.horizon) > 1e-14 * prob.horizon) {
        throw std::invalid_argument("mesh horizon does not match the problem horizon");
    }
    const MsdNodalTerms terms = msd_nodal_terms(prob, mesh);
    const std::size_t levels = mesh.levels();

    std::vector<double> v(levels + 1, 0.0);
    std::vector<double> increments(levels + 1, 0.0); // delta V^k
    std::vector<double> row(levels);

    for (std::size_t m = 1; m <= levels; ++m) {
        l1_weight_row(mesh, prob.alpha, m, row, prob.weights);
        const double diagonal = row[0] + prob.lambda;
        if (!(diagonal > 0.0)) {
            throw SolverError("degenerate L1 step at m = " + std::to_string(m) +
                              ": a_0 + lambda = " + std::to_string(diagonal));
        }
        double history = 0.0;
        for (std::size_t k = 1; k < m; ++k) {
            history += row[m - k] * increments[k];
        }
        v[m] = (terms.forcing[m] + row[0] * v[m - 1] - history) / diagonal;
        increments[m] = v[m] - v[m - 1];
    }

    std::vector<double> u(levels + 1);
    for (std::size_t m = 0; m <= levels; ++m) {
        u[m] = v[m] + terms.reconstruction[m];
    }
    return ScalarTrace{mesh, std::move(v), std::move(u), terms.approximate};
}

std::size_t relaxation_depth_for_full_order(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in (0, 1)");
    }
    return static_cast<std::size_t>(std::ceil((2.0 - alpha) / alpha)) - 1;
}

double relaxation_theory_order(double alpha, double grading, std::size_t depth) {
    return std::min(2.0 - alpha, grading * static_cast<double>(depth + 1) * alpha);
}

} // namespace msd
