#pragma once

#include "msd/frac_calculus.hpp"
#include "msd/l1_discretization.hpp"
#include "msd/numerics.hpp"
#include "msd/time_mesh.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace msd {

/// d_t^alpha u + lambda u = f on (0, T], u(0) = 0, solved through the
/// decomposition u = v + I^alpha sum_{i<n} (-lambda I^alpha)^i f.
struct RelaxationProblem {
    double alpha = 0.5;
    double lambda = 1.0;
    double horizon = 1.0;
    ForcingFunction forcing = ForcingFunction::analytic(TimeProfile::constant(1.0));
    std::size_t depth = 0; ///< n; depth 0 is the plain L1 scheme
    L1WeightEvaluation weights = L1WeightEvaluation::Compensated;
};

struct ScalarTrace {
    GradedMesh mesh;
    std::vector<double> v; ///< V^0..V^M, the smooth remainder
    std::vector<double> u; ///< U^0..U^M, with the separated terms added back
    bool approximate_terms = false; ///< separated terms came from numerical quadrature
};

/// Exact (-lambda I^alpha)^n f. Requires analytic forcing.
TimeProfile msd_forcing(const RelaxationProblem& prob);

/// Exact I^alpha sum_{i<n} (-lambda I^alpha)^i f. Requires analytic forcing.
TimeProfile msd_reconstruction(const RelaxationProblem& prob);

/// Nodal values of the modified forcing and the reconstruction terms. Analytic
/// forcing is sampled exactly; tabulated forcing goes through repeated
/// product integration and carries its own O(tau^2) error.
struct MsdNodalTerms {
    std::vector<double> forcing;
    std::vector<double> reconstruction;
    bool approximate = false;
};
MsdNodalTerms msd_nodal_terms(const RelaxationProblem& prob, const GradedMesh& mesh);

/// Nonuniform L1 time marching for the remainder v followed by reconstruction.
/// Throws SolverError if a^{(m)}_0 + lambda <= 0 (only possible for lambda < 0).
ScalarTrace solve_relaxation(const RelaxationProblem& prob, const GradedMesh& mesh);

/// ceil((2 - alpha) / alpha) - 1, the smallest depth reaching order 2 - alpha on uniform meshes.
std::size_t relaxation_depth_for_full_order(double alpha);

/// min{2 - alpha, r (n + 1) alpha}.
double relaxation_theory_order(double alpha, double grading, std::size_t depth);

} // namespace msd
