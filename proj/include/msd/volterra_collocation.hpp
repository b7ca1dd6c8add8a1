#pragma once

#include "msd/frac_calculus.hpp"
#include "msd/time_mesh.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace msd {

/// K(s, t) in u(t) = int_0^t (t - s)^{-alpha} K(s, t) u(s) ds + f(t).
class VolterraKernel {
public:
    using Callable = std::function<double(double s, double t)>;

    static VolterraKernel constant(double kappa);
    static VolterraKernel general(Callable fn);

    [[nodiscard]] bool is_constant() const noexcept { return !fn_; }
    /// Throws std::logic_error for a general kernel.
    [[nodiscard]] double constant_value() const;
    [[nodiscard]] double operator()(double s, double t) const { return fn_ ? fn_(s, t) : kappa_; }

private:
    double kappa_ = 0.0;
    Callable fn_;
};

struct VolterraProblem {
    double alpha = 0.5;
    double horizon = 1.0;
    VolterraKernel kernel = VolterraKernel::constant(1.0);
    ForcingFunction forcing = ForcingFunction::analytic(TimeProfile::constant(1.0));
    std::size_t depth = 0;                     ///< n
    std::vector<double> collocation{2.0 / 3.0, 1.0}; ///< c_1 < ... < c_q in (0, 1]
};

/// mu_k = int_a^b (T* - s)^{-alpha} s^k ds for 0 <= a <= b <= T*, alpha in (0, 1).
double singular_moment(double alpha, unsigned k, double t_star, double a, double b);

/// f~ = L f(0) + f - f(0). Requires a constant kernel and analytic forcing.
TimeProfile volterra_transform(const VolterraProblem& prob);

/// Exact L^n f~ and sum_{i<n} L^i f~ for a constant kernel and analytic forcing.
struct VolterraMsdProfiles {
    TimeProfile forcing;
    TimeProfile reconstruction;
};
VolterraMsdProfiles msd_volterra_forcing(const VolterraProblem& prob);

/// Values on a uniform mesh at t_{m,i} = t_m + c_i tau, stored row-major as
/// [m * q + i] for 0 <= m < M, 0 <= i < q.
struct CollocationTrace {
    GradedMesh mesh;
    std::vector<double> collocation;
    std::vector<double> v;
    std::vector<double> u;
    bool approximate_terms = false;

    [[nodiscard]] std::size_t order() const noexcept { return collocation.size(); }
    [[nodiscard]] double point(std::size_t m, std::size_t i) const;
    /// U at the mesh node t_m, 1 <= m <= M. Requires c_q = 1.
    [[nodiscard]] double node_value(std::size_t m) const;
};

/// Collocation in the space of piecewise polynomials of degree q - 1 on a
/// uniform mesh with M cells. The constant-kernel path uses exact singular
/// moments; a general kernel is replaced by its degree-(q-1) interpolant on
/// each cell. With a general kernel or tabulated forcing the separated terms
/// come from the same product quadrature and are flagged approximate.
///
/// Throws std::invalid_argument for bad parameters and SolverError if a local
/// collocation matrix is singular.
CollocationTrace solve_volterra(const VolterraProblem& prob, std::size_t levels);

/// max_i |V_{m,i} - (L_h V)(t_{m,i}) - g(t_{m,i})| relative to 1 + |V_{m,i}|,
/// recomputed from scratch. Used to check the local solves.
double collocation_residual(const VolterraProblem& prob, const CollocationTrace& trace);

/// ceil(m / (1 - alpha)) - 1, the smallest n with (n + 1)(1 - alpha) >= m.
std::size_t volterra_depth_for_order(double alpha, unsigned target_order = 1);

/// q once (n + 1)(1 - alpha) >= 1, else min{q, 2 (n + 1)(1 - alpha)}.
double volterra_theory_order(double alpha, std::size_t depth, std::size_t q);

} // namespace msd
