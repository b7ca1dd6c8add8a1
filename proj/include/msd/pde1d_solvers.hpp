#pragma once

#include "msd/frac_calculus.hpp"
#include "msd/l1_discretization.hpp"
#include "msd/time_mesh.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace msd {

/// Symmetric tridiagonal matrix: diag[i], off[i] couples i and i + 1.
struct SymTridiagonal {
    std::vector<double> diag;
    std::vector<double> off;

    [[nodiscard]] std::size_t size() const noexcept { return diag.size(); }
    /// y = A x.
    void multiply(std::span<const double> x, std::span<double> y) const;
};

/// LU factors of a tridiagonal matrix without pivoting (Thomas algorithm).
/// Throws SolverError on a zero pivot.
class TridiagonalFactor {
public:
    explicit TridiagonalFactor(const SymTridiagonal& a);
    void solve(std::span<double> rhs) const;

private:
    std::vector<double> off_;
    std::vector<double> pivot_;
};

/// Linear finite elements on (a, b) with J uniform cells and homogeneous
/// Dirichlet data; the unknowns are the J - 1 interior nodes.
struct IntervalFem {
    double a = 0.0;
    double b = 1.0;
    std::size_t cells = 2;
    double h = 0.5;
    SymTridiagonal mass;
    SymTridiagonal stiffness;

    [[nodiscard]] std::size_t interior() const noexcept { return cells - 1; }
    [[nodiscard]] double node(std::size_t j) const { return a + static_cast<double>(j + 1) * h; }
    /// Load vector int f(x) phi_j(x) dx by 2-point Gauss on every element.
    [[nodiscard]] std::vector<double> load(const std::function<double(double)>& f) const;
};

/// Throws std::invalid_argument for J < 2 or b <= a.
IntervalFem assemble_fem(double a, double b, std::size_t cells);

/// One term amplitude(t) * sin(k pi (x - a) / (b - a)).
struct FieldMode {
    unsigned k = 1;
    TimeProfile amplitude;
};

/// Finite sum of Dirichlet sine modes of -d^2/dx^2 on (a, b).
struct SeparableField {
    double a = 0.0;
    double b = 1.0;
    std::vector<FieldMode> modes;

    /// (k pi / (b - a))^2.
    [[nodiscard]] double eigenvalue(unsigned k) const;
    [[nodiscard]] double shape(unsigned k, double x) const;
    [[nodiscard]] double operator()(double x, double t) const;
    [[nodiscard]] bool is_zero() const noexcept;
};

/// Nodal values on the interior nodes for t_0..t_M, row-major [m * (J - 1) + j].
struct FieldTrace {
    GradedMesh mesh;
    double a = 0.0;
    double b = 1.0;
    std::size_t cells = 2;
    std::vector<double> v; ///< smooth remainder, row 0 = 0
    std::vector<double> u; ///< reconstructed solution

    [[nodiscard]] std::size_t interior() const noexcept { return cells - 1; }
    [[nodiscard]] double h() const noexcept { return (b - a) / static_cast<double>(cells); }
    [[nodiscard]] std::span<const double> u_row(std::size_t m) const;
    [[nodiscard]] std::span<const double> v_row(std::size_t m) const;
};

/// Forcing seen by the remainder v and the separated parts added back to it.
struct MsdFieldData {
    SeparableField forcing;
    SeparableField reconstruction; ///< excludes the initial value
    SeparableField initial;
};

/// Subdiffusion d_t^alpha u - u_xx = f, u(0) = u0, decomposed as
/// u = v + u0 + I^alpha sum_{i<n} (I^alpha Delta)^i (f + Delta u0).
/// u0 amplitudes must be constant. Throws std::invalid_argument for mismatched
/// domains or non-constant u0.
MsdFieldData msd_subdiffusion_data(const SeparableField& f, const SeparableField& u0,
                                   std::size_t depth, double alpha);

/// Nonuniform L1 in time with the decomposition above.
FieldTrace solve_subdiffusion(double alpha, std::size_t depth, const SeparableField& f,
                              const SeparableField& u0, const GradedMesh& mesh,
                              const IntervalFem& fem,
                              L1WeightEvaluation weights = L1WeightEvaluation::Compensated);

/// Plain L1 scheme (no decomposition) for general data: U^0 interpolates u0
/// and the load is assembled from f(x, t_m) directly.
FieldTrace solve_subdiffusion_nodal(double alpha, const std::function<double(double, double)>& f,
                                    const std::function<double(double)>& u0,
                                    const GradedMesh& mesh, const IntervalFem& fem,
                                    L1WeightEvaluation weights = L1WeightEvaluation::Compensated);

/// Integrodifferential u_t - I^alpha u_xx = f, u(0) = u0. With
/// g = f + Delta u0 beta_{1+alpha} the decomposition of depth n is
/// u = v + u0 + sum_{i<n} (Delta I^{1+alpha})^i I^1 g, and v is forced by
/// (Delta I^{1+alpha})^n g. Depth 0 is the direct scheme, depth 1 the usual choice.
MsdFieldData msd_integro_data(const SeparableField& f, const SeparableField& u0, double alpha,
                              std::size_t depth = 1);

/// Trapezoidal convolution quadrature with Crank-Nicolson averaging on a
/// uniform mesh. Throws std::invalid_argument for a graded mesh.
FieldTrace solve_integro(double alpha, const MsdFieldData& data, const GradedMesh& mesh,
                         const IntervalFem& fem);

/// Diffusion-wave d_t^gamma u - u_xx = f with u(0) = u0, u_t(0) = u1,
/// rewritten as the integrodifferential problem with alpha = gamma - 1 and
/// g = I^alpha f + Delta u0 beta_gamma + u1 before decomposing to `depth`.
MsdFieldData diffusion_wave_data(double gamma, const SeparableField& f, const SeparableField& u0,
                                 const SeparableField& u1, std::size_t depth);

/// Diffusion-wave solve with two separated terms.
FieldTrace solve_diffusion_wave(double gamma, const SeparableField& f, const SeparableField& u0,
                                const SeparableField& u1, const GradedMesh& mesh,
                                const IntervalFem& fem);

} // namespace msd
