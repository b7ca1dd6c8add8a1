#pragma once

#include "msd/time_mesh.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace msd {

/// How the L1 weight differences are evaluated.
///
/// AsWritten subtracts the two powers directly, so weights of cells far from
/// t_m on strongly graded meshes lose most of their digits; for r = 7 and small
/// alpha the complementary kernels even turn negative. Compensated evaluates
/// the same difference through expm1/log1p and is the default.
enum class L1WeightEvaluation { AsWritten, Compensated };

/// Fills out[j] = a^{(m)}_j for 0 <= j < m, the nonuniform L1 weights
/// a^{(m)}_{m-k} = (beta_{2-alpha}(t_m - t_{k-1}) - beta_{2-alpha}(t_m - t_k)) / tau_k
/// indexed by j = m - k. `out` must hold at least m entries.
void l1_weight_row(const GradedMesh& mesh, double alpha, std::size_t m, std::span<double> out,
                   L1WeightEvaluation evaluation = L1WeightEvaluation::Compensated);

/// Nonuniform L1 weights together with the complementary discrete convolution
/// kernel P^{(m)}_{m-k}, stored as dense triangular arrays.
///
/// Building the kernels costs O(M^3); the time-marching solvers use
/// l1_weight_row directly and never need this object.
class L1System {
public:
    static constexpr std::size_t kMaxLevels = std::size_t{1} << 13;

    /// Throws std::invalid_argument for alpha outside (0, 1) or M > kMaxLevels.
    L1System(GradedMesh mesh, double alpha,
             L1WeightEvaluation evaluation = L1WeightEvaluation::Compensated);

    [[nodiscard]] const GradedMesh& mesh() const noexcept { return mesh_; }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] std::size_t levels() const noexcept { return mesh_.levels(); }

    /// a^{(m)}_j, 1 <= m <= M, 0 <= j < m.
    [[nodiscard]] double weight(std::size_t m, std::size_t j) const;
    /// P^{(m)}_j, 1 <= m <= M, 0 <= j < m.
    [[nodiscard]] double kernel(std::size_t m, std::size_t j) const;

private:
    [[nodiscard]] static std::size_t offset(std::size_t m, std::size_t j) noexcept {
        return m * (m - 1) / 2 + j;
    }
    void check_index(std::size_t m, std::size_t j) const;

    GradedMesh mesh_;
    double alpha_;
    std::vector<double> weights_;
    std::vector<double> kernels_;
};

inline L1System build_l1(const GradedMesh& mesh, double alpha,
                         L1WeightEvaluation evaluation = L1WeightEvaluation::Compensated) {
    return L1System(mesh, alpha, evaluation);
}

/// D_M^alpha v^m = sum_{k=1}^{m} a^{(m)}_{m-k} (v^k - v^{k-1}) with m = values.size() - 1.
/// Throws std::invalid_argument if fewer than two values or m > M.
double apply_dfrac(const L1System& sys, std::span<const double> values);

} // namespace msd
