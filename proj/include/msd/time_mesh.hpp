#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace msd {

/// Graded temporal mesh t_m = T (m/M)^r on [0, T].
///
/// Nodes are evaluated as T * (m/M)^r rather than (m*tau)^r so that a mesh and
/// its refinement share bit-identical nodes at even indices. Meshes are
/// immutable after construction.
class GradedMesh {
public:
    /// Throws std::invalid_argument for non-finite or non-positive T, M == 0,
    /// or non-positive r. A grading r < 1 is accepted and reported through
    /// below_unit_grading().
    GradedMesh(double horizon, std::size_t levels, double grading);

    static GradedMesh uniform(double horizon, std::size_t levels) {
        return GradedMesh(horizon, levels, 1.0);
    }

    [[nodiscard]] double horizon() const noexcept { return horizon_; }
    [[nodiscard]] std::size_t levels() const noexcept { return levels_; }
    [[nodiscard]] double grading() const noexcept { return grading_; }
    /// Base step T^{1/r} / M.
    [[nodiscard]] double base_step() const noexcept { return base_step_; }
    [[nodiscard]] bool is_uniform() const noexcept { return grading_ == 1.0; }
    [[nodiscard]] bool below_unit_grading() const noexcept { return grading_ < 1.0; }

    [[nodiscard]] double node(std::size_t m) const { return nodes_.at(m); }
    /// tau_m = t_m - t_{m-1} for 1 <= m <= M.
    [[nodiscard]] double step(std::size_t m) const { return steps_.at(m - 1); }

    [[nodiscard]] std::span<const double> nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::span<const double> steps() const noexcept { return steps_; }

    /// Same horizon and grading with 2M levels.
    [[nodiscard]] GradedMesh refine() const;

private:
    double horizon_;
    std::size_t levels_;
    double grading_;
    double base_step_;
    std::vector<double> nodes_;
    std::vector<double> steps_;
};

GradedMesh build_mesh(double horizon, std::size_t levels, double grading);

inline GradedMesh refine(const GradedMesh& mesh) { return mesh.refine(); }

} // namespace msd
