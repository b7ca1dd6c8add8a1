#include "msd/time_mesh.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace msd {

GradedMesh::GradedMesh(double horizon, std::size_t levels, double grading)
    : horizon_(horizon), levels_(levels), grading_(grading) {
    if (!std::isfinite(horizon) || horizon <= 0.0) {
        throw std::invalid_argument("mesh horizon must be finite and positive, got " +
                                    std::to_string(horizon));
    }
    if (levels == 0) {
        throw std::invalid_argument("mesh level count must be at least 1");
    }
    if (!std::isfinite(grading) || grading <= 0.0) {
        throw std::invalid_argument("mesh grading must be finite and positive, got " +
                                    std::to_string(grading));
    }

    base_step_ = std::pow(horizon, 1.0 / grading) / static_cast<double>(levels);

    const auto m_total = static_cast<double>(levels);
    nodes_.resize(levels + 1);
    nodes_.front() = 0.0;
    for (std::size_t m = 1; m < levels; ++m) {
        const double ratio = static_cast<double>(m) / m_total;
        nodes_[m] = grading == 1.0 ? horizon * ratio : horizon * std::pow(ratio, grading);
    }
    nodes_.back() = horizon;

    steps_.resize(levels);
    for (std::size_t m = 1; m <= levels; ++m) {
        steps_[m - 1] = nodes_[m] - nodes_[m - 1];
        if (!(steps_[m - 1] > 0.0)) {
            throw std::invalid_argument("mesh step underflow at level " + std::to_string(m));
        }
    }
}

GradedMesh GradedMesh::refine() const { return GradedMesh(horizon_, 2 * levels_, grading_); }

GradedMesh build_mesh(double horizon, std::size_t levels, double grading) {
    return GradedMesh(horizon, levels, grading);
}

} // namespace msd
