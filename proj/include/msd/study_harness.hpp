#pragma once

#include "msd/pde1d_solvers.hpp"
#include "msd/relaxation_solver.hpp"
#include "msd/volterra_collocation.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace msd {

enum class Model { Relaxation, Volterra, Subdiffusion, Integro, DiffusionWave };

[[nodiscard]] std::string model_name(Model model);
/// Inverse of model_name; throws std::invalid_argument for unknown names.
[[nodiscard]] Model parse_model(const std::string& name);

/// How a Volterra study's M maps to cells: either M cells, or M collocation
/// points (M / q cells).
enum class VolterraIndexing { Cells, CollocationPoints };

/// One convergence study on the built-in data of each model:
///  - relaxation: f = 1, lambda given;
///  - volterra: K = 1 / Gamma(1 - alpha), f = 1;
///  - subdiffusion: (0, 2 pi), f = sin x, u0 = sin(x / 2);
///  - integro: (0, 1), u0 = sin(pi x), f = t^alpha sin(pi x), depth 0 is the direct scheme;
///  - diffusion-wave: (0, 1), u0 = sin(pi x), u1 = 0, f = 0, `alpha` holds gamma.
struct StudySpec {
    Model model = Model::Relaxation;
    double alpha = 0.5;
    double lambda = 1.0;
    std::size_t depth = 0;
    double grading = 1.0;
    double horizon = 1.0;
    std::size_t cells = 0; ///< J; 0 selects the model default
    std::vector<double> collocation{2.0 / 3.0, 1.0};
    VolterraIndexing indexing = VolterraIndexing::Cells;
    L1WeightEvaluation weights = L1WeightEvaluation::Compensated;
};

struct ReportRow {
    std::size_t levels = 0;
    double error = 0.0;
    std::optional<double> rate;

    bool operator==(const ReportRow&) const = default;
};

struct ConvergenceReport {
    std::string model;
    double alpha = 0.0;
    std::size_t depth = 0;
    double grading = 1.0;
    std::vector<ReportRow> rows;
    double theory_order = 0.0; ///< not part of the CSV schema
    std::string label;         ///< not part of the CSV schema

    /// Compares the CSV-visible fields only.
    [[nodiscard]] bool same_data(const ConvergenceReport& other) const;
};

double two_mesh_error(const ScalarTrace& coarse, const ScalarTrace& fine);
/// Compared at the mesh nodes only, which needs c_q = 1.
double two_mesh_error(const CollocationTrace& coarse, const CollocationTrace& fine);
/// max_m sqrt(h sum_j (U^{2m}_j - U^m_j)^2).
double two_mesh_error(const FieldTrace& coarse, const FieldTrace& fine);

/// log2(e_k / e_{k+1}) for consecutive entries; the first rate is absent.
std::vector<std::optional<double>> observed_rates(const std::vector<double>& errors);

double theory_order(const StudySpec& spec);

/// Throws std::invalid_argument unless the list is non-empty and strictly doubling.
void validate_levels(const std::vector<std::size_t>& levels);

/// Solves at every M and 2M; the fine solve of one row is reused as the coarse
/// solve of the next. Solver failures are rethrown as SolverError naming the row.
ConvergenceReport run_study(const StudySpec& spec, const std::vector<std::size_t>& levels,
                            const std::string& label = {});

struct TableBlock {
    StudySpec spec;
    std::vector<std::size_t> levels;
    std::string label;
};

/// The four blocks (two orders, plain and decomposed) of built-in study 1..6.
/// Throws std::invalid_argument for other ids.
std::vector<TableBlock> table_blocks(int id);
std::vector<ConvergenceReport> reproduce_table(int id);

/// CSV with header `model,alpha,n,r,M,error,rate` at 6 significant digits.
void write_csv(std::ostream& out, const std::vector<ConvergenceReport>& reports);
std::string to_csv(const std::vector<ConvergenceReport>& reports);
/// A row without a rate opens a new report; following rows with the same
/// (model, alpha, n, r) join it. Throws std::invalid_argument on a malformed
/// document or an unknown model name.
std::vector<ConvergenceReport> parse_csv(const std::string& text);

/// Aligned human-readable table.
void write_pretty(std::ostream& out, const std::vector<ConvergenceReport>& reports);

} // namespace msd
