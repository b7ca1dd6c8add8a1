#include "msd/study_harness.hpp"

#include "msd/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

namespace msd {

std::string model_name(Model model) {
    switch (model) {
    case Model::Relaxation:
        return "relaxation";
    case Model::Volterra:
        return "volterra";
    case Model::Subdiffusion:
        return "subdiffusion";
    case Model::Integro:
        return "integro";
    case Model::DiffusionWave:
        return "diffusion-wave";
    }
    throw std::invalid_argument("unknown model");
}

Model parse_model(const std::string& name) {
    for (Model m : {Model::Relaxation, Model::Volterra, Model::Subdiffusion, Model::Integro,
                    Model::DiffusionWave}) {
        if (model_name(m) == name) {
            return m;
        }
    }
    throw std::invalid_argument("unknown model '" + name + "'");
}

bool ConvergenceReport::same_data(const ConvergenceReport& other) const {
    return model == other.model && alpha == other.alpha && depth == other.depth &&
           grading == other.grading && rows == other.rows;
}

namespace {

void require_refinement(const GradedMesh& coarse, const GradedMesh& fine) {
    if (fine.levels() != 2 * coarse.levels() || fine.horizon() != coarse.horizon() ||
        fine.grading() != coarse.grading()) {
        throw std::invalid_argument("two-mesh comparison needs the refined mesh of the coarse one");
    }
}

} // namespace

double two_mesh_error(const ScalarTrace& coarse, const ScalarTrace& fine) {
    require_refinement(coarse.mesh, fine.mesh);
    double worst = 0.0;
    for (std::size_t m = 0; m <= coarse.mesh.levels(); ++m) {
        worst = std::max(worst, std::abs(fine.u[2 * m] - coarse.u[m]));
    }
    return worst;
}

double two_mesh_error(const CollocationTrace& coarse, const CollocationTrace& fine) {
    require_refinement(coarse.mesh, fine.mesh);
    if (coarse.collocation != fine.collocation) {
        throw std::invalid_argument("collocation parameters differ between the two meshes");
    }
    double worst = 0.0;
    for (std::size_t m = 1; m <= coarse.mesh.levels(); ++m) {
        worst = std::max(worst, std::abs(fine.node_value(2 * m) - coarse.node_value(m)));
    }
    return worst;
}

double two_mesh_error(const FieldTrace& coarse, const FieldTrace& fine) {
    require_refinement(coarse.mesh, fine.mesh);
    if (coarse.cells != fine.cells || coarse.a != fine.a || coarse.b != fine.b) {
        throw std::invalid_argument("two-mesh comparison needs the same spatial mesh");
    }
    const double h = coarse.h();
    double worst = 0.0;
    for (std::size_t m = 0; m <= coarse.mesh.levels(); ++m) {
        const auto c = coarse.u_row(m);
        const auto f = fine.u_row(2 * m);
        double acc = 0.0;
        for (std::size_t j = 0; j < c.size(); ++j) {
            const double d = f[j] - c[j];
            acc += d * d;
        }
        worst = std::max(worst, std::sqrt(h * acc));
    }
    return worst;
}

std::vector<std::optional<double>> observed_rates(const std::vector<double>& errors) {
    std::vector<std::optional<double>> out(errors.size());
    for (std::size_t i = 1; i < errors.size(); ++i) {
        out[i] = std::log2(errors[i - 1] / errors[i]);
    }
    return out;
}

double theory_order(const StudySpec& spec) {
    switch (spec.model) {
    case Model::Relaxation:
    case Model::Subdiffusion:
        return relaxation_theory_order(spec.alpha, spec.grading, spec.depth);
    case Model::Volterra:
        return volterra_theory_order(spec.alpha, spec.depth, spec.collocation.size());
    case Model::Integro:
        return spec.depth == 0 ? 1.0 + spec.alpha : 2.0;
    case Model::DiffusionWave:
        return 2.0;
    }
    return 0.0;
}

void validate_levels(const std::vector<std::size_t>& levels) {
    if (levels.empty()) {
        throw std::invalid_argument("the M list is empty");
    }
    if (levels.front() == 0) {
        throw std::invalid_argument("M must be positive");
    }
    for (std::size_t i = 1; i < levels.size(); ++i) {
        if (levels[i] != 2 * levels[i - 1]) {
            throw std::invalid_argument("the M list must double at every step");
        }
    }
}

namespace {

using Trace = std::variant<ScalarTrace, CollocationTrace, FieldTrace>;

std::size_t default_cells(const StudySpec& spec) {
    if (spec.cells != 0) {
        return spec.cells;
    }
    switch (spec.model) {
    case Model::Subdiffusion:
        return 128;
    case Model::Integro:
    case Model::DiffusionWave:
        return 32;
    default:
        return 0;
    }
}

SeparableField sine_field(double a, double b, unsigned k, TimeProfile amplitude) {
    return SeparableField{a, b, {{k, std::move(amplitude)}}};
}

Trace solve_once(const StudySpec& spec, std::size_t levels) {
    switch (spec.model) {
    case Model::Relaxation: {
        RelaxationProblem prob;
        prob.alpha = spec.alpha;
        prob.lambda = spec.lambda;
        prob.horizon = spec.horizon;
        prob.depth = spec.depth;
        prob.weights = spec.weights;
        return solve_relaxation(prob, GradedMesh(spec.horizon, levels, spec.grading));
    }
    case Model::Volterra: {
        VolterraProblem prob;
        prob.alpha = spec.alpha;
        prob.horizon = spec.horizon;
        prob.kernel = VolterraKernel::constant(1.0 / gamma_fn(1.0 - spec.alpha));
        prob.depth = spec.depth;
        prob.collocation = spec.collocation;
        std::size_t cells = levels;
        if (spec.indexing == VolterraIndexing::CollocationPoints) {
            const std::size_t q = spec.collocation.size();
            if (q == 0 || levels % q != 0) {
                throw std::invalid_argument("M must be a multiple of the collocation order");
            }
            cells = levels / q;
        }
        return solve_volterra(prob, cells);
    }
    case Model::Subdiffusion: {
        const double b = 2.0 * std::numbers::pi;
        const auto fem = assemble_fem(0.0, b, default_cells(spec));
        const auto f = sine_field(0.0, b, 2, TimeProfile::constant(1.0));
        const auto u0 = sine_field(0.0, b, 1, TimeProfile::constant(1.0));
        return solve_subdiffusion(spec.alpha, spec.depth, f, u0,
                                  GradedMesh(spec.horizon, levels, spec.grading), fem,
                                  spec.weights);
    }
    case Model::Integro: {
        const auto fem = assemble_fem(0.0, 1.0, default_cells(spec));
        const auto f = sine_field(0.0, 1.0, 1, TimeProfile::monomial(1.0, spec.alpha));
        const auto u0 = sine_field(0.0, 1.0, 1, TimeProfile::constant(1.0));
        return solve_integro(spec.alpha, msd_integro_data(f, u0, spec.alpha, spec.depth),
                             GradedMesh(spec.horizon, levels, 1.0), fem);
    }
    case Model::DiffusionWave: {
        const auto fem = assemble_fem(0.0, 1.0, default_cells(spec));
        const SeparableField zero{0.0, 1.0, {}};
        const auto u0 = sine_field(0.0, 1.0, 1, TimeProfile::constant(1.0));
        return solve_diffusion_wave(spec.alpha, zero, u0, zero,
                                    GradedMesh(spec.horizon, levels, 1.0), fem);
    }
    }
    throw std::invalid_argument("unknown model");
}

double compare(const Trace& coarse, const Trace& fine) {
    return std::visit(
        [&](const auto& c) -> double {
            using T = std::decay_t<decltype(c)>;
            return two_mesh_error(c, std::get<T>(fine));
        },
        coarse);
}

} // namespace

ConvergenceReport run_study(const StudySpec& spec, const std::vector<std::size_t>& levels,
                            const std::string& label) {
    validate_levels(levels);
    ConvergenceReport report;
    report.model = model_name(spec.model);
    report.alpha = spec.alpha;
    report.depth = spec.depth;
    report.grading = spec.grading;
    report.theory_order = theory_order(spec);
    report.label = label;

    auto solve = [&](std::size_t m) -> Trace {
        try {
            return solve_once(spec, m);
        } catch (const SolverError& e) {
            throw SolverError(report.model + " solve at M = " + std::to_string(m) + ": " +
                              e.what());
        }
    };

    std::vector<double> errors;
    Trace coarse = solve(levels.front());
    for (const std::size_t m : levels) {
        Trace fine = solve(2 * m);
        errors.push_back(compare(coarse, fine));
        coarse = std::move(fine);
    }
    const auto rates = observed_rates(errors);
    for (std::size_t i = 0; i < levels.size(); ++i) {
        report.rows.push_back({levels[i], errors[i], rates[i]});
    }
    return report;
}

namespace {

std::vector<std::size_t> doubling(std::size_t first, std::size_t last) {
    std::vector<std::size_t> out;
    for (std::size_t m = first; m <= last; m *= 2) {
        out.push_back(m);
    }
    return out;
}

std::string fmt_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string block_label(int id, const StudySpec& s) {
    std::string out = "table " + std::to_string(id) + ": " + model_name(s.model) +
                      " alpha=" + fmt_number(s.alpha) + " n=" + std::to_string(s.depth);
    if (s.grading != 1.0) {
        out += " r=" + fmt_number(s.grading);
    }
    return out;
}

} // namespace

std::vector<TableBlock> table_blocks(int id) {
    std::vector<TableBlock> blocks;
    auto add = [&](StudySpec spec, std::vector<std::size_t> levels) {
        blocks.push_back({spec, std::move(levels), block_label(id, spec)});
    };
    auto graded = [](double alpha, std::size_t n) {
        return (2.0 - alpha) / (static_cast<double>(n + 1) * alpha);
    };
    switch (id) {
    case 1:
    case 2:
        for (const double alpha : {0.25, 0.75}) {
            StudySpec s;
            s.model = Model::Relaxation;
            s.alpha = alpha;
            const std::size_t right = id == 1 ? relaxation_depth_for_full_order(alpha) : 3;
            for (const std::size_t n : {std::size_t{0}, right}) {
                s.depth = n;
                s.grading = id == 1 ? 1.0 : graded(alpha, n);
                add(s, doubling(128, 2048));
            }
        }
        break;
    case 3:
        for (const double alpha : {0.25, 0.75}) {
            StudySpec s;
            s.model = Model::Volterra;
            s.alpha = alpha;
            s.indexing = VolterraIndexing::CollocationPoints;
            for (const std::size_t n : {std::size_t{0}, volterra_depth_for_order(alpha)}) {
                s.depth = n;
                add(s, doubling(512, 8192));
            }
        }
        break;
    case 4:
    case 5:
        for (const double alpha : {0.25, 0.75}) {
            StudySpec s;
            s.model = Model::Subdiffusion;
            s.alpha = alpha;
            s.cells = 128;
            const std::size_t right = id == 4 ? relaxation_depth_for_full_order(alpha) : 3;
            for (const std::size_t n : {std::size_t{0}, right}) {
                s.depth = n;
                s.grading = id == 4 ? 1.0 : graded(alpha, n);
                add(s, alpha == 0.25 ? doubling(64, 1024) : doubling(512, 8192));
            }
        }
        break;
    case 6:
        for (const double alpha : {0.25, 0.75}) {
            StudySpec s;
            s.model = Model::Integro;
            s.alpha = alpha;
            s.cells = 32;
            for (const std::size_t n : {std::size_t{0}, std::size_t{1}}) {
                s.depth = n;
                add(s, doubling(128, 2048));
            }
        }
        break;
    default:
        throw std::invalid_argument("table id must be 1..6, got " + std::to_string(id));
    }
    return blocks;
}

std::vector<ConvergenceReport> reproduce_table(int id) {
    std::vector<ConvergenceReport> out;
    for (const auto& block : table_blocks(id)) {
        out.push_back(run_study(block.spec, block.levels, block.label));
    }
    return out;
}

void write_csv(std::ostream& out, const std::vector<ConvergenceReport>& reports) {
    out << "model,alpha,n,r,M,error,rate\n";
    for (const auto& r : reports) {
        for (const auto& row : r.rows) {
            out << r.model << ',' << fmt_number(r.alpha) << ',' << r.depth << ','
                << fmt_number(r.grading) << ',' << row.levels << ',' << fmt_number(row.error)
                << ',' << (row.rate ? fmt_number(*row.rate) : std::string()) << '\n';
        }
    }
}

std::string to_csv(const std::vector<ConvergenceReport>& reports) {
    std::ostringstream os;
    write_csv(os, reports);
    return os.str();
}

namespace {

double parse_double(const std::string& s, std::size_t line) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
        throw std::invalid_argument("line " + std::to_string(line) + ": bad number '" + s + "'");
    }
    return v;
}

std::size_t parse_count(const std::string& s, std::size_t line) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (s.empty() || s.front() == '-' || end != s.c_str() + s.size()) {
        throw std::invalid_argument("line " + std::to_string(line) + ": bad integer '" + s + "'");
    }
    return static_cast<std::size_t>(v);
}

} // namespace

std::vector<ConvergenceReport> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "model,alpha,n,r,M,error,rate") {
        throw std::invalid_argument("missing CSV header");
    }
    std::vector<ConvergenceReport> out;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) {
            fields.push_back(field);
        }
        if (!line.empty() && line.back() == ',') {
            fields.emplace_back();
        }
        if (fields.size() != 7) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 7 fields");
        }
        const std::string& model = fields[0];
        try {
            (void)parse_model(model);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown model '" +
                                        model + "'");
        }
        const double alpha = parse_double(fields[1], lineno);
        const std::size_t depth = parse_count(fields[2], lineno);
        const double grading = parse_double(fields[3], lineno);
        ReportRow row{parse_count(fields[4], lineno), parse_double(fields[5], lineno),
                      std::nullopt};
        if (!fields[6].empty()) {
            row.rate = parse_double(fields[6], lineno);
        }
        const bool same = !out.empty() && out.back().model == model &&
                          out.back().alpha == alpha && out.back().depth == depth &&
                          out.back().grading == grading && row.rate.has_value();
        if (!same) {
            ConvergenceReport r;
            r.model = model;
            r.alpha = alpha;
            r.depth = depth;
            r.grading = grading;
            out.push_back(std::move(r));
        }
        out.back().rows.push_back(row);
    }
    return out;
}

void write_pretty(std::ostream& out, const std::vector<ConvergenceReport>& reports) {
    for (const auto& r : reports) {
        out << (r.label.empty() ? r.model : r.label) << '\n';
        out << "  alpha=" << fmt_number(r.alpha) << "  n=" << r.depth
            << "  r=" << fmt_number(r.grading) << '\n';
        char buf[128];
        std::snprintf(buf, sizeof buf, "  %8s  %12s  %8s\n", "M", "Error_M", "Rate");
        out << buf;
        for (const auto& row : r.rows) {
            const std::string rate = row.rate ? fmt_number(std::round(*row.rate * 100) / 100) : "*";
            std::snprintf(buf, sizeof buf, "  %8zu  %12.4e  %8s\n", row.levels, row.error,
                          rate.c_str());
            out << buf;
        }
        std::snprintf(buf, sizeof buf, "  %8s  %12s  %8.2f\n\n", "theory", "", r.theory_order);
        out << buf;
    }
}

} // namespace msd
