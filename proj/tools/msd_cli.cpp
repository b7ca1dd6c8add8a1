#include "msd/study_harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <stdexcept>

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitSolver = 3;

struct Options {
    double alpha = 0.5;
    double gamma = 1.5;
    double lambda = 1.0;
    std::size_t depth = 0;
    double grading = 1.0;
    std::vector<std::size_t> levels;
    double horizon = 1.0;
    std::size_t cells = 0;
    std::size_t q = 0;
    std::vector<double> collocation;
    std::string count = "points";
    std::string weights = "compensated";
    std::string out;
    std::string format = "csv";
    int table = 0;
};

void add_common(CLI::App* cmd, Options& o, bool has_alpha) {
    if (has_alpha) {
        cmd->add_option("--alpha", o.alpha, "fractional order in (0, 1)");
    }
    cmd->add_option("--M", o.levels, "level counts, doubling (repeatable or comma list)")
        ->delimiter(',');
    cmd->add_option("--T", o.horizon, "time horizon");
    cmd->add_option("--out", o.out, "write the report to this file");
    cmd->add_option("--format", o.format, "csv or pretty")
        ->check(CLI::IsMember({"csv", "pretty"}));
}

std::vector<std::size_t> doubling(std::size_t first, std::size_t last) {
    std::vector<std::size_t> out;
    for (std::size_t m = first; m <= last; m *= 2) {
        out.push_back(m);
    }
    return out;
}

std::vector<double> collocation_parameters(const Options& o) {
    if (!o.collocation.empty()) {
        if (o.q != 0 && o.q != o.collocation.size()) {
            throw std::invalid_argument("--q does not match the number of --c values");
        }
        return o.collocation;
    }
    if (o.q == 0 || o.q == 2) {
        return {2.0 / 3.0, 1.0};
    }
    std::vector<double> c(o.q);
    for (std::size_t i = 0; i < o.q; ++i) {
        c[i] = static_cast<double>(i + 1) / static_cast<double>(o.q);
    }
    return c;
}

void emit(const Options& o, const std::vector<msd::ConvergenceReport>& reports) {
    auto write = [&](std::ostream& os) {
        if (o.format == "pretty") {
            msd::write_pretty(os, reports);
        } else {
            msd::write_csv(os, reports);
        }
    };
    if (o.out.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream file(o.out);
    if (!file) {
        throw std::runtime_error("cannot open " + o.out + " for writing");
    }
    write(file);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Convergence studies for nonlocal-in-time problems with separated singular terms"};
    app.require_subcommand(1);
    Options o;

    auto* relax = app.add_subcommand("relaxation", "d^alpha u + lambda u = 1 on graded meshes");
    add_common(relax, o, true);
    relax->add_option("--lambda", o.lambda, "relaxation rate");
    relax->add_option("--n", o.depth, "number of separated terms");
    relax->add_option("--r", o.grading, "mesh grading");
    relax->add_option("--weights", o.weights, "L1 weight evaluation")
        ->check(CLI::IsMember({"as-written", "compensated"}));

    auto* volt = app.add_subcommand("volterra", "weakly singular Volterra equation, collocation");
    add_common(volt, o, true);
    volt->add_option("--n", o.depth, "number of separated terms");
    volt->add_option("--q", o.q, "polynomial order (number of collocation parameters)");
    volt->add_option("--c", o.collocation, "collocation parameters in (0, 1]")->delimiter(',');
    volt->add_option("--count", o.count, "whether M counts collocation points or cells")
        ->check(CLI::IsMember({"points", "cells"}));

    auto* sub = app.add_subcommand("subdiffusion", "d^alpha u - u_xx = sin x on (0, 2 pi)");
    add_common(sub, o, true);
    sub->add_option("--n", o.depth, "number of separated terms");
    sub->add_option("--r", o.grading, "mesh grading");
    sub->add_option("--J", o.cells, "spatial cells");
    sub->add_option("--weights", o.weights, "L1 weight evaluation")
        ->check(CLI::IsMember({"as-written", "compensated"}));

    auto* integro = app.add_subcommand("integro", "u_t - I^alpha u_xx = t^alpha sin(pi x)");
    add_common(integro, o, true);
    integro->add_option("--n", o.depth, "separated terms (0 = direct scheme)");
    integro->add_option("--J", o.cells, "spatial cells");

    auto* wave = app.add_subcommand("diffusion-wave", "d^gamma u - u_xx = 0, u(0) = sin(pi x)");
    add_common(wave, o, false);
    wave->add_option("--gamma", o.gamma, "order in (1, 2)");
    wave->add_option("--J", o.cells, "spatial cells");

    auto* table = app.add_subcommand("table", "one of the six built-in convergence studies");
    table->add_option("--id", o.table, "study id 1..6")->required();
    table->add_option("--out", o.out, "write the report to this file");
    table->add_option("--format", o.format, "csv or pretty")
        ->check(CLI::IsMember({"csv", "pretty"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        std::vector<msd::ConvergenceReport> reports;
        if (table->parsed()) {
            reports = msd::reproduce_table(o.table);
        } else {
            msd::StudySpec spec;
            spec.alpha = o.alpha;
            spec.lambda = o.lambda;
            spec.depth = o.depth;
            spec.grading = o.grading;
            spec.horizon = o.horizon;
            spec.cells = o.cells;
            spec.weights = o.weights == "compensated" ? msd::L1WeightEvaluation::Compensated
                                                      : msd::L1WeightEvaluation::AsWritten;
            std::vector<std::size_t> defaults = doubling(128, 2048);
            if (relax->parsed()) {
                spec.model = msd::Model::Relaxation;
            } else if (volt->parsed()) {
                spec.model = msd::Model::Volterra;
                spec.collocation = collocation_parameters(o);
                spec.indexing = o.count == "cells" ? msd::VolterraIndexing::Cells
                                                   : msd::VolterraIndexing::CollocationPoints;
                defaults = doubling(512, 8192);
            } else if (sub->parsed()) {
                spec.model = msd::Model::Subdiffusion;
                defaults = doubling(64, 1024);
            } else if (integro->parsed()) {
                spec.model = msd::Model::Integro;
            } else {
                spec.model = msd::Model::DiffusionWave;
                spec.alpha = o.gamma;
            }
            const auto& levels = o.levels.empty() ? defaults : o.levels;
            reports.push_back(msd::run_study(spec, levels));
        }
        emit(o, reports);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const msd::SolverError& e) {
        std::cerr << "solver failure: " << e.what() << '\n';
        return kExitSolver;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return kExitSolver;
    }
    return 0;
}
