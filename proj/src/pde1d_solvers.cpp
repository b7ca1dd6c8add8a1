#include "msd/pde1d_solvers.hpp"

#include "msd/conv_quadrature.hpp"
#include "msd/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

namespace msd {

void SymTridiagonal::multiply(std::span<const double> x, std::span<double> y) const {
    const std::size_t n = diag.size();
    for (std::size_t i = 0; i < n; ++i) {
        double acc = diag[i] * x[i];
        if (i > 0) {
            acc += off[i - 1] * x[i - 1];
        }
        if (i + 1 < n) {
            acc += off[i] * x[i + 1];
        }
        y[i] = acc;
    }
}

TridiagonalFactor::TridiagonalFactor(const SymTridiagonal& a) : off_(a.off), pivot_(a.size()) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        double p = a.diag[i];
        if (i > 0) {
            p -= off_[i - 1] * off_[i - 1] / pivot_[i - 1];
        }
        if (!(std::abs(p) > 0.0) || !std::isfinite(p)) {
            throw SolverError("zero pivot in tridiagonal factorization at row " +
                              std::to_string(i));
        }
        pivot_[i] = p;
    }
}

void TridiagonalFactor::solve(std::span<double> rhs) const {
    const std::size_t n = pivot_.size();
    for (std::size_t i = 1; i < n; ++i) {
        rhs[i] -= off_[i - 1] / pivot_[i - 1] * rhs[i - 1];
    }
    for (std::size_t i = n; i-- > 0;) {
        if (i + 1 < n) {
            rhs[i] -= off_[i] * rhs[i + 1];
        }
        rhs[i] /= pivot_[i];
    }
}

std::vector<double> IntervalFem::load(const std::function<double(double)>& f) const {
    static const double offset = 0.5 / std::sqrt(3.0);
    std::vector<double> out(interior(), 0.0);
    for (std::size_t e = 0; e < cells; ++e) {
        const double left = a + static_cast<double>(e) * h;
        for (const double xi : {0.5 - offset, 0.5 + offset}) {
            const double fx = 0.5 * h * f(left + xi * h);
            if (e > 0) {
                out[e - 1] += fx * (1.0 - xi);
            }
            if (e + 1 < cells) {
                out[e] += fx * xi;
            }
        }
    }
    return out;
}

IntervalFem assemble_fem(double a, double b, std::size_t cells) {
    if (cells < 2) {
        throw std::invalid_argument("FEM mesh needs at least 2 cells");
    }
    if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("FEM domain must satisfy a < b");
    }
    IntervalFem fem;
    fem.a = a;
    fem.b = b;
    fem.cells = cells;
    fem.h = (b - a) / static_cast<double>(cells);
    const std::size_t n = cells - 1;
    fem.mass.diag.assign(n, 4.0 * fem.h / 6.0);
    fem.mass.off.assign(n - 1, fem.h / 6.0);
    fem.stiffness.diag.assign(n, 2.0 / fem.h);
    fem.stiffness.off.assign(n - 1, -1.0 / fem.h);
    return fem;
}

double SeparableField::eigenvalue(unsigned k) const {
    const double w = static_cast<double>(k) * std::numbers::pi / (b - a);
    return w * w;
}

double SeparableField::shape(unsigned k, double x) const {
    return std::sin(static_cast<double>(k) * std::numbers::pi * (x - a) / (b - a));
}

double SeparableField::operator()(double x, double t) const {
    double acc = 0.0;
    for (const auto& mode : modes) {
        acc += mode.amplitude(t) * shape(mode.k, x);
    }
    return acc;
}

bool SeparableField::is_zero() const noexcept {
    return std::all_of(modes.begin(), modes.end(),
                       [](const FieldMode& m) { return m.amplitude.is_zero(); });
}

std::span<const double> FieldTrace::u_row(std::size_t m) const {
    if (m > mesh.levels()) {
        throw std::out_of_range("field trace row out of range");
    }
    return std::span<const double>(u).subspan(m * interior(), interior());
}

std::span<const double> FieldTrace::v_row(std::size_t m) const {
    if (m > mesh.levels()) {
        throw std::out_of_range("field trace row out of range");
    }
    return std::span<const double>(v).subspan(m * interior(), interior());
}

namespace {

using ModeMap = std::map<unsigned, TimeProfile>;

void require_same_domain(const SeparableField& x, const SeparableField& y) {
    if (x.a != y.a || x.b != y.b) {
        throw std::invalid_argument("separable fields live on different domains");
    }
}

void require_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in (0, 1), got " + std::to_string(alpha));
    }
}

ModeMap collect(const SeparableField& field) {
    ModeMap out;
    for (const auto& mode : field.modes) {
        if (mode.k == 0) {
            throw std::invalid_argument("sine mode index must be positive");
        }
        out[mode.k] += mode.amplitude;
    }
    return out;
}

void require_constant(const SeparableField& field, const char* what) {
    for (const auto& mode : field.modes) {
        for (const auto& term : mode.amplitude.terms()) {
            if (term.exponent != 0.0) {
                throw std::invalid_argument(std::string(what) + " must be time independent");
            }
        }
    }
}

SeparableField to_field(const SeparableField& domain, const ModeMap& modes) {
    SeparableField out{domain.a, domain.b, {}};
    for (const auto& [k, amp] : modes) {
        if (!amp.is_zero()) {
            out.modes.push_back({k, amp});
        }
    }
    return out;
}

// Per mode: forcing (c I^nu)^n g, reconstruction sum_{i<n} (c I^nu)^i I^shift g.
MsdFieldData decompose(const SeparableField& domain, const ModeMap& g, const SeparableField& u0,
                       double nu, double shift, std::size_t depth) {
    ModeMap forcing;
    ModeMap recon;
    for (const auto& [k, amp] : g) {
        const double factor = -domain.eigenvalue(k);
        TimeProfile current = amp;
        TimeProfile sum;
        for (std::size_t i = 0; i < depth; ++i) {
            sum += frac_integrate(current, shift);
            current = frac_integrate(current, nu) * factor;
        }
        forcing[k] = std::move(current);
        recon[k] = std::move(sum);
    }
    return MsdFieldData{to_field(domain, forcing), to_field(domain, recon), u0};
}

double sample_at(const TimeProfile& p, double t) {
    if (t > 0.0) {
        return p(t);
    }
    if (p.is_singular_at_zero()) {
        throw std::invalid_argument("forcing is unbounded at t = 0");
    }
    return p(0.0);
}

// Nodal values of a separable field at time t. With lenient_at_zero, singular
// time profiles contribute only their constant term at t = 0.
void sample_field(const SeparableField& field, const IntervalFem& fem, double t,
                  std::span<double> out, bool lenient_at_zero) {
    std::fill(out.begin(), out.end(), 0.0);
    for (const auto& mode : field.modes) {
        double amp = 0.0;
        if (t == 0.0 && lenient_at_zero && mode.amplitude.is_singular_at_zero()) {
            amp = mode.amplitude.value_at_zero();
        } else {
            amp = sample_at(mode.amplitude, t);
        }
        if (amp == 0.0) {
            continue;
        }
        for (std::size_t j = 0; j < out.size(); ++j) {
            out[j] += amp * field.shape(mode.k, fem.node(j));
        }
    }
}

// Spatial load vectors of every mode of a separable forcing.
struct ModalLoad {
    std::vector<const TimeProfile*> amplitudes;
    std::vector<std::vector<double>> vectors;

    ModalLoad(const SeparableField& field, const IntervalFem& fem) {
        for (const auto& mode : field.modes) {
            amplitudes.push_back(&mode.amplitude);
            const unsigned k = mode.k;
            vectors.push_back(fem.load([&](double x) { return field.shape(k, x); }));
        }
    }

    void at(double t, std::span<double> out) const {
        std::fill(out.begin(), out.end(), 0.0);
        for (std::size_t i = 0; i < amplitudes.size(); ++i) {
            const double amp = sample_at(*amplitudes[i], t);
            for (std::size_t j = 0; j < out.size(); ++j) {
                out[j] += amp * vectors[i][j];
            }
        }
    }
};

void require_fem_domain(const SeparableField& field, const IntervalFem& fem) {
    if (std::abs(field.a - fem.a) > 1e-14 * (1.0 + std::abs(fem.a)) ||
        std::abs(field.b - fem.b) > 1e-14 * (1.0 + std::abs(fem.b))) {
        throw std::invalid_argument("field domain does not match the FEM mesh");
    }
}

using LoadFn = std::function<void(std::size_t m, std::span<double> out)>;

// Nonuniform L1 in time for M D^alpha U + K U = b. History sums are
// accumulated in blocks of consecutive steps so each increment is read once
// per block.
std::vector<double> l1_march(double alpha, const GradedMesh& mesh, const IntervalFem& fem,
                             L1WeightEvaluation evaluation, std::span<const double> start,
                             const LoadFn& load) {
    constexpr std::size_t kBlock = 64;
    const std::size_t n = fem.interior();
    const std::size_t levels = mesh.levels();
    std::vector<double> values((levels + 1) * n, 0.0);
    std::vector<double> deltas((levels + 1) * n, 0.0);
    std::copy(start.begin(), start.end(), values.begin());

    std::vector<double> rows(kBlock * levels);
    std::vector<double> hist(kBlock * n);
    std::vector<double> rhs(n);
    std::vector<double> scratch(n);
    SymTridiagonal system{std::vector<double>(n), std::vector<double>(n > 0 ? n - 1 : 0)};

    for (std::size_t m0 = 1; m0 <= levels; m0 += kBlock) {
        const std::size_t count = std::min(kBlock, levels - m0 + 1);
        for (std::size_t b = 0; b < count; ++b) {
            l1_weight_row(mesh, alpha, m0 + b,
                          std::span<double>(rows).subspan(b * levels, m0 + b), evaluation);
        }
        std::fill(hist.begin(), hist.end(), 0.0);
        for (std::size_t k = 1; k < m0; ++k) {
            const double* dv = &deltas[k * n];
            for (std::size_t b = 0; b < count; ++b) {
                const double w = rows[b * levels + (m0 + b - k)];
                double* hb = &hist[b * n];
                for (std::size_t j = 0; j < n; ++j) {
                    hb[j] += w * dv[j];
                }
            }
        }
        for (std::size_t b = 0; b < count; ++b) {
            const std::size_t m = m0 + b;
            const double* row = &rows[b * levels];
            double* hb = &hist[b * n];
            for (std::size_t k = m0; k < m; ++k) {
                const double w = row[m - k];
                const double* dv = &deltas[k * n];
                for (std::size_t j = 0; j < n; ++j) {
                    hb[j] += w * dv[j];
                }
            }
            const double a0 = row[0];
            for (std::size_t j = 0; j < n; ++j) {
                system.diag[j] = a0 * fem.mass.diag[j] + fem.stiffness.diag[j];
                scratch[j] = a0 * values[(m - 1) * n + j] - hb[j];
            }
            for (std::size_t j = 0; j + 1 < n; ++j) {
                system.off[j] = a0 * fem.mass.off[j] + fem.stiffness.off[j];
            }
            fem.mass.multiply(scratch, rhs);
            load(m, scratch);
            for (std::size_t j = 0; j < n; ++j) {
                rhs[j] += scratch[j];
            }
            TridiagonalFactor(system).solve(rhs);
            for (std::size_t j = 0; j < n; ++j) {
                values[m * n + j] = rhs[j];
                deltas[m * n + j] = rhs[j] - values[(m - 1) * n + j];
            }
        }
    }
    return values;
}

FieldTrace assemble_trace(const GradedMesh& mesh, const IntervalFem& fem, std::vector<double> v,
                          const MsdFieldData& data) {
    const std::size_t n = fem.interior();
    std::vector<double> u(v.size());
    std::vector<double> recon(n);
    std::vector<double> initial(n);
    sample_field(data.initial, fem, 0.0, initial, true);
    for (std::size_t m = 0; m <= mesh.levels(); ++m) {
        sample_field(data.reconstruction, fem, mesh.node(m), recon, true);
        for (std::size_t j = 0; j < n; ++j) {
            u[m * n + j] = v[m * n + j] + initial[j] + recon[j];
        }
    }
    return FieldTrace{mesh, fem.a, fem.b, fem.cells, std::move(v), std::move(u)};
}

} // namespace

MsdFieldData msd_subdiffusion_data(const SeparableField& f, const SeparableField& u0,
                                   std::size_t depth, double alpha) {
    require_alpha(alpha);
    require_same_domain(f, u0);
    require_constant(u0, "subdiffusion initial data");
    ModeMap g = collect(f);
    for (const auto& [k, amp] : collect(u0)) {
        g[k] += amp * (-u0.eigenvalue(k));
    }
    return decompose(f, g, u0, alpha, alpha, depth);
}

FieldTrace solve_subdiffusion(double alpha, std::size_t depth, const SeparableField& f,
                              const SeparableField& u0, const GradedMesh& mesh,
                              const IntervalFem& fem, L1WeightEvaluation weights) {
    const MsdFieldData data = msd_subdiffusion_data(f, u0, depth, alpha);
    require_fem_domain(f, fem);
    const ModalLoad modal(data.forcing, fem);
    const std::vector<double> start(fem.interior(), 0.0);
    std::vector<double> v = l1_march(alpha, mesh, fem, weights, start,
                                     [&](std::size_t m, std::span<double> out) {
                                         modal.at(mesh.node(m), out);
                                     });
    return assemble_trace(mesh, fem, std::move(v), data);
}

FieldTrace solve_subdiffusion_nodal(double alpha, const std::function<double(double, double)>& f,
                                    const std::function<double(double)>& u0,
                                    const GradedMesh& mesh, const IntervalFem& fem,
                                    L1WeightEvaluation weights) {
    require_alpha(alpha);
    if (!f || !u0) {
        throw std::invalid_argument("subdiffusion data callables must be set");
    }
    const std::size_t n = fem.interior();
    std::vector<double> start(n);
    for (std::size_t j = 0; j < n; ++j) {
        start[j] = u0(fem.node(j));
    }
    std::vector<double> u = l1_march(alpha, mesh, fem, weights, start,
                                     [&](std::size_t m, std::span<double> out) {
                                         const double t = mesh.node(m);
                                         const auto b = fem.load([&](double x) { return f(x, t); });
                                         std::copy(b.begin(), b.end(), out.begin());
                                     });
    std::vector<double> v(u.size());
    for (std::size_t p = 0; p < u.size(); ++p) {
        v[p] = u[p] - start[p % n];
    }
    return FieldTrace{mesh, fem.a, fem.b, fem.cells, std::move(v), std::move(u)};
}

MsdFieldData msd_integro_data(const SeparableField& f, const SeparableField& u0, double alpha,
                              std::size_t depth) {
    require_alpha(alpha);
    require_same_domain(f, u0);
    require_constant(u0, "integrodifferential initial data");
    ModeMap g = collect(f);
    const TimeProfile beta = beta_profile(1.0 + alpha);
    for (const auto& [k, amp] : collect(u0)) {
        g[k] += beta * (amp.value_at_zero() * -u0.eigenvalue(k));
    }
    return decompose(f, g, u0, 1.0 + alpha, 1.0, depth);
}

FieldTrace solve_integro(double alpha, const MsdFieldData& data, const GradedMesh& mesh,
                         const IntervalFem& fem) {
    require_alpha(alpha);
    if (!mesh.is_uniform()) {
        throw std::invalid_argument("the convolution quadrature scheme needs a uniform mesh");
    }
    require_fem_domain(data.forcing, fem);
    const std::size_t n = fem.interior();
    const std::size_t levels = mesh.levels();
    const double tau = mesh.horizon() / static_cast<double>(levels);
    const CQWeights cq = build_cq(alpha, tau, levels);
    const double scale = std::pow(tau, alpha);
    const double half_diag = 0.5 * scale * cq.omega[0];

    SymTridiagonal lhs{std::vector<double>(n), std::vector<double>(n - 1)};
    SymTridiagonal explicit_part{std::vector<double>(n), std::vector<double>(n - 1)};
    for (std::size_t j = 0; j < n; ++j) {
        lhs.diag[j] = fem.mass.diag[j] / tau + half_diag * fem.stiffness.diag[j];
        explicit_part.diag[j] = fem.mass.diag[j] / tau - half_diag * fem.stiffness.diag[j];
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
        lhs.off[j] = fem.mass.off[j] / tau + half_diag * fem.stiffness.off[j];
        explicit_part.off[j] = fem.mass.off[j] / tau - half_diag * fem.stiffness.off[j];
    }
    const TridiagonalFactor factor(lhs);
    const ModalLoad modal(data.forcing, fem);

    std::vector<double> v((levels + 1) * n, 0.0);
    std::vector<double> halves((levels + 1) * n, 0.0); // V^{j-1/2}, j >= 1
    std::vector<double> load_prev(n);
    std::vector<double> load_now(n);
    std::vector<double> history(n);
    std::vector<double> tmp(n);
    std::vector<double> rhs(n);
    modal.at(0.0, load_prev);
    for (std::size_t m = 1; m <= levels; ++m) {
        std::fill(history.begin(), history.end(), 0.0);
        for (std::size_t p = 1; p < m; ++p) {
            const double w = cq.omega[p];
            const double* hv = &halves[(m - p) * n];
            for (std::size_t j = 0; j < n; ++j) {
                history[j] += w * hv[j];
            }
        }
        fem.stiffness.multiply(history, tmp);
        explicit_part.multiply(std::span<const double>(v).subspan((m - 1) * n, n), rhs);
        modal.at(mesh.node(m), load_now);
        for (std::size_t j = 0; j < n; ++j) {
            rhs[j] += 0.5 * (load_now[j] + load_prev[j]) - scale * tmp[j];
        }
        factor.solve(rhs);
        for (std::size_t j = 0; j < n; ++j) {
            v[m * n + j] = rhs[j];
            halves[m * n + j] = 0.5 * (rhs[j] + v[(m - 1) * n + j]);
        }
        std::swap(load_prev, load_now);
    }
    return assemble_trace(mesh, fem, std::move(v), data);
}

MsdFieldData diffusion_wave_data(double gamma, const SeparableField& f, const SeparableField& u0,
                                 const SeparableField& u1, std::size_t depth) {
    if (!(gamma > 1.0 && gamma < 2.0)) {
        throw std::invalid_argument("diffusion-wave order must lie in (1, 2), got " +
                                    std::to_string(gamma));
    }
    const double alpha = gamma - 1.0;
    require_same_domain(f, u0);
    require_same_domain(f, u1);
    require_constant(u0, "diffusion-wave initial value");
    require_constant(u1, "diffusion-wave initial velocity");
    ModeMap g;
    for (const auto& [k, amp] : collect(f)) {
        g[k] += frac_integrate(amp, alpha);
    }
    const TimeProfile beta = beta_profile(gamma);
    for (const auto& [k, amp] : collect(u0)) {
        g[k] += beta * (amp.value_at_zero() * -u0.eigenvalue(k));
    }
    for (const auto& [k, amp] : collect(u1)) {
        g[k] += amp;
    }
    return decompose(f, g, u0, 1.0 + alpha, 1.0, depth);
}

FieldTrace solve_diffusion_wave(double gamma, const SeparableField& f, const SeparableField& u0,
                                const SeparableField& u1, const GradedMesh& mesh,
                                const IntervalFem& fem) {
    const MsdFieldData data = diffusion_wave_data(gamma, f, u0, u1, 2);
    return solve_integro(gamma - 1.0, data, mesh, fem);
}

} // namespace msd
