#include "msd/volterra_collocation.hpp"

#include "msd/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace msd {

VolterraKernel VolterraKernel::constant(double kappa) {
    if (!std::isfinite(kappa)) {
        throw std::invalid_argument("Volterra kernel constant must be finite");
    }
    VolterraKernel k;
    k.kappa_ = kappa;
    return k;
}

VolterraKernel VolterraKernel::general(Callable fn) {
    if (!fn) {
        throw std::invalid_argument("Volterra kernel callable is empty");
    }
    VolterraKernel k;
    k.fn_ = std::move(fn);
    return k;
}

double VolterraKernel::constant_value() const {
    if (fn_) {
        throw std::logic_error("Volterra kernel is not constant");
    }
    return kappa_;
}

double singular_moment(double alpha, unsigned k, double t_star, double a, double b) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("singular_moment requires alpha in (0, 1)");
    }
    if (!(a >= 0.0 && a <= b && b <= t_star)) {
        throw std::invalid_argument("singular_moment requires 0 <= a <= b <= T*");
    }
    // s = T* - u; s^k = sum_j C(k, j) T*^{k-j} (-u)^j.
    const double upper = t_star - a;
    const double width = b - a;
    double acc = 0.0;
    double binom = 1.0;
    for (unsigned j = 0; j <= k; ++j) {
        const double p = static_cast<double>(j) + 1.0 - alpha;
        const double term = binom * std::pow(t_star, static_cast<double>(k - j)) *
                            pow_diff(upper, width, p) / p;
        acc += (j % 2 == 0) ? term : -term;
        binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
    }
    return acc;
}

namespace {

void validate(const VolterraProblem& prob) {
    if (!(prob.alpha > 0.0 && prob.alpha < 1.0)) {
        throw std::invalid_argument("Volterra alpha must lie in (0, 1), got " +
                                    std::to_string(prob.alpha));
    }
    if (!(prob.horizon > 0.0) || !std::isfinite(prob.horizon)) {
        throw std::invalid_argument("Volterra horizon must be positive");
    }
    const auto& c = prob.collocation;
    if (c.empty()) {
        throw std::invalid_argument("at least one collocation parameter is required");
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!(c[i] > 0.0 && c[i] <= 1.0)) {
            throw std::invalid_argument("collocation parameters must lie in (0, 1]");
        }
        if (i > 0 && !(c[i] > c[i - 1])) {
            throw std::invalid_argument("collocation parameters must be strictly increasing");
        }
    }
}

using Poly = std::vector<double>; // coefficients of sigma^k

std::vector<Poly> lagrange_basis(const std::vector<double>& c) {
    const std::size_t q = c.size();
    std::vector<Poly> basis(q);
    for (std::size_t i = 0; i < q; ++i) {
        Poly p{1.0};
        for (std::size_t k = 0; k < q; ++k) {
            if (k == i) {
                continue;
            }
            const double denom = c[i] - c[k];
            Poly next(p.size() + 1, 0.0);
            for (std::size_t e = 0; e < p.size(); ++e) {
                next[e + 1] += p[e] / denom;
                next[e] -= p[e] * c[k] / denom;
            }
            p = std::move(next);
        }
        basis[i] = std::move(p);
    }
    return basis;
}

Poly multiply(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

double integrate_poly(double alpha, const Poly& p, double t_star, double upper) {
    double acc = 0.0;
    for (std::size_t e = 0; e < p.size(); ++e) {
        if (p[e] != 0.0) {
            acc += p[e] * singular_moment(alpha, static_cast<unsigned>(e), t_star, 0.0, upper);
        }
    }
    return acc;
}

// Discrete L_h on piecewise polynomials over a uniform mesh. Cell offsets
// d = m - l enter only through T* = d + c_i, so the weights are stored once
// per offset.
class CollocationOperator {
public:
    CollocationOperator(const VolterraProblem& prob, std::size_t levels)
        : prob_(prob), q_(prob.collocation.size()), levels_(levels),
          tau_(prob.horizon / static_cast<double>(levels)) {
        const auto& c = prob.collocation;
        const auto basis = lagrange_basis(c);
        const double scale = std::pow(tau_, 1.0 - prob.alpha);
        const bool constant = prob.kernel.is_constant();
        const double kappa = constant ? prob.kernel.constant_value() : 1.0;
        const std::size_t block = constant ? q_ * q_ : q_ * q_ * q_;
        weights_.assign(levels * block, 0.0);

        std::vector<Poly> products;
        if (!constant) {
            products.reserve(q_ * q_);
            for (std::size_t k = 0; k < q_; ++k) {
                for (std::size_t j = 0; j < q_; ++j) {
                    products.push_back(multiply(basis[k], basis[j]));
                }
            }
        }
        for (std::size_t d = 0; d < levels; ++d) {
            for (std::size_t i = 0; i < q_; ++i) {
                const double t_star = static_cast<double>(d) + c[i];
                const double upper = d == 0 ? c[i] : 1.0;
                if (constant) {
                    for (std::size_t j = 0; j < q_; ++j) {
                        weights_[d * block + i * q_ + j] =
                            kappa * scale * integrate_poly(prob.alpha, basis[j], t_star, upper);
                    }
                } else {
                    for (std::size_t kj = 0; kj < q_ * q_; ++kj) {
                        weights_[d * block + i * q_ * q_ + kj] =
                            scale * integrate_poly(prob.alpha, products[kj], t_star, upper);
                    }
                }
            }
        }
    }

    [[nodiscard]] double point(std::size_t m, std::size_t i) const {
        return (static_cast<double>(m) + prob_.collocation[i]) * tau_;
    }

    // Contribution of cells 0..m-1 to (L_h V)(t_{m,i}).
    [[nodiscard]] double history(std::size_t m, std::size_t i, const std::vector<double>& v) const {
        double acc = 0.0;
        if (prob_.kernel.is_constant()) {
            const std::size_t block = q_ * q_;
            for (std::size_t l = 0; l < m; ++l) {
                const double* w = &weights_[(m - l) * block + i * q_];
                const double* vl = &v[l * q_];
                for (std::size_t j = 0; j < q_; ++j) {
                    acc += w[j] * vl[j];
                }
            }
            return acc;
        }
        const double t = point(m, i);
        std::vector<double> kvals(q_);
        for (std::size_t l = 0; l < m; ++l) {
            for (std::size_t k = 0; k < q_; ++k) {
                kvals[k] = prob_.kernel(point(l, k), t);
            }
            acc += cell_sum(m - l, i, kvals, &v[l * q_]);
        }
        return acc;
    }

    // Row i of the local matrix: coefficient of V_{m,j} in (L_h V)(t_{m,i}).
    void local_row(std::size_t m, std::size_t i, std::vector<double>& row) const {
        row.assign(q_, 0.0);
        if (prob_.kernel.is_constant()) {
            for (std::size_t j = 0; j < q_; ++j) {
                row[j] = weights_[i * q_ + j];
            }
            return;
        }
        const double t = point(m, i);
        for (std::size_t k = 0; k < q_; ++k) {
            const double kval = prob_.kernel(point(m, k), t);
            for (std::size_t j = 0; j < q_; ++j) {
                row[j] += kval * weights_[i * q_ * q_ + k * q_ + j];
            }
        }
    }

    // L_h g at every collocation point for a full piecewise-polynomial g.
    [[nodiscard]] std::vector<double> apply(const std::vector<double>& g) const {
        std::vector<double> out(levels_ * q_, 0.0);
        std::vector<double> row;
        for (std::size_t m = 0; m < levels_; ++m) {
            for (std::size_t i = 0; i < q_; ++i) {
                local_row(m, i, row);
                double acc = history(m, i, g);
                for (std::size_t j = 0; j < q_; ++j) {
                    acc += row[j] * g[m * q_ + j];
                }
                out[m * q_ + i] = acc;
            }
        }
        return out;
    }

    [[nodiscard]] std::size_t order() const noexcept { return q_; }
    [[nodiscard]] std::size_t levels() const noexcept { return levels_; }

private:
    [[nodiscard]] double cell_sum(std::size_t d, std::size_t i, const std::vector<double>& kvals,
                                  const double* vl) const {
        const double* w = &weights_[d * q_ * q_ * q_ + i * q_ * q_];
        double acc = 0.0;
        for (std::size_t k = 0; k < q_; ++k) {
            double inner = 0.0;
            for (std::size_t j = 0; j < q_; ++j) {
                inner += w[k * q_ + j] * vl[j];
            }
            acc += kvals[k] * inner;
        }
        return acc;
    }

    const VolterraProblem& prob_;
    std::size_t q_;
    std::size_t levels_;
    double tau_;
    std::vector<double> weights_;
};

bool analytic_path(const VolterraProblem& prob) {
    return prob.kernel.is_constant() && prob.forcing.is_analytic();
}

struct SeparatedTerms {
    std::vector<double> forcing;
    std::vector<double> reconstruction;
    double u0 = 0.0;
    bool approximate = false;
};

SeparatedTerms separated_terms(const VolterraProblem& prob, const CollocationOperator& op) {
    const std::size_t q = op.order();
    const std::size_t count = op.levels() * q;
    SeparatedTerms out;
    out.forcing.resize(count);
    out.reconstruction.assign(count, 0.0);
    out.u0 = prob.forcing(0.0);

    if (analytic_path(prob)) {
        const VolterraMsdProfiles profiles = msd_volterra_forcing(prob);
        for (std::size_t m = 0; m < op.levels(); ++m) {
            for (std::size_t i = 0; i < q; ++i) {
                const double t = op.point(m, i);
                out.forcing[m * q + i] = profiles.forcing(t);
                out.reconstruction[m * q + i] = profiles.reconstruction(t);
            }
        }
        return out;
    }

    std::vector<double> ones(count, out.u0);
    std::vector<double> g = op.apply(ones);
    for (std::size_t m = 0; m < op.levels(); ++m) {
        for (std::size_t i = 0; i < q; ++i) {
            g[m * q + i] += prob.forcing(op.point(m, i)) - out.u0;
        }
    }
    for (std::size_t level = 0; level < prob.depth; ++level) {
        for (std::size_t p = 0; p < count; ++p) {
            out.reconstruction[p] += g[p];
        }
        g = op.apply(g);
    }
    out.forcing = std::move(g);
    out.approximate = true;
    return out;
}

} // namespace

TimeProfile volterra_transform(const VolterraProblem& prob) {
    validate(prob);
    if (!analytic_path(prob)) {
        throw std::invalid_argument(
            "volterra_transform needs a constant kernel and analytic forcing");
    }
    const double kappa = prob.kernel.constant_value();
    const TimeProfile& f = prob.forcing.profile();
    const double f0 = f.value_at_zero();
    const double a = 1.0 - prob.alpha;
    return f.without_constant() +
           TimeProfile::monomial(kappa * f0 * gamma_fn(a) / gamma_fn(1.0 + a), a);
}

VolterraMsdProfiles msd_volterra_forcing(const VolterraProblem& prob) {
    TimeProfile g = volterra_transform(prob);
    const double a = 1.0 - prob.alpha;
    const double scale = prob.kernel.constant_value() * gamma_fn(a);
    VolterraMsdProfiles out;
    for (std::size_t i = 0; i < prob.depth; ++i) {
        out.reconstruction += g;
        g = frac_integrate(g, a) * scale;
    }
    out.forcing = std::move(g);
    return out;
}

double CollocationTrace::point(std::size_t m, std::size_t i) const {
    return mesh.node(m) + collocation.at(i) * mesh.base_step();
}

double CollocationTrace::node_value(std::size_t m) const {
    if (collocation.empty() || collocation.back() != 1.0) {
        throw std::logic_error("nodal values need c_q = 1");
    }
    if (m == 0 || m > mesh.levels()) {
        throw std::out_of_range("collocation node index out of range");
    }
    return u[(m - 1) * order() + order() - 1];
}

CollocationTrace solve_volterra(const VolterraProblem& prob, std::size_t levels) {
    validate(prob);
    if (levels == 0) {
        throw std::invalid_argument("collocation needs at least one cell");
    }
    const CollocationOperator op(prob, levels);
    const SeparatedTerms terms = separated_terms(prob, op);
    const std::size_t q = op.order();

    std::vector<double> v(levels * q, 0.0);
    std::vector<double> matrix(q * q);
    std::vector<double> rhs(q);
    std::vector<double> row;
    for (std::size_t m = 0; m < levels; ++m) {
        for (std::size_t i = 0; i < q; ++i) {
            op.local_row(m, i, row);
            for (std::size_t j = 0; j < q; ++j) {
                matrix[i * q + j] = (i == j ? 1.0 : 0.0) - row[j];
            }
            rhs[i] = terms.forcing[m * q + i] + op.history(m, i, v);
        }
        try {
            solve_dense(matrix, rhs, q);
        } catch (const std::runtime_error& e) {
            throw SolverError("singular collocation matrix on cell " + std::to_string(m) + ": " +
                              e.what());
        }
        std::copy(rhs.begin(), rhs.end(), v.begin() + static_cast<std::ptrdiff_t>(m * q));
    }

    std::vector<double> u(v.size());
    for (std::size_t p = 0; p < v.size(); ++p) {
        u[p] = v[p] + terms.u0 + terms.reconstruction[p];
    }
    return CollocationTrace{GradedMesh(prob.horizon, levels, 1.0), prob.collocation, std::move(v),
                            std::move(u), terms.approximate};
}

double collocation_residual(const VolterraProblem& prob, const CollocationTrace& trace) {
    validate(prob);
    const CollocationOperator op(prob, trace.mesh.levels());
    const SeparatedTerms terms = separated_terms(prob, op);
    const std::vector<double> lv = op.apply(trace.v);
    double worst = 0.0;
    for (std::size_t p = 0; p < trace.v.size(); ++p) {
        const double r = std::abs(trace.v[p] - lv[p] - terms.forcing[p]);
        worst = std::max(worst, r / (1.0 + std::abs(trace.v[p])));
    }
    return worst;
}

std::size_t volterra_depth_for_order(double alpha, unsigned target_order) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in (0, 1)");
    }
    const double x = static_cast<double>(target_order) / (1.0 - alpha);
    const auto n = static_cast<std::size_t>(std::ceil(x - 1e-12));
    return n == 0 ? 0 : n - 1;
}

double volterra_theory_order(double alpha, std::size_t depth, std::size_t q) {
    const double smooth = static_cast<double>(depth + 1) * (1.0 - alpha);
    const auto qd = static_cast<double>(q);
    if (smooth >= 1.0 - 1e-12) {
        return qd;
    }
    return std::min(qd, 2.0 * smooth);
}

} // namespace msd
