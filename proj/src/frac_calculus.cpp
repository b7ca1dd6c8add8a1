#include "msd/frac_calculus.hpp"

#include "msd/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace msd {

namespace {

constexpr double kMergeTolerance = 1e-13;

void require_integrable(double exponent, double floor) {
    if (!std::isfinite(exponent) || exponent <= -1.0 + floor) {
        throw std::invalid_argument("power exponent " + std::to_string(exponent) +
                                    " is not integrable at t = 0");
    }
}

// (1/tau) * int_{t_{k-1}}^{t_k} (t_m - s)^{nu-1} {(t_k - s), (s - t_{k-1})} ds,
// i.e. the moments against the two hat-function pieces of the cell.
struct CellMoments {
    double left;
    double right;
};

CellMoments linear_cell_moments(double far, double near, double tau, double nu) {
    const double rho = tau / far;
    if (rho < 0.125) {
        // Binomial expansion of (1 - rho x)^{nu-1}; rho^20 < 1e-18.
        double coeff = 1.0;
        double power = 1.0;
        double left = 0.0;
        double right = 0.0;
        for (int j = 0; j < 20; ++j) {
            const double term = coeff * power;
            left += term / ((j + 1.0) * (j + 2.0));
            right += term / (j + 2.0);
            coeff *= (nu - 1.0 - j) / (j + 1.0);
            power *= -rho;
        }
        const double scale = tau * std::pow(far, nu - 1.0);
        return {scale * left, scale * right};
    }
    const double i0 = pow_diff(far, tau, nu) / nu;
    const double i1 = pow_diff(far, tau, nu + 1.0) / (nu + 1.0);
    return {(i1 - near * i0) / tau, (far * i0 - i1) / tau};
}

} // namespace

TimeProfile::TimeProfile(std::vector<PowerTerm> terms) : terms_(std::move(terms)) {
    for (const auto& term : terms_) {
        require_integrable(term.exponent, kExponentFloor);
        if (!std::isfinite(term.coefficient)) {
            throw std::invalid_argument("power coefficient must be finite");
        }
    }
    normalize();
}

TimeProfile::TimeProfile(std::vector<PowerTerm> terms, Unchecked) : terms_(std::move(terms)) {
    normalize();
}

void TimeProfile::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const PowerTerm& a, const PowerTerm& b) { return a.exponent < b.exponent; });
    std::vector<PowerTerm> merged;
    merged.reserve(terms_.size());
    for (const auto& term : terms_) {
        if (!merged.empty() && std::abs(merged.back().exponent - term.exponent) <= kMergeTolerance) {
            merged.back().coefficient += term.coefficient;
        } else {
            merged.push_back(term);
        }
    }
    std::erase_if(merged, [](const PowerTerm& t) { return t.coefficient == 0.0; });
    terms_ = std::move(merged);
}

TimeProfile TimeProfile::constant(double value) { return TimeProfile({{value, 0.0}}); }

TimeProfile TimeProfile::monomial(double coefficient, double exponent) {
    return TimeProfile({{coefficient, exponent}});
}

double TimeProfile::operator()(double t) const {
    if (!(t >= 0.0)) {
        throw std::domain_error("TimeProfile evaluated at negative time");
    }
    if (t == 0.0) {
        if (is_singular_at_zero()) {
            throw std::domain_error("TimeProfile with negative exponent evaluated at t = 0");
        }
        return value_at_zero();
    }
    double acc = 0.0;
    for (const auto& term : terms_) {
        acc += term.exponent == 0.0 ? term.coefficient : term.coefficient * std::pow(t, term.exponent);
    }
    return acc;
}

bool TimeProfile::is_singular_at_zero() const noexcept {
    return !terms_.empty() && terms_.front().exponent < 0.0;
}

double TimeProfile::value_at_zero() const {
    for (const auto& term : terms_) {
        if (term.exponent == 0.0) {
            return term.coefficient;
        }
    }
    return 0.0;
}

TimeProfile TimeProfile::without_constant() const {
    TimeProfile out = *this;
    std::erase_if(out.terms_, [](const PowerTerm& t) { return t.exponent == 0.0; });
    return out;
}

TimeProfile& TimeProfile::operator+=(const TimeProfile& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    normalize();
    return *this;
}

TimeProfile& TimeProfile::operator*=(double scale) {
    if (!std::isfinite(scale)) {
        throw std::invalid_argument("TimeProfile scale must be finite");
    }
    for (auto& term : terms_) {
        term.coefficient *= scale;
    }
    normalize();
    return *this;
}

TimeProfile beta_profile(double nu) {
    if (!std::isfinite(nu) || nu <= 0.0) {
        throw std::invalid_argument("beta_profile requires nu > 0, got " + std::to_string(nu));
    }
    return TimeProfile({{1.0 / gamma_fn(nu), nu - 1.0}}, TimeProfile::Unchecked{});
}

TimeProfile frac_integrate(const TimeProfile& profile, double nu) {
    if (!std::isfinite(nu) || nu <= 0.0) {
        throw std::invalid_argument("frac_integrate requires nu > 0, got " + std::to_string(nu));
    }
    std::vector<PowerTerm> out;
    out.reserve(profile.terms_.size());
    for (const auto& term : profile.terms_) {
        require_integrable(term.exponent, 0.0);
        const double p = term.exponent;
        out.push_back({term.coefficient * gamma_ratio(p + 1.0, p + 1.0 + nu), p + nu});
    }
    return TimeProfile(std::move(out), TimeProfile::Unchecked{});
}

ForcingFunction ForcingFunction::analytic(TimeProfile profile) {
    return ForcingFunction(std::move(profile));
}

ForcingFunction ForcingFunction::tabulated(Callable fn) {
    if (!fn) {
        throw std::invalid_argument("tabulated forcing requires a callable");
    }
    return ForcingFunction(std::move(fn));
}

bool ForcingFunction::is_analytic() const noexcept {
    return std::holds_alternative<TimeProfile>(source_);
}

const TimeProfile& ForcingFunction::profile() const {
    if (const auto* p = std::get_if<TimeProfile>(&source_)) {
        return *p;
    }
    throw std::logic_error("tabulated forcing has no analytic profile");
}

double ForcingFunction::operator()(double t) const {
    return std::visit([t](const auto& src) { return src(t); }, source_);
}

std::vector<double> frac_integrate_numeric(const ForcingFunction& f, double nu,
                                           const GradedMesh& mesh) {
    const auto nodes = mesh.nodes();
    std::vector<double> values(nodes.size());
    for (std::size_t m = 0; m < nodes.size(); ++m) {
        values[m] = f(nodes[m]);
        if (!std::isfinite(values[m])) {
            throw std::invalid_argument("forcing is not finite at t = " + std::to_string(nodes[m]));
        }
    }
    return frac_integrate_nodal(values, nu, mesh);
}

std::vector<double> frac_integrate_nodal(std::span<const double> values, double nu,
                                         const GradedMesh& mesh) {
    if (!(nu > 0.0 && nu <= 2.0)) {
        throw std::invalid_argument("frac_integrate_nodal requires nu in (0, 2], got " +
                                    std::to_string(nu));
    }
    const auto nodes = mesh.nodes();
    if (values.size() != nodes.size()) {
        throw std::invalid_argument("frac_integrate_nodal: expected " +
                                    std::to_string(nodes.size()) + " values, got " +
                                    std::to_string(values.size()));
    }
    const double inv_gamma = 1.0 / gamma_fn(nu);
    std::vector<double> out(nodes.size(), 0.0);
    for (std::size_t m = 1; m < nodes.size(); ++m) {
        double acc = 0.0;
        for (std::size_t k = 1; k <= m; ++k) {
            const double far = nodes[m] - nodes[k - 1];
            const double near = nodes[m] - nodes[k];
            const auto w = linear_cell_moments(far, near, mesh.step(k), nu);
            acc += values[k - 1] * w.left + values[k] * w.right;
        }
        out[m] = acc * inv_gamma;
    }
    return out;
}

} // namespace msd
