#pragma once

#include "msd/time_mesh.hpp"

#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace msd {

/// One term c * t^p of a TimeProfile.
struct PowerTerm {
    double coefficient;
    double exponent;

    bool operator==(const PowerTerm&) const = default;
};

/// Finite sum of power functions sum_i c_i t^{p_i} with p_i > -1.
///
/// The family is closed under Riemann-Liouville integration, which is how all
/// analytic forcing and reconstruction terms are represented. Terms are kept
/// sorted by exponent with equal exponents merged and zero coefficients
/// dropped.
class TimeProfile {
public:
    /// Lowest exponent accepted by the general constructor is -1 + kExponentFloor.
    static constexpr double kExponentFloor = 1e-12;

    TimeProfile() = default;
    explicit TimeProfile(std::vector<PowerTerm> terms);

    static TimeProfile constant(double value);
    static TimeProfile monomial(double coefficient, double exponent);

    /// Evaluates at t >= 0. At t = 0 only the constant term survives; a
    /// profile holding a negative exponent cannot be evaluated there.
    [[nodiscard]] double operator()(double t) const;

    [[nodiscard]] std::span<const PowerTerm> terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_singular_at_zero() const noexcept;

    /// Coefficient of the t^0 term.
    [[nodiscard]] double value_at_zero() const;
    /// The profile with its t^0 term removed.
    [[nodiscard]] TimeProfile without_constant() const;

    TimeProfile& operator+=(const TimeProfile& other);
    TimeProfile& operator*=(double scale);

    friend TimeProfile operator+(TimeProfile lhs, const TimeProfile& rhs) { return lhs += rhs; }
    friend TimeProfile operator-(TimeProfile lhs, TimeProfile rhs) { return lhs += (rhs *= -1.0); }
    friend TimeProfile operator*(TimeProfile lhs, double scale) { return lhs *= scale; }
    friend TimeProfile operator*(double scale, TimeProfile rhs) { return rhs *= scale; }

    bool operator==(const TimeProfile&) const = default;

private:
    struct Unchecked {};
    TimeProfile(std::vector<PowerTerm> terms, Unchecked);
    void normalize();

    std::vector<PowerTerm> terms_;

    friend TimeProfile beta_profile(double nu);
    friend TimeProfile frac_integrate(const TimeProfile& profile, double nu);
};

/// beta_nu(t) = t^{nu-1} / Gamma(nu). For nu in (0, 1) the profile is singular
/// at t = 0. Throws std::invalid_argument for nu <= 0.
TimeProfile beta_profile(double nu);

/// Exact Riemann-Liouville integral of order nu > 0, applied termwise:
/// I^nu t^p = Gamma(p+1) / Gamma(p+1+nu) t^{p+nu}.
TimeProfile frac_integrate(const TimeProfile& profile, double nu);

/// Forcing term that is either an exact TimeProfile or a general callable.
class ForcingFunction {
public:
    using Callable = std::function<double(double)>;

    static ForcingFunction analytic(TimeProfile profile);
    static ForcingFunction tabulated(Callable fn);

    [[nodiscard]] bool is_analytic() const noexcept;
    /// Throws std::logic_error for tabulated forcing.
    [[nodiscard]] const TimeProfile& profile() const;
    [[nodiscard]] double operator()(double t) const;

private:
    explicit ForcingFunction(std::variant<TimeProfile, Callable> source)
        : source_(std::move(source)) {}

    std::variant<TimeProfile, Callable> source_;
};

/// Product-integration approximation of (I^nu f)(t_m) at every mesh node,
/// with f replaced by its piecewise-linear interpolant and the kernel moments
/// integrated exactly. Second order on smooth data. Requires nu in (0, 2].
std::vector<double> frac_integrate_numeric(const ForcingFunction& f, double nu,
                                           const GradedMesh& mesh);

/// Same as above on values already sampled at the mesh nodes.
std::vector<double> frac_integrate_nodal(std::span<const double> values, double nu,
                                         const GradedMesh& mesh);

} // namespace msd
