#pragma once

#include <complex>
#include <optional>

#include "tpp/model.hpp"

namespace tpp {

/// Densities at which the nonlinear reactive terms are frozen before the
/// Fourier analysis.
struct LinearizationPoint {
    double m1 = 0.0;
    double m2 = 0.0;
};

/// Upper bound on dt, or Unbounded when the inequality places no
/// restriction. Callers must branch on is_unbounded().
class DtBound {
public:
    static DtBound finite(double value) { return DtBound(value); }
    static DtBound unbounded() { return DtBound(std::nullopt); }

    bool is_unbounded() const { return !value_.has_value(); }
    /// Precondition: !is_unbounded().
    double value() const { return *value_; }
    bool admits(double dt) const { return is_unbounded() || dt <= *value_; }

private:
    explicit DtBound(std::optional<double> v) : value_(v) {}
    std::optional<double> value_;
};

/// Von Neumann time-step bound of the forward-Euler reaction-diffusion
/// scheme linearized at lin:
///
///   dt <= dx^2 / (2 D sin^2(xi/2) - dx^2/2 * r)
///
/// with r = a1 - b1 m1 - c1 m2 (prey) or -a2 + c2 m1 (predator). The
/// default sin^2(xi/2) = 1 is the worst Fourier mode; pass xi to get the
/// per-mode bound. Unbounded when the denominator is <= 0.
DtBound vn_dt_bound_diffusive(const ModelParams& p, double dx, const LinearizationPoint& lin, Species species,
                              std::optional<double> xi = std::nullopt);

/// 1 - 2 sigma (dt/tau) sin^2(xi/2) - (dt/tau)/2
double telegraph_beta(double sigma, double dt_over_tau, double xi);

/// Roots of g^2 - 2 beta g + (1 - dt/tau) = 0 for the pure telegraph scheme.
struct AmplificationRoots {
    std::complex<double> g1;
    std::complex<double> g2;
    double beta = 0.0;
    double dt_over_tau = 0.0;
    double sigma = 0.0;
    double xi = 0.0;

    double discriminant() const { return beta * beta - 1.0 + dt_over_tau; }
    bool is_complex() const { return discriminant() < 0.0; }
    double max_modulus() const;
    /// |g^2 - 2 beta g + (1 - dt/tau)| for the given root.
    double residual(std::complex<double> g) const;
};

AmplificationRoots telegraph_amplification(double sigma, double dt_over_tau, double xi);

struct TelegraphStability {
    bool stable = false;
    double sigma = 0.0;
    double dt_over_tau = 0.0;
};

/// dt/tau <= 1 and sigma = D dt/dx^2 <= 1/4.
TelegraphStability telegraph_vn_stable(double d, double tau, double dx, double dt);

/// Largest dt meeting both telegraph conditions: min(tau, dx^2/(4 D)).
DtBound telegraph_dt_bound(double d, double tau, double dx);

struct LemmaValue {
    bool holds = false;
    double value = 0.0;  ///< sqrt(y^2 - 1 + x) + y
};

/// Checks 0 <= sqrt(y^2 - 1 + x) + y <= 1 (upper end to within 8 ulp) for
/// x in (0, 1]. Throws
/// DomainError when x is outside (0, 1] or the radicand is negative.
LemmaValue lemma1(double x, double y);
bool lemma1_holds(double x, double y);

}  // namespace tpp
