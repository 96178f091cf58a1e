#include "tpp/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tpp/error.hpp"

namespace tpp {

DtBound vn_dt_bound_diffusive(const ModelParams& p, double dx, const LinearizationPoint& lin, Species species,
                              std::optional<double> xi) {
    if (!(dx > 0.0)) throw RejectedParam("dx", "must be > 0");
    double sin2 = 1.0;
    if (xi) {
        const double s = std::sin(*xi / 2.0);
        sin2 = s * s;
    }
    const bool prey = species == Species::Prey;
    const double d = prey ? p.d1 : p.d2;
    const double rate = prey ? p.a1 - p.b1 * lin.m1 - p.c1 * lin.m2 : -p.a2 + p.c2 * lin.m1;
    const double dx2 = dx * dx;
    const double denom = 2.0 * d * sin2 - 0.5 * dx2 * rate;
    if (denom <= 0.0) return DtBound::unbounded();
    return DtBound::finite(dx2 / denom);
}

double telegraph_beta(double sigma, double dt_over_tau, double xi) {
    const double s = std::sin(xi / 2.0);
    return 1.0 - 2.0 * sigma * dt_over_tau * s * s - 0.5 * dt_over_tau;
}

double AmplificationRoots::max_modulus() const { return std::max(std::abs(g1), std::abs(g2)); }

double AmplificationRoots::residual(std::complex<double> g) const {
    return std::abs(g * g - 2.0 * beta * g + (1.0 - dt_over_tau));
}

AmplificationRoots telegraph_amplification(double sigma, double dt_over_tau, double xi) {
    AmplificationRoots r;
    r.sigma = sigma;
    r.dt_over_tau = dt_over_tau;
    r.xi = xi;
    r.beta = telegraph_beta(sigma, dt_over_tau, xi);
    const double disc = r.discriminant();
    if (disc < 0.0) {
        const double im = std::sqrt(-disc);
        r.g1 = {r.beta, im};
        r.g2 = {r.beta, -im};
    } else {
        // Larger-magnitude root first, the other from the product of roots
        // to avoid cancellation.
        const double big = r.beta + std::copysign(std::sqrt(disc), r.beta);
        const double c = 1.0 - dt_over_tau;
        r.g1 = big;
        r.g2 = big != 0.0 ? c / big : 0.0;
    }
    return r;
}

TelegraphStability telegraph_vn_stable(double d, double tau, double dx, double dt) {
    TelegraphStability s;
    s.sigma = d * dt / (dx * dx);
    s.dt_over_tau = dt / tau;
    s.stable = s.dt_over_tau <= 1.0 && s.sigma <= 0.25;
    return s;
}

DtBound telegraph_dt_bound(double d, double tau, double dx) {
    if (!(tau > 0.0)) throw RejectedParam("tau", "must be > 0");
    if (!(dx > 0.0)) throw RejectedParam("dx", "must be > 0");
    if (d <= 0.0) return DtBound::finite(tau);
    return DtBound::finite(std::min(tau, dx * dx / (4.0 * d)));
}

LemmaValue lemma1(double x, double y) {
    if (!(x > 0.0 && x <= 1.0)) throw DomainError("lemma1: x must lie in (0, 1]");
    const double radicand = y * y - 1.0 + x;
    if (radicand < 0.0) throw DomainError("lemma1: y^2 - 1 + x is negative");
    LemmaValue v;
    v.value = std::sqrt(radicand) + y;
    // A few ulps of slack: on the boundary y = 1 - x/2 the value is 1 exactly
    // in real arithmetic.
    constexpr double slack = 8.0 * std::numeric_limits<double>::epsilon();
    v.holds = v.value >= 0.0 && v.value <= 1.0 + slack;
    return v;
}

bool lemma1_holds(double x, double y) { return lemma1(x, y).holds; }

}  // namespace tpp
