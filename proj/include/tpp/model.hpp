#pragma once

#include <string_view>

namespace tpp {

/// Reactive, diffusive and delay parameters of the telegraph predator-prey
/// system with Holling type-1 responses. Predator saturation is identically
/// zero and therefore not stored.
///
/// Units follow the usual labels (a: 1/s, b and c: m/s, d: m^2/s, tau: s)
/// but every value is treated as a plain real.
struct ModelParams {
    double a1 = 1.0;    ///< prey birth rate
    double a2 = 0.75;   ///< predator death rate
    double b1 = 0.5;    ///< prey saturation
    double c1 = 0.5;    ///< prey death rate due to predation
    double c2 = 0.5;    ///< predator birth rate due to predation
    double d1 = 1.0;    ///< prey diffusivity
    double d2 = 1.0;    ///< predator diffusivity
    double tau1 = 0.001;
    double tau2 = 0.001;

    /// Parameter set of the mesh-refinement study (defaults above).
    static ModelParams reference() { return {}; }

    /// Reference reactive rates with D and tau applied to both species.
    static ModelParams with_transport(double d, double tau);

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

enum class Species { Prey, Predator };

/// Time discretization family. Telegraph is the three-level delayed scheme,
/// Diffusive the two-level forward-Euler reaction-diffusion scheme.
enum class Scheme { Telegraph, Diffusive };

std::string_view to_string(Species s);
std::string_view to_string(Scheme s);

// Holling type-1 reactive terms and their self-derivatives. Densities are
// never clamped; negative inputs are evaluated as given.

inline double reactive_prey(double s1, double s2, const ModelParams& p) {
    return p.a1 * s1 - p.b1 * s1 * s1 - p.c1 * s1 * s2;
}

inline double reactive_predator(double s1, double s2, const ModelParams& p) {
    return -p.a2 * s2 + p.c2 * s1 * s2;
}

/// d(reactive_prey)/ds1
inline double reactive_prey_deriv(double s1, double s2, const ModelParams& p) {
    return p.a1 - 2.0 * p.b1 * s1 - p.c1 * s2;
}

/// d(reactive_predator)/ds2
inline double reactive_predator_deriv(double s1, const ModelParams& p) {
    return -p.a2 + p.c2 * s1;
}

/// Throws RejectedParam listing every violated bound. The telegraph scheme
/// divides by tau, so it additionally requires tau1, tau2 > 0.
const ModelParams& validate_params(const ModelParams& p, Scheme mode);

}  // namespace tpp
