#pragma once

#include <vector>

namespace tpp {

/// Space-time rectangle [x_min, x_max] x [t_min, t_max].
struct Domain {
    double x_min = 0.0;
    double x_max = 50.0;
    double t_min = 0.0;
    double t_max = 100.0;

    friend bool operator==(const Domain&, const Domain&) = default;
};

/// Uniform node-based grid. Node i sits at x_min + i*dx with Dirichlet nodes
/// at i = 0 and i = ni-1; time level k sits at t_min + k*dt.
///
/// dx == (x_max - x_min)/(ni - 1) and dt == (t_max - t_min)/(nj - 1) hold
/// exactly because the stored steps are recomputed from the counts.
struct GridSpec {
    double x_min = 0.0;
    double x_max = 0.0;
    double t_min = 0.0;
    double t_max = 0.0;
    double dx = 0.0;
    double dt = 0.0;
    int ni = 0;  ///< spatial node count
    int nj = 0;  ///< time level count

    double x(int i) const { return x_min + (x_max - x_min) * i / (ni - 1); }
    double t(int k) const { return t_min + (t_max - t_min) * k / (nj - 1); }
    Domain domain() const { return {x_min, x_max, t_min, t_max}; }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Builds a grid whose domain is an integer multiple of the steps (to within
/// 1e-9 of an integer count). Throws NonCommensurate otherwise and
/// RejectedParam for non-positive steps or empty domains.
GridSpec build_grid(double x_min, double x_max, double t_min, double t_max, double dx, double dt);
GridSpec build_grid(const Domain& d, double dx, double dt);

/// Like build_grid but snaps each count to the nearest integer and
/// recomputes the step, accepting a relative step change up to
/// max_rel_adjust. Used for reference step values such as dx = 0.75 or
/// dt = 0.0015255 that do not divide the domain.
GridSpec fit_grid(const Domain& d, double dx, double dt, double max_rel_adjust = 0.05);

/// Population density sampled at every node.
using Field = std::vector<double>;

/// Plateau initial condition: height on the closed interval
/// [support_lo, support_hi], zero elsewhere, zero initial velocity.
struct InitialCondition {
    double height = 15.0;
    double support_lo = 24.0;
    double support_hi = 26.0;

    friend bool operator==(const InitialCondition&, const InitialCondition&) = default;
};

/// Throws RejectedParam unless support_lo < support_hi lie inside the
/// spatial domain and height is finite and non-negative.
void validate_initial_condition(const InitialCondition& ic, const Domain& d);

}  // namespace tpp
