#pragma once

#include <span>
#include <string>
#include <vector>

#include "tpp/grid.hpp"
#include "tpp/model.hpp"

namespace tpp {

struct RefinementLevel {
    double dx;
    double dt;
};

/// Reference final populations of one refinement level.
struct ReferenceRow {
    RefinementLevel level;
    double p1;
    double p2;
    bool long_running;
};

/// The fourteen-row reference ladder at t = 100 (dx = 5.0 down to 0.0025).
std::span<const ReferenceRow> reference_ladder();

/// Levels of the reference ladder; the two finest rows (about 1e9 to 1e11
/// node updates) are only included on request.
std::vector<RefinementLevel> default_levels(bool include_long_running = false);

struct ConvergenceRow {
    double dx = 0.0;        ///< grid step actually used
    double dt = 0.0;
    double p1_final = 0.0;  ///< NaN when the level failed
    double p2_final = 0.0;
    double runtime_s = 0.0;
    std::string failure;    ///< empty on success

    bool ok() const { return failure.empty(); }
};

/// Runs the telegraph scheme over `domain` for every level and records the
/// trapezoidal populations at the final time. Steps that do not divide the
/// domain are snapped with fit_grid. A level that fails (validation or
/// blow-up) is reported in its row; the study continues.
///
/// Throws RejectedParam when levels is empty.
std::vector<ConvergenceRow> refinement_study(const ModelParams& p, const Domain& domain,
                                             const InitialCondition& ic, std::span<const RefinementLevel> levels,
                                             unsigned workers = 1);

}  // namespace tpp
