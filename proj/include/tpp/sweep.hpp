#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tpp/grid.hpp"
#include "tpp/model.hpp"
#include "tpp/solver.hpp"

namespace tpp {

enum class VerdictKind { Stable, Unstable, NegativeDensityFlagged };

std::string_view to_string(VerdictKind k);
/// Inverse of to_string; throws ParseError(0, ...) on unknown text.
VerdictKind verdict_from_string(std::string_view text);

struct StabilityVerdict {
    VerdictKind kind = VerdictKind::Stable;
    std::optional<double> first_failure_time;  ///< present iff Unstable
    double min_density = 0.0;
    double max_abs_density = 0.0;

    friend bool operator==(const StabilityVerdict&, const StabilityVerdict&) = default;
};

/// Unstable on any non-finite value or blow-up, else
/// NegativeDensityFlagged when the minimum density fell below -neg_tol,
/// else Stable.
StabilityVerdict classify_run(const RunResult& result, double neg_tol);

/// Default negative-density tolerance: 1e-9 x initial height.
inline double default_neg_tol(const InitialCondition& ic) { return 1e-9 * ic.height; }

/// (D, tau) lattice of full telegraph runs. D and tau are applied to both
/// species; the reactive rates come from `reactive`.
struct SweepConfig {
    double d_min = 1.0;
    double d_max = 70.0;
    int d_steps = 8;
    double tau_min = 0.01;
    double tau_max = 0.1;
    int tau_steps = 8;
    ModelParams reactive = ModelParams::reference();
    GridSpec grid;
    InitialCondition ic;
    double blow_up_threshold = 1e6;
    std::optional<double> neg_tol;  ///< defaults to default_neg_tol(ic)
    unsigned workers = 0;           ///< 0 = hardware concurrency
};

struct SweepRow {
    double d = 0.0;
    double tau = 0.0;
    StabilityVerdict verdict;
    std::string note;  ///< set when the point could not be run
};

/// Lattice value i of steps points spanning [lo, hi] inclusive.
double lattice_value(double lo, double hi, int steps, int i);

/// One row per lattice point, tau-major then D, independent of the order
/// in which workers finish. Points that fail validation are recorded as
/// Unstable with a note; the sweep itself never aborts on them.
std::vector<SweepRow> sweep_phase_diagram(const SweepConfig& cfg);

}  // namespace tpp
