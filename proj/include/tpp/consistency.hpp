#pragma once

#include <span>
#include <vector>

#include "tpp/grid.hpp"
#include "tpp/model.hpp"

namespace tpp {

struct ConsistencyRow {
    double dx;
    double dt;
    double residual;  ///< max-norm local truncation error over sample points
};

/// Measures the local truncation error of a stepper on the manufactured
/// fields S1 = S2 = sin(pi (x - x_min)/L) exp(-t).
///
/// For each level n = 0 .. levels-1 the steps are dt/2^n and dx/2^(n/2), so
/// dt and dx^2 halve together. At every interior node of base_grid and at
/// three sample times the stepper is applied to the exact levels k-1 and k;
/// the difference to the exact level k+1, scaled back to residual units, is
/// compared with the continuous operator evaluated analytically. The
/// returned residual is the max-norm of that difference over species and
/// sample points.
///
/// Throws RejectedParam for levels < 3 or invalid params.
std::vector<ConsistencyRow> consistency_order_study(const ModelParams& p, const GridSpec& base_grid, int levels,
                                                    Scheme scheme = Scheme::Telegraph);

/// Temporal order log(r_{n-1}/r_n)/log(dt_{n-1}/dt_n) from the last two rows.
double observed_temporal_order(std::span<const ConsistencyRow> rows);

}  // namespace tpp
