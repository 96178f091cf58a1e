#include "tpp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "tpp/error.hpp"

namespace tpp {

namespace {

constexpr double kCountTolerance = 1e-9;

void check_domain(double x_min, double x_max, double t_min, double t_max, double dx, double dt) {
    std::vector<RejectedParam::Violation> bad;
    if (!std::isfinite(x_min)) bad.push_back({"x_min", "must be finite"});
    if (!std::isfinite(x_max) || !(x_max > x_min)) bad.push_back({"x_max", "must be finite and > x_min"});
    if (!std::isfinite(t_min)) bad.push_back({"t_min", "must be finite"});
    if (!std::isfinite(t_max) || !(t_max > t_min)) bad.push_back({"t_max", "must be finite and > t_min"});
    if (!std::isfinite(dx) || !(dx > 0.0)) bad.push_back({"dx", "must be finite and > 0"});
    if (!std::isfinite(dt) || !(dt > 0.0)) bad.push_back({"dt", "must be finite and > 0"});
    if (!bad.empty()) throw RejectedParam(std::move(bad));
}

GridSpec assemble(double x_min, double x_max, double t_min, double t_max, long long intervals_x,
                  long long intervals_t) {
    if (intervals_x < 2) throw RejectedParam("dx", "grid needs at least 3 nodes");
    if (intervals_t < 1) throw RejectedParam("dt", "grid needs at least 2 time levels");
    GridSpec g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.t_min = t_min;
    g.t_max = t_max;
    g.ni = static_cast<int>(intervals_x + 1);
    g.nj = static_cast<int>(intervals_t + 1);
    g.dx = (x_max - x_min) / static_cast<double>(g.ni - 1);
    g.dt = (t_max - t_min) / static_cast<double>(g.nj - 1);
    return g;
}

long long exact_count(const char* axis, double length, double step) {
    const double ratio = length / step;
    const double n = std::round(ratio);
    if (std::abs(ratio - n) > kCountTolerance * std::max(1.0, n)) throw NonCommensurate(axis, length, step);
    return static_cast<long long>(n);
}

long long nearest_count(const char* axis, double length, double step, double max_rel_adjust) {
    const double n = std::max(1.0, std::round(length / step));
    const double fitted = length / n;
    if (std::abs(fitted - step) > max_rel_adjust * step) throw NonCommensurate(axis, length, step);
    return static_cast<long long>(n);
}

}  // namespace

GridSpec build_grid(double x_min, double x_max, double t_min, double t_max, double dx, double dt) {
    check_domain(x_min, x_max, t_min, t_max, dx, dt);
    return assemble(x_min, x_max, t_min, t_max, exact_count("x", x_max - x_min, dx),
                    exact_count("t", t_max - t_min, dt));
}

GridSpec build_grid(const Domain& d, double dx, double dt) {
    return build_grid(d.x_min, d.x_max, d.t_min, d.t_max, dx, dt);
}

GridSpec fit_grid(const Domain& d, double dx, double dt, double max_rel_adjust) {
    check_domain(d.x_min, d.x_max, d.t_min, d.t_max, dx, dt);
    return assemble(d.x_min, d.x_max, d.t_min, d.t_max,
                    nearest_count("x", d.x_max - d.x_min, dx, max_rel_adjust),
                    nearest_count("t", d.t_max - d.t_min, dt, max_rel_adjust));
}

void validate_initial_condition(const InitialCondition& ic, const Domain& d) {
    std::vector<RejectedParam::Violation> bad;
    if (!std::isfinite(ic.height) || ic.height < 0.0) bad.push_back({"ic_height", "must be finite and >= 0"});
    if (!std::isfinite(ic.support_lo) || ic.support_lo < d.x_min || ic.support_lo > d.x_max)
        bad.push_back({"ic_lo", "must lie inside [x_min, x_max]"});
    if (!std::isfinite(ic.support_hi) || ic.support_hi < d.x_min || ic.support_hi > d.x_max)
        bad.push_back({"ic_hi", "must lie inside [x_min, x_max]"});
    if (bad.empty() && !(ic.support_lo < ic.support_hi))
        bad.push_back({"ic_lo", "must be < ic_hi"});
    if (!bad.empty()) throw RejectedParam(std::move(bad));
}

}  // namespace tpp
