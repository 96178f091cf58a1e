#include "tpp/consistency.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "tpp/error.hpp"
#include "tpp/solver.hpp"

namespace tpp {

namespace {

struct Manufactured {
    double x0;
    double wavenumber;

    double value(double x, double t) const { return std::sin(wavenumber * (x - x0)) * std::exp(-t); }
    // S_t = -S, S_tt = S, S_xx = -k^2 S
};

// Local residual of one stepper application at node x, time t, for both
// species; returns max |discrete - continuous|.
double local_error(const ModelParams& p, Scheme scheme, const Manufactured& m, double x, double t, double dx,
                   double dt) {
    const GridSpec g = build_grid(x - dx, x + dx, t - dt, t + dt, dx, dt);
    const double s_prev = m.value(x, t - dt);
    const double s_curr = m.value(x, t);
    const double s_next = m.value(x, t + dt);

    SimState st;
    st.s1_prev = {0.0, s_prev, 0.0};
    st.s1_curr = {m.value(x - dx, t), s_curr, m.value(x + dx, t)};
    st.s2_prev = st.s1_prev;
    st.s2_curr = st.s1_curr;
    st.k = 2;

    const double s = s_curr;
    const double s_t = -s;
    const double s_tt = s;
    const double s_xx = -m.wavenumber * m.wavenumber * s;
    const double f1 = reactive_prey(s, s, p);
    const double f2 = reactive_predator(s, s, p);

    double err1 = 0.0;
    double err2 = 0.0;
    if (scheme == Scheme::Telegraph) {
        const SimState out = step_telegraph(st, p, g);
        // With S+ exact the discrete residual collapses to tau/dt^2 (S+ - S+_scheme).
        const double disc1 = p.tau1 / (dt * dt) * (s_next - out.s1_curr[1]);
        const double disc2 = p.tau2 / (dt * dt) * (s_next - out.s2_curr[1]);
        const double cont1 =
            p.tau1 * s_tt + (1.0 - p.tau1 * reactive_prey_deriv(s, s, p)) * s_t - p.d1 * s_xx - f1;
        const double cont2 =
            p.tau2 * s_tt + (1.0 - p.tau2 * reactive_predator_deriv(s, p)) * s_t - p.d2 * s_xx - f2;
        err1 = disc1 - cont1;
        err2 = disc2 - cont2;
    } else {
        const SimState out = step_diffusive(st, p, g);
        const double disc1 = (s_next - out.s1_curr[1]) / dt;
        const double disc2 = (s_next - out.s2_curr[1]) / dt;
        err1 = disc1 - (s_t - p.d1 * s_xx - f1);
        err2 = disc2 - (s_t - p.d2 * s_xx - f2);
    }
    return std::max(std::abs(err1), std::abs(err2));
}

}  // namespace

std::vector<ConsistencyRow> consistency_order_study(const ModelParams& p, const GridSpec& base, int levels,
                                                    Scheme scheme) {
    if (levels < 3) throw RejectedParam("levels", "must be >= 3");
    validate_params(p, scheme);

    const Manufactured m{base.x_min, std::numbers::pi / (base.x_max - base.x_min)};
    const double span = base.t_max - base.t_min;
    const std::array<double, 3> times{base.t_min + 0.25 * span, base.t_min + 0.5 * span, base.t_min + 0.75 * span};

    std::vector<ConsistencyRow> rows;
    rows.reserve(static_cast<std::size_t>(levels));
    for (int n = 0; n < levels; ++n) {
        const double dt = base.dt / std::pow(2.0, n);
        const double dx = base.dx / std::pow(std::numbers::sqrt2, n);
        double worst = 0.0;
        for (const double t : times)
            for (int i = 1; i + 1 < base.ni; ++i) worst = std::max(worst, local_error(p, scheme, m, base.x(i), t, dx, dt));
        rows.push_back({dx, dt, worst});
    }
    return rows;
}

double observed_temporal_order(std::span<const ConsistencyRow> rows) {
    if (rows.size() < 2) throw RejectedParam("levels", "need at least two rows");
    const auto& a = rows[rows.size() - 2];
    const auto& b = rows.back();
    return std::log(a.residual / b.residual) / std::log(a.dt / b.dt);
}

}  // namespace tpp
