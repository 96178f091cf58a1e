#include "tpp/solver.hpp"

#include <cmath>
#include <utility>

#include "tpp/error.hpp"

namespace tpp {

namespace {

void zero_boundaries(Field& f) {
    f.front() = 0.0;
    f.back() = 0.0;
}

void check_shape(const SimState& s, const GridSpec& g) {
    const auto n = static_cast<std::size_t>(g.ni);
    if (s.s1_prev.size() != n || s.s1_curr.size() != n || s.s2_prev.size() != n || s.s2_curr.size() != n)
        throw Error("state field length does not match grid node count");
}

struct LevelStats {
    double min1;
    double min2;
    double max_abs;
    bool finite;
};

LevelStats scan(const Field& s1, const Field& s2) {
    LevelStats st{s1.front(), s2.front(), 0.0, true};
    for (std::size_t i = 0; i < s1.size(); ++i) {
        const double u = s1[i];
        const double v = s2[i];
        if (!std::isfinite(u) || !std::isfinite(v)) st.finite = false;
        st.min1 = std::fmin(st.min1, u);
        st.min2 = std::fmin(st.min2, v);
        st.max_abs = std::fmax(st.max_abs, std::fmax(std::abs(u), std::abs(v)));
    }
    return st;
}

}  // namespace

SimState build_initial_state(const GridSpec& g, const InitialCondition& ic) {
    SimState s;
    s.s1_curr.assign(static_cast<std::size_t>(g.ni), 0.0);
    // Closed support; the slack absorbs rounding in the node positions.
    const double slack = 1e-9 * g.dx;
    for (int i = 1; i + 1 < g.ni; ++i) {
        const double x = g.x(i);
        if (x >= ic.support_lo - slack && x <= ic.support_hi + slack) s.s1_curr[static_cast<std::size_t>(i)] = ic.height;
    }
    s.s2_curr = s.s1_curr;
    s.s1_prev = s.s1_curr;
    s.s2_prev = s.s2_curr;
    s.k = 1;
    return s;
}

void advance_telegraph(SimState& s, const ModelParams& p, const GridSpec& g) {
    check_shape(s, g);
    const double dt = g.dt;
    const double dx2 = g.dx * g.dx;
    const double r1 = dt / p.tau1;
    const double r2 = dt / p.tau2;
    const double q1 = dt * dt / p.tau1;
    const double q2 = dt * dt / p.tau2;
    const double lam1 = p.d1 * q1 / dx2;
    const double lam2 = p.d2 * q2 / dx2;

    const double* u = s.s1_curr.data();
    const double* v = s.s2_curr.data();
    double* up = s.s1_prev.data();
    double* vp = s.s2_prev.data();
    const std::size_t last = s.s1_curr.size() - 1;
    // Level k-1 is read once per node and then overwritten by level k+1.
    // (E + W) is summed first so mirrored nodes round identically.
    for (std::size_t i = 1; i < last; ++i) {
        const double s1 = u[i];
        const double s2 = v[i];
        const double damp1 = 1.0 - p.tau1 * reactive_prey_deriv(s1, s2, p);
        const double damp2 = 1.0 - p.tau2 * reactive_predator_deriv(s1, p);
        const double n1 = 2.0 * s1 - up[i] - r1 * damp1 * (s1 - up[i]) +
                          lam1 * ((u[i + 1] + u[i - 1]) - 2.0 * s1) + q1 * reactive_prey(s1, s2, p);
        const double n2 = 2.0 * s2 - vp[i] - r2 * damp2 * (s2 - vp[i]) +
                          lam2 * ((v[i + 1] + v[i - 1]) - 2.0 * s2) + q2 * reactive_predator(s1, s2, p);
        up[i] = n1;
        vp[i] = n2;
    }
    zero_boundaries(s.s1_prev);
    zero_boundaries(s.s2_prev);
    std::swap(s.s1_prev, s.s1_curr);
    std::swap(s.s2_prev, s.s2_curr);
    ++s.k;
}

void advance_diffusive(SimState& s, const ModelParams& p, const GridSpec& g) {
    check_shape(s, g);
    const double dt = g.dt;
    const double sigma1 = p.d1 * dt / (g.dx * g.dx);
    const double sigma2 = p.d2 * dt / (g.dx * g.dx);

    const double* u = s.s1_curr.data();
    const double* v = s.s2_curr.data();
    double* un = s.s1_prev.data();
    double* vn = s.s2_prev.data();
    const std::size_t last = s.s1_curr.size() - 1;
    for (std::size_t i = 1; i < last; ++i) {
        const double s1 = u[i];
        const double s2 = v[i];
        un[i] = s1 + sigma1 * ((u[i + 1] + u[i - 1]) - 2.0 * s1) + dt * s1 * (p.a1 - p.b1 * s1 - p.c1 * s2);
        vn[i] = s2 + sigma2 * ((v[i + 1] + v[i - 1]) - 2.0 * s2) + dt * s2 * (-p.a2 + p.c2 * s1);
    }
    zero_boundaries(s.s1_prev);
    zero_boundaries(s.s2_prev);
    std::swap(s.s1_prev, s.s1_curr);
    std::swap(s.s2_prev, s.s2_curr);
    ++s.k;
}

SimState step_telegraph(const SimState& state, const ModelParams& p, const GridSpec& g) {
    SimState next = state;
    advance_telegraph(next, p, g);
    return next;
}

SimState step_diffusive(const SimState& state, const ModelParams& p, const GridSpec& g) {
    SimState next = state;
    advance_diffusive(next, p, g);
    return next;
}

double total_population(const Field& f, const GridSpec& g) {
    if (f.empty()) return 0.0;
    double sum = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i) sum += f[i];
    return g.dx * sum;
}

double RunResult::final_prey_population() const { return total_population(s1_final, grid); }

double RunResult::final_predator_population() const { return total_population(s2_final, grid); }

RunResult run(const ModelParams& p, const GridSpec& g, const InitialCondition& ic, Scheme scheme,
              const ProbeConfig& probes) {
    validate_params(p, scheme);
    validate_initial_condition(ic, g.domain());
    if (probes.series_stride < 1) throw RejectedParam("series_stride", "must be >= 1");
    if (probes.field_stride < 0) throw RejectedParam("field_stride", "must be >= 0");
    if (!(probes.blow_up_threshold > 0.0)) throw RejectedParam("blow_up_threshold", "must be > 0");
    if (probes.probe_x && !(*probes.probe_x >= g.x_min && *probes.probe_x <= g.x_max))
        throw RejectedParam("probe_x", "must lie inside [x_min, x_max]");

    RunResult res;
    res.grid = g;
    res.scheme = scheme;
    res.blow_up_threshold = probes.blow_up_threshold;

    std::size_t probe = 0;
    if (probes.probe_x) probe = static_cast<std::size_t>(std::lround((*probes.probe_x - g.x_min) / g.dx));

    SimState s = build_initial_state(g, ic);

    auto record = [&](bool force) {
        const int step = s.k - 1;
        const double t = time_of(s, g);
        if (probes.probe_x && (force || step % probes.series_stride == 0)) {
            res.series.push_back({t, s.s1_curr[probe], s.s2_curr[probe], total_population(s.s1_curr, g),
                                  total_population(s.s2_curr, g)});
        }
        if (probes.field_stride > 0 && (step % probes.field_stride == 0 || force))
            res.field.push_back({t, s.s1_curr, s.s2_curr});
    };

    // Returns false once the level diverged.
    auto observe = [&]() {
        const LevelStats st = scan(s.s1_curr, s.s2_curr);
        const double t = time_of(s, g);
        res.min_prey = std::fmin(res.min_prey, st.min1);
        res.min_predator = std::fmin(res.min_predator, st.min2);
        if (!res.first_negative_time && (st.min1 < 0.0 || st.min2 < 0.0)) res.first_negative_time = t;
        if (!st.finite) {
            res.max_abs_density = INFINITY;
        } else {
            res.max_abs_density = std::fmax(res.max_abs_density, st.max_abs);
        }
        if (!st.finite || st.max_abs > probes.blow_up_threshold) {
            res.first_failure_time = t;
            return false;
        }
        return true;
    };

    res.min_prey = s.s1_curr.front();
    res.min_predator = s.s2_curr.front();
    bool alive = observe();
    record(true);

    while (alive && s.k < g.nj) {
        if (scheme == Scheme::Telegraph)
            advance_telegraph(s, p, g);
        else
            advance_diffusive(s, p, g);
        alive = observe();
        const bool last = !alive || s.k == g.nj;
        record(last);
    }

    res.halted_early = !alive && s.k < g.nj;
    res.k_final = s.k;
    res.t_final = time_of(s, g);
    res.s1_final = std::move(s.s1_curr);
    res.s2_final = std::move(s.s2_curr);
    return res;
}

}  // namespace tpp
