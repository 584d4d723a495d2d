#include "waveobs/dynamics.hpp"

#include <cmath>

namespace waveobs {

WaveSystem::WaveSystem(SpectralGrid grid_, Polynomial f_, Eigen::VectorXd chi_tilde_)
    : grid(std::move(grid_)), f(std::move(f_)), chi_tilde(std::move(chi_tilde_)) {
    if (chi_tilde.size() == 0) chi_tilde = Eigen::VectorXd::Ones(grid.quad_points());
    if (chi_tilde.size() != grid.quad_points())
        throw std::invalid_argument("WaveSystem: chi_tilde sample count mismatch");
    if ((chi_tilde.array() < -1e-12).any() || (chi_tilde.array() > 1.0 + 1e-12).any())
        throw std::invalid_argument("WaveSystem: chi_tilde samples must lie in [0, 1]");
}

Trajectory::Trajectory(TimeGrid tg, std::vector<State> st)
    : time_grid(tg), states(std::move(st)) {
    if (states.size() != static_cast<size_t>(time_grid.M + 1))
        throw std::invalid_argument("Trajectory: need M+1 states");
}

Trajectory Trajectory::zero(const TimeGrid& tg, int n) {
    return Trajectory(tg, std::vector<State>(static_cast<size_t>(tg.M + 1), State::zero(n)));
}

State linear_propagate(const State& state, double t, const SpectralGrid& grid) {
    const int n = grid.N();
    if (state.size() != n) throw std::invalid_argument("linear_propagate: size mismatch");
    State out = State::zero(n);
    for (int j = 0; j < n; ++j) {
        const double w = std::sqrt(grid.eigenvalues()(j) + grid.beta());
        const double c = std::cos(w * t), s = std::sin(w * t);
        out.u(j) = c * state.u(j) + s / w * state.v(j);
        out.v(j) = -w * s * state.u(j) + c * state.v(j);
    }
    return out;
}

State apply_F(const State& state, const WaveSystem& system) {
    const SpectralGrid& g = system.grid;
    if (state.size() != g.N()) throw std::invalid_argument("apply_F: size mismatch");
    State out = State::zero(g.N());
    if (!system.f.is_zero()) {
        Eigen::VectorXd uphys = g.to_physical(state.u);
        for (int q = 0; q < uphys.size(); ++q)
            uphys(q) = system.chi_tilde(q) * system.f(uphys(q));
        out.v = -g.to_coeffs(uphys);
    }
    if (g.beta() != 0.0) out.v += g.beta() * state.u;
    return out;
}

State duhamel(const std::vector<State>& source, int t_index, const SpectralGrid& grid,
              const TimeGrid& time_grid) {
    if (source.size() != static_cast<size_t>(time_grid.M + 1))
        throw std::invalid_argument("duhamel: source length mismatch");
    if (t_index < 0 || t_index > time_grid.M) throw std::out_of_range("duhamel: index out of range");
    State acc = State::zero(grid.N());
    if (t_index == 0) return acc;
    const double dt = time_grid.dt();
    const double t = time_grid.node(t_index);
    for (int m = 0; m <= t_index; ++m) {
        const double w = (m == 0 || m == t_index) ? 0.5 * dt : dt;
        acc += linear_propagate(source[static_cast<size_t>(m)], t - time_grid.node(m), grid) * w;
    }
    return acc;
}

std::vector<State> duhamel_all(const std::vector<State>& source, const SpectralGrid& grid,
                               const TimeGrid& time_grid) {
    if (source.size() != static_cast<size_t>(time_grid.M + 1))
        throw std::invalid_argument("duhamel_all: source length mismatch");
    const double dt = time_grid.dt();
    std::vector<State> out;
    out.reserve(source.size());
    out.push_back(State::zero(grid.N()));
    State acc = out.back();
    for (int m = 1; m <= time_grid.M; ++m) {
        acc = linear_propagate(acc, dt, grid) +
              (linear_propagate(source[static_cast<size_t>(m - 1)], dt, grid) +
               source[static_cast<size_t>(m)]) * (0.5 * dt);
        out.push_back(acc);
    }
    return out;
}

namespace {

void check_finite(const State& s, int step) {
    if (!s.u.allFinite() || !s.v.allFinite())
        throw IntegrationError("integration produced nonfinite values", step);
}

} // namespace

Trajectory integrate(const State& u0, const WaveSystem& system, const TimeGrid& time_grid) {
    const SpectralGrid& g = system.grid;
    std::vector<State> states;
    states.reserve(static_cast<size_t>(time_grid.M + 1));
    states.push_back(u0);
    const double dt = time_grid.dt();
    State cur = u0;
    for (int m = 1; m <= time_grid.M; ++m) {
        cur = linear_propagate(cur, 0.5 * dt, g);
        // F leaves the position untouched, so the kick is the exact nonlinear subflow.
        cur.v += dt * apply_F(cur, system).v;
        cur = linear_propagate(cur, 0.5 * dt, g);
        check_finite(cur, m);
        states.push_back(cur);
    }
    return Trajectory(time_grid, std::move(states));
}

Trajectory integrate_mild(const State& u0, const WaveSystem& system, const TimeGrid& time_grid,
                          double tol, int max_iter) {
    const SpectralGrid& g = system.grid;
    const int M = time_grid.M;
    std::vector<State> lin;
    lin.reserve(static_cast<size_t>(M + 1));
    for (int m = 0; m <= M; ++m) lin.push_back(linear_propagate(u0, time_grid.node(m), g));

    std::vector<State> cur = lin;
    double scale = 0.0;
    for (const State& s : lin) scale = std::max(scale, norm_x_sigma(s, g, 0.0));
    for (int it = 0; it < max_iter; ++it) {
        std::vector<State> src;
        src.reserve(cur.size());
        for (const State& s : cur) src.push_back(apply_F(s, system));
        std::vector<State> duh = duhamel_all(src, g, time_grid);
        double diff = 0.0;
        for (int m = 0; m <= M; ++m) {
            State next = lin[static_cast<size_t>(m)] + duh[static_cast<size_t>(m)];
            check_finite(next, m);
            diff = std::max(diff, norm_x_sigma(next - cur[static_cast<size_t>(m)], g, 0.0));
            cur[static_cast<size_t>(m)] = next;
        }
        if (diff <= tol * (1.0 + scale)) return Trajectory(time_grid, std::move(cur));
    }
    throw IntegrationError("integrate_mild: Picard iteration did not converge", M);
}

double energy(const State& state, const WaveSystem& system) {
    const SpectralGrid& g = system.grid;
    double e = 0.5 * inner_x_sigma(state, state, g, 0.0);
    if (!system.f.is_zero()) {
        const Eigen::VectorXd uphys = g.to_physical(state.u);
        double pot = 0.0;
        for (int q = 0; q < uphys.size(); ++q)
            pot += system.chi_tilde(q) * system.f.primitive(uphys(q));
        e += pot * g.quad_weight();
    }
    return e;
}

} // namespace waveobs
