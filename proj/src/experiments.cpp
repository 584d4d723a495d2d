#include "waveobs/experiments.hpp"

#include "waveobs/observability.hpp"

#include <cmath>
#include <limits>

namespace waveobs {

double ExperimentResult::scalar(const std::string& key) const {
    for (const auto& [k, v] : scalars)
        if (k == key) return v;
    throw std::out_of_range("ExperimentResult: no scalar named " + key);
}

ExperimentResult nonlinearity_gain(const WaveSystem& system, double sigma, double epsilon,
                                   double R0, int samples, std::uint64_t seed) {
    if (samples < 10) throw std::invalid_argument("nonlinearity_gain: need samples >= 10");
    const SpectralGrid& grid = system.grid;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    double max_norm = 0.0, max_lip = 0.0;
    std::vector<double> norms;
    norms.reserve(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const State a = random_state_in_ball(grid, rng, sigma, 4.0 * R0 * unif(rng));
        const State b = random_state_in_ball(grid, rng, sigma, 4.0 * R0 * unif(rng));
        const double na = norm_x_sigma(apply_F(a, system), grid, sigma + epsilon);
        norms.push_back(na);
        max_norm = std::max(max_norm, na);
        const double den = norm_x_sigma(a - b, grid, sigma);
        if (den > 0.0) {
            const double num =
                norm_x_sigma(apply_F(a, system) - apply_F(b, system), grid, sigma + epsilon);
            max_lip = std::max(max_lip, num / den);
        }
    }

    ExperimentResult res;
    res.name = "nonlinearity_gain";
    res.add("sigma", sigma);
    res.add("epsilon", epsilon);
    res.add("R0", R0);
    res.add("samples", samples);
    res.add("max_F_norm", max_norm);
    res.add("max_lipschitz", max_lip);
    res.series.emplace_back("F_norms", std::move(norms));
    res.pass = std::isfinite(max_norm) && std::isfinite(max_lip);
    return res;
}

ExperimentResult regularity_propagation(const State& u0, const WaveSystem& system,
                                        const TimeGrid& time_grid, double sigma, double epsilon,
                                        const BumpFunction& bump) {
    const SpectralGrid& grid = system.grid;
    const double se = sigma + epsilon;

    const Trajectory traj = integrate(u0, system, time_grid);

    std::vector<State> src;
    src.reserve(traj.states.size());
    for (const State& s : traj.states) src.push_back(apply_F(s, system));
    const std::vector<State> duh = duhamel_all(src, grid, time_grid);

    double measured = 0.0, duh_sup = 0.0;
    std::vector<State> lin;
    lin.reserve(traj.states.size());
    for (size_t m = 0; m < traj.states.size(); ++m) {
        measured = std::max(measured, norm_x_sigma(traj.states[m], grid, se));
        duh_sup = std::max(duh_sup, norm_x_sigma(duh[m], grid, se));
        lin.push_back(traj.states[m] - duh[m]);
    }

    const Gramian g_se = assemble_gramian(grid, bump, time_grid, se, 1, grid.N());
    const ObservationSignal c_lin = observe_trajectory(lin, bump, grid, time_grid);
    const double rhs = g_se.cobs() * signal_l2_norm(c_lin, grid, se) + duh_sup;

    ExperimentResult res;
    res.name = "regularity_propagation";
    res.add("sigma", sigma);
    res.add("epsilon", epsilon);
    res.add("measured_sup", measured);
    res.add("estimate_rhs", rhs);
    res.add("isometry_ratio", measured / norm_x_sigma(u0, grid, se));
    res.add("cobs_sigma_eps", g_se.cobs());
    res.pass = measured <= 1.05 * rhs;
    return res;
}

ExperimentResult nonlinear_obs_ratio(const WaveSystem& system, const BumpFunction& bump,
                                     const TimeGrid& time_grid, double R0, int samples,
                                     std::uint64_t seed, const ObservationWindow* window) {
    const SpectralGrid& grid = system.grid;
    // defocusing precondition s f(s) >= 0, probed on a sample of amplitudes
    for (int i = -100; i <= 100; ++i) {
        const double s = 3.0 * R0 * i / 100.0;
        if (s * system.f(s) < -1e-12)
            throw std::invalid_argument("nonlinear_obs_ratio: nonlinearity is not defocusing");
    }
    bool gcc_ok = true;
    if (window != nullptr) gcc_ok = time_grid.T > gcc_time(*window, grid.L());

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> ratios;
    ratios.reserve(static_cast<size_t>(samples));
    double min_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        const double radius = R0 * (0.25 + 0.75 * unif(rng));
        const State u0 = random_state_in_ball(grid, rng, 0.0, radius);
        const Trajectory traj = integrate(u0, system, time_grid);
        double obs = 0.0;
        for (int m = 0; m <= time_grid.M; ++m) {
            const Eigen::VectorXd vphys = grid.to_physical(traj.at(m).v);
            obs += time_grid.weight(m) * grid.quad_weight() *
                   (bump.samples.array() * vphys.array()).square().sum();
        }
        const double ratio = obs / (radius * radius);
        ratios.push_back(ratio);
        min_ratio = std::min(min_ratio, ratio);
    }

    ExperimentResult res;
    res.name = "nonlinear_obs_ratio";
    res.add("R0", R0);
    res.add("samples", samples);
    res.add("min_ratio", min_ratio);
    res.add("gcc_satisfied", gcc_ok ? 1.0 : 0.0);
    res.series.emplace_back("ratios", std::move(ratios));
    res.pass = min_ratio > 1e-3;
    return res;
}

Eigen::VectorXd shoot_equilibrium(const Polynomial& f, const SpectralGrid& grid, double slope_lo,
                                  double slope_hi, double tol) {
    // u'' = f(u), u(0) = 0, u'(0) = s; RK4 with nodes aligned to the
    // collocation grid so no interpolation is needed.
    const int per_cell = 64;
    const int steps = (grid.quad_points() + 1) * per_cell;
    const double h = grid.L() / steps;

    const auto boundary_value = [&](double s, Eigen::VectorXd* record) {
        double u = 0.0, v = s;
        if (record != nullptr) record->setZero(grid.quad_points());
        for (int i = 0; i < steps; ++i) {
            const double k1u = v, k1v = f(u);
            const double k2u = v + 0.5 * h * k1v, k2v = f(u + 0.5 * h * k1u);
            const double k3u = v + 0.5 * h * k2v, k3v = f(u + 0.5 * h * k2u);
            const double k4u = v + h * k3v, k4v = f(u + h * k3u);
            u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
            v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
            if (record != nullptr && (i + 1) % per_cell == 0) {
                const int node = (i + 1) / per_cell;
                if (node >= 1 && node <= grid.quad_points()) (*record)(node - 1) = u;
            }
        }
        return u;
    };

    double flo = boundary_value(slope_lo, nullptr);
    double fhi = boundary_value(slope_hi, nullptr);
    if (flo * fhi > 0.0)
        throw std::invalid_argument("shoot_equilibrium: bracket does not straddle a crossing");
    double lo = slope_lo, hi = slope_hi;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = boundary_value(mid, nullptr);
        if (std::abs(fm) < tol) {
            Eigen::VectorXd out;
            boundary_value(mid, &out);
            return out;
        }
        if (flo * fm <= 0.0) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    throw std::runtime_error("shoot_equilibrium: bisection failed to reach tolerance");
}

ExperimentResult end_to_end_reconstruction(const EndToEndSetup& setup) {
    SpectralGrid grid(setup.L, setup.N, 0, 0.0);
    const TimeGrid tg(setup.T, setup.M);

    const ObservationWindow window({setup.window}, setup.plateau_margin, setup.L);
    const BumpFunction bump = BumpFunction::from_window(window, grid);

    // chi = 1 on the support of b (intervals enlarged by the ramp width), so
    // chi~ = 1 - chi kills the observed region entirely.
    std::vector<std::pair<double, double>> enlarged;
    for (auto [a, b] : window.intervals)
        enlarged.emplace_back(std::max(a - setup.plateau_margin, 1e-9 * setup.L),
                              std::min(b + setup.plateau_margin, setup.L * (1.0 - 1e-9)));
    const ObservationWindow chi_window(enlarged, setup.plateau_margin, setup.L);
    const Eigen::VectorXd chi = BumpFunction::from_window(chi_window, grid).samples;
    const Eigen::VectorXd chi_tilde = (1.0 - chi.array()).matrix();

    const WaveSystem system(grid, setup.f, chi_tilde);

    Eigen::VectorXd u_phys;
    if (setup.trivial_equilibrium) {
        u_phys = Eigen::VectorXd::Zero(grid.quad_points());
    } else {
        u_phys = shoot_equilibrium(setup.f, grid, setup.shoot_lo, setup.shoot_hi);
    }

    // Windowed stationary variable and sources. H2 is the exact discrete
    // residual, so the constant-in-time state solves the truncated system
    // identically; it coincides with (0, -[Delta,chi]u - beta chi u) up to
    // spectral truncation.
    const State u_z(grid.to_coeffs((chi_tilde.array() * u_phys.array()).matrix()),
                    Eigen::VectorXd::Zero(grid.N()));
    const State h1(grid.to_coeffs((chi.array() * u_phys.array()).matrix()),
                   Eigen::VectorXd::Zero(grid.N()));

    State a_uz = State::zero(grid.N());
    a_uz.u = u_z.v;
    a_uz.v = -((grid.eigenvalues().array() + grid.beta()) * u_z.u.array()).matrix();
    const State h2 = (a_uz + apply_F(u_z + h1, system)) * (-1.0);

    const auto constant_traj = [&](const State& s) {
        Trajectory tr = Trajectory::zero(tg, grid.N());
        for (State& st : tr.states) st = s;
        return tr;
    };

    const Trajectory V = constant_traj(project_low(u_z, setup.n));
    const Trajectory W_true = constant_traj(project_high(u_z, setup.n));
    const Trajectory H1 = constant_traj(h1);
    const Trajectory H2 = constant_traj(h2);

    const Gramian gram =
        assemble_gramian(grid, bump, tg, setup.sigma, setup.n + 1, grid.N());

    ReconstructionConfig config{
        setup.n, setup.sigma, setup.epsilon,
        std::max(1.0, 2.0 * norm_x_sigma(u_z, grid, setup.sigma)),
        0.0, setup.fp_tol, setup.max_iter, 0.0};
    config.eta = ReconstructionConfig::default_eta(config.R0, gram.cobs());
    config.lipschitz_c = estimate_lipschitz(system, setup.sigma, setup.epsilon, config.R0, 200, 99);

    const ReconstructionResult rec = reconstruct_high(V, H1, H2, system, config, gram);
    if (!rec.report.converged)
        throw FixedPointError("end_to_end_reconstruction: fixed point failed: " +
                              rec.report.message);

    double err = 0.0, scale = 0.0;
    for (int m = 0; m <= tg.M; ++m) {
        err = std::max(err,
                       norm_x_sigma(rec.trajectory.at(m) - W_true.at(m), grid, setup.sigma));
        scale = std::max(scale, norm_x_sigma(W_true.at(m), grid, setup.sigma));
    }
    const double rel = setup.trivial_equilibrium ? err : err / scale;

    ExperimentResult res;
    res.name = "end_to_end_reconstruction";
    res.add("n", setup.n);
    res.add("N", setup.N);
    res.add("M", setup.M);
    res.add("sup_rel_error", rel);
    res.add("equilibrium_norm", norm_x_sigma(u_z, grid, setup.sigma));
    res.add("fp_iterations", rec.report.iterations);
    res.add("fp_converged", rec.report.converged ? 1.0 : 0.0);
    res.add("contraction_estimate", rec.report.contraction_estimate);
    res.add("threshold_bound", rec.report.threshold_bound);
    res.pass = rel < setup.verdict_tol;
    return res;
}

} // namespace waveobs
