#include "waveobs/reconstruction.hpp"

#include "waveobs/smoothing.hpp"

#include <cmath>
#include <limits>

namespace waveobs {

namespace {

void check_compat(const SpectralGrid& grid, const ReconstructionConfig& config,
                  const Gramian& gramian, const TimeGrid& tg) {
    if (config.n < 1 || config.n >= grid.N())
        throw std::invalid_argument("reconstruction: cutoff n out of range");
    if (gramian.lo != config.n + 1 || gramian.hi != grid.N())
        throw std::invalid_argument("reconstruction: Gramian subspace does not match cutoff n");
    if (gramian.sigma != config.sigma)
        throw std::invalid_argument("reconstruction: Gramian sigma mismatch");
    if (gramian.time_grid.M != tg.M || gramian.time_grid.T != tg.T)
        throw std::invalid_argument("reconstruction: Gramian time grid mismatch");
}

double sup_norm(const Trajectory& tr, const SpectralGrid& grid, double sigma) {
    double s = 0.0;
    for (const State& st : tr.states) s = std::max(s, norm_x_sigma(st, grid, sigma));
    return s;
}

double sup_dist(const Trajectory& a, const Trajectory& b, const SpectralGrid& grid, double sigma) {
    double s = 0.0;
    for (size_t m = 0; m < a.states.size(); ++m)
        s = std::max(s, norm_x_sigma(a.states[m] - b.states[m], grid, sigma));
    return s;
}

} // namespace

Trajectory linear_reconstruct(const ObservationSignal& G, const std::vector<State>& H,
                              const SpectralGrid& grid, const ReconstructionConfig& config,
                              const Gramian& gramian) {
    const TimeGrid tg = G.time_grid;
    check_compat(grid, config, gramian, tg);
    if (H.size() != static_cast<size_t>(tg.M + 1))
        throw std::invalid_argument("linear_reconstruct: source length mismatch");

    std::vector<State> qnh;
    qnh.reserve(H.size());
    for (const State& s : H) qnh.push_back(project_high(s, config.n));

    const std::vector<State> duh = duhamel_all(qnh, grid, tg);

    const BumpFunction bump{gramian.bump_samples};
    std::vector<State> resid;
    resid.reserve(duh.size());
    for (int m = 0; m <= tg.M; ++m)
        resid.push_back(G.values[static_cast<size_t>(m)] -
                        observe(duh[static_cast<size_t>(m)], bump, grid));
    const ObservationSignal adjusted(tg, std::move(resid));

    const State w0 = pseudo_inverse_apply(gramian, adjusted, grid, tg, config.sigma);

    std::vector<State> out;
    out.reserve(duh.size());
    for (int m = 0; m <= tg.M; ++m)
        out.push_back(linear_propagate(w0, tg.node(m), grid) + duh[static_cast<size_t>(m)]);
    return Trajectory(tg, std::move(out));
}

Trajectory phi_step(const Trajectory& W, const Trajectory& V, const Trajectory& H1,
                    const Trajectory& H2, const ObservationSignal& G, const WaveSystem& system,
                    const ReconstructionConfig& config, const Gramian& gramian) {
    const SpectralGrid& grid = system.grid;
    const TimeGrid tg = G.time_grid;
    std::vector<State> src;
    src.reserve(W.states.size());
    for (int m = 0; m <= tg.M; ++m) {
        const State arg = W.at(m) + V.at(m) + H1.at(m);
        if (norm_x_sigma(arg, grid, config.sigma) > 4.0 * config.R0)
            throw BallViolationError("phi_step: argument left the 4 R0 ball of X^sigma");
        src.push_back(apply_F(arg, system) + H2.at(m));
    }
    return linear_reconstruct(G, src, grid, config, gramian);
}

namespace {

double threshold_bound_value(const ReconstructionConfig& config, const SpectralGrid& grid,
                             double T) {
    if (config.lipschitz_c <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    const double lam_next = grid.eigenvalue(config.n + 1);
    return config.lipschitz_c * T / std::pow(1.0 + lam_next, config.epsilon);
}

} // namespace

ReconstructionResult solve_fixed_point_from(const Trajectory& W_init, const Trajectory& V,
                                            const Trajectory& H1, const Trajectory& H2,
                                            const ObservationSignal& G, const WaveSystem& system,
                                            const ReconstructionConfig& config,
                                            const Gramian& gramian) {
    const SpectralGrid& grid = system.grid;
    FixedPointReport rep;
    rep.threshold_bound = threshold_bound_value(config, grid, G.time_grid.T);

    Trajectory W = W_init;
    int growth_streak = 0;
    double prev_res = std::numeric_limits<double>::infinity();
    try {
        for (int it = 1; it <= config.max_iter; ++it) {
            Trajectory W_next = phi_step(W, V, H1, H2, G, system, config, gramian);
            const double res = sup_dist(W_next, W, grid, config.sigma);
            rep.residuals.push_back(res);
            rep.iterations = it;
            W = std::move(W_next);
            const double scale = 1.0 + sup_norm(W, grid, config.sigma);
            if (res <= config.fp_tol * scale) {
                rep.converged = true;
                rep.status = FixedPointStatus::converged;
                break;
            }
            growth_streak = res > prev_res ? growth_streak + 1 : 0;
            prev_res = res;
            if (growth_streak >= 5) {
                rep.status = FixedPointStatus::diverged;
                rep.message = "residual grew over 5 consecutive iterations";
                break;
            }
        }
    } catch (const BallViolationError& e) {
        rep.status = FixedPointStatus::ball_violation;
        rep.message = e.what();
    }
    if (!rep.converged && rep.status == FixedPointStatus::max_iter_exceeded)
        rep.message = "max_iter exceeded";

    if (rep.residuals.size() >= 2) {
        double log_sum = 0.0;
        int cnt = 0;
        for (size_t k = 1; k < rep.residuals.size(); ++k) {
            if (rep.residuals[k] > 0.0 && rep.residuals[k - 1] > 0.0) {
                log_sum += std::log(rep.residuals[k] / rep.residuals[k - 1]);
                ++cnt;
            }
        }
        rep.contraction_estimate = cnt > 0 ? std::exp(log_sum / cnt) : 0.0;
    }
    return ReconstructionResult{std::move(W), std::move(rep)};
}

ReconstructionResult solve_fixed_point(const Trajectory& V, const Trajectory& H1,
                                       const Trajectory& H2, const ObservationSignal& G,
                                       const WaveSystem& system, const ReconstructionConfig& config,
                                       const Gramian& gramian) {
    return solve_fixed_point_from(Trajectory::zero(G.time_grid, system.grid.N()), V, H1, H2, G,
                                  system, config, gramian);
}

ReconstructionResult reconstruct_high(const Trajectory& V, const Trajectory& H1,
                                      const Trajectory& H2, const WaveSystem& system,
                                      const ReconstructionConfig& config, const Gramian& gramian) {
    const SpectralGrid& grid = system.grid;
    const TimeGrid tg = V.time_grid;
    const BumpFunction bump{gramian.bump_samples};
    const ObservationSignal cv = observe_trajectory(V.states, bump, grid, tg);
    const double ncv = signal_l2_norm(cv, grid, config.sigma);
    const double scale = -cutoff_chi(ncv / config.eta);

    std::vector<State> gvals;
    gvals.reserve(cv.values.size());
    for (const State& s : cv.values) gvals.push_back(s * scale);
    const ObservationSignal G(tg, std::move(gvals));

    return solve_fixed_point(V, H1, H2, G, system, config, gramian);
}

DeterminingThreshold determining_threshold(double lipschitz_c, double T, double epsilon,
                                           const SpectralGrid& grid) {
    if (lipschitz_c <= 0.0)
        throw std::invalid_argument("determining_threshold: lipschitz constant must be positive");
    for (int n = 0; n < grid.N(); ++n) {
        const double factor = lipschitz_c * T * std::pow(1.0 + grid.eigenvalue(n + 1), -epsilon);
        if (factor < 1.0) return DeterminingThreshold{n, false};
    }
    return DeterminingThreshold{grid.N(), true};
}

double uniqueness_check(const Trajectory& V, const Trajectory& H1, const Trajectory& H2,
                        const ObservationSignal& G, const WaveSystem& system,
                        const ReconstructionConfig& config, const Gramian& gramian, int trials,
                        std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("uniqueness_check: need at least one trial");
    const SpectralGrid& grid = system.grid;
    std::mt19937_64 rng(seed);

    std::vector<Trajectory> fixed_points;
    for (int k = 0; k < trials; ++k) {
        Trajectory w0 = Trajectory::zero(G.time_grid, grid.N());
        if (k > 0) {
            const State s = project_high(
                random_state_in_ball(grid, rng, config.sigma, 0.8 * config.R0), config.n);
            for (State& st : w0.states) st = s;
        }
        ReconstructionResult res =
            solve_fixed_point_from(w0, V, H1, H2, G, system, config, gramian);
        if (!res.report.converged)
            throw FixedPointError("uniqueness_check: trial " + std::to_string(k) +
                                  " failed: " + res.report.message);
        fixed_points.push_back(std::move(res.trajectory));
    }

    double dist = 0.0;
    for (size_t a = 0; a < fixed_points.size(); ++a)
        for (size_t b = a + 1; b < fixed_points.size(); ++b)
            dist = std::max(dist, sup_dist(fixed_points[a], fixed_points[b], grid, config.sigma));
    return dist;
}

double estimate_lipschitz(const WaveSystem& system, double sigma, double epsilon, double R0,
                          int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("estimate_lipschitz: need samples >= 1");
    const SpectralGrid& grid = system.grid;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double sup = 0.0;
    for (int i = 0; i < samples; ++i) {
        const State a = random_state_in_ball(grid, rng, sigma, 3.0 * R0 * unif(rng));
        const State b = random_state_in_ball(grid, rng, sigma, 3.0 * R0 * unif(rng));
        const double den = norm_x_sigma(a - b, grid, sigma);
        if (den == 0.0) continue;
        const double num = norm_x_sigma(apply_F(a, system) - apply_F(b, system), grid,
                                        sigma + epsilon);
        sup = std::max(sup, num / den);
    }
    return sup;
}

State random_state_in_ball(const SpectralGrid& grid, std::mt19937_64& rng, double sigma,
                           double radius, double decay) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    State s = State::zero(grid.N());
    for (int j = 0; j < grid.N(); ++j) {
        const double damp = std::pow(j + 1.0, -decay);
        s.u(j) = gauss(rng) * damp;
        s.v(j) = gauss(rng) * damp;
    }
    const double nrm = norm_x_sigma(s, grid, sigma);
    if (nrm > 0.0 && radius > 0.0) {
        s.u *= radius / nrm;
        s.v *= radius / nrm;
    } else {
        s.u.setZero();
        s.v.setZero();
    }
    return s;
}

} // namespace waveobs
