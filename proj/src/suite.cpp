#include "waveobs/suite.hpp"

#include "waveobs/experiments.hpp"
#include "waveobs/plate.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

namespace waveobs {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(6);
    ss << v;
    return ss.str();
}

// 1. Exactness of the linear group against the per-mode closed form in X^1.
CriterionResult criterion_semigroup() {
    const auto t0 = Clock::now();
    SpectralGrid grid(M_PI, 32);
    double worst = 0.0;
    for (double T : {1.0, 2.0 * M_PI}) {
        for (int j = 1; j <= 32; ++j) {
            const double w = grid.frequency(j);
            const State got = linear_propagate(State::mode(32, j), T, grid);
            const State want =
                State::mode(32, j, std::cos(w * T), -w * std::sin(w * T));
            worst = std::max(worst, norm_x_sigma(got - want, grid, 1.0));
        }
    }
    return {1, "semigroup_exactness", "max X^1 deviation " + fmt(worst), worst, worst < 1e-12,
            elapsed(t0)};
}

// 2. Full-observation Gramian at sigma = 0, T = 2 pi: every diagonal entry pi.
CriterionResult criterion_gramian_closed_form() {
    const auto t0 = Clock::now();
    SpectralGrid grid(M_PI, 32);
    const Gramian g = assemble_gramian(grid, BumpFunction::ones(grid), TimeGrid(2.0 * M_PI, 4096),
                                       0.0, 1, 32);
    double diag_err = 0.0, offdiag = 0.0;
    for (int a = 0; a < g.dim(); ++a) {
        diag_err = std::max(diag_err, std::abs(g.matrix(a, a) - M_PI));
        for (int b = 0; b < g.dim(); ++b)
            if (a != b) offdiag = std::max(offdiag, std::abs(g.matrix(a, b)));
    }
    const double worst = std::max(diag_err, offdiag);
    return {2, "gramian_closed_form",
            "diag-pi " + fmt(diag_err) + ", offdiag " + fmt(offdiag), worst, worst < 1e-8,
            elapsed(t0)};
}

// 3. lambda_min of the high-frequency Gramian uniform across n in {4,8,16,32}.
CriterionResult criterion_uniform_in_n() {
    const auto t0 = Clock::now();
    SpectralGrid grid(M_PI, 64);
    const ObservationWindow window({{0.5, 1.5}}, 0.25, M_PI);
    const BumpFunction bump = BumpFunction::from_window(window, grid);
    const TimeGrid tg(7.0, 4096);
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    bool positive = true;
    for (int n : {4, 8, 16, 32}) {
        const Gramian g = assemble_gramian(grid, bump, tg, 0.0, n + 1, 64);
        positive = positive && g.lambda_min > 0.0;
        lo = std::min(lo, g.lambda_min);
        hi = std::max(hi, g.lambda_min);
    }
    const double ratio = hi / lo;
    return {3, "uniform_in_n_observability",
            "lambda_min in [" + fmt(lo) + ", " + fmt(hi) + "], ratio " + fmt(ratio), ratio,
            positive && ratio < 1.2, elapsed(t0)};
}

// 4. Linear reconstruction round trip with the same quadrature both ways.
CriterionResult criterion_linear_roundtrip(std::uint64_t seed) {
    const auto t0 = Clock::now();
    SpectralGrid grid(M_PI, 64);
    const int n = 8;
    const TimeGrid tg(7.0, 2048);
    const ObservationWindow window({{0.5, 1.5}}, 0.25, M_PI);
    const BumpFunction bump = BumpFunction::from_window(window, grid);
    const Gramian gram = assemble_gramian(grid, bump, tg, 0.0, n + 1, 64);

    std::mt19937_64 rng(seed);
    const State w0 = project_high(random_state_in_ball(grid, rng, 0.0, 1.0), n);
    std::vector<State> H;
    H.reserve(static_cast<size_t>(tg.M + 1));
    for (int m = 0; m <= tg.M; ++m)
        H.push_back(random_state_in_ball(grid, rng, 0.0, 0.3));

    std::vector<State> qnh;
    qnh.reserve(H.size());
    for (const State& s : H) qnh.push_back(project_high(s, n));
    const std::vector<State> duh = duhamel_all(qnh, grid, tg);

    std::vector<State> truth;
    truth.reserve(duh.size());
    for (int m = 0; m <= tg.M; ++m)
        truth.push_back(linear_propagate(w0, tg.node(m), grid) + duh[static_cast<size_t>(m)]);
    const ObservationSignal G = observe_trajectory(truth, bump, grid, tg);

    ReconstructionConfig config{n, 0.0, 1.0, 10.0, 1.0, 1e-10, 200, 0.0};
    const Trajectory rec = linear_reconstruct(G, H, grid, config, gram);

    double err = 0.0, scale = 0.0;
    for (int m = 0; m <= tg.M; ++m) {
        err = std::max(err, norm_x_sigma(rec.at(m) - truth[static_cast<size_t>(m)], grid, 0.0));
        scale = std::max(scale, norm_x_sigma(truth[static_cast<size_t>(m)], grid, 0.0));
    }
    const double rel = err / scale;
    return {4, "linear_reconstruction_roundtrip", "sup-t relative error " + fmt(rel), rel,
            rel < 1e-8, elapsed(t0)};
}

struct FixedPointSetting {
    SpectralGrid grid{M_PI, 64};
    TimeGrid tg{3.5, 2048};
    int n = 8;
    double sigma = 0.6;
    double epsilon = 1.0;
    double R0 = 0.5;
};

struct FixedPointData {
    WaveSystem system;
    Gramian gram;
    ReconstructionConfig config;
    Trajectory V;
    Trajectory W_true;
    Trajectory H1;
    Trajectory H2;
    ObservationSignal G;
};

// Shared setup for criteria 5 and 6: a discrete mild solution supplies the
// forward truth, its high-frequency observation the data G.
FixedPointData make_fixed_point_data(const FixedPointSetting& s, std::uint64_t seed) {
    const ObservationWindow window({{0.5, 1.5}}, 0.25, M_PI);
    const BumpFunction bump = BumpFunction::from_window(window, s.grid);
    WaveSystem system(s.grid, Polynomial::cubic());
    Gramian gram = assemble_gramian(s.grid, bump, s.tg, s.sigma, s.n + 1, s.grid.N());

    std::mt19937_64 rng(seed);
    const State u0 = random_state_in_ball(s.grid, rng, s.sigma, 0.8 * s.R0);
    const Trajectory truth = integrate_mild(u0, system, s.tg);

    Trajectory V = Trajectory::zero(s.tg, s.grid.N());
    Trajectory W_true = Trajectory::zero(s.tg, s.grid.N());
    for (int m = 0; m <= s.tg.M; ++m) {
        V.at(m) = project_low(truth.at(m), s.n);
        W_true.at(m) = project_high(truth.at(m), s.n);
    }
    const ObservationSignal G = observe_trajectory(W_true.states, bump, s.grid, s.tg);

    ReconstructionConfig config{s.n, s.sigma, s.epsilon, s.R0, 0.0, 1e-10, 200, 0.0};
    config.eta = ReconstructionConfig::default_eta(s.R0, gram.cobs());
    config.lipschitz_c = estimate_lipschitz(system, s.sigma, s.epsilon, s.R0, 200, seed + 1);

    const int N = s.grid.N();
    return FixedPointData{std::move(system),          std::move(gram),
                          config,                     std::move(V),
                          std::move(W_true),          Trajectory::zero(s.tg, N),
                          Trajectory::zero(s.tg, N),  G};
}

// 5. Contraction of the Picard iteration and agreement with the forward truth.
CriterionResult criterion_fixed_point(std::uint64_t seed) {
    const auto t0 = Clock::now();
    FixedPointSetting s;
    FixedPointData d = make_fixed_point_data(s, seed);

    const ReconstructionResult res =
        solve_fixed_point(d.V, d.H1, d.H2, d.G, d.system, d.config, d.gram);

    double err = 0.0, scale = 0.0;
    for (int m = 0; m <= s.tg.M; ++m) {
        err = std::max(err, norm_x_sigma(res.trajectory.at(m) - d.W_true.at(m), s.grid, s.sigma));
        scale = std::max(scale, norm_x_sigma(d.W_true.at(m), s.grid, s.sigma));
    }
    const double rel = err / scale;
    const bool pass = res.report.converged && res.report.iterations <= 50 &&
                      res.report.contraction_estimate <= 1.2 * res.report.threshold_bound &&
                      rel < 1e-6;
    return {5, "fixed_point_contraction",
            "iters " + std::to_string(res.report.iterations) + ", ratio " +
                fmt(res.report.contraction_estimate) + " vs bound " +
                fmt(res.report.threshold_bound) + ", rel err " + fmt(rel),
            rel, pass, elapsed(t0)};
}

// 6. Determining modes: Banach uniqueness across initial guesses, plus the
// closed-form threshold enumeration.
CriterionResult criterion_determining_modes(std::uint64_t seed) {
    const auto t0 = Clock::now();
    FixedPointSetting s;
    FixedPointData d = make_fixed_point_data(s, seed);

    const double dist =
        uniqueness_check(d.V, d.H1, d.H2, d.G, d.system, d.config, d.gram, 5, seed + 2);
    const DeterminingThreshold thr = determining_threshold(10.0, 1.0, 1.0, s.grid);
    const bool pass = dist < 1e-9 && !thr.overflow && thr.n == 3;
    return {6, "determining_modes",
            "pairwise distance " + fmt(dist) + ", threshold n = " + std::to_string(thr.n), dist,
            pass, elapsed(t0)};
}

// 7. Ray-traced control time against the closed form 2 (pi - 1.5).
CriterionResult criterion_gcc() {
    const auto t0 = Clock::now();
    const ObservationWindow window({{0.5, 1.5}}, 0.25, M_PI);
    const double got = gcc_time(window, M_PI);
    const double want = 2.0 * (M_PI - 1.5);
    const double err = std::abs(got - want);
    return {7, "gcc_time", "ray-traced " + fmt(got) + " vs closed form " + fmt(want), err,
            err < 1e-3, elapsed(t0)};
}

// 8. Plate machinery: splitting identity, interaction envelope, positivity
// transfer and the b = 1 cross-check.
CriterionResult criterion_plate(std::uint64_t seed) {
    const auto t0 = Clock::now();
    std::ostringstream detail;
    bool pass = true;

    SpectralGrid grid16(M_PI, 16);
    std::mt19937_64 rng(seed);
    double split_err = 0.0;
    for (int i = 0; i < 20; ++i) {
        const State z = random_state_in_ball(grid16, rng, 0.0, 1.0, 1.0);
        const State back = unsplit_real(split(z, grid16), grid16);
        split_err = std::max(split_err, (back.u - z.u).cwiseAbs().maxCoeff());
        split_err = std::max(split_err, (back.v - z.v).cwiseAbs().maxCoeff());
    }
    pass = pass && split_err < 1e-13;
    detail << "split roundtrip " << fmt(split_err);

    const CutoffProfile profile(10.2, 10.8, 21.0, 65536);
    double worst_ratio = 0.0;
    for (int j = 1; j <= 16; ++j) {
        for (int k = j; k <= 16; ++k) {
            if (j == 1 && k == 1) continue;
            const InteractionBound ib = interaction_bound(profile, j, k, 4, grid16);
            worst_ratio = std::max(worst_ratio, ib.measured / ib.bound);
        }
    }
    pass = pass && worst_ratio <= 1.0;
    detail << "; envelope worst ratio " << fmt(worst_ratio);

    SpectralGrid grid32(M_PI, 32);
    const ObservationWindow window({{0.5, 1.5}}, 0.25, M_PI);
    const BumpFunction bump = BumpFunction::from_window(window, grid32);
    const TimeGrid tg2(2.0, 16384);
    const Gramian schr = schrodinger_gramian(grid32, bump, TimeGrid(1.5, 8192));
    const double ucp = eigen_ucp_check(bump, grid32);
    const Gramian plate = plate_gramian(grid32, bump, tg2);
    if (schr.lambda_min > 0.0 && ucp > 0.0) pass = pass && plate.lambda_min > 0.0;
    detail << "; schr " << fmt(schr.lambda_min) << ", ucp " << fmt(ucp) << ", plate "
           << fmt(plate.lambda_min);

    const BumpFunction full = BumpFunction::ones(grid32);
    const CutoffProfile prof2(0.25, 1.75, 2.0, 16384);
    const Gramian schr_full = schrodinger_gramian(grid32, full, TimeGrid(1.5, 8192));
    const TransferBound tb =
        plate_weak_observability_constant(grid32, full, prof2, tg2, schr_full.lambda_min);
    const double factor = std::max(tb.c / tb.direct_lambda_min, tb.direct_lambda_min / tb.c);
    pass = pass && factor < 4.0;
    detail << "; transfer c " << fmt(tb.c) << " vs direct " << fmt(tb.direct_lambda_min);

    return {8, "plate_splitting_and_transfer", detail.str(), worst_ratio, pass,
            elapsed(t0)};
}

// 9. Monte-Carlo observability floor plus the linear closed-form ratio pi.
CriterionResult criterion_obs_ratio(std::uint64_t seed) {
    const auto t0 = Clock::now();
    SpectralGrid grid(M_PI, 64);
    const ObservationWindow window({{0.5, 1.5}}, 0.25, M_PI);
    const BumpFunction bump = BumpFunction::from_window(window, grid);
    const WaveSystem cubic(grid, Polynomial::cubic());
    const ExperimentResult nl = nonlinear_obs_ratio(cubic, bump, TimeGrid(7.0, 2048), 1.0, 200,
                                                    seed, &window);

    const WaveSystem linear(grid, Polynomial::zero());
    const ExperimentResult lin = nonlinear_obs_ratio(linear, BumpFunction::ones(grid),
                                                     TimeGrid(2.0 * M_PI, 4096), 1.0, 200, seed);
    double pi_dev = 0.0;
    for (const auto& [key, series] : lin.series)
        if (key == "ratios")
            for (double r : series) pi_dev = std::max(pi_dev, std::abs(r - M_PI));

    const double min_ratio = nl.scalar("min_ratio");
    const bool pass = min_ratio > 1e-3 && pi_dev < 1e-6;
    return {9, "nonlinear_observability_floor",
            "min ratio " + fmt(min_ratio) + ", linear pi deviation " + fmt(pi_dev), min_ratio,
            pass, elapsed(t0)};
}

} // namespace

std::vector<CriterionResult> run_acceptance_criteria(std::uint64_t seed) {
    std::vector<CriterionResult> out;
    out.push_back(criterion_semigroup());
    out.push_back(criterion_gramian_closed_form());
    out.push_back(criterion_uniform_in_n());
    out.push_back(criterion_linear_roundtrip(seed));
    out.push_back(criterion_fixed_point(seed));
    out.push_back(criterion_determining_modes(seed));
    out.push_back(criterion_gcc());
    out.push_back(criterion_plate(seed));
    out.push_back(criterion_obs_ratio(seed));
    return out;
}

} // namespace waveobs
