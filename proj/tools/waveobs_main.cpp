#include "waveobs/csv.hpp"
#include "waveobs/experiments.hpp"
#include "waveobs/plate.hpp"
#include "waveobs/run_config.hpp"
#include "waveobs/suite.hpp"

#include <CLI11.hpp>
#include <Eigen/Core>

#include <cstdlib>
#include <iostream>
#include <optional>

namespace {

using namespace waveobs;

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;
constexpr int kExitNumerical = 3;

SpectralGrid grid_from(const RunConfig& cfg) {
    return SpectralGrid(cfg.get_double("L", M_PI), cfg.get_int("N", 64),
                        cfg.get_int("quad_points", 0), cfg.get_double("beta", 0.0));
}

Polynomial poly_from(const RunConfig& cfg) {
    Polynomial f;
    f.coeffs = cfg.get_list("f", {0.0, 0.0, 1.0});
    return f;
}

std::optional<ObservationWindow> window_from(const RunConfig& cfg, double L) {
    if (!cfg.has("omega")) return std::nullopt;
    const std::vector<double> vals = cfg.get_list("omega");
    if (vals.size() % 2 != 0)
        throw ConfigError("config: key 'omega' must list interval endpoints in pairs");
    std::vector<std::pair<double, double>> iv;
    for (size_t i = 0; i + 1 < vals.size(); i += 2) iv.emplace_back(vals[i], vals[i + 1]);
    return ObservationWindow(iv, cfg.get_double("plateau_margin", 0.25), L);
}

BumpFunction bump_from(const RunConfig& cfg, const SpectralGrid& grid) {
    const auto window = window_from(cfg, grid.L());
    return window ? BumpFunction::from_window(*window, grid) : BumpFunction::ones(grid);
}

const std::set<std::string> kCommonKeys = {"L", "N", "quad_points", "beta", "seed", "out"};

std::set<std::string> with_common(std::set<std::string> keys) {
    keys.insert(kCommonKeys.begin(), kCommonKeys.end());
    return keys;
}

int cmd_simulate(const RunConfig& cfg, const std::string& out) {
    cfg.validate_keys(with_common({"M", "T", "f", "u0_radius", "u0_sigma"}));
    const SpectralGrid grid = grid_from(cfg);
    const WaveSystem system(grid, poly_from(cfg));
    const TimeGrid tg(cfg.get_double("T", 1.0), cfg.get_int("M", 1024));
    std::mt19937_64 rng(cfg.get_u64("seed", 1));
    const State u0 = random_state_in_ball(grid, rng, cfg.get_double("u0_sigma", 0.0),
                                          cfg.get_double("u0_radius", 0.5));
    const Trajectory traj = integrate(u0, system, tg);

    CsvWriter csv(out);
    csv.header({"t", "norm_x0", "energy"});
    for (int m = 0; m <= tg.M; ++m)
        csv.row({CsvWriter::format(tg.node(m)),
                 CsvWriter::format(norm_x_sigma(traj.at(m), grid, 0.0)),
                 CsvWriter::format(energy(traj.at(m), system))});
    const double drift = std::abs(energy(traj.at(tg.M), system) - energy(traj.at(0), system));
    std::cout << "simulate: M=" << tg.M << " energy drift " << drift << "\n";
    return kExitPass;
}

int cmd_gramian(const RunConfig& cfg, const std::string& out) {
    cfg.validate_keys(with_common({"M", "T", "sigma", "omega", "plateau_margin", "lo", "hi"}));
    const SpectralGrid grid = grid_from(cfg);
    const BumpFunction bump = bump_from(cfg, grid);
    const TimeGrid tg(cfg.get_double("T", 2.0 * M_PI), cfg.get_int("M", 4096));
    const double sigma = cfg.get_double("sigma", 0.0);
    const int lo = cfg.get_int("lo", 1);
    const int hi = cfg.get_int("hi", grid.N());
    const Gramian g = assemble_gramian(grid, bump, tg, sigma, lo, hi);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.matrix, Eigen::EigenvaluesOnly);
    CsvWriter csv(out);
    csv.header({"index", "diagonal", "eigenvalue"});
    for (int a = 0; a < g.dim(); ++a)
        csv.row({CsvWriter::format(a), CsvWriter::format(g.matrix(a, a)),
                 CsvWriter::format(es.eigenvalues()(a))});
    std::cout << "gramian: modes " << lo << ".." << hi << " sigma=" << sigma
              << " lambda_min=" << g.lambda_min << " lambda_max=" << g.lambda_max
              << (g.observable ? " observable" : " NOT observable") << "\n";
    return g.observable ? kExitPass : kExitFail;
}

int cmd_gcc_time(const RunConfig& cfg, const std::string& out) {
    cfg.validate_keys(with_common({"omega", "plateau_margin", "samples"}));
    const double L = cfg.get_double("L", M_PI);
    const auto window = window_from(cfg, L);
    if (!window) throw ConfigError("config: missing required key 'omega'");
    const double t = gcc_time(*window, L, cfg.get_int("samples", 10000));
    CsvWriter csv(out);
    csv.header({"quantity", "value"});
    csv.row({"gcc_time", CsvWriter::format(t)});
    std::cout << "gcc-time: " << t << "\n";
    return kExitPass;
}

int cmd_reconstruct_linear(const RunConfig& cfg, const std::string& out) {
    cfg.validate_keys(
        with_common({"M", "T", "sigma", "omega", "plateau_margin", "n", "h_radius"}));
    const SpectralGrid grid = grid_from(cfg);
    const BumpFunction bump = bump_from(cfg, grid);
    const TimeGrid tg(cfg.get_double("T", 7.0), cfg.get_int("M", 2048));
    const double sigma = cfg.get_double("sigma", 0.0);
    const int n = cfg.get_int("n", 8);
    const Gramian gram = assemble_gramian(grid, bump, tg, sigma, n + 1, grid.N());

    std::mt19937_64 rng(cfg.get_u64("seed", 1));
    const State w0 = project_high(random_state_in_ball(grid, rng, sigma, 1.0), n);
    const double h_radius = cfg.get_double("h_radius", 0.3);
    std::vector<State> H, qnh, truth;
    for (int m = 0; m <= tg.M; ++m) H.push_back(random_state_in_ball(grid, rng, sigma, h_radius));
    for (const State& s : H) qnh.push_back(project_high(s, n));
    const std::vector<State> duh = duhamel_all(qnh, grid, tg);
    for (int m = 0; m <= tg.M; ++m)
        truth.push_back(linear_propagate(w0, tg.node(m), grid) + duh[static_cast<size_t>(m)]);
    const ObservationSignal G = observe_trajectory(truth, bump, grid, tg);

    ReconstructionConfig config{n, sigma, 1.0, 10.0, 1.0, 1e-10, 200, 0.0};
    const Trajectory rec = linear_reconstruct(G, H, grid, config, gram);
    double err = 0.0, scale = 0.0;
    for (int m = 0; m <= tg.M; ++m) {
        err = std::max(err, norm_x_sigma(rec.at(m) - truth[static_cast<size_t>(m)], grid, sigma));
        scale = std::max(scale, norm_x_sigma(truth[static_cast<size_t>(m)], grid, sigma));
    }
    const double rel = err / scale;

    CsvWriter csv(out);
    csv.header({"quantity", "value"});
    csv.row({"sup_rel_error", CsvWriter::format(rel)});
    csv.row({"lambda_min", CsvWriter::format(gram.lambda_min)});
    csv.row({"cobs", CsvWriter::format(gram.cobs())});
    std::cout << "reconstruct-linear: sup relative error " << rel << "\n";
    return rel < 1e-8 ? kExitPass : kExitFail;
}

struct FixedPointRun {
    ReconstructionResult result;
    double rel_error;
};

FixedPointRun run_fixed_point(const RunConfig& cfg) {
    const SpectralGrid grid = grid_from(cfg);
    const BumpFunction bump = bump_from(cfg, grid);
    const TimeGrid tg(cfg.get_double("T", 3.5), cfg.get_int("M", 2048));
    const double sigma = cfg.get_double("sigma", 0.6);
    const double epsilon = cfg.get_double("epsilon", 1.0);
    const int n = cfg.get_int("n", 8);
    const double R0 = cfg.get_double("R0", 0.5);
    const WaveSystem system(grid, poly_from(cfg));
    const Gramian gram = assemble_gramian(grid, bump, tg, sigma, n + 1, grid.N());

    std::mt19937_64 rng(cfg.get_u64("seed", 1));
    const State u0 = random_state_in_ball(grid, rng, sigma, 0.8 * R0);
    const Trajectory truth = integrate_mild(u0, system, tg);

    Trajectory V = Trajectory::zero(tg, grid.N());
    Trajectory W_true = Trajectory::zero(tg, grid.N());
    for (int m = 0; m <= tg.M; ++m) {
        V.at(m) = project_low(truth.at(m), n);
        W_true.at(m) = project_high(truth.at(m), n);
    }
    const ObservationSignal G = observe_trajectory(W_true.states, bump, grid, tg);

    ReconstructionConfig config{n,
                                sigma,
                                epsilon,
                                R0,
                                0.0,
                                cfg.get_double("fp_tol", 1e-10),
                                cfg.get_int("max_iter", 200),
                                0.0};
    config.eta = cfg.get_double("eta", ReconstructionConfig::default_eta(R0, gram.cobs()));
    config.lipschitz_c = estimate_lipschitz(system, sigma, epsilon, R0,
                                            cfg.get_int("lipschitz_samples", 200),
                                            cfg.get_u64("seed", 1) + 1);

    const Trajectory zero = Trajectory::zero(tg, grid.N());
    ReconstructionResult res = solve_fixed_point(V, zero, zero, G, system, config, gram);

    double err = 0.0, scale = 0.0;
    for (int m = 0; m <= tg.M; ++m) {
        err = std::max(err, norm_x_sigma(res.trajectory.at(m) - W_true.at(m), grid, sigma));
        scale = std::max(scale, norm_x_sigma(W_true.at(m), grid, sigma));
    }
    return FixedPointRun{std::move(res), scale > 0.0 ? err / scale : err};
}

const std::set<std::string> kFixedPointKeys = {
    "M",  "T",   "sigma",  "epsilon",  "omega", "plateau_margin",
    "n",  "R0",  "eta",    "fp_tol",   "max_iter", "f", "lipschitz_samples"};

int cmd_reconstruct_fixed_point(const RunConfig& cfg, const std::string& out) {
    cfg.validate_keys(with_common(kFixedPointKeys));
    const FixedPointRun run = run_fixed_point(cfg);
    const FixedPointReport& rep = run.result.report;

    CsvWriter csv(out);
    csv.header({"iteration", "residual"});
    for (size_t i = 0; i < rep.residuals.size(); ++i)
        csv.row({CsvWriter::format(static_cast<int>(i + 1)),
                 CsvWriter::format(rep.residuals[i])});
    std::cout << "reconstruct-fixed-point: converged=" << rep.converged
              << " iterations=" << rep.iterations << " contraction=" << rep.contraction_estimate
              << " threshold_bound=" << rep.threshold_bound << " rel_error=" << run.rel_error
              << (rep.message.empty() ? "" : " (" + rep.message + ")") << "\n";
    if (!rep.converged) return kExitNumerical;
    return run.rel_error < 1e-6 ? kExitPass : kExitFail;
}

int cmd_determining_modes(const RunConfig& cfg, const std::string& out) {
    auto keys = kFixedPointKeys;
    keys.insert("lipschitz_C");
    keys.insert("threshold_T");
    keys.insert("threshold_epsilon");
    keys.insert("trials");
    cfg.validate_keys(with_common(keys));

    const SpectralGrid grid = grid_from(cfg);
    const DeterminingThreshold thr =
        determining_threshold(cfg.get_double("lipschitz_C", 10.0),
                              cfg.get_double("threshold_T", 1.0),
                              cfg.get_double("threshold_epsilon", 1.0), grid);

    double dist = 0.0;
    const int trials = cfg.get_int("trials", 5);
    if (trials >= 2) {
        const BumpFunction bump = bump_from(cfg, grid);
        const TimeGrid tg(cfg.get_double("T", 3.5), cfg.get_int("M", 2048));
        const double sigma = cfg.get_double("sigma", 0.6);
        const double epsilon = cfg.get_double("epsilon", 1.0);
        const int n = cfg.get_int("n", 8);
        const double R0 = cfg.get_double("R0", 0.5);
        const WaveSystem system(grid, poly_from(cfg));
        const Gramian gram = assemble_gramian(grid, bump, tg, sigma, n + 1, grid.N());
        std::mt19937_64 rng(cfg.get_u64("seed", 1));
        const State u0 = random_state_in_ball(grid, rng, sigma, 0.8 * R0);
        const Trajectory truth = integrate_mild(u0, system, tg);
        Trajectory V = Trajectory::zero(tg, grid.N());
        Trajectory W_true = Trajectory::zero(tg, grid.N());
        for (int m = 0; m <= tg.M; ++m) {
            V.at(m) = project_low(truth.at(m), n);
            W_true.at(m) = project_high(truth.at(m), n);
        }
        const ObservationSignal G = observe_trajectory(W_true.states, bump, grid, tg);
        ReconstructionConfig config{n, sigma, epsilon, R0, 0.0,
                                    cfg.get_double("fp_tol", 1e-12),
                                    cfg.get_int("max_iter", 200), 0.0};
        config.eta = ReconstructionConfig::default_eta(R0, gram.cobs());
        config.lipschitz_c =
            estimate_lipschitz(system, sigma, epsilon, R0, 200, cfg.get_u64("seed", 1) + 1);
        const Trajectory zero = Trajectory::zero(tg, grid.N());
        dist = uniqueness_check(V, zero, zero, G, system, config, gram, trials,
                                cfg.get_u64("seed", 1) + 2);
    }

    CsvWriter csv(out);
    csv.header({"quantity", "value"});
    csv.row({"threshold_n", CsvWriter::format(thr.n)});
    csv.row({"threshold_overflow", CsvWriter::format(thr.overflow ? 1 : 0)});
    csv.row({"trials", CsvWriter::format(trials)});
    csv.row({"max_pairwise_distance", CsvWriter::format(dist)});
    std::cout << "determining-modes: threshold n=" << thr.n
              << (thr.overflow ? " (overflow)" : "") << " max pairwise distance=" << dist << "\n";
    return (trials < 2 || dist < 1e-9) ? kExitPass : kExitFail;
}

int cmd_plate_transfer(const RunConfig& cfg, const std::string& out) {
    cfg.validate_keys(with_common({"M", "T", "omega", "plateau_margin", "T_inner_start",
                                   "T_inner_end", "profile_samples", "profile_T", "N_order",
                                   "jk_max", "schr_M"}));
    const SpectralGrid grid = grid_from(cfg);
    const BumpFunction bump = bump_from(cfg, grid);
    const double T = cfg.get_double("T", 2.0);
    const TimeGrid tg(T, cfg.get_int("M", 16384));
    const double inner_start = cfg.get_double("T_inner_start", 0.25);
    const double inner_end = cfg.get_double("T_inner_end", 0.75 * T);
    const CutoffProfile profile(inner_start, inner_end, cfg.get_double("profile_T", T),
                                cfg.get_int("profile_samples", 16384));

    const double schr_T = inner_end - inner_start;
    const Gramian schr =
        schrodinger_gramian(grid, bump, TimeGrid(schr_T, cfg.get_int("schr_M", 8192)));
    const double ucp = eigen_ucp_check(bump, grid);
    const TransferBound tb =
        plate_weak_observability_constant(grid, bump, profile, tg, schr.lambda_min);

    const int n_order = cfg.get_int("N_order", 4);
    const int jk_max = cfg.get_int("jk_max", std::min(grid.N(), 16));
    CsvWriter csv(out);
    csv.header({"j", "k", "measured", "bound"});
    bool envelope_ok = true;
    for (int j = 1; j <= jk_max; ++j) {
        for (int k = j; k <= jk_max; ++k) {
            const InteractionBound ib = interaction_bound(profile, j, k, n_order, grid);
            csv.row({CsvWriter::format(j), CsvWriter::format(k),
                     CsvWriter::format(ib.measured), CsvWriter::format(ib.bound)});
            if (!(j == 1 && k == 1) && ib.measured > ib.bound) envelope_ok = false;
        }
    }

    const bool positivity_ok =
        !(schr.lambda_min > 0.0 && ucp > 0.0) || tb.direct_lambda_min > 0.0;
    std::cout << "plate-transfer: schr lambda_min=" << schr.lambda_min << " ucp=" << ucp
              << " plate lambda_min=" << tb.direct_lambda_min << " transfer c=" << tb.c
              << " remainder=" << tb.remainder << (tb.conclusive ? " (conclusive)" : " (inconclusive)")
              << " envelope_ok=" << envelope_ok << "\n";
    return (envelope_ok && positivity_ok) ? kExitPass : kExitFail;
}

int cmd_obs_ratio(const RunConfig& cfg, const std::string& out) {
    cfg.validate_keys(with_common({"M", "T", "f", "omega", "plateau_margin", "R0", "samples"}));
    const SpectralGrid grid = grid_from(cfg);
    const auto window = window_from(cfg, grid.L());
    const BumpFunction bump =
        window ? BumpFunction::from_window(*window, grid) : BumpFunction::ones(grid);
    const WaveSystem system(grid, poly_from(cfg));
    const TimeGrid tg(cfg.get_double("T", 7.0), cfg.get_int("M", 2048));
    const ExperimentResult res =
        nonlinear_obs_ratio(system, bump, tg, cfg.get_double("R0", 1.0),
                            cfg.get_int("samples", 200), cfg.get_u64("seed", 1),
                            window ? &*window : nullptr);

    CsvWriter csv(out);
    csv.header({"sample", "ratio"});
    for (const auto& [key, series] : res.series)
        if (key == "ratios")
            for (size_t i = 0; i < series.size(); ++i)
                csv.row({CsvWriter::format(static_cast<int>(i)), CsvWriter::format(series[i])});
    std::cout << "obs-ratio: min ratio " << res.scalar("min_ratio")
              << " gcc_satisfied=" << res.scalar("gcc_satisfied") << "\n";
    return res.pass ? kExitPass : kExitFail;
}

int cmd_gain_check(const RunConfig& cfg, const std::string& out) {
    cfg.validate_keys(with_common({"f", "sigma", "epsilon", "R0", "samples"}));
    const SpectralGrid grid = grid_from(cfg);
    const WaveSystem system(grid, poly_from(cfg));
    const ExperimentResult res =
        nonlinearity_gain(system, cfg.get_double("sigma", 0.6), cfg.get_double("epsilon", 0.4),
                          cfg.get_double("R0", 1.0), cfg.get_int("samples", 200),
                          cfg.get_u64("seed", 1));
    CsvWriter csv(out);
    csv.header({"quantity", "value"});
    for (const auto& [k, v] : res.scalars) csv.row({k, CsvWriter::format(v)});
    std::cout << "gain-check: max_F_norm " << res.scalar("max_F_norm") << " max_lipschitz "
              << res.scalar("max_lipschitz") << "\n";
    return res.pass ? kExitPass : kExitFail;
}

int cmd_end_to_end(const RunConfig& cfg, const std::string& out) {
    cfg.validate_keys(with_common({"M", "T", "n", "sigma", "epsilon", "f", "omega",
                                   "plateau_margin", "fp_tol", "max_iter", "trivial", "shoot_lo",
                                   "shoot_hi", "verdict_tol"}));
    EndToEndSetup setup;
    setup.L = cfg.get_double("L", setup.L);
    setup.N = cfg.get_int("N", setup.N);
    setup.M = cfg.get_int("M", setup.M);
    setup.T = cfg.get_double("T", setup.T);
    setup.n = cfg.get_int("n", setup.n);
    setup.sigma = cfg.get_double("sigma", setup.sigma);
    setup.epsilon = cfg.get_double("epsilon", setup.epsilon);
    if (cfg.has("f")) setup.f = poly_from(cfg);
    if (cfg.has("omega")) {
        const std::vector<double> vals = cfg.get_list("omega");
        if (vals.size() != 2)
            throw ConfigError("config: end-to-end expects a single omega interval");
        setup.window = {vals[0], vals[1]};
    }
    setup.plateau_margin = cfg.get_double("plateau_margin", setup.plateau_margin);
    setup.fp_tol = cfg.get_double("fp_tol", setup.fp_tol);
    setup.max_iter = cfg.get_int("max_iter", setup.max_iter);
    setup.trivial_equilibrium = cfg.get_int("trivial", 0) != 0;
    setup.shoot_lo = cfg.get_double("shoot_lo", setup.shoot_lo);
    setup.shoot_hi = cfg.get_double("shoot_hi", setup.shoot_hi);
    setup.verdict_tol = cfg.get_double("verdict_tol", setup.verdict_tol);

    const ExperimentResult res = end_to_end_reconstruction(setup);
    CsvWriter csv(out);
    csv.header({"quantity", "value"});
    for (const auto& [k, v] : res.scalars) csv.row({k, CsvWriter::format(v)});
    std::cout << "end-to-end: sup relative error " << res.scalar("sup_rel_error") << " (verdict "
              << (res.pass ? "pass" : "fail") << ")\n";
    return res.pass ? kExitPass : kExitFail;
}

int cmd_suite(const RunConfig& cfg, const std::string& out) {
    cfg.validate_keys(with_common({}));
    const std::vector<CriterionResult> results =
        run_acceptance_criteria(cfg.get_u64("seed", 12345));
    CsvWriter csv(out);
    csv.header({"index", "name", "value", "pass"});
    bool all = true;
    for (const CriterionResult& r : results) {
        csv.row({CsvWriter::format(r.index), r.name, CsvWriter::format(r.value),
                 CsvWriter::format(r.pass ? 1 : 0)});
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.index << " " << r.name
                  << ": " << r.detail << " [" << r.seconds << " s]\n";
        all = all && r.pass;
    }
    std::cout << "suite: " << (all ? "all criteria passed" : "FAILURES present") << "\n";
    return all ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    if (const char* th = std::getenv("WAVE_OBSERVE_THREADS")) {
        const int n = std::atoi(th);
        if (n > 0) Eigen::setNbThreads(n);
    }

    CLI::App app{"Spectral observability laboratory for semilinear waves and plates"};
    app.require_subcommand(1);

    std::string config_path, out_path = "out.csv";
    std::optional<std::uint64_t> seed_override;
    app.add_option("--config", config_path, "key=value configuration file");
    app.add_option("--out", out_path, "output CSV path");
    app.add_option("--seed", seed_override, "RNG seed override");

    const std::vector<std::pair<std::string, int (*)(const RunConfig&, const std::string&)>>
        commands = {{"simulate", cmd_simulate},
                    {"gramian", cmd_gramian},
                    {"gcc-time", cmd_gcc_time},
                    {"reconstruct-linear", cmd_reconstruct_linear},
                    {"reconstruct-fixed-point", cmd_reconstruct_fixed_point},
                    {"determining-modes", cmd_determining_modes},
                    {"plate-transfer", cmd_plate_transfer},
                    {"obs-ratio", cmd_obs_ratio},
                    {"gain-check", cmd_gain_check},
                    {"end-to-end", cmd_end_to_end},
                    {"suite", cmd_suite}};
    for (const auto& [name, fn] : commands) app.add_subcommand(name, "");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitUsage;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) cfg = RunConfig::from_file(config_path);
        if (seed_override) cfg.set("seed", std::to_string(*seed_override));
        cfg.set("out", out_path);

        for (const auto& [name, fn] : commands)
            if (app.get_subcommand(name)->parsed()) return fn(cfg, out_path);
        std::cerr << "error: no subcommand selected\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SingularGramianError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const IntegrationError& e) {
        std::cerr << "numerical error at step " << e.step() << ": " << e.what() << "\n";
        return kExitNumerical;
    } catch (const FixedPointError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const QuadratureResolutionError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
