#pragma once

#include "waveobs/observability.hpp"

#include <random>
#include <string>

namespace waveobs {

/// Parameters of the frequency-split reconstruction at cutoff n.
struct ReconstructionConfig {
    int n;                     // low/high frequency cutoff
    double sigma;
    double epsilon;            // regularity gain entering the contraction bound
    double R0;                 // ball radius of the nonlinearity's certified domain
    double eta;                // smallness radius for the observed data G
    double fp_tol = 1e-10;     // relative fixed-point tolerance
    int max_iter = 200;
    double lipschitz_c = 0.0;  // empirical Lipschitz constant of F; 0 = not supplied

    /// Default smallness radius 0.1 R0 / c_obs.
    static double default_eta(double R0, double cobs) { return 0.1 * R0 / cobs; }
};

enum class FixedPointStatus { converged, max_iter_exceeded, diverged, ball_violation };

/// Iteration trace of the nonlinear reconstruction.
struct FixedPointReport {
    int iterations = 0;
    std::vector<double> residuals;
    double contraction_estimate = 0.0;  // geometric mean of successive residual ratios
    bool converged = false;
    double threshold_bound = 0.0;       // C_emp T / (1 + lambda_{n+1})^eps
    FixedPointStatus status = FixedPointStatus::max_iter_exceeded;
    std::string message;
};

class BallViolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FixedPointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ReconstructionResult {
    Trajectory trajectory;
    FixedPointReport report;
};

/// Linear observability-Cauchy solver: given observed data G and source H,
/// returns the unique W on the high modes with
///   d/dt W = A W + Q_n H   and   Pi_n C W = Pi_n G (least squares),
/// namely W(t) = e^{tA} W0 + I(t) Q_n H with
/// W0 = pinv( G - C I(.) Q_n H ) in the Gramian's subspace.
Trajectory linear_reconstruct(const ObservationSignal& G, const std::vector<State>& H,
                              const SpectralGrid& grid, const ReconstructionConfig& config,
                              const Gramian& gramian);

/// One application of the fixed-point map Phi(W) = F_L(G, F(W + V + H1) + H2).
/// The low-frequency part V rides along inside the nonlinearity argument.
/// Throws BallViolationError when ||V + W + H1||_{X^sigma} leaves the 4 R0 ball.
Trajectory phi_step(const Trajectory& W, const Trajectory& V, const Trajectory& H1,
                    const Trajectory& H2, const ObservationSignal& G, const WaveSystem& system,
                    const ReconstructionConfig& config, const Gramian& gramian);

/// Picard iteration of phi_step from W = 0 until the relative update drops
/// below fp_tol. The report is filled in truthfully whether or not the
/// iteration converged (divergence detected after 5 consecutive residual
/// increases).
ReconstructionResult solve_fixed_point(const Trajectory& V, const Trajectory& H1,
                                       const Trajectory& H2, const ObservationSignal& G,
                                       const WaveSystem& system, const ReconstructionConfig& config,
                                       const Gramian& gramian);

/// Variant with a caller-supplied initial iterate (used by uniqueness_check).
ReconstructionResult solve_fixed_point_from(const Trajectory& W_init, const Trajectory& V,
                                            const Trajectory& H1, const Trajectory& H2,
                                            const ObservationSignal& G, const WaveSystem& system,
                                            const ReconstructionConfig& config,
                                            const Gramian& gramian);

/// High-frequency reconstruction from the low-frequency component:
///   R(V, H1, H2) = solve_fixed_point with H1 <- V + H1 and
///   G = -chi( ||C V|| / eta ) C V,
/// where chi is 1 on [0, 1/2] and 0 beyond 1. When the true solution has zero
/// observation and V = P_n U, the output equals Q_n U.
ReconstructionResult reconstruct_high(const Trajectory& V, const Trajectory& H1,
                                      const Trajectory& H2, const WaveSystem& system,
                                      const ReconstructionConfig& config, const Gramian& gramian);

struct DeterminingThreshold {
    int n = 0;
    bool overflow = false;
};

/// Smallest n with C T (1 + lambda_{n+1})^{-eps} < 1, capped at N.
DeterminingThreshold determining_threshold(double lipschitz_c, double T, double epsilon,
                                           const SpectralGrid& grid);

/// Runs the fixed point from `trials` distinct initial guesses in the R0 ball
/// and returns the maximum pairwise sup-t X^sigma distance between the
/// resulting fixed points. Throws FixedPointError when any trial fails.
double uniqueness_check(const Trajectory& V, const Trajectory& H1, const Trajectory& H2,
                        const ObservationSignal& G, const WaveSystem& system,
                        const ReconstructionConfig& config, const Gramian& gramian, int trials,
                        std::uint64_t seed = 12345);

/// Empirical Lipschitz constant of F from X^sigma into X^{sigma+eps}: the
/// largest quotient ||F(U)-F(V)||_{sigma+eps} / ||U-V||_sigma over `samples`
/// random pairs in the ball of radius 3 R0.
double estimate_lipschitz(const WaveSystem& system, double sigma, double epsilon, double R0,
                          int samples, std::uint64_t seed);

/// Random state with coefficients ~ N(0,1) j^{-decay}, rescaled so that the
/// X^sigma norm equals `radius`.
State random_state_in_ball(const SpectralGrid& grid, std::mt19937_64& rng, double sigma,
                           double radius, double decay = 2.0);

} // namespace waveobs
