#pragma once

#include "waveobs/dynamics.hpp"

#include <utility>
#include <vector>

namespace waveobs {

/// Union of disjoint open subintervals of (0, L) where the solution is watched.
/// The bump equals 1 exactly on each interval (the plateau) and ramps to zero
/// over plateau_margin outside it.
struct ObservationWindow {
    std::vector<std::pair<double, double>> intervals;
    double plateau_margin;

    ObservationWindow(std::vector<std::pair<double, double>> intervals_, double margin,
                      double domain_length);
};

/// Physical-node samples of the observation multiplier b_omega in [0, 1].
struct BumpFunction {
    Eigen::VectorXd samples;

    static BumpFunction ones(const SpectralGrid& grid);
    static BumpFunction from_window(const ObservationWindow& window, const SpectralGrid& grid);
    static BumpFunction from_samples(Eigen::VectorXd samples, const SpectralGrid& grid);
};

/// Time-sampled observed output C U(t_m); position components are identically zero.
struct ObservationSignal {
    TimeGrid time_grid;
    std::vector<State> values;

    ObservationSignal(TimeGrid tg, std::vector<State> vals);
    static ObservationSignal zero(const TimeGrid& tg, int n);
};

/// sqrt( sum_m w_m ||s(t_m)||_{X^sigma}^2 ), the discrete L^2([0,T], X^sigma) norm.
double signal_l2_norm(const ObservationSignal& signal, const SpectralGrid& grid, double sigma);

class SingularGramianError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Discrete observability Gramian of the map W0 -> C e^{tA} W0 on the mode
/// range lo..hi at regularity sigma, in X^sigma-orthonormalized coordinates.
/// Basis ordering: position-type columns for modes lo..hi, then velocity-type.
/// lambda_min^{-1/2} is the observability constant at this truncation.
struct Gramian {
    int lo = 1, hi = 1;
    double sigma = 0.0;
    TimeGrid time_grid{1.0, 2};
    Eigen::MatrixXd matrix;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    bool observable = false;

    // Assembly context consumed by pseudo_inverse_apply.
    Eigen::MatrixXd obs_multiplier;  // N x N coefficient matrix of b_omega
    Eigen::VectorXd bump_samples;
    double grid_L = 0.0;
    int grid_N = 0;
    double grid_beta = 0.0;

    int dim() const { return 2 * (hi - lo + 1); }
    /// Observability constant c_obs = lambda_min^{-1/2}; throws when not observable.
    double cobs() const;
};

/// C(u, v) = (0, b_omega v) by collocation multiply-and-analyze.
State observe(const State& state, const BumpFunction& bump, const SpectralGrid& grid);

/// Observe every node of a trajectory.
ObservationSignal observe_trajectory(const std::vector<State>& states, const BumpFunction& bump,
                                     const SpectralGrid& grid, const TimeGrid& time_grid);

/// matrix[a][b] = sum_m w_m < C e^{t_m A} E_a, C e^{t_m A} E_b >_{X^sigma}
/// over the X^sigma-normalized basis of modes lo..hi, trapezoid weights.
Gramian assemble_gramian(const SpectralGrid& grid, const BumpFunction& bump,
                         const TimeGrid& time_grid, double sigma, int lo, int hi);

/// Least-squares state recovery: the W0 in the Gramian's subspace minimizing
/// sum_m w_m || C e^{t_m A} W0 - signal(t_m) ||_{X^sigma}^2, solved through the
/// Gramian normal equations. Realizes O_n^{-1} Pi_n exactly in the discrete
/// inner product.
State pseudo_inverse_apply(const Gramian& gramian, const ObservationSignal& signal,
                           const SpectralGrid& grid, const TimeGrid& time_grid, double sigma);

/// 1D geometric control time: rays at speed 1 reflecting at 0 and L; returns
/// the supremum over sampled starting points and both directions of the first
/// entry time into the open window. For omega = (a,b) in (0,pi) this equals
/// 2 max(a, pi - b) up to sampling resolution.
double gcc_time(const ObservationWindow& window, double L, int samples = 10000);

/// Empirical norm of the commutator [b_omega, Laplacian] from H^{sigma+2}_D to
/// H^{sigma+eps}_D over the truncated basis (largest singular value in
/// weighted coordinates). Finite values certify the discrete commutator
/// condition used for propagation of regularity.
double commutator_check(const BumpFunction& bump, const SpectralGrid& grid, double sigma,
                        double epsilon);

} // namespace waveobs
