#pragma once

#include "waveobs/reconstruction.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace waveobs {

/// Named scalar/series outputs with a verdict against the declared tolerance.
struct ExperimentResult {
    std::string name;
    std::vector<std::pair<std::string, double>> scalars;
    std::vector<std::pair<std::string, std::vector<double>>> series;
    bool pass = false;

    double scalar(const std::string& key) const;
    void add(const std::string& key, double value) { scalars.emplace_back(key, value); }
};

/// Empirical constants of the nonlinearity on the 4 R0 ball of X^sigma:
/// max ||F(U)||_{X^{sigma+eps}} over samples and the largest Lipschitz
/// quotient into X^{sigma+eps} over sampled pairs.
ExperimentResult nonlinearity_gain(const WaveSystem& system, double sigma, double epsilon,
                                   double R0, int samples, std::uint64_t seed);

/// Desk-scale propagation of regularity: integrates the semilinear flow and
/// checks sup_t ||U||_{X^{sigma+eps}} against data that never reads the
/// initial X^{sigma+eps} norm directly: the linear part is bounded through the
/// observability estimate at sigma+eps applied to C(U - I(t)F(U)), plus the
/// Duhamel bound on I(t)F(U).
ExperimentResult regularity_propagation(const State& u0, const WaveSystem& system,
                                        const TimeGrid& time_grid, double sigma, double epsilon,
                                        const BumpFunction& bump);

/// Monte-Carlo floor of the nonlinear observability ratio
///   int_0^T ||b du/dt||_{L^2}^2 dt / ||(u0,u1)||_{X^0}^2
/// over seeded random data in the R0 ball. Passes when the minimum ratio
/// clears 1e-3. A window pointer enables the GCC warning check.
ExperimentResult nonlinear_obs_ratio(const WaveSystem& system, const BumpFunction& bump,
                                     const TimeGrid& time_grid, double R0, int samples,
                                     std::uint64_t seed,
                                     const ObservationWindow* window = nullptr);

/// Solve -u'' + f(u) = 0, u(0) = u(L) = 0 by shooting on u'(0) with bisection;
/// returns the equilibrium sampled at the collocation nodes. The bracket must
/// straddle the domain-length crossing (first arch).
Eigen::VectorXd shoot_equilibrium(const Polynomial& f, const SpectralGrid& grid, double slope_lo,
                                  double slope_hi, double tol = 1e-10);

struct EndToEndSetup {
    double L = 4.0;
    int N = 32;
    int M = 8192;
    double T = 0.5;
    int n = 8;
    double sigma = 0.6;
    double epsilon = 1.0;
    Polynomial f{{-1.0, 0.0, 1.0}};  // f(u) = -u + u^3, admits a first-arch equilibrium on (0,4)
    std::pair<double, double> window{0.6, 1.9};
    double plateau_margin = 0.3;
    double fp_tol = 1e-12;
    int max_iter = 200;
    bool trivial_equilibrium = false;  // use u == 0 instead of shooting
    double shoot_lo = 0.05;
    double shoot_hi = 0.70;
    double verdict_tol = 1e-6;
};

/// Full round trip of the frequency-split reconstruction on a zero-observation
/// trajectory built from an equilibrium: windows the state with chi~ = 1-chi,
/// forms H1 = (chi u, 0) and the discrete source H2 making the stationary
/// state an exact solution, then reconstructs Q_n of the windowed variable
/// from P_n of it and reports the sup-t relative error against the truth.
ExperimentResult end_to_end_reconstruction(const EndToEndSetup& setup);

} // namespace waveobs
