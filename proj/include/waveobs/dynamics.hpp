#pragma once

#include "waveobs/spectral.hpp"

#include <vector>

namespace waveobs {

/// Odd polynomial nonlinearity f(u) = sum_k coeffs[k] u^{k+1}, f(0) = 0.
struct Polynomial {
    std::vector<double> coeffs;  // coeffs[k] multiplies u^{k+1}

    static Polynomial cubic(double c3 = 1.0) { return Polynomial{{0.0, 0.0, c3}}; }
    static Polynomial zero() { return Polynomial{{}}; }

    double operator()(double x) const {
        double p = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) p = (p + *it) * x;
        return p;
    }
    /// Antiderivative with F(0) = 0, used for the conserved energy.
    double primitive(double x) const {
        double p = 0.0;
        for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
            p = (p + coeffs[static_cast<size_t>(k)] / (k + 2.0)) * x;
        return p * x;
    }
    bool is_zero() const {
        for (double c : coeffs)
            if (c != 0.0) return false;
        return true;
    }
};

/// Semilinear wave system u_tt = (Delta - beta) u - chi~ f(u) + beta u on the grid.
/// chi_tilde holds physical-node samples of the smooth multiplier in [0, 1].
struct WaveSystem {
    SpectralGrid grid;
    Polynomial f;
    Eigen::VectorXd chi_tilde;

    WaveSystem(SpectralGrid grid_, Polynomial f_ = Polynomial::cubic(),
               Eigen::VectorXd chi_tilde_ = Eigen::VectorXd());
};

struct TimeGrid {
    double T;
    int M;

    TimeGrid(double T_, int M_) : T(T_), M(M_) {
        if (T <= 0.0) throw std::invalid_argument("TimeGrid: horizon must be positive");
        if (M < 2) throw std::invalid_argument("TimeGrid: need at least 2 steps");
    }
    double dt() const { return T / M; }
    double node(int m) const { return m * T / M; }
    /// Composite trapezoid weight of node m on [0, T].
    double weight(int m) const { return (m == 0 || m == M) ? 0.5 * dt() : dt(); }
};

struct Trajectory {
    TimeGrid time_grid;
    std::vector<State> states;  // M+1 entries

    Trajectory(TimeGrid tg, std::vector<State> st);
    static Trajectory zero(const TimeGrid& tg, int n);
    const State& at(int m) const { return states[static_cast<size_t>(m)]; }
    State& at(int m) { return states[static_cast<size_t>(m)]; }
};

/// Nonfinite values during time integration; carries the failing step.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, int step)
        : std::runtime_error(what), step_(step) {}
    int step() const { return step_; }

private:
    int step_;
};

/// Exact linear group e^{tA}: per mode with omega_j = sqrt(lambda_j + beta),
///   u_j(t) =  cos(w t) u_j + sin(w t)/w v_j
///   v_j(t) = -w sin(w t) u_j + cos(w t) v_j.
State linear_propagate(const State& state, double t, const SpectralGrid& grid);

/// F(u, v) = (0, -chi~ f(u) + beta u), evaluated by collocation.
State apply_F(const State& state, const WaveSystem& system);

/// Trapezoidal I(t_m) g = int_0^{t_m} e^{A(t_m - s)} g(s) ds for one node.
State duhamel(const std::vector<State>& source, int t_index, const SpectralGrid& grid,
              const TimeGrid& time_grid);

/// I(t_m) g at every node, accumulated incrementally; identical to duhamel()
/// at each index because the group composes exactly.
std::vector<State> duhamel_all(const std::vector<State>& source, const SpectralGrid& grid,
                               const TimeGrid& time_grid);

/// Strang splitting: half linear flow, velocity kick by F, half linear flow.
Trajectory integrate(const State& u0, const WaveSystem& system, const TimeGrid& time_grid);

/// Discrete mild solution U = e^{tA}U0 + I(t)F(U) by global Picard iteration
/// over the trapezoid Duhamel quadrature. The result satisfies the same
/// quadrature identities as the reconstruction operators, bit-for-bit.
Trajectory integrate_mild(const State& u0, const WaveSystem& system, const TimeGrid& time_grid,
                          double tol = 1e-13, int max_iter = 200);

/// Conserved semilinear energy 1/2 ||U||_{X^0}^2 + int chi~ F_primitive(u).
double energy(const State& state, const WaveSystem& system);

} // namespace waveobs
