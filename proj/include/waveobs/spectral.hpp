#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace waveobs {

/// Eigenbasis of the 1D Dirichlet Laplacian on (0, L).
///
/// Modes e_j(x) = sqrt(2/L) sin(j pi x / L), j = 1..N, with eigenvalues
/// lambda_j = (j pi / L)^2. The physical representation lives on the interior
/// collocation nodes x_q = q L / (Q+1), q = 1..Q, where the discrete sine
/// transform is an exact isometry for sine polynomials of degree <= Q.
/// Q defaults to ceil(3N/2) so cubic products keep the retained band clean.
class SpectralGrid {
public:
    SpectralGrid(double domain_length, int truncation, int quad_points = 0,
                 double shift = 0.0);

    double L() const { return L_; }
    int N() const { return N_; }
    int quad_points() const { return Q_; }
    double beta() const { return beta_; }

    /// lambda_j = (j pi / L)^2, 1-based mode index.
    double eigenvalue(int j) const;
    const Eigen::VectorXd& eigenvalues() const { return lambda_; }

    /// omega_j = sqrt(lambda_j + beta), the per-mode time frequency.
    double frequency(int j) const;

    const Eigen::VectorXd& nodes() const { return nodes_; }
    /// Uniform interior-node quadrature weight L/(Q+1).
    double quad_weight() const { return wq_; }

    /// Synthesis: coefficients (length N) -> samples at the Q nodes.
    Eigen::VectorXd to_physical(const Eigen::VectorXd& coeffs) const;
    /// Analysis: samples at the Q nodes -> coefficients (length N).
    Eigen::VectorXd to_coeffs(const Eigen::VectorXd& samples) const;

    const Eigen::MatrixXd& synthesis_matrix() const { return synth_; }
    const Eigen::MatrixXd& analysis_matrix() const { return analyze_; }

    /// Coefficient-space matrix of "multiply by m(x)": analyze o diag(m) o synth.
    Eigen::MatrixXd multiplier_matrix(const Eigen::VectorXd& samples) const;

private:
    double L_;
    int N_;
    int Q_;
    double beta_;
    double wq_;
    Eigen::VectorXd lambda_;
    Eigen::VectorXd nodes_;
    Eigen::MatrixXd synth_;    // Q x N
    Eigen::MatrixXd analyze_;  // N x Q
};

/// Regularity bookkeeping for the scale X^sigma with gain epsilon.
struct SobolevIndex {
    double sigma;
    double epsilon;

    SobolevIndex(double sigma_, double epsilon_) : sigma(sigma_), epsilon(epsilon_) {
        if (sigma < 0.0 || sigma > 1.0)
            throw std::invalid_argument("SobolevIndex: sigma must lie in [0, 1]");
        if (epsilon <= 0.0 || epsilon > 1.0)
            throw std::invalid_argument("SobolevIndex: epsilon must lie in (0, 1]");
        if (sigma + epsilon > 2.0)
            throw std::invalid_argument("SobolevIndex: sigma + epsilon must not exceed 2");
    }
};

/// A state (u, v) = (position, velocity) in coefficient representation.
/// Both vectors have length N; the pair represents an element of
/// X^sigma = H^{1+sigma}_D x H^sigma_D for every sigma at finite truncation.
struct State {
    Eigen::VectorXd u;
    Eigen::VectorXd v;

    State() = default;
    State(Eigen::VectorXd u_, Eigen::VectorXd v_);
    /// Zero state of dimension N.
    static State zero(int n) { return State(Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n)); }
    /// j-th position basis state (e_j, 0), 1-based.
    static State mode(int n, int j, double amp_u = 1.0, double amp_v = 0.0);

    int size() const { return static_cast<int>(u.size()); }

    State operator+(const State& o) const { return State(u + o.u, v + o.v); }
    State operator-(const State& o) const { return State(u - o.u, v - o.v); }
    State operator*(double s) const { return State(s * u, s * v); }
    State& operator+=(const State& o) { u += o.u; v += o.v; return *this; }
};

/// || (u,v) ||_{X^sigma} = sqrt( sum (l_j+b)^{1+sigma} u_j^2 + sum (l_j+b)^sigma v_j^2 ).
double norm_x_sigma(const State& state, const SpectralGrid& grid, double sigma);

/// X^sigma inner product matching norm_x_sigma.
double inner_x_sigma(const State& a, const State& b, const SpectralGrid& grid, double sigma);

/// Keep modes 1..n, zero the rest. n = 0 gives the zero state.
State project_low(const State& state, int cutoff);
/// Zero modes 1..n, keep n+1..N.
State project_high(const State& state, int cutoff);

} // namespace waveobs
