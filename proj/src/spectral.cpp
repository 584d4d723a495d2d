#include "waveobs/spectral.hpp"

#include <cmath>

namespace waveobs {

SpectralGrid::SpectralGrid(double domain_length, int truncation, int quad_points,
                           double shift)
    : L_(domain_length), N_(truncation), beta_(shift) {
    if (L_ <= 0.0) throw std::invalid_argument("SpectralGrid: domain length must be positive");
    if (N_ < 1) throw std::invalid_argument("SpectralGrid: truncation must be >= 1");
    if (beta_ < 0.0) throw std::invalid_argument("SpectralGrid: shift beta must be >= 0");

    const int dealias = (3 * N_ + 1) / 2;  // ceil(3N/2)
    Q_ = quad_points > 0 ? quad_points : dealias;
    if (Q_ < dealias)
        throw std::invalid_argument("SpectralGrid: quad_points below dealiasing capacity ceil(3N/2)");

    lambda_.resize(N_);
    for (int j = 1; j <= N_; ++j) {
        const double k = j * M_PI / L_;
        lambda_(j - 1) = k * k;
    }

    const int P = Q_ + 1;
    wq_ = L_ / P;
    nodes_.resize(Q_);
    for (int q = 1; q <= Q_; ++q) nodes_(q - 1) = q * L_ / P;

    synth_.resize(Q_, N_);
    const double amp = std::sqrt(2.0 / L_);
    for (int q = 0; q < Q_; ++q)
        for (int j = 0; j < N_; ++j)
            synth_(q, j) = amp * std::sin((j + 1) * M_PI * nodes_(q) / L_);
    // Discrete sine orthogonality: sum_q e_j(x_q) e_k(x_q) = (P/L) delta_jk,
    // so weighting the transpose by L/P inverts exactly.
    analyze_ = wq_ * synth_.transpose();
}

double SpectralGrid::eigenvalue(int j) const {
    if (j < 1 || j > N_) throw std::out_of_range("SpectralGrid::eigenvalue: mode index out of range");
    return lambda_(j - 1);
}

double SpectralGrid::frequency(int j) const {
    return std::sqrt(eigenvalue(j) + beta_);
}

Eigen::VectorXd SpectralGrid::to_physical(const Eigen::VectorXd& coeffs) const {
    if (coeffs.size() != N_) throw std::invalid_argument("to_physical: coefficient length mismatch");
    return synth_ * coeffs;
}

Eigen::VectorXd SpectralGrid::to_coeffs(const Eigen::VectorXd& samples) const {
    if (samples.size() != Q_) throw std::invalid_argument("to_coeffs: sample length mismatch");
    return analyze_ * samples;
}

Eigen::MatrixXd SpectralGrid::multiplier_matrix(const Eigen::VectorXd& samples) const {
    if (samples.size() != Q_) throw std::invalid_argument("multiplier_matrix: sample length mismatch");
    return analyze_ * samples.asDiagonal() * synth_;
}

State::State(Eigen::VectorXd u_, Eigen::VectorXd v_) : u(std::move(u_)), v(std::move(v_)) {
    if (u.size() != v.size())
        throw std::invalid_argument("State: position/velocity length mismatch");
}

State State::mode(int n, int j, double amp_u, double amp_v) {
    if (j < 1 || j > n) throw std::out_of_range("State::mode: index out of range");
    State s = State::zero(n);
    s.u(j - 1) = amp_u;
    s.v(j - 1) = amp_v;
    return s;
}

double norm_x_sigma(const State& state, const SpectralGrid& grid, double sigma) {
    return std::sqrt(inner_x_sigma(state, state, grid, sigma));
}

double inner_x_sigma(const State& a, const State& b, const SpectralGrid& grid, double sigma) {
    if (a.size() != grid.N() || b.size() != grid.N())
        throw std::invalid_argument("inner_x_sigma: state size does not match grid truncation");
    const Eigen::ArrayXd lb = grid.eigenvalues().array() + grid.beta();
    const Eigen::ArrayXd wu = lb.pow(1.0 + sigma);
    const Eigen::ArrayXd wv = lb.pow(sigma);
    return (wu * a.u.array() * b.u.array()).sum() + (wv * a.v.array() * b.v.array()).sum();
}

State project_low(const State& state, int cutoff) {
    const int n = state.size();
    if (cutoff < 0 || cutoff > n) throw std::out_of_range("project_low: cutoff out of range");
    State out = state;
    out.u.tail(n - cutoff).setZero();
    out.v.tail(n - cutoff).setZero();
    return out;
}

State project_high(const State& state, int cutoff) {
    const int n = state.size();
    if (cutoff < 0 || cutoff > n) throw std::out_of_range("project_high: cutoff out of range");
    State out = state;
    out.u.head(cutoff).setZero();
    out.v.head(cutoff).setZero();
    return out;
}

} // namespace waveobs
