#include "waveobs/plate.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace waveobs {

double plate_norm(const State& state, const SpectralGrid& grid, double s) {
    const Eigen::ArrayXd lam = grid.eigenvalues().array();
    return std::sqrt((lam.pow(s) * state.u.array().square()).sum() +
                     (lam.pow(s - 2.0) * state.v.array().square()).sum());
}

State plate_propagate(const State& state, double t, const SpectralGrid& grid) {
    const int n = grid.N();
    if (state.size() != n) throw std::invalid_argument("plate_propagate: size mismatch");
    State out = State::zero(n);
    for (int j = 0; j < n; ++j) {
        const double w = grid.eigenvalues()(j);
        const double c = std::cos(w * t), s = std::sin(w * t);
        out.u(j) = c * state.u(j) + s / w * state.v(j);
        out.v(j) = -w * s * state.u(j) + c * state.v(j);
    }
    return out;
}

SplitPair split(const State& state, const SpectralGrid& grid) {
    if (state.size() != grid.N()) throw std::invalid_argument("split: size mismatch");
    const int n = grid.N();
    SplitPair out;
    out.z_plus.resize(n);
    out.z_minus.resize(n);
    const std::complex<double> I(0.0, 1.0);
    for (int j = 0; j < n; ++j) {
        const std::complex<double> shift = I * state.v(j) / grid.eigenvalues()(j);
        out.z_plus(j) = 0.5 * (state.u(j) - shift);
        out.z_minus(j) = 0.5 * (state.u(j) + shift);
    }
    return out;
}

std::pair<Eigen::VectorXcd, Eigen::VectorXcd> unsplit(const SplitPair& pair,
                                                      const SpectralGrid& grid) {
    if (pair.z_plus.size() != grid.N() || pair.z_minus.size() != grid.N())
        throw std::invalid_argument("unsplit: size mismatch");
    const std::complex<double> I(0.0, 1.0);
    Eigen::VectorXcd z0 = pair.z_plus + pair.z_minus;
    Eigen::VectorXcd z1 =
        I * (grid.eigenvalues().asDiagonal() * (pair.z_plus - pair.z_minus).eval());
    return {std::move(z0), std::move(z1)};
}

State unsplit_real(const SplitPair& pair, const SpectralGrid& grid) {
    auto [z0, z1] = unsplit(pair, grid);
    return State(z0.real(), z1.real());
}

CutoffProfile::CutoffProfile(double inner_start, double inner_end, double T_, int n_samples)
    : T_inner_start(inner_start), T_inner_end(inner_end), T(T_) {
    if (!(0.0 < inner_start && inner_start < inner_end && inner_end < T))
        throw std::invalid_argument("CutoffProfile: need 0 < start < end < T");
    if (n_samples < 16) throw std::invalid_argument("CutoffProfile: too few samples");

    const double c = 0.5 * (inner_start + inner_end);
    const double w_half = 0.5 * (inner_end - inner_start);
    const double room = std::min(c, T - c) - w_half;
    if (room <= 0.0) throw std::invalid_argument("CutoffProfile: inner window leaves no room");
    // 8.5 sigma on each side of the indicator edge: erf saturates to 1.0 in
    // double precision on the plateau and the clamped tails vanish before the
    // support ends.
    mollifier_sigma = room / 17.2;
    half_width = w_half + 8.5 * mollifier_sigma;

    const double inv = 1.0 / (mollifier_sigma * std::sqrt(2.0));
    samples.resize(n_samples + 1);
    for (int i = 0; i <= n_samples; ++i) {
        const double t = i * T / n_samples;
        double f = 0.5 * (std::erf((t - c + half_width) * inv) -
                          std::erf((t - c - half_width) * inv));
        f = std::clamp(f, 0.0, 1.0);
        if (f < 1e-14) f = 0.0;
        samples(i) = std::sqrt(f);
        if (samples(i) > 1.0 - 1e-12) samples(i) = 1.0;
    }
    samples(0) = 0.0;
    samples(n_samples) = 0.0;
}

InteractionBound interaction_bound(const CutoffProfile& profile, int j, int k, int N_order,
                                   const SpectralGrid& grid) {
    if (N_order < 1) throw std::invalid_argument("interaction_bound: N_order must be >= 1");
    const auto quad = [&](double omega) {
        if (profile.dt() * omega > 0.5)
            throw QuadratureResolutionError(
                "interaction_bound: profile too coarse for frequency " + std::to_string(omega));
        const int M = profile.segments();
        const double dt = profile.dt();
        std::complex<double> acc(0.0, 0.0);
        for (int m = 0; m <= M; ++m) {
            const double w = (m == 0 || m == M) ? 0.5 * dt : dt;
            const double r2 = profile.samples(m) * profile.samples(m);
            const double t = m * dt;
            acc += w * r2 * std::complex<double>(std::cos(omega * t), std::sin(omega * t));
        }
        return std::abs(acc);
    };

    const double omega0 = 2.0 * grid.eigenvalue(1);
    const double cn = quad(omega0) * std::pow(omega0, N_order);

    const double omega = grid.eigenvalue(j) + grid.eigenvalue(k);
    InteractionBound out;
    out.calibration = cn;
    out.measured = quad(omega);
    out.bound = cn * std::pow(omega, -N_order);
    return out;
}

namespace {

// Mbb[j][k] = int b^2 e_j e_k by collocation quadrature.
Eigen::MatrixXd bump_pair_matrix(const SpectralGrid& grid, const BumpFunction& bump) {
    const Eigen::VectorXd wb2 =
        (grid.quad_weight() * bump.samples.array().square()).matrix();
    return grid.synthesis_matrix().transpose() * wb2.asDiagonal() * grid.synthesis_matrix();
}

void attach_context(Gramian& g, const SpectralGrid& grid, const BumpFunction& bump) {
    g.bump_samples = bump.samples;
    g.grid_L = grid.L();
    g.grid_N = grid.N();
    g.grid_beta = grid.beta();
    g.obs_multiplier = grid.multiplier_matrix(bump.samples);
}

void finish_eigensolve(Gramian& g) {
    g.matrix = 0.5 * (g.matrix + g.matrix.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.matrix, Eigen::EigenvaluesOnly);
    g.lambda_min = es.eigenvalues().minCoeff();
    g.lambda_max = es.eigenvalues().maxCoeff();
    g.observable = g.lambda_min > 1e-10 * std::max(g.lambda_max, 0.0);
}

} // namespace

Gramian schrodinger_gramian(const SpectralGrid& grid, const BumpFunction& bump,
                            const TimeGrid& time_grid) {
    const int n = grid.N();
    const Eigen::MatrixXd mbb = bump_pair_matrix(grid, bump);

    // G_c[j][k] = Mbb[j][k] * sum_m w_m e^{i (l_k - l_j) t_m}, Hermitian.
    Eigen::MatrixXd re(n, n), im(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = j; k < n; ++k) {
            const double delta = grid.eigenvalues()(k) - grid.eigenvalues()(j);
            double cr = 0.0, ci = 0.0;
            for (int m = 0; m <= time_grid.M; ++m) {
                const double w = time_grid.weight(m);
                const double t = time_grid.node(m);
                cr += w * std::cos(delta * t);
                ci += w * std::sin(delta * t);
            }
            re(j, k) = mbb(j, k) * cr;
            re(k, j) = re(j, k);
            im(j, k) = mbb(j, k) * ci;
            im(k, j) = -im(j, k);
        }
    }

    Gramian g;
    g.lo = 1;
    g.hi = n;
    g.sigma = 0.0;
    g.time_grid = time_grid;
    attach_context(g, grid, bump);
    g.matrix.resize(2 * n, 2 * n);
    g.matrix << re, -im, im, re;
    finish_eigensolve(g);
    return g;
}

Gramian plate_gramian(const SpectralGrid& grid, const BumpFunction& bump,
                      const TimeGrid& time_grid) {
    const int n = grid.N();
    const Eigen::MatrixXd mbb = bump_pair_matrix(grid, bump);

    // Observation y(t) = b A0 z(t): on the H2 x H0 normalized basis the output
    // reduces to cos(l_j t) b e_j (position type) and sin(l_j t) b e_j
    // (velocity type), so the Gramian factors like the wave one.
    Eigen::MatrixXd C(time_grid.M + 1, 2 * n);
    for (int j = 0; j < n; ++j) {
        const double w = grid.eigenvalues()(j);
        for (int m = 0; m <= time_grid.M; ++m) {
            const double t = time_grid.node(m);
            C(m, j) = std::cos(w * t);
            C(m, n + j) = std::sin(w * t);
        }
    }
    Eigen::VectorXd wt(time_grid.M + 1);
    for (int m = 0; m <= time_grid.M; ++m) wt(m) = time_grid.weight(m);
    const Eigen::MatrixXd S = C.transpose() * wt.asDiagonal() * C;

    Gramian g;
    g.lo = 1;
    g.hi = n;
    g.sigma = 0.0;
    g.time_grid = time_grid;
    attach_context(g, grid, bump);
    g.matrix.resize(2 * n, 2 * n);
    for (int a = 0; a < 2 * n; ++a)
        for (int b = 0; b < 2 * n; ++b) g.matrix(a, b) = mbb(a % n, b % n) * S(a, b);
    finish_eigensolve(g);
    return g;
}

TransferBound plate_weak_observability_constant(const SpectralGrid& grid, const BumpFunction& bump,
                                                const CutoffProfile& profile,
                                                const TimeGrid& time_grid, double schr_constant) {
    if (schr_constant <= 0.0)
        throw std::invalid_argument("plate_weak_observability_constant: need a positive constant");
    if (profile.T > time_grid.T + 1e-12)
        throw std::invalid_argument("plate_weak_observability_constant: profile exceeds horizon");

    const int n = grid.N();
    const Eigen::MatrixXd mbb = bump_pair_matrix(grid, bump);

    // Interaction rows R[j][k] = l_j l_k |Mbb[j][k]| |int rho^2 e^{i(l_j+l_k)t}|;
    // |cross term| <= (max_j sum_k R[j][k]) / 2 * ||(z0,z1)||_{H0 x H-2}^2.
    const int M = profile.segments();
    const double dtp = profile.dt();
    const double om_max = 2.0 * grid.eigenvalue(n);
    if (dtp * om_max > 0.5)
        throw QuadratureResolutionError("plate_weak_observability_constant: profile too coarse");

    double max_row = 0.0;
    for (int j = 0; j < n; ++j) {
        double row = 0.0;
        for (int k = 0; k < n; ++k) {
            const double omega = grid.eigenvalues()(j) + grid.eigenvalues()(k);
            std::complex<double> acc(0.0, 0.0);
            for (int m = 0; m <= M; ++m) {
                const double w = (m == 0 || m == M) ? 0.5 * dtp : dtp;
                const double r2 = profile.samples(m) * profile.samples(m);
                const double t = m * dtp;
                acc += w * r2 * std::complex<double>(std::cos(omega * t), std::sin(omega * t));
            }
            row += grid.eigenvalues()(j) * grid.eigenvalues()(k) * std::abs(mbb(j, k)) *
                   std::abs(acc);
        }
        max_row = std::max(max_row, row);
    }

    TransferBound out;
    out.c = 0.5 * schr_constant;
    out.remainder = 0.5 * max_row;
    out.conclusive = out.remainder < out.c;
    out.direct_lambda_min = plate_gramian(grid, bump, time_grid).lambda_min;
    return out;
}

double eigen_ucp_check(const BumpFunction& bump, const SpectralGrid& grid) {
    double best = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= grid.N(); ++j) {
        const Eigen::VectorXd ej = grid.synthesis_matrix().col(j - 1);
        const double mass = std::sqrt(
            grid.quad_weight() * (bump.samples.array() * ej.array()).square().sum());
        best = std::min(best, mass);
    }
    return best;
}

} // namespace waveobs
