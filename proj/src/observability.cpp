#include "waveobs/observability.hpp"

#include "waveobs/smoothing.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

namespace waveobs {

ObservationWindow::ObservationWindow(std::vector<std::pair<double, double>> intervals_,
                                     double margin, double domain_length)
    : intervals(std::move(intervals_)), plateau_margin(margin) {
    if (intervals.empty()) throw std::invalid_argument("ObservationWindow: empty interval list");
    if (plateau_margin <= 0.0)
        throw std::invalid_argument("ObservationWindow: plateau_margin must be positive");
    std::sort(intervals.begin(), intervals.end());
    double prev_end = 0.0;
    for (auto& [a, b] : intervals) {
        if (!(a < b)) throw std::invalid_argument("ObservationWindow: degenerate interval");
        if (a < 0.0 || b > domain_length)
            throw std::invalid_argument("ObservationWindow: interval not contained in (0, L)");
        if (a < prev_end) throw std::invalid_argument("ObservationWindow: intervals overlap");
        prev_end = b;
    }
}

BumpFunction BumpFunction::ones(const SpectralGrid& grid) {
    return BumpFunction{Eigen::VectorXd::Ones(grid.quad_points())};
}

BumpFunction BumpFunction::from_window(const ObservationWindow& window, const SpectralGrid& grid) {
    const double m = window.plateau_margin;
    Eigen::VectorXd s(grid.quad_points());
    for (int q = 0; q < grid.quad_points(); ++q) {
        const double x = grid.nodes()(q);
        double val = 0.0;
        for (const auto& [a, b] : window.intervals) {
            double v;
            if (x >= a && x <= b) v = 1.0;
            else if (x > a - m && x < a) v = quintic_smoothstep((x - (a - m)) / m);
            else if (x > b && x < b + m) v = quintic_smoothstep(((b + m) - x) / m);
            else v = 0.0;
            val = std::max(val, v);
        }
        s(q) = val;
    }
    return BumpFunction{std::move(s)};
}

BumpFunction BumpFunction::from_samples(Eigen::VectorXd samples, const SpectralGrid& grid) {
    if (samples.size() != grid.quad_points())
        throw std::invalid_argument("BumpFunction: sample count mismatch");
    if ((samples.array() < -1e-12).any() || (samples.array() > 1.0 + 1e-12).any())
        throw std::invalid_argument("BumpFunction: samples must lie in [0, 1]");
    return BumpFunction{std::move(samples)};
}

ObservationSignal::ObservationSignal(TimeGrid tg, std::vector<State> vals)
    : time_grid(tg), values(std::move(vals)) {
    if (values.size() != static_cast<size_t>(time_grid.M + 1))
        throw std::invalid_argument("ObservationSignal: need M+1 samples");
    for (const State& s : values)
        if (s.u.cwiseAbs().maxCoeff() != 0.0)
            throw std::invalid_argument("ObservationSignal: position components must vanish");
}

ObservationSignal ObservationSignal::zero(const TimeGrid& tg, int n) {
    return ObservationSignal(tg, std::vector<State>(static_cast<size_t>(tg.M + 1), State::zero(n)));
}

double signal_l2_norm(const ObservationSignal& signal, const SpectralGrid& grid, double sigma) {
    double acc = 0.0;
    for (int m = 0; m <= signal.time_grid.M; ++m) {
        const State& s = signal.values[static_cast<size_t>(m)];
        acc += signal.time_grid.weight(m) * inner_x_sigma(s, s, grid, sigma);
    }
    return std::sqrt(acc);
}

double Gramian::cobs() const {
    if (!observable)
        throw SingularGramianError("Gramian is not observable at this truncation");
    return 1.0 / std::sqrt(lambda_min);
}

State observe(const State& state, const BumpFunction& bump, const SpectralGrid& grid) {
    Eigen::VectorXd vphys = grid.to_physical(state.v);
    vphys.array() *= bump.samples.array();
    return State(Eigen::VectorXd::Zero(grid.N()), grid.to_coeffs(vphys));
}

ObservationSignal observe_trajectory(const std::vector<State>& states, const BumpFunction& bump,
                                     const SpectralGrid& grid, const TimeGrid& time_grid) {
    std::vector<State> out;
    out.reserve(states.size());
    for (const State& s : states) out.push_back(observe(s, bump, grid));
    return ObservationSignal(time_grid, std::move(out));
}

namespace {

// Velocity scalar of C e^{tA} applied to the X^sigma-normalized basis vector of
// the given type and mode: the whole evolution stays in mode j, so a single
// time-dependent coefficient describes it.
//
// position-type: vel(t) = -w_j sin(w_j t) * (l_j+b)^{-(1+sigma)/2}
// velocity-type: vel(t) =      cos(w_j t) * (l_j+b)^{-sigma/2}
struct BasisScalars {
    Eigen::MatrixXd C;       // (M+1) x dim
    Eigen::VectorXd scale_u; // normalization of position-type basis states
    Eigen::VectorXd scale_v; // normalization of velocity-type basis states
};

BasisScalars basis_scalars(const SpectralGrid& grid, const TimeGrid& tg, double sigma, int lo,
                           int hi) {
    const int m = hi - lo + 1;
    BasisScalars out;
    out.C.resize(tg.M + 1, 2 * m);
    out.scale_u.resize(m);
    out.scale_v.resize(m);
    for (int k = 0; k < m; ++k) {
        const int j = lo + k;
        const double lb = grid.eigenvalue(j) + grid.beta();
        const double w = std::sqrt(lb);
        out.scale_u(k) = std::pow(lb, -(1.0 + sigma) / 2.0);
        out.scale_v(k) = std::pow(lb, -sigma / 2.0);
        for (int i = 0; i <= tg.M; ++i) {
            const double t = tg.node(i);
            out.C(i, k) = -w * std::sin(w * t) * out.scale_u(k);
            out.C(i, m + k) = std::cos(w * t) * out.scale_v(k);
        }
    }
    return out;
}

} // namespace

Gramian assemble_gramian(const SpectralGrid& grid, const BumpFunction& bump,
                         const TimeGrid& time_grid, double sigma, int lo, int hi) {
    if (lo < 1 || hi > grid.N() || lo > hi)
        throw std::invalid_argument("assemble_gramian: subspace out of range");

    Gramian g;
    g.lo = lo;
    g.hi = hi;
    g.sigma = sigma;
    g.time_grid = time_grid;
    g.bump_samples = bump.samples;
    g.grid_L = grid.L();
    g.grid_N = grid.N();
    g.grid_beta = grid.beta();
    g.obs_multiplier = grid.multiplier_matrix(bump.samples);

    // Outputs of C live in the velocity slot only, so the X^sigma pairing of two
    // observed basis evolutions factors into a mode-coupling weight
    // K = B^T D_sigma B and a time correlation of per-mode oscillations.
    const Eigen::ArrayXd lb = grid.eigenvalues().array() + grid.beta();
    const Eigen::VectorXd dsig = lb.pow(sigma).matrix();
    const Eigen::MatrixXd K =
        g.obs_multiplier.transpose() * dsig.asDiagonal() * g.obs_multiplier;

    const BasisScalars bs = basis_scalars(grid, time_grid, sigma, lo, hi);
    Eigen::VectorXd w(time_grid.M + 1);
    for (int i = 0; i <= time_grid.M; ++i) w(i) = time_grid.weight(i);
    const Eigen::MatrixXd S = bs.C.transpose() * w.asDiagonal() * bs.C;

    const int m = hi - lo + 1;
    g.matrix.resize(2 * m, 2 * m);
    for (int a = 0; a < 2 * m; ++a) {
        const int ja = lo - 1 + (a % m);
        for (int b = 0; b < 2 * m; ++b) {
            const int jb = lo - 1 + (b % m);
            g.matrix(a, b) = K(ja, jb) * S(a, b);
        }
    }
    g.matrix = 0.5 * (g.matrix + g.matrix.transpose()).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.matrix, Eigen::EigenvaluesOnly);
    g.lambda_min = es.eigenvalues().minCoeff();
    g.lambda_max = es.eigenvalues().maxCoeff();
    g.observable = g.lambda_min > 1e-10 * std::max(g.lambda_max, 0.0);
    return g;
}

State pseudo_inverse_apply(const Gramian& gramian, const ObservationSignal& signal,
                           const SpectralGrid& grid, const TimeGrid& time_grid, double sigma) {
    if (grid.N() != gramian.grid_N || grid.L() != gramian.grid_L ||
        grid.beta() != gramian.grid_beta)
        throw std::invalid_argument("pseudo_inverse_apply: grid does not match the Gramian");
    if (time_grid.M != gramian.time_grid.M || time_grid.T != gramian.time_grid.T)
        throw std::invalid_argument("pseudo_inverse_apply: time grid does not match the Gramian");
    if (sigma != gramian.sigma)
        throw std::invalid_argument("pseudo_inverse_apply: sigma does not match the Gramian");
    if (signal.time_grid.M != time_grid.M || signal.time_grid.T != time_grid.T)
        throw std::invalid_argument("pseudo_inverse_apply: signal sampled on a different grid");
    if (!gramian.observable)
        throw SingularGramianError("pseudo_inverse_apply: Gramian not observable at this truncation");

    const int lo = gramian.lo, hi = gramian.hi, m = hi - lo + 1;
    const Eigen::ArrayXd lb = grid.eigenvalues().array() + grid.beta();
    const Eigen::VectorXd dsig = lb.pow(sigma).matrix();
    const BasisScalars bs = basis_scalars(grid, time_grid, sigma, lo, hi);

    // r_a = sum_m w_m < C e^{t_m A} E_a, s(t_m) >_{X^sigma}
    //     = sum_m w_m c_a(t_m) (B^T D_sigma s_m)_{j_a}
    Eigen::VectorXd r = Eigen::VectorXd::Zero(2 * m);
    for (int i = 0; i <= time_grid.M; ++i) {
        const double wi = time_grid.weight(i);
        const Eigen::VectorXd z =
            gramian.obs_multiplier.transpose() * (dsig.asDiagonal() * signal.values[static_cast<size_t>(i)].v);
        for (int k = 0; k < m; ++k) {
            r(k) += wi * bs.C(i, k) * z(lo - 1 + k);
            r(m + k) += wi * bs.C(i, m + k) * z(lo - 1 + k);
        }
    }

    const Eigen::VectorXd alpha = gramian.matrix.ldlt().solve(r);

    State w0 = State::zero(grid.N());
    for (int k = 0; k < m; ++k) {
        w0.u(lo - 1 + k) = alpha(k) * bs.scale_u(k);
        w0.v(lo - 1 + k) = alpha(m + k) * bs.scale_v(k);
    }
    return w0;
}

namespace {

// First entry time of the ray from x0 with direction d (+1/-1) into the open
// window, on the billiard [0, L]. Unfold to the line: the reflected position
// is fold(x0 + d t) with fold of period 2L, so entry times are distances to
// the preimage intervals (2kL + a, 2kL + b) and (2kL + 2L - b, 2kL + 2L - a).
double first_entry_time(double x0, int d, const std::vector<std::pair<double, double>>& win,
                        double L) {
    const double y0 = d > 0 ? x0 : -x0;  // mirror so motion is always to the right
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [a, b] : win) {
        for (int k = -2; k <= 2; ++k) {
            for (const auto& [lo, hi] : {std::pair<double, double>{2 * k * L + a, 2 * k * L + b},
                                         {2 * k * L - b, 2 * k * L - a}}) {
                if (y0 > lo && y0 < hi) return 0.0;
                if (hi <= y0) continue;
                best = std::min(best, lo - y0);
            }
        }
    }
    return std::max(best, 0.0);
}

} // namespace

double gcc_time(const ObservationWindow& window, double L, int samples) {
    if (samples < 2) throw std::invalid_argument("gcc_time: need at least 2 samples");
    double worst = 0.0;
    for (int i = 0; i <= samples; ++i) {
        const double x0 = i * L / samples;
        worst = std::max(worst, first_entry_time(x0, +1, window.intervals, L));
        worst = std::max(worst, first_entry_time(x0, -1, window.intervals, L));
    }
    return worst;
}

double commutator_check(const BumpFunction& bump, const SpectralGrid& grid, double sigma,
                        double epsilon) {
    if (sigma < 0.0 || sigma > 1.0 || std::abs(sigma - 0.5) < 1e-12)
        throw std::invalid_argument("commutator_check: sigma must lie in [0,1] away from 1/2");
    if (epsilon <= 0.0 || epsilon > 1.0)
        throw std::invalid_argument("commutator_check: epsilon must lie in (0, 1]");

    const Eigen::MatrixXd B = grid.multiplier_matrix(bump.samples);
    const Eigen::VectorXd lam = grid.eigenvalues();
    // [b, Delta] in coefficients: Delta = -diag(lambda), so Lambda B - B Lambda.
    Eigen::MatrixXd C = lam.asDiagonal() * B - B * lam.asDiagonal();

    const Eigen::ArrayXd lb = lam.array() + grid.beta();
    const Eigen::VectorXd w_out = lb.pow((sigma + epsilon) / 2.0).matrix();
    const Eigen::VectorXd w_in = lb.pow(-(sigma + 2.0) / 2.0).matrix();
    const Eigen::MatrixXd weighted = w_out.asDiagonal() * C * w_in.asDiagonal();

    Eigen::BDCSVD<Eigen::MatrixXd> svd(weighted);
    return svd.singularValues()(0);
}

} // namespace waveobs
