#pragma once

#include "waveobs/observability.hpp"

#include <complex>

namespace waveobs {

/// Hinged plate on the interval: A0 = -Delta with Dirichlet conditions, so the
/// plate generator squares the wave eigenbasis and the per-mode frequency is
/// lambda_j itself (not its square root).
struct PlateSystem {
    SpectralGrid grid;

    explicit PlateSystem(SpectralGrid g) : grid(std::move(g)) {}
};

/// Half-wave splitting z+- = (z0 -+ i A^{-1} z1)/2; complex coefficients stay
/// inside this module, the public State type remains real.
struct SplitPair {
    Eigen::VectorXcd z_plus;
    Eigen::VectorXcd z_minus;
};

/// || (z0, z1) ||_{H_s x H_{s-2}} = sqrt( sum l_j^s z0_j^2 + l_j^{s-2} z1_j^2 ).
double plate_norm(const State& state, const SpectralGrid& grid, double s);

/// e^{t A_plate}: per-mode rotation with frequency lambda_j.
State plate_propagate(const State& state, double t, const SpectralGrid& grid);

SplitPair split(const State& state, const SpectralGrid& grid);
/// Inverse of split: z0 = z+ + z-, z1 = i A (z+ - z-).
std::pair<Eigen::VectorXcd, Eigen::VectorXcd> unsplit(const SplitPair& pair,
                                                      const SpectralGrid& grid);
/// unsplit with the imaginary residue dropped; exact for conjugate pairs.
State unsplit_real(const SplitPair& pair, const SpectralGrid& grid);

/// Smooth time cutoff equal to 1 on (T_inner_start, T_inner_end), supported in
/// (0, T). Realized as a Gaussian-mollified indicator (erf difference), so the
/// profile is numerically C-infinity with no interior junctions and its
/// squared transform decays like a Gaussian through the tested frequency band.
struct CutoffProfile {
    double T_inner_start;
    double T_inner_end;
    double T;
    Eigen::VectorXd samples;  // rho at n_samples+1 uniform nodes on [0, T]
    double mollifier_sigma;   // derived Gaussian scale
    double half_width;        // derived indicator half-width

    CutoffProfile(double inner_start, double inner_end, double T_, int n_samples = 8192);

    int segments() const { return static_cast<int>(samples.size()) - 1; }
    double dt() const { return T / segments(); }
};

class QuadratureResolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InteractionBound {
    double measured;     // | int rho^2 e^{i (l_j + l_k) t} dt |
    double bound;        // C_N (l_j + l_k)^{-N}
    double calibration;  // C_N, fixed once from the smallest frequency pair
};

/// Oscillatory-decay check for the interaction term. C_N is calibrated from
/// the (1,1) pair; the returned bound must dominate the measured quadrature
/// for every other pair. Throws QuadratureResolutionError when
/// dt (l_j + l_k) > 0.5.
InteractionBound interaction_bound(const CutoffProfile& profile, int j, int k, int N_order,
                                   const SpectralGrid& grid);

/// Gramian of psi0 -> b e^{i t A0} psi0 in L^2 over modes 1..N. The complex
/// Hermitian form is stored as its real 2N x 2N symmetric realification
/// [[Re, -Im], [Im, Re]]; eigenvalues (and lambda_min) are those of the
/// complex Gramian with doubled multiplicity.
Gramian schrodinger_gramian(const SpectralGrid& grid, const BumpFunction& bump,
                            const TimeGrid& time_grid);

/// Direct plate Gramian with observation y(t) = b A0 z(t) in L^2, over the
/// H_2 x H_0 normalized basis of modes 1..N.
Gramian plate_gramian(const SpectralGrid& grid, const BumpFunction& bump,
                      const TimeGrid& time_grid);

struct TransferBound {
    double c;                  // coefficient of ||.||_{H2 x H0}^2
    double remainder;          // coefficient of the lower-order ||.||_{H0 x H-2}^2
    bool conclusive;           // remainder < c
    double direct_lambda_min;  // lambda_min of the directly assembled plate Gramian
};

/// Schroedinger-to-plate observability transfer: from the Schroedinger Gramian
/// constant on the inner window, derive c with
///   int_0^T ||C e^{tA}(z0,z1)||^2 >= c ||(z0,z1)||_{H2xH0}^2
///                                    - remainder ||(z0,z1)||_{H0xH-2}^2,
/// the remainder summed from interaction_bound quadratures over mode pairs.
/// schr_constant must come from schrodinger_gramian on (0, T~) with
/// T~ <= T_inner_end - T_inner_start.
TransferBound plate_weak_observability_constant(const SpectralGrid& grid, const BumpFunction& bump,
                                                const CutoffProfile& profile,
                                                const TimeGrid& time_grid, double schr_constant);

/// min_j || b e_j ||_{L^2}; strictly positive certifies the discrete
/// eigenfunction unique-continuation assumption.
double eigen_ucp_check(const BumpFunction& bump, const SpectralGrid& grid);

} // namespace waveobs
