#pragma once

#include <Eigen/Dense>

#include "topamp/couplings.hpp"

namespace topamp {

/// Excitation mechanisms entering the dynamical matrix. All rates in units of
/// the total waveguide decay rate Gamma.
struct DriveSpec {
    double pump = 0.0;           // incoherent pump rate P
    Eigen::VectorXcd omega;      // coherent drive amplitudes (empty = no drive)
    double g_s = 0.0;            // local parametric amplitude
    double delta = 0.0;          // detuning Delta = omega_c - 2 omega_p
    int parametric_factor = 1;   // 1 as printed in the source model, 2 commutator-derived
};

/// Coherent drive concentrated on one site. The upstream (smallest-position)
/// site feeds the amplifying chain, so site 0 is the default.
Eigen::VectorXcd edge_drive(int n_sites, double amplitude = 1.0, int site = 0);

enum class MatrixKind { normal, bogoliubov };

/// Non-Hermitian generator of the coherence dynamics, d b/dt = -i M b + i Omega.
/// normal: N x N with M_ij = J_ij - i Gamma_ij/2 + (i P/2 + Delta) delta_ij.
/// bogoliubov: 2N x 2N acting on (<b>, <b^dag>) with the particle-hole block
/// structure [[H + Delta, f g_s], [-f g_s, -conj(H + Delta)]].
struct DynamicalMatrix {
    MatrixKind kind = MatrixKind::normal;
    Eigen::MatrixXcd M;
    int n_sites = 0;

    int dim() const { return static_cast<int>(M.rows()); }
};

/// Normal-kind matrix; throws std::invalid_argument when drive.g_s != 0
/// (use build_bogoliubov_matrix instead).
DynamicalMatrix build_dynamical_matrix(const CouplingMatrices& cm, const DriveSpec& drive);

/// 2N x 2N Bogoliubov matrix. With g_s = 0 the blocks decouple and the upper
/// left one equals build_dynamical_matrix (plus Delta on the diagonal).
DynamicalMatrix build_bogoliubov_matrix(const CouplingMatrices& cm, const DriveSpec& drive);

/// Hermitian block anti-diagonal [[0, M], [M^dag, 0]]; its eigenvalues are the
/// singular values of M in +/- pairs.
Eigen::MatrixXcd doubled_hamiltonian(const DynamicalMatrix& dm);

inline constexpr double kStabilityTol = 1e-9;  // absolute, units of Gamma

struct StabilityReport {
    bool stable = true;
    double max_imag = 0.0;  // max over eigenvalues of Im(lambda)
};

/// Dynamically unstable when some eigenvalue of M has Im(lambda) > tol.
StabilityReport stability(const DynamicalMatrix& dm, double tol = kStabilityTol);

}  // namespace topamp
