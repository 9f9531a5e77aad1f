#pragma once

#include <Eigen/Dense>
#include <complex>

#include "topamp/waveguide.hpp"

namespace topamp {

/// Waveguide-mediated coherent (J) and incoherent (Gamma) coupling matrices.
/// Both vanish identically for r_i < r_j (strict non-reciprocity) and their
/// entries decay at least as exp(-|r_i - r_j| / l_kappa).
struct CouplingMatrices {
    Eigen::MatrixXcd J;
    Eigen::MatrixXcd Gamma;

    int n_sites() const { return static_cast<int>(J.rows()); }
};

/// Collective self-energy of a cavity pair mediated by the chiral bath:
///   Sigma_ij = -i sum_l (Gamma_l/2) e^{i k_l (r_i - r_j) - |r_i - r_j|/l_kappa}
///              (1 + sign(r_i - r_j)),
/// with sign(0) = 0, so Sigma_ii = -i Gamma/2. J_ij = Re Sigma_ij and
/// Gamma_ij = -2 Im Sigma_ij.
std::complex<double> self_energy(const WaveguideSpec& wg, double ri, double rj);

/// Pairwise self-energies over the whole lattice. For increasing positions the
/// result is lower-triangular including the diagonal.
CouplingMatrices coupling_matrices(const WaveguideSpec& wg, const LatticeSpec& lat);

}  // namespace topamp
