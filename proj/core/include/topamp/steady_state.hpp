#pragma once

#include <Eigen/Dense>

#include "topamp/dynamical_matrix.hpp"
#include "topamp/svd.hpp"

namespace topamp {

enum class SteadyStateMethod { direct_solve, svd_sum, svd_edge_only };

struct SteadyState {
    Eigen::VectorXcd b;          // length N (normal) or 2N (bogoliubov)
    SteadyStateMethod method = SteadyStateMethod::direct_solve;
    double residual = 0.0;       // ||M b - Omega|| / ||Omega|| (direct_solve)
};

/// Steady-state coherences b_ss = M^{-1} Omega. direct_solve uses an LU
/// factorization; svd_sum evaluates sum_n v_n (u_n^dag Omega) / s_n in full;
/// svd_edge_only truncates the sum to the edge set of `svd`.
/// Throws std::runtime_error when M is singular at working precision
/// (s_n < 1e-14 * s_1, "at threshold/transition") and std::invalid_argument
/// on a size mismatch or a missing edge set.
SteadyState steady_state(const DynamicalMatrix& dm, const Eigen::VectorXcd& omega,
                         SteadyStateMethod method, const SvdTriple* svd = nullptr);

/// Two-point Green's function G(omega) = (i omega I - i M)^{-1}. At omega = 0
/// this inverts -iM, so G(0) (i M) = -I. Throws std::runtime_error when
/// i(omega - M) is numerically singular.
Eigen::MatrixXcd greens_function(const DynamicalMatrix& dm, double omega);

}  // namespace topamp
