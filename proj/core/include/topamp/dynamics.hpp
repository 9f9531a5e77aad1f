#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "topamp/dynamical_matrix.hpp"
#include "topamp/svd.hpp"
#include "topamp/waveguide.hpp"

namespace topamp {

/// Coherence trajectory b(t) = e^{-i M t} (b0 - b_ss) + b_ss (closed form of
/// the linear equations of motion; b_ss = 0 when the drive is absent).
struct Trajectory {
    std::vector<double> times;                // increasing, units of 1/Gamma
    std::vector<Eigen::VectorXcd> states;     // one per time
};

/// Propagator e^{-i M t}. Uses an eigendecomposition when the eigenvector
/// basis is well conditioned (< 1e8), otherwise scaling-and-squaring. The
/// model's triangular matrices are defective, so the second path is the one
/// normally taken.
Eigen::MatrixXcd propagator(const Eigen::MatrixXcd& m, double t);

/// Evolve from b0 through the given increasing times. omega may be empty
/// (no drive). states[0] is b0 exactly when times[0] == 0.
Trajectory evolve(const DynamicalMatrix& dm, const Eigen::VectorXcd& omega,
                  const Eigen::VectorXcd& b0, const std::vector<double>& times);

/// Log-spaced default time grid, 200 points in [1e-2, 1e3] / Gamma.
std::vector<double> default_time_grid(int n_points = 200, double t_min = 1e-2,
                                      double t_max = 1e3);

/// Projections p_n(t) = |<b(t)|v_n>|^2 onto the right singular basis. Not
/// bounded by 1: the evolution is non-Hermitian.
struct ProjectionSeries {
    Eigen::MatrixXd p;              // times x dim
    std::vector<int> edge_indices;  // copy of the triple's edge set
};

ProjectionSeries projections(const Trajectory& traj, const SvdTriple& svd);

/// Total coherent photon number N_ph(t) = sum_r |b_r(t)|^2.
std::vector<double> photon_number(const Trajectory& traj);

struct GapScalingRow {
    int n_sites = 0;
    std::optional<double> delta_obc;
    double delta_pbc = 0.0;
    bool bbc_broken = false;
};

/// Per-size singular-value gaps at fixed waveguide/drive parameters, with a
/// least-squares fit of log(delta_obc) against N.
struct GapScalingTable {
    int winding = 0;
    std::vector<GapScalingRow> rows;
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

GapScalingTable gap_scaling(const WaveguideSpec& wg, const DriveSpec& drive,
                            const std::vector<int>& sizes);

}  // namespace topamp
