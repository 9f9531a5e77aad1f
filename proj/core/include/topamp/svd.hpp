#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "topamp/dynamical_matrix.hpp"

namespace topamp {

/// Ordered singular decomposition M = U diag(S) V^dag with the topological
/// edge-channel bookkeeping. S is descending; the edge set holds the indices
/// of the W smallest singular values.
struct SvdTriple {
    Eigen::MatrixXcd U;
    Eigen::VectorXd S;
    Eigen::MatrixXcd V;
    std::vector<int> edge_set;            // indices into S, ascending index order
    std::optional<double> delta_obc;      // max over edge set; absent when W = 0
    double delta_pbc = 0.0;               // smallest bulk singular value
    bool bbc_broken = false;              // delta_obc >= delta_pbc

    /// Right singular vector v_n (column n of V).
    Eigen::VectorXcd right_vector(int n) const { return V.col(n); }
};

/// SVD of the dynamical matrix with `winding` edge channels split off.
/// Throws std::invalid_argument when winding < 0 or winding > dim.
SvdTriple singular_decomposition(const DynamicalMatrix& dm, int winding);

}  // namespace topamp
