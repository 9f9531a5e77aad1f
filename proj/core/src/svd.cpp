#include "topamp/svd.hpp"

#include <stdexcept>

namespace topamp {

SvdTriple singular_decomposition(const DynamicalMatrix& dm, int winding) {
    const int d = dm.dim();
    if (winding < 0 || winding > d)
        throw std::invalid_argument("singular_decomposition: winding must be in [0, dim]");

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(dm.M, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SvdTriple out;
    out.U = svd.matrixU();
    out.V = svd.matrixV();
    out.S = svd.singularValues();  // Eigen returns descending order

    for (int i = d - winding; i < d; ++i) out.edge_set.push_back(i);
    if (winding > 0) {
        out.delta_obc = out.S(d - winding);
        out.delta_pbc = (winding < d) ? out.S(d - winding - 1) : 0.0;
        out.bbc_broken = *out.delta_obc >= out.delta_pbc;
    } else {
        out.delta_pbc = out.S(d - 1);
    }
    return out;
}

}  // namespace topamp
