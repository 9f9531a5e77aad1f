#include "topamp/steady_state.hpp"

#include <stdexcept>

namespace topamp {

namespace {

void check_not_singular(const SvdTriple& svd) {
    const int d = static_cast<int>(svd.S.size());
    if (svd.S(d - 1) < 1e-14 * svd.S(0))
        throw std::runtime_error("steady_state: dynamical matrix singular at threshold/transition");
}

}  // namespace

SteadyState steady_state(const DynamicalMatrix& dm, const Eigen::VectorXcd& omega,
                         SteadyStateMethod method, const SvdTriple* svd) {
    if (omega.size() != dm.dim())
        throw std::invalid_argument("steady_state: drive vector size mismatch");

    SteadyState out;
    out.method = method;
    switch (method) {
        case SteadyStateMethod::direct_solve: {
            Eigen::PartialPivLU<Eigen::MatrixXcd> lu(dm.M);
            out.b = lu.solve(omega);
            const double onorm = omega.norm();
            const double rnorm = (dm.M * out.b - omega).norm();
            out.residual = onorm > 0.0 ? rnorm / onorm : 0.0;
            const double backward = rnorm / (dm.M.norm() * std::max(out.b.norm(), 1e-300));
            if (!out.b.allFinite() || backward > 1e-10) {
                // solve went bad; produce the precise singularity diagnostic
                check_not_singular(svd ? *svd : singular_decomposition(dm, 0));
                throw std::runtime_error("steady_state: direct solve failed (backward residual " +
                                         std::to_string(backward) + ")");
            }
            break;
        }
        case SteadyStateMethod::svd_sum: {
            SvdTriple local = svd ? *svd : singular_decomposition(dm, 0);
            check_not_singular(local);
            const Eigen::VectorXcd proj = local.U.adjoint() * omega;
            out.b = local.V * (proj.array() / local.S.array().cast<std::complex<double>>()).matrix();
            break;
        }
        case SteadyStateMethod::svd_edge_only: {
            if (!svd)
                throw std::invalid_argument("steady_state: svd_edge_only needs an SvdTriple");
            out.b = Eigen::VectorXcd::Zero(dm.dim());
            for (int n : svd->edge_set) {
                const std::complex<double> amp = svd->U.col(n).adjoint() * omega;
                out.b += svd->V.col(n) * (amp / svd->S(n));
            }
            break;
        }
    }
    return out;
}

Eigen::MatrixXcd greens_function(const DynamicalMatrix& dm, double omega) {
    const int d = dm.dim();
    const std::complex<double> i_unit{0.0, 1.0};
    Eigen::MatrixXcd a = i_unit * (omega * Eigen::MatrixXcd::Identity(d, d) - dm.M);
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(a);
    if (!lu.isInvertible())
        throw std::runtime_error("greens_function: i(omega - M) is singular at this frequency");
    return lu.inverse();
}

}  // namespace topamp
