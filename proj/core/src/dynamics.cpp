#include "topamp/dynamics.hpp"

#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <stdexcept>

#include "topamp/bloch.hpp"
#include "topamp/couplings.hpp"
#include "topamp/steady_state.hpp"

namespace topamp {

Eigen::MatrixXcd propagator(const Eigen::MatrixXcd& m, double t) {
    const std::complex<double> i_unit{0.0, 1.0};
    const int d = static_cast<int>(m.rows());

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, true);
    if (es.info() == Eigen::Success) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(es.eigenvectors());
        const double cond = svd.singularValues()(0) / svd.singularValues()(d - 1);
        if (std::isfinite(cond) && cond < 1e8) {
            Eigen::VectorXcd phases(d);
            for (int i = 0; i < d; ++i) phases(i) = std::exp(-i_unit * es.eigenvalues()(i) * t);
            Eigen::PartialPivLU<Eigen::MatrixXcd> lu(es.eigenvectors());
            return es.eigenvectors() * phases.asDiagonal() * lu.inverse();
        }
    }
    // defective / ill-conditioned eigenbasis: scaling-and-squaring
    return (-i_unit * t * m).exp();
}

Trajectory evolve(const DynamicalMatrix& dm, const Eigen::VectorXcd& omega,
                  const Eigen::VectorXcd& b0, const std::vector<double>& times) {
    const int d = dm.dim();
    if (b0.size() != d) throw std::invalid_argument("evolve: b0 size mismatch");
    if (times.empty()) throw std::invalid_argument("evolve: empty time grid");
    for (size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw std::invalid_argument("evolve: times must be strictly increasing");
    if (!(times.front() >= 0.0)) throw std::invalid_argument("evolve: times must be >= 0");

    Eigen::VectorXcd bss = Eigen::VectorXcd::Zero(d);
    if (omega.size() > 0 && omega.norm() > 0.0) {
        if (omega.size() != d) throw std::invalid_argument("evolve: omega size mismatch");
        bss = steady_state(dm, omega, SteadyStateMethod::direct_solve).b;
    }

    Trajectory traj;
    traj.times = times;
    traj.states.reserve(times.size());

    const std::complex<double> i_unit{0.0, 1.0};
    Eigen::VectorXcd transient = b0 - bss;

    // Decide the propagation route once per matrix: diagonalize when the
    // eigenbasis is well conditioned, otherwise chain scaling-and-squaring
    // exponentials between consecutive output times.
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(dm.M, true);
    bool use_eigen = false;
    Eigen::VectorXcd coeff;
    if (es.info() == Eigen::Success) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(es.eigenvectors());
        const double cond = svd.singularValues()(0) / svd.singularValues()(d - 1);
        if (std::isfinite(cond) && cond < 1e8) {
            use_eigen = true;
            coeff = es.eigenvectors().partialPivLu().solve(transient);
        }
    }

    if (use_eigen) {
        for (double t : times) {
            Eigen::VectorXcd phased(d);
            for (int i = 0; i < d; ++i)
                phased(i) = coeff(i) * std::exp(-i_unit * es.eigenvalues()(i) * t);
            traj.states.push_back(es.eigenvectors() * phased + bss);
        }
    } else {
        double t_prev = 0.0;
        for (double t : times) {
            const double dt = t - t_prev;
            if (dt > 0.0) transient = ((-i_unit * dt * dm.M).exp() * transient).eval();
            t_prev = t;
            traj.states.push_back(transient + bss);
        }
    }
    return traj;
}

std::vector<double> default_time_grid(int n_points, double t_min, double t_max) {
    std::vector<double> ts(n_points);
    const double ratio = std::log(t_max / t_min);
    for (int i = 0; i < n_points; ++i)
        ts[i] = t_min * std::exp(ratio * i / (n_points - 1));
    return ts;
}

ProjectionSeries projections(const Trajectory& traj, const SvdTriple& svd) {
    const int d = static_cast<int>(svd.V.rows());
    if (traj.states.empty() || traj.states.front().size() != d)
        throw std::invalid_argument("projections: dimension mismatch");
    ProjectionSeries out;
    out.edge_indices = svd.edge_set;
    out.p.resize(static_cast<int>(traj.states.size()), d);
    for (size_t ti = 0; ti < traj.states.size(); ++ti) {
        const Eigen::VectorXcd amp = svd.V.adjoint() * traj.states[ti];
        out.p.row(static_cast<int>(ti)) = amp.cwiseAbs2().transpose();
    }
    return out;
}

std::vector<double> photon_number(const Trajectory& traj) {
    std::vector<double> nph;
    nph.reserve(traj.states.size());
    for (const auto& s : traj.states) nph.push_back(s.squaredNorm());
    return nph;
}

GapScalingTable gap_scaling(const WaveguideSpec& wg, const DriveSpec& drive,
                            const std::vector<int>& sizes) {
    if (drive.g_s != 0.0)
        throw std::invalid_argument("gap_scaling: defined for the g_s = 0 regime");
    const BlochSymbol sym{wg, drive.pump};
    const WindingResult w = winding_scalar(sym);
    if (w.gap_closed) throw std::runtime_error("gap_scaling: bulk gap closed, W undefined");

    GapScalingTable table;
    table.winding = w.W;
    std::vector<double> xs, ys;
    for (int n : sizes) {
        const auto cm = coupling_matrices(wg, LatticeSpec::equally_spaced(n));
        const auto dm = build_dynamical_matrix(cm, drive);
        const auto svd = singular_decomposition(dm, w.W);
        GapScalingRow row;
        row.n_sites = n;
        row.delta_obc = svd.delta_obc;
        row.delta_pbc = svd.delta_pbc;
        row.bbc_broken = svd.bbc_broken;
        table.rows.push_back(row);
        if (row.delta_obc && *row.delta_obc > 0.0) {
            xs.push_back(static_cast<double>(n));
            ys.push_back(std::log(*row.delta_obc));
        }
    }

    if (xs.size() >= 2) {
        const double n = static_cast<double>(xs.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        table.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        table.intercept = (sy - table.slope * sx) / n;
        double ss_res = 0, ss_tot = 0;
        const double mean = sy / n;
        for (size_t i = 0; i < xs.size(); ++i) {
            const double fit = table.intercept + table.slope * xs[i];
            ss_res += (ys[i] - fit) * (ys[i] - fit);
            ss_tot += (ys[i] - mean) * (ys[i] - mean);
        }
        table.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    }
    return table;
}

}  // namespace topamp
