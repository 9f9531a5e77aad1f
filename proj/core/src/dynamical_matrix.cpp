#include "topamp/dynamical_matrix.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#ifdef TOPAMP_HAVE_LAPACKE
#include <lapacke.h>
#endif

namespace topamp {

Eigen::VectorXcd edge_drive(int n_sites, double amplitude, int site) {
    if (site < 0 || site >= n_sites)
        throw std::invalid_argument("edge_drive: site out of range");
    Eigen::VectorXcd om = Eigen::VectorXcd::Zero(n_sites);
    om(site) = amplitude;
    return om;
}

namespace {

Eigen::MatrixXcd normal_block(const CouplingMatrices& cm, const DriveSpec& drive) {
    const int n = cm.n_sites();
    const std::complex<double> diag(drive.delta, 0.5 * drive.pump);
    Eigen::MatrixXcd m = cm.J - std::complex<double>(0.0, 0.5) * cm.Gamma;
    m += diag * Eigen::MatrixXcd::Identity(n, n);
    return m;
}

}  // namespace

DynamicalMatrix build_dynamical_matrix(const CouplingMatrices& cm, const DriveSpec& drive) {
    if (drive.g_s != 0.0)
        throw std::invalid_argument(
            "build_dynamical_matrix: g_s != 0 requires build_bogoliubov_matrix");
    DynamicalMatrix dm;
    dm.kind = MatrixKind::normal;
    dm.n_sites = cm.n_sites();
    dm.M = normal_block(cm, drive);
    return dm;
}

DynamicalMatrix build_bogoliubov_matrix(const CouplingMatrices& cm, const DriveSpec& drive) {
    if (drive.parametric_factor != 1 && drive.parametric_factor != 2)
        throw std::invalid_argument("build_bogoliubov_matrix: parametric_factor must be 1 or 2");
    const int n = cm.n_sites();
    const Eigen::MatrixXcd h = normal_block(cm, drive);
    const double g = drive.parametric_factor * drive.g_s;
    DynamicalMatrix dm;
    dm.kind = MatrixKind::bogoliubov;
    dm.n_sites = n;
    dm.M = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    dm.M.topLeftCorner(n, n) = h;
    dm.M.bottomRightCorner(n, n) = -h.conjugate();
    dm.M.topRightCorner(n, n) = g * Eigen::MatrixXcd::Identity(n, n);
    dm.M.bottomLeftCorner(n, n) = -g * Eigen::MatrixXcd::Identity(n, n);
    return dm;
}

Eigen::MatrixXcd doubled_hamiltonian(const DynamicalMatrix& dm) {
    const int d = dm.dim();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2 * d, 2 * d);
    h.topRightCorner(d, d) = dm.M;
    h.bottomLeftCorner(d, d) = dm.M.adjoint();
    return h;
}

namespace {

// Strictly triangular structure is produced bit-exactly by the coupling
// builders; for those matrices the eigenvalues are the diagonal entries. A
// general eigensolver scatters defective eigenvalues by eps^(1/N), which
// would swamp the stability tolerance.
bool is_triangular(const Eigen::MatrixXcd& m) {
    const int d = static_cast<int>(m.rows());
    bool lower = true, upper = true;
    for (int i = 0; i < d && (lower || upper); ++i)
        for (int j = i + 1; j < d; ++j) {
            if (m(i, j) != std::complex<double>{0.0, 0.0}) lower = false;
            if (m(j, i) != std::complex<double>{0.0, 0.0}) upper = false;
            if (!lower && !upper) break;
        }
    return lower || upper;
}

}  // namespace

namespace {

[[noreturn]] void stability_failure(const DynamicalMatrix& dm) {
    const auto dump = std::filesystem::temp_directory_path() / "topamp_stability_failure.csv";
    std::ofstream out(dump);
    for (int i = 0; i < dm.dim(); ++i)
        for (int j = 0; j < dm.dim(); ++j)
            out << i << ',' << j << ',' << dm.M(i, j).real() << ',' << dm.M(i, j).imag() << '\n';
    throw std::runtime_error("stability: eigensolver failed to converge; matrix dumped to " +
                             dump.string());
}

double max_imag_eigenvalue(const DynamicalMatrix& dm) {
#ifdef TOPAMP_HAVE_LAPACKE
    const lapack_int d = dm.dim();
    Eigen::MatrixXcd work = dm.M;
    Eigen::VectorXcd evals(d);
    const lapack_int info = LAPACKE_zgeev(
        LAPACK_COL_MAJOR, 'N', 'N', d, reinterpret_cast<lapack_complex_double*>(work.data()), d,
        reinterpret_cast<lapack_complex_double*>(evals.data()), nullptr, 1, nullptr, 1);
    if (info != 0) stability_failure(dm);
    return evals.imag().maxCoeff();
#else
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(dm.M, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) stability_failure(dm);
    return es.eigenvalues().imag().maxCoeff();
#endif
}

}  // namespace

StabilityReport stability(const DynamicalMatrix& dm, double tol) {
    if (is_triangular(dm.M)) {
        const double max_imag = dm.M.diagonal().imag().maxCoeff();
        return {max_imag <= tol, max_imag};
    }
    const double max_imag = max_imag_eigenvalue(dm);
    return {max_imag <= tol, max_imag};
}

}  // namespace topamp
