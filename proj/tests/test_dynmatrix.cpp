#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "topamp/bloch.hpp"
#include "topamp/couplings.hpp"
#include "topamp/dynamical_matrix.hpp"
#include "topamp/svd.hpp"

using namespace topamp;
using oracles::cxd;
constexpr double pi = std::numbers::pi;

namespace {

DynamicalMatrix model_matrix(const WaveguideSpec& wg, int n, const DriveSpec& drive) {
    const auto cm = coupling_matrices(wg, LatticeSpec::equally_spaced(n));
    return drive.g_s != 0.0 ? build_bogoliubov_matrix(cm, drive)
                            : build_dynamical_matrix(cm, drive);
}

}  // namespace

TEST_CASE("isolated decaying cavities") {
    WaveguideSpec wg = WaveguideSpec::equal_rates({0.0}, 1e-3);  // couplings ~ e^{-1000}
    DriveSpec drive;
    auto dm = model_matrix(wg, 2, drive);
    CHECK((dm.M + cxd{0.0, 0.5} * Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("pump balancing loss zeroes a single site") {
    WaveguideSpec wg = WaveguideSpec::equal_rates({0.4}, 2.0);
    DriveSpec drive;
    drive.pump = 1.0;
    auto dm = model_matrix(wg, 1, drive);
    CHECK(std::abs(dm.M(0, 0)) < 1e-15);
}

TEST_CASE("normal matrix is lower triangular with the gain-loss diagonal") {
    WaveguideSpec wg = WaveguideSpec::equal_rates({0.3, 1.7}, 6.0);
    DriveSpec drive;
    drive.pump = 0.6;
    auto dm = model_matrix(wg, 9, drive);
    for (int i = 0; i < 9; ++i) {
        CHECK(dm.M(i, i) == cxd(0.0, 0.5 * (drive.pump - 1.0)));
        for (int j = i + 1; j < 9; ++j) CHECK(dm.M(i, j) == cxd{0.0, 0.0});
    }
    // triangular => eigenvalues are the diagonal, so Im(lambda) = (P - Gamma)/2
    const auto st = stability(dm);
    CHECK(st.max_imag == doctest::Approx(0.5 * (drive.pump - 1.0)).epsilon(1e-9));
    CHECK(st.stable);
}

TEST_CASE("g_s != 0 is rejected by the normal builder") {
    WaveguideSpec wg = WaveguideSpec::equal_rates({0.0}, 2.0);
    auto cm = coupling_matrices(wg, LatticeSpec::equally_spaced(3));
    DriveSpec drive;
    drive.g_s = 0.2;
    CHECK_THROWS_AS(build_dynamical_matrix(cm, drive), std::invalid_argument);
}

TEST_CASE("bogoliubov blocks decouple at g_s = 0") {
    WaveguideSpec wg = WaveguideSpec::equal_rates({0.4, 2.0}, 4.0);
    DriveSpec drive;
    drive.pump = 0.3;
    drive.delta = 0.7;
    auto normal = model_matrix(wg, 6, drive);
    DriveSpec pdrive = drive;
    pdrive.g_s = 0.0;
    auto cm = coupling_matrices(wg, LatticeSpec::equally_spaced(6));
    auto bdg = build_bogoliubov_matrix(cm, pdrive);
    CHECK((bdg.M.topLeftCorner(6, 6) - normal.M).cwiseAbs().maxCoeff() == 0.0);
    CHECK((bdg.M.bottomRightCorner(6, 6) + normal.M.conjugate()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(bdg.M.topRightCorner(6, 6).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("single-site parametric eigenvalues match the closed form") {
    // N = 1, no couplings beyond local loss: M = [[D - i/2, f g], [-f g, -D - i/2]]
    // with eigenvalues -i/2 +/- sqrt(D^2 - (f g)^2).
    WaveguideSpec wg = WaveguideSpec::equal_rates({0.0}, 1e-3);
    for (double delta : {0.0, 1.0})
        for (double gs : {0.2, 0.7, 1.3})
            for (int f : {1, 2}) {
                DriveSpec drive;
                drive.delta = delta;
                drive.g_s = gs;
                drive.parametric_factor = f;
                auto dm = model_matrix(wg, 1, drive);
                Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(dm.M, false);
                const cxd disc = std::sqrt(cxd(delta * delta - f * f * gs * gs, 0.0));
                const cxd e0 = cxd(0.0, -0.5) + disc;
                const cxd e1 = cxd(0.0, -0.5) - disc;
                const double d0 = std::min(std::abs(es.eigenvalues()(0) - e0),
                                           std::abs(es.eigenvalues()(0) - e1));
                const double d1 = std::min(std::abs(es.eigenvalues()(1) - e0),
                                           std::abs(es.eigenvalues()(1) - e1));
                CHECK(d0 < 1e-12);
                CHECK(d1 < 1e-12);
            }
    // instability onset at f g = Gamma/2 for delta = 0
    DriveSpec drive;
    drive.g_s = 0.49;
    CHECK(stability(model_matrix(wg, 1, drive)).stable);
    drive.g_s = 0.51;
    CHECK_FALSE(stability(model_matrix(wg, 1, drive)).stable);
}

TEST_CASE("doubled Hamiltonian is Hermitian and pairs the singular values") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 63);
        DynamicalMatrix dm;
        dm.kind = MatrixKind::normal;
        dm.n_sites = n;
        dm.M = oracles::random_complex_matrix(rng, n);
        const Eigen::MatrixXcd h = doubled_hamiltonian(dm);
        CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-12);

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(dm.M);  // independent SVD route
        for (int i = 0; i < n; ++i) {
            // eigenvalues ascend, singular values descend
            const double s = svd.singularValues()(i);
            CHECK(std::abs(es.eigenvalues()(i) + s) < 1e-10);
            CHECK(std::abs(es.eigenvalues()(2 * n - 1 - i) - s) < 1e-10);
        }
    }
}

TEST_CASE("zero matrix doubles to the zero spectrum") {
    DynamicalMatrix dm;
    dm.kind = MatrixKind::normal;
    dm.n_sites = 4;
    dm.M = Eigen::MatrixXcd::Zero(4, 4);
    CHECK(doubled_hamiltonian(dm).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("singular decomposition orders, reconstructs, and classifies") {
    std::mt19937_64 rng(31);
    DynamicalMatrix dm;
    dm.kind = MatrixKind::normal;
    dm.n_sites = 24;
    dm.M = oracles::random_complex_matrix(rng, 24);
    const auto svd = singular_decomposition(dm, 3);

    for (int i = 1; i < 24; ++i) CHECK(svd.S(i - 1) >= svd.S(i));
    const Eigen::MatrixXcd rebuilt = svd.U * svd.S.asDiagonal() * svd.V.adjoint();
    CHECK((rebuilt - dm.M).norm() / dm.M.norm() < 1e-10);
    CHECK(svd.edge_set == std::vector<int>{21, 22, 23});
    CHECK(*svd.delta_obc == svd.S(21));
    CHECK(svd.delta_pbc == svd.S(20));

    const auto trivial = singular_decomposition(dm, 0);
    CHECK(trivial.edge_set.empty());
    CHECK_FALSE(trivial.delta_obc.has_value());
    CHECK(trivial.delta_pbc == trivial.S(23));

    CHECK_THROWS_AS(singular_decomposition(dm, 25), std::invalid_argument);
}

TEST_CASE("pure loss is always stable, strong pump is not") {
    WaveguideSpec wg = WaveguideSpec::equal_rates({0.8}, 3.0);
    DriveSpec drive;
    CHECK(stability(model_matrix(wg, 20, drive)).stable);
    drive.pump = 2.0;
    CHECK_FALSE(stability(model_matrix(wg, 20, drive)).stable);
}

TEST_CASE("in-gap singular values appear in the topological phase") {
    // Fig. 5(e,f) regime: two modes (0, pi/4), l_kappa = 1e3, P = 0.2, N = 100
    WaveguideSpec wg = WaveguideSpec::equal_rates({0.0, pi / 4}, 1e3);
    DriveSpec drive;
    drive.pump = 0.2;
    BlochSymbol sym{wg, drive.pump};
    const int w = winding_scalar(sym).W;
    CHECK(w == 2);
    auto dm = model_matrix(wg, 100, drive);
    const auto svd = singular_decomposition(dm, w);
    REQUIRE(svd.delta_obc.has_value());
    CHECK_FALSE(svd.bbc_broken);
    // exactly two in-gap singular values (four in-gap eigenvalues of the
    // doubled Hamiltonian, counting +/- pairs)
    int in_gap = 0;
    for (int i = 0; i < 100; ++i)
        if (svd.S(i) < 0.9 * svd.delta_pbc) ++in_gap;
    CHECK(in_gap == 2);
}
