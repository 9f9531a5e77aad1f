#include "topamp/couplings.hpp"

#include <cmath>

namespace topamp {

namespace {

std::complex<double> self_energy_unchecked(const WaveguideSpec& wg, double ri, double rj) {
    const double d = ri - rj;
    const double chiral = 1.0 + (d > 0.0 ? 1.0 : (d < 0.0 ? -1.0 : 0.0));
    if (chiral == 0.0) return {0.0, 0.0};
    const double damp = std::exp(-std::abs(d) / wg.l_kappa);
    std::complex<double> acc{0.0, 0.0};
    for (int l = 0; l < wg.n_modes; ++l) {
        const std::complex<double> phase{std::cos(wg.k_res[l] * d), std::sin(wg.k_res[l] * d)};
        acc += std::complex<double>(0.0, -0.5 * wg.gamma_per_mode[l]) * phase;
    }
    return acc * damp * chiral;
}

}  // namespace

std::complex<double> self_energy(const WaveguideSpec& wg, double ri, double rj) {
    wg.validate();
    return self_energy_unchecked(wg, ri, rj);
}

CouplingMatrices coupling_matrices(const WaveguideSpec& wg, const LatticeSpec& lat) {
    wg.validate();
    lat.validate();
    const int n = lat.n_sites;
    CouplingMatrices cm;
    cm.J = Eigen::MatrixXcd::Zero(n, n);
    cm.Gamma = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {  // entries with r_i < r_j stay exactly zero
            const std::complex<double> sig =
                self_energy_unchecked(wg, lat.positions[i], lat.positions[j]);
            cm.J(i, j) = sig.real();
            cm.Gamma(i, j) = -2.0 * sig.imag();
        }
    }
    return cm;
}

}  // namespace topamp
