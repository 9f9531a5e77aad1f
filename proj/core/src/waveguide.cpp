#include "topamp/waveguide.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace topamp {

double WaveguideSpec::total_rate() const {
    return std::accumulate(gamma_per_mode.begin(), gamma_per_mode.end(), 0.0);
}

void WaveguideSpec::validate() const {
    if (n_modes < 1)
        throw std::invalid_argument("WaveguideSpec: n_modes must be >= 1");
    if (static_cast<int>(gamma_per_mode.size()) != n_modes ||
        static_cast<int>(k_res.size()) != n_modes)
        throw std::invalid_argument(
            "WaveguideSpec: gamma_per_mode and k_res must have length n_modes");
    for (double g : gamma_per_mode)
        if (!(g >= 0.0) || !std::isfinite(g))
            throw std::invalid_argument("WaveguideSpec: gamma_per_mode entries must be >= 0");
    if (!(total_rate() > 0.0))
        throw std::invalid_argument("WaveguideSpec: total rate Gamma must be > 0");
    for (double k : k_res)
        if (!std::isfinite(k))
            throw std::invalid_argument("WaveguideSpec: k_res entries must be finite");
    if (!std::isfinite(l_kappa) || !(l_kappa > 0.0))
        throw std::invalid_argument("WaveguideSpec: l_kappa must be finite and > 0");
}

WaveguideSpec WaveguideSpec::equal_rates(std::vector<double> k_res, double l_kappa,
                                         double total) {
    WaveguideSpec wg;
    wg.n_modes = static_cast<int>(k_res.size());
    wg.k_res = std::move(k_res);
    wg.gamma_per_mode.assign(wg.n_modes, total / wg.n_modes);
    wg.l_kappa = l_kappa;
    wg.validate();
    return wg;
}

void LatticeSpec::validate() const {
    if (n_sites < 1)
        throw std::invalid_argument("LatticeSpec: n_sites must be >= 1");
    if (static_cast<int>(positions.size()) != n_sites)
        throw std::invalid_argument("LatticeSpec: positions must have length n_sites");
    for (int i = 1; i < n_sites; ++i)
        if (!(positions[i] > positions[i - 1]))
            throw std::invalid_argument("LatticeSpec: positions must be strictly increasing");
}

LatticeSpec LatticeSpec::equally_spaced(int n_sites) {
    LatticeSpec lat;
    lat.n_sites = n_sites;
    lat.positions.resize(n_sites);
    for (int j = 0; j < n_sites; ++j) lat.positions[j] = static_cast<double>(j);
    lat.validate();
    return lat;
}

}  // namespace topamp
