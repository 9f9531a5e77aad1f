#pragma once

#include <vector>

namespace topamp {

/// A chiral multi-mode waveguide bath. Rates are in units of the total decay
/// rate Gamma = sum_l gamma_per_mode[l] (conventionally 1), momenta in units
/// of 1/a, lengths in units of the lattice spacing a.
struct WaveguideSpec {
    int n_modes = 1;
    std::vector<double> gamma_per_mode;  // decay rate into each channel, >= 0
    std::vector<double> k_res;           // resonant momenta k_l * a
    double l_kappa = 1.0;                // propagation length l_kappa / a, finite and > 0

    double total_rate() const;

    /// Throws std::invalid_argument on mismatched lists, negative rates,
    /// vanishing total rate, or non-positive / non-finite l_kappa.
    void validate() const;

    /// Equal coupling to every channel, gamma_l = total / n_modes.
    static WaveguideSpec equal_rates(std::vector<double> k_res, double l_kappa,
                                     double total = 1.0);
};

/// Cavity positions r_j in units of a, strictly increasing.
struct LatticeSpec {
    int n_sites = 1;
    std::vector<double> positions;

    void validate() const;

    static LatticeSpec equally_spaced(int n_sites);
};

}  // namespace topamp
