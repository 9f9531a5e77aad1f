#pragma once

#include <Eigen/Dense>
#include <vector>

#include "topamp/waveguide.hpp"

namespace topamp {

/// Harper-Hofstadter strip at flux phi = 1/q: open along X (width L), Bloch
/// momentum ky along the periodic Y direction. Energies in units of the
/// hopping J.
struct HofstadterSpec {
    int q = 9;
    int strip_width = 45;   // L, at least 3q so the two edges decouple
    double j_hop = 1.0;
    int n_ky = 1024;        // ky grid for band structures / crossing scans

    void validate() const;
};

/// L x L Bloch Hamiltonian of the strip at fixed ky: on-site
/// -2J cos(2 pi phi x + ky), nearest-neighbour hopping -J along X.
Eigen::MatrixXd strip_hamiltonian(const HofstadterSpec& spec, double ky);

/// Edge-localization index eta = sum_x (2x/L - 1) |Psi(x)|^2 in [-1, 1];
/// -1 pins the x = 0 edge (right-movers), +1 the opposite edge.
double localization_index(const Eigen::VectorXd& psi);

/// Full strip spectrum over the ky grid with per-state localization index.
struct BandStructure {
    std::vector<double> ky;
    Eigen::MatrixXd energies;  // n_ky x L, ascending per row
    Eigen::MatrixXd eta;       // n_ky x L
};

BandStructure band_structure(const HofstadterSpec& spec);

/// Bulk band edges from the q x q Bloch problem (periodic in both
/// directions), indexed from the bottom of the spectrum.
struct GapInfo {
    double band_below_max = 0.0;  // top of band n-1
    double band_above_min = 0.0;  // bottom of band n
    double midgap() const { return 0.5 * (band_below_max + band_above_min); }
};

/// Gap n >= 1 sits between bulk bands n-1 and n. Throws when the bands
/// overlap (no gap).
GapInfo bulk_gap(const HofstadterSpec& spec, int gap_index);

struct EdgeMode {
    double k = 0.0;         // resonant momentum along Y
    double velocity = 0.0;  // group velocity d omega / d k at the crossing
    double eta = 0.0;       // localization index of the crossing state
};

struct EdgeModeTable {
    int gap_index = 0;
    double omega_c = 0.0;
    std::vector<EdgeMode> modes;
};

inline constexpr double kDefaultEtaCut = -0.9;

/// All crossings of omega_c by edge branches with eta < eta_cut inside gap
/// `gap_index`. Branches are tracked by eigenvector overlap across the ky
/// grid and each crossing is refined by bisection. Throws std::invalid_argument
/// when omega_c lies inside a bulk band.
EdgeModeTable edge_modes_in_gap(const HofstadterSpec& spec, int gap_index, double omega_c,
                                double eta_cut = kDefaultEtaCut);

/// Effective waveguide seen by cavities coupled to the selected edge:
/// k_res = k_l, gamma_l = g^2 / v_l. All velocities must share one sign
/// (chiral set); l_kappa is not derivable from the lattice and is supplied by
/// the caller.
WaveguideSpec to_waveguide_spec(const EdgeModeTable& table, double g_coupling, double l_kappa);

}  // namespace topamp
