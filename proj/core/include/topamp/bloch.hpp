#pragma once

#include <complex>

#include "topamp/waveguide.hpp"

namespace topamp {

/// Translationally invariant Bloch symbol of the dynamical matrix on the
/// equally-spaced lattice (a = 1):
///   h(k) = i (P - Gamma)/2 - i sum_l Gamma_l z_l / (1 - z_l),
///   z_l  = exp(i (k_l - k) - 1/l_kappa).
struct BlochSymbol {
    WaveguideSpec wg;
    double pump = 0.0;
};

std::complex<double> h_of_k(const BlochSymbol& sym, double k);

inline constexpr double kGapTol = 1e-8;        // gap-closing detection, units of Gamma
inline constexpr int kDefaultWindingGrid = 4096;
inline constexpr int kMaxWindingGrid = 1 << 18;

/// Winding-number evaluation. Windings are counted positive for the
/// amplifying phases (the orientation in which h(k) encircles the origin in
/// those phases). `raw` is the value before rounding; when the symbol's gap
/// closes on the grid W is undefined and gap_closed is set.
struct WindingResult {
    int W = 0;
    double raw = 0.0;
    double residual = 0.0;
    bool gap_closed = false;
    int n_grid_used = 0;

    bool defined() const { return !gap_closed; }
};

/// Phase winding of the scalar symbol h(k) + offset over the Brillouin zone,
/// accumulated on a uniform k grid with automatic grid doubling. Valid in the
/// g_s = 0 regime. `offset` shifts the symbol (detuning on the diagonal).
WindingResult winding_scalar(const BlochSymbol& sym, int n_grid = kDefaultWindingGrid,
                             double offset = 0.0);

/// Invariant of the doubled Bogoliubov symbol, evaluated as
/// (1/4 pi i) Tr(tau_z H(k)^{-1} d_k H(k)) with tau_z = diag(1,1,-1,-1),
/// H(k) = [[0, B], [B^dag, 0]], B = [[h+Delta, f g_s], [-f g_s, -h*(-k)-Delta]].
/// Counts the amplification channels of the doubled (<b>, <b^dag>) space; at
/// g_s = 0 it equals exactly twice the scalar winding (conjugate channel
/// pairs). Cross-checked internally against the phase winding of det B.
WindingResult winding_matrix(const BlochSymbol& sym, double delta, double g_s,
                             int n_grid = kDefaultWindingGrid, int parametric_factor = 1);

/// Number of roots of the symbol's characteristic polynomial inside the unit
/// disk (companion-matrix eigenvalues). Equals the scalar winding; bounded by
/// n_modes. Intended as an independent cross-check route.
int winding_root_count(const BlochSymbol& sym);

}  // namespace topamp
