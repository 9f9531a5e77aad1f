#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topamp/bloch.hpp"
#include "topamp/dynamical_matrix.hpp"
#include "topamp/waveguide.hpp"

namespace topamp {

/// One sweep axis. Supported parameters: l_kappa, pump, g_s, delta, dk
/// (two-mode momentum difference, k_res[1] = k_res[0] + dk), n_sites.
struct AxisSpec {
    std::string param;
    std::vector<double> values;

    static AxisSpec linspace(std::string param, double min, double max, int n);
    static AxisSpec logspace(std::string param, double min, double max, int n);
    static AxisSpec explicit_values(std::string param, std::vector<double> values);
};

struct PhaseCell {
    std::optional<int> W;       // absent when the gap closes on the grid
    double raw = 0.0;
    bool stable = true;
    double max_imag = 0.0;
};

struct PhaseDiagramGrid {
    AxisSpec ax0, ax1;
    std::vector<PhaseCell> cells;  // row-major, index i0 * ax1.size + i1

    const PhaseCell& at(int i0, int i1) const {
        return cells[static_cast<size_t>(i0) * ax1.values.size() + i1];
    }
};

struct PhaseDiagramRequest {
    WaveguideSpec wg;
    DriveSpec drive;
    int stability_sites = 60;
    int n_grid = kDefaultWindingGrid;
    int n_threads = 0;  // 0 = default resolution
};

/// Per-cell winding number and finite-size stability over a 2D parameter
/// grid. Cells with g_s != 0 use the Bogoliubov (matrix) invariant, otherwise
/// the scalar one. Cells are independent and evaluated in parallel.
PhaseDiagramGrid phase_diagram(const PhaseDiagramRequest& req, const AxisSpec& ax0,
                               const AxisSpec& ax1);

/// Apply an axis parameter to a (waveguide, drive, n_sites) triple in place.
/// Shared with the CLI sweep machinery. Throws std::invalid_argument for an
/// unknown parameter or dk on a non-two-mode waveguide.
void apply_sweep_param(const std::string& param, double value, WaveguideSpec& wg,
                       DriveSpec& drive, int& n_sites);

}  // namespace topamp
