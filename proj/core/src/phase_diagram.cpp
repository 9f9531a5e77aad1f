#include "topamp/phase_diagram.hpp"

#include <cmath>
#include <stdexcept>

#include "topamp/couplings.hpp"
#include "topamp/parallel.hpp"

namespace topamp {

AxisSpec AxisSpec::linspace(std::string param, double min, double max, int n) {
    if (n < 1) throw std::invalid_argument("AxisSpec: n must be >= 1");
    AxisSpec ax;
    ax.param = std::move(param);
    ax.values.resize(n);
    for (int i = 0; i < n; ++i)
        ax.values[i] = n == 1 ? min : min + (max - min) * i / (n - 1);
    return ax;
}

AxisSpec AxisSpec::logspace(std::string param, double min, double max, int n) {
    if (!(min > 0.0) || !(max > 0.0))
        throw std::invalid_argument("AxisSpec: log axis needs positive bounds");
    AxisSpec ax = linspace(std::move(param), std::log(min), std::log(max), n);
    for (double& v : ax.values) v = std::exp(v);
    return ax;
}

AxisSpec AxisSpec::explicit_values(std::string param, std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("AxisSpec: empty value list");
    AxisSpec ax;
    ax.param = std::move(param);
    ax.values = std::move(values);
    return ax;
}

void apply_sweep_param(const std::string& param, double value, WaveguideSpec& wg,
                       DriveSpec& drive, int& n_sites) {
    if (param == "l_kappa") {
        wg.l_kappa = value;
    } else if (param == "pump") {
        drive.pump = value;
    } else if (param == "g_s") {
        drive.g_s = value;
    } else if (param == "delta") {
        drive.delta = value;
    } else if (param == "dk") {
        if (wg.n_modes != 2)
            throw std::invalid_argument("sweep param dk requires a two-mode waveguide");
        wg.k_res[1] = wg.k_res[0] + value;
    } else if (param == "n_sites") {
        n_sites = static_cast<int>(std::lround(value));
        if (n_sites < 1) throw std::invalid_argument("sweep param n_sites must be >= 1");
    } else {
        throw std::invalid_argument("unknown sweep parameter: " + param);
    }
}

PhaseDiagramGrid phase_diagram(const PhaseDiagramRequest& req, const AxisSpec& ax0,
                               const AxisSpec& ax1) {
    req.wg.validate();
    const int n0 = static_cast<int>(ax0.values.size());
    const int n1 = static_cast<int>(ax1.values.size());

    PhaseDiagramGrid grid;
    grid.ax0 = ax0;
    grid.ax1 = ax1;
    grid.cells.resize(static_cast<size_t>(n0) * n1);

    parallel_for(
        n0 * n1,
        [&](int idx) {
            const int i0 = idx / n1;
            const int i1 = idx % n1;
            WaveguideSpec wg = req.wg;
            DriveSpec drive = req.drive;
            int n_sites = req.stability_sites;
            apply_sweep_param(ax0.param, ax0.values[i0], wg, drive, n_sites);
            apply_sweep_param(ax1.param, ax1.values[i1], wg, drive, n_sites);

            const BlochSymbol sym{wg, drive.pump};
            const WindingResult w =
                drive.g_s != 0.0
                    ? winding_matrix(sym, drive.delta, drive.g_s, req.n_grid,
                                     drive.parametric_factor)
                    : winding_scalar(sym, req.n_grid, drive.delta);

            const auto cm = coupling_matrices(wg, LatticeSpec::equally_spaced(n_sites));
            const auto dm = drive.g_s != 0.0 ? build_bogoliubov_matrix(cm, drive)
                                             : build_dynamical_matrix(cm, drive);
            const StabilityReport st = stability(dm);

            PhaseCell cell;
            if (w.defined()) cell.W = w.W;
            cell.raw = w.raw;
            cell.stable = st.stable;
            cell.max_imag = st.max_imag;
            grid.cells[idx] = cell;
        },
        req.n_threads);

    return grid;
}

}  // namespace topamp
