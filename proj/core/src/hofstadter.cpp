#include "topamp/hofstadter.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace topamp {

namespace {
constexpr double kPi = std::numbers::pi;
}

void HofstadterSpec::validate() const {
    if (q < 2) throw std::invalid_argument("HofstadterSpec: q must be >= 2");
    if (strip_width < 3 * q)
        throw std::invalid_argument("HofstadterSpec: strip width must be >= 3q");
    if (!(j_hop > 0.0)) throw std::invalid_argument("HofstadterSpec: j_hop must be > 0");
    if (n_ky < 16) throw std::invalid_argument("HofstadterSpec: n_ky too small");
}

Eigen::MatrixXd strip_hamiltonian(const HofstadterSpec& spec, double ky) {
    spec.validate();
    const int l = spec.strip_width;
    const double phi = 1.0 / spec.q;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(l, l);
    for (int x = 0; x < l; ++x) {
        h(x, x) = -2.0 * spec.j_hop * std::cos(2.0 * kPi * phi * x + ky);
        if (x + 1 < l) {
            h(x, x + 1) = -spec.j_hop;
            h(x + 1, x) = -spec.j_hop;
        }
    }
    return h;
}

double localization_index(const Eigen::VectorXd& psi) {
    const int l = static_cast<int>(psi.size());
    double eta = 0.0;
    for (int x = 0; x < l; ++x) eta += (2.0 * x / l - 1.0) * psi(x) * psi(x);
    return eta;
}

BandStructure band_structure(const HofstadterSpec& spec) {
    spec.validate();
    const int l = spec.strip_width;
    BandStructure bs;
    bs.ky.resize(spec.n_ky);
    bs.energies.resize(spec.n_ky, l);
    bs.eta.resize(spec.n_ky, l);
    for (int j = 0; j < spec.n_ky; ++j) {
        const double ky = -kPi + 2.0 * kPi * j / spec.n_ky;
        bs.ky[j] = ky;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(strip_hamiltonian(spec, ky));
        bs.energies.row(j) = es.eigenvalues().transpose();
        for (int i = 0; i < l; ++i) bs.eta(j, i) = localization_index(es.eigenvectors().col(i));
    }
    return bs;
}

GapInfo bulk_gap(const HofstadterSpec& spec, int gap_index) {
    spec.validate();
    if (gap_index < 1 || gap_index >= spec.q)
        throw std::invalid_argument("bulk_gap: gap index out of range");
    const int q = spec.q;
    const double phi = 1.0 / q;
    const int nk = 48;
    Eigen::VectorXd lo = Eigen::VectorXd::Constant(q, 1e300);
    Eigen::VectorXd hi = Eigen::VectorXd::Constant(q, -1e300);
    for (int ix = 0; ix < nk; ++ix) {
        const double kx = -kPi / q + 2.0 * kPi / q * ix / nk;  // magnetic BZ
        for (int iy = 0; iy < nk; ++iy) {
            const double ky = -kPi + 2.0 * kPi * iy / nk;
            Eigen::MatrixXcd hb = Eigen::MatrixXcd::Zero(q, q);
            for (int m = 0; m < q; ++m) {
                hb(m, m) = -2.0 * spec.j_hop * std::cos(2.0 * kPi * phi * m + ky);
                const int mp = (m + 1) % q;
                // Bloch phase on the wrap-around bond of the magnetic cell
                const std::complex<double> hop =
                    -spec.j_hop * ((m == q - 1)
                                       ? std::complex<double>{std::cos(q * kx), std::sin(q * kx)}
                                       : std::complex<double>{1.0, 0.0});
                hb(m, mp) += hop;
                hb(mp, m) += std::conj(hop);
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hb);
            for (int b = 0; b < q; ++b) {
                lo(b) = std::min(lo(b), es.eigenvalues()(b));
                hi(b) = std::max(hi(b), es.eigenvalues()(b));
            }
        }
    }
    GapInfo gap;
    gap.band_below_max = hi(gap_index - 1);
    gap.band_above_min = lo(gap_index);
    if (!(gap.band_above_min > gap.band_below_max))
        throw std::runtime_error("bulk_gap: bands overlap, no spectral gap");
    return gap;
}

namespace {

struct EdgeState {
    double energy;
    Eigen::VectorXd psi;
    double eta;
};

// Edge states (eta < cut) within the energy window around omega_c.
std::vector<EdgeState> edge_states_at(const HofstadterSpec& spec, double ky, double omega_c,
                                      double window, double eta_cut) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(strip_hamiltonian(spec, ky));
    std::vector<EdgeState> out;
    for (int i = 0; i < spec.strip_width; ++i) {
        if (std::abs(es.eigenvalues()(i) - omega_c) > window) continue;
        const double eta = localization_index(es.eigenvectors().col(i));
        if (eta < eta_cut) out.push_back({es.eigenvalues()(i), es.eigenvectors().col(i), eta});
    }
    return out;
}

// Follow the overlap-matched branch from (ky0, state) to ky1; returns the
// matched state or nullptr-equivalent via found=false.
bool match_branch(const std::vector<EdgeState>& candidates, const Eigen::VectorXd& psi,
                  EdgeState& matched) {
    double best = 0.0;
    for (const auto& c : candidates) {
        const double overlap = std::abs(psi.dot(c.psi));
        if (overlap > best) {
            best = overlap;
            matched = c;
        }
    }
    return best > 0.5;
}

}  // namespace

EdgeModeTable edge_modes_in_gap(const HofstadterSpec& spec, int gap_index, double omega_c,
                                double eta_cut) {
    spec.validate();
    const GapInfo gap = bulk_gap(spec, gap_index);
    if (!(omega_c > gap.band_below_max && omega_c < gap.band_above_min))
        throw std::invalid_argument("edge_modes_in_gap: omega_c not in gap");
    const double window = 0.49 * (gap.band_above_min - gap.band_below_max);

    EdgeModeTable table;
    table.gap_index = gap_index;
    table.omega_c = omega_c;

    const int nky = spec.n_ky;
    const double dky = 2.0 * kPi / nky;
    std::vector<EdgeState> prev = edge_states_at(spec, -kPi, omega_c, window, eta_cut);
    for (int j = 1; j <= nky; ++j) {
        const double ky = -kPi + dky * j;
        const std::vector<EdgeState> cur = edge_states_at(spec, ky, omega_c, window, eta_cut);
        for (const auto& p : prev) {
            EdgeState m;
            if (!match_branch(cur, p.psi, m)) continue;
            if ((p.energy - omega_c) * (m.energy - omega_c) >= 0.0) continue;

            // bisect the crossing along the matched branch
            double ka = ky - dky, kb = ky;
            Eigen::VectorXd ref = p.psi;
            double ea = p.energy;
            for (int it = 0; it < 48; ++it) {
                const double km = 0.5 * (ka + kb);
                const auto states = edge_states_at(spec, km, omega_c, window, eta_cut);
                EdgeState mid;
                if (!match_branch(states, ref, mid)) break;
                if ((ea - omega_c) * (mid.energy - omega_c) < 0.0) {
                    kb = km;
                } else {
                    ka = km;
                    ea = mid.energy;
                    ref = mid.psi;
                }
            }
            const double kc = 0.5 * (ka + kb);

            // group velocity by centered differences on the branch
            const double dk = 1e-5;
            EdgeState sl, sr;
            const auto left = edge_states_at(spec, kc - dk, omega_c, window, eta_cut);
            const auto right = edge_states_at(spec, kc + dk, omega_c, window, eta_cut);
            if (!match_branch(left, ref, sl) || !match_branch(right, ref, sr)) continue;
            const double vel = (sr.energy - sl.energy) / (2.0 * dk);

            EdgeState here;
            match_branch(edge_states_at(spec, kc, omega_c, window, eta_cut), ref, here);
            table.modes.push_back({kc, vel, here.eta});
        }
        prev = cur;
    }
    return table;
}

WaveguideSpec to_waveguide_spec(const EdgeModeTable& table, double g_coupling, double l_kappa) {
    if (table.modes.empty())
        throw std::invalid_argument("to_waveguide_spec: no edge modes in table");
    for (const auto& m : table.modes)
        if (!(m.velocity > 0.0))
            throw std::invalid_argument(
                "to_waveguide_spec: mixed-sign group velocities, not a chiral set");
    WaveguideSpec wg;
    wg.n_modes = static_cast<int>(table.modes.size());
    wg.l_kappa = l_kappa;
    for (const auto& m : table.modes) {
        wg.k_res.push_back(m.k);
        wg.gamma_per_mode.push_back(g_coupling * g_coupling / m.velocity);
    }
    wg.validate();
    return wg;
}

}  // namespace topamp
