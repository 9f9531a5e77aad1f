#include "topamp/bloch.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace topamp {

using cxd = std::complex<double>;
namespace {
constexpr double kPi = std::numbers::pi;
constexpr cxd kI{0.0, 1.0};
}  // namespace

namespace {

cxd h_raw(const BlochSymbol& sym, double k) {
    cxd acc = kI * 0.5 * (sym.pump - sym.wg.total_rate());
    const double damp = std::exp(-1.0 / sym.wg.l_kappa);
    for (int l = 0; l < sym.wg.n_modes; ++l) {
        const double ph = sym.wg.k_res[l] - k;
        const cxd z = damp * cxd{std::cos(ph), std::sin(ph)};
        acc -= kI * sym.wg.gamma_per_mode[l] * z / (1.0 - z);
    }
    return acc;
}

}  // namespace

cxd h_of_k(const BlochSymbol& sym, double k) {
    sym.wg.validate();
    return h_raw(sym, k);
}

namespace {

// Accumulated phase of a closed curve, counted positive for clockwise
// traversal (the orientation of the amplifying phases). Returns false when a
// step exceeds pi/2, i.e. the grid under-resolves the curve.
bool winding_of_curve(const std::vector<cxd>& vals, double& winding) {
    double total = 0.0;
    bool resolved = true;
    const int n = static_cast<int>(vals.size());
    for (int j = 0; j < n; ++j) {
        const cxd ratio = vals[(j + 1) % n] / vals[j];
        const double d = std::arg(ratio);
        if (std::abs(d) > 0.5 * kPi) resolved = false;
        total += d;
    }
    winding = -total / (2.0 * kPi);
    return resolved;
}

double min_abs(const std::vector<cxd>& vals) {
    double m = std::abs(vals[0]);
    for (const cxd& v : vals) m = std::min(m, std::abs(v));
    return m;
}

}  // namespace

WindingResult winding_scalar(const BlochSymbol& sym, int n_grid, double offset) {
    sym.wg.validate();
    if (n_grid < 8) throw std::invalid_argument("winding_scalar: n_grid too small");
    const double gap_tol = kGapTol * sym.wg.total_rate();

    WindingResult res;
    for (int n = n_grid; n <= kMaxWindingGrid; n *= 2) {
        std::vector<cxd> h(n);
        for (int j = 0; j < n; ++j) {
            const double k = -kPi + 2.0 * kPi * (j + 1) / n;  // (-pi, pi]
            h[j] = h_raw(sym, k) + offset;
        }
        res.n_grid_used = n;
        if (min_abs(h) < gap_tol) {
            res.gap_closed = true;
            return res;
        }
        double w = 0.0;
        const bool resolved = winding_of_curve(h, w);
        res.raw = w;
        res.W = static_cast<int>(std::lround(w));
        res.residual = std::abs(w - res.W);
        if (resolved && res.residual < 1e-3) return res;
    }
    return res;
}

namespace {

// Momentum-space Bogoliubov block acting on (<b_k>, <b_-k^dag>).
Eigen::Matrix2cd bdg_block(const BlochSymbol& sym, double delta, double g, double k) {
    Eigen::Matrix2cd b;
    b(0, 0) = h_raw(sym, k) + delta;
    b(1, 1) = -std::conj(h_raw(sym, -k)) - delta;
    b(0, 1) = g;
    b(1, 0) = -g;
    return b;
}

double smallest_singular_value_2x2(const Eigen::Matrix2cd& b) {
    const double frob2 = b.squaredNorm();
    const double det = std::abs(b.determinant());
    const double disc = std::max(frob2 * frob2 - 4.0 * det * det, 0.0);
    return std::sqrt(std::max(0.5 * (frob2 - std::sqrt(disc)), 0.0));
}

}  // namespace

WindingResult winding_matrix(const BlochSymbol& sym, double delta, double g_s, int n_grid,
                             int parametric_factor) {
    sym.wg.validate();
    if (parametric_factor != 1 && parametric_factor != 2)
        throw std::invalid_argument("winding_matrix: parametric_factor must be 1 or 2");
    if (n_grid < 8) throw std::invalid_argument("winding_matrix: n_grid too small");
    const double g = parametric_factor * g_s;
    const double gap_tol = kGapTol * sym.wg.total_rate();

    WindingResult res;
    for (int n = n_grid; n <= kMaxWindingGrid; n *= 2) {
        std::vector<Eigen::Matrix2cd> blocks(n);
        std::vector<cxd> dets(n);
        double smin = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
            const double k = -kPi + 2.0 * kPi * (j + 1) / n;
            blocks[j] = bdg_block(sym, delta, g, k);
            dets[j] = blocks[j].determinant();
            smin = std::min(smin, smallest_singular_value_2x2(blocks[j]));
        }
        res.n_grid_used = n;
        if (smin < gap_tol) {
            res.gap_closed = true;
            return res;
        }

        // (1/4 pi i) Tr(tau_z H^-1 d_k H) with the Hermitian doubling
        // H = [[0, B], [B^dag, 0]], tau_z = diag(1,1,-1,-1); block-wise this is
        // Tr((B^dag)^-1 d_k B^dag) - Tr(B^-1 d_k B). Central differences plus
        // the periodic trapezoid rule.
        const double dk = 2.0 * kPi / n;
        cxd integral = 0.0;
        for (int j = 0; j < n; ++j) {
            const Eigen::Matrix2cd diff =
                (blocks[(j + 1) % n] - blocks[(j + n - 1) % n]) / (2.0 * dk);
            const Eigen::Matrix2cd binv = blocks[j].inverse();
            const cxd t = (binv.adjoint() * diff.adjoint()).trace() - (binv * diff).trace();
            integral += t * dk;
        }
        const cxd w_trace = integral / (4.0 * kPi * kI);
        res.raw = w_trace.real();
        res.W = static_cast<int>(std::lround(res.raw));
        res.residual = std::abs(res.raw - res.W);

        double w_det = 0.0;
        const bool resolved = winding_of_curve(dets, w_det);
        const int w_det_int = static_cast<int>(std::lround(w_det));

        if (resolved && res.residual < 1e-3 && w_det_int == res.W) return res;
    }
    return res;
}

int winding_root_count(const BlochSymbol& sym) {
    sym.wg.validate();
    const int nm = sym.wg.n_modes;
    const double a_coef = 0.5 * (sym.pump - sym.wg.total_rate());

    // Substituting y = e^{-ik} turns h into F(y) whose poles lie outside the
    // unit disk; clearing denominators gives the degree-n_modes polynomial
    //   Q(y) = A prod_l (1 - y c_l) - sum_l Gamma_l y c_l prod_{m != l} (1 - y c_m),
    // c_l = e^{i k_l - 1/l_kappa}. The winding equals the number of roots of Q
    // in |y| < 1.
    std::vector<cxd> c(nm);
    for (int l = 0; l < nm; ++l)
        c[l] = std::exp(cxd{-1.0 / sym.wg.l_kappa, sym.wg.k_res[l]});

    auto poly_mul = [](const std::vector<cxd>& p, const std::vector<cxd>& q) {
        std::vector<cxd> r(p.size() + q.size() - 1, cxd{0.0, 0.0});
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
        return r;
    };

    std::vector<cxd> q{a_coef};
    for (int l = 0; l < nm; ++l) q = poly_mul(q, {cxd{1.0, 0.0}, -c[l]});
    for (int l = 0; l < nm; ++l) {
        std::vector<cxd> term{cxd{0.0, 0.0}, -sym.wg.gamma_per_mode[l] * c[l]};
        for (int m = 0; m < nm; ++m)
            if (m != l) term = poly_mul(term, {cxd{1.0, 0.0}, -c[m]});
        for (size_t i = 0; i < term.size(); ++i) q[i] += term[i];
    }

    double max_coef = 0.0;
    for (const cxd& v : q) max_coef = std::max(max_coef, std::abs(v));
    while (q.size() > 1 && std::abs(q.back()) < 1e-13 * max_coef) q.pop_back();
    const int deg = static_cast<int>(q.size()) - 1;
    if (deg == 0) return 0;

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -q[i] / q[deg];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("winding_root_count: companion eigensolver failed");
    int count = 0;
    for (int i = 0; i < deg; ++i)
        if (std::abs(es.eigenvalues()(i)) < 1.0) ++count;
    return count;
}

}  // namespace topamp
