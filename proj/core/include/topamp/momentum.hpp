#pragma once

#include <Eigen/Dense>
#include <vector>

namespace topamp {

struct Peak {
    double k = 0.0;       // position of the local maximum
    double height = 0.0;  // |b_k| at the maximum
    double width = 0.0;   // full width at half maximum (linear interpolation)
};

/// Discrete Fourier transform of the site coherences on the lattice-dual grid,
/// b_k = (1/sqrt(N)) sum_r e^{-i k r} b_r, k sorted over (-pi, pi]. Unitary,
/// so sum |b_k|^2 = sum |b_r|^2.
struct MomentumProfile {
    Eigen::VectorXd k;
    Eigen::VectorXcd bk;
    std::vector<Peak> peaks;
};

inline constexpr double kDefaultPeakRatio = 0.1;

/// Strict local maxima of `mag` on the periodic grid, at least
/// min_height_ratio times the global maximum. `k` must be sorted.
std::vector<Peak> detect_peaks(const Eigen::VectorXd& k, const Eigen::VectorXd& mag,
                               double min_height_ratio = kDefaultPeakRatio);

/// Momentum profile of a real-space coherence vector. zero_padding >= 1
/// multiplies the number of k samples (plot smoothing only; peaks are
/// detected on whatever grid results).
MomentumProfile momentum_coherences(const Eigen::VectorXcd& b, int zero_padding = 1,
                                    double min_height_ratio = kDefaultPeakRatio);

}  // namespace topamp
