#include "topamp/momentum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace topamp {

namespace {
constexpr double kPi = std::numbers::pi;

// Interpolated half-maximum width around peak index p on a periodic grid.
double half_max_width(const Eigen::VectorXd& k, const Eigen::VectorXd& mag, int p) {
    const int n = static_cast<int>(mag.size());
    const double half = 0.5 * mag(p);
    const double span = 2.0 * kPi;

    auto k_at = [&](int base, int steps_dir, double frac) {
        // position <frac> of the way from sample (base) to (base + dir)
        const int j = ((base % n) + n) % n;
        const int jn = ((base + steps_dir) % n + n) % n;
        double kj = k(j), kjn = k(jn);
        if (steps_dir > 0 && kjn < kj) kjn += span;
        if (steps_dir < 0 && kjn > kj) kjn -= span;
        return kj + frac * (kjn - kj);
    };

    double left = k(p), right = k(p);
    for (int s = 1; s < n; ++s) {
        const int j = ((p + s) % n + n) % n;
        if (mag(j) <= half) {
            const int jprev = ((p + s - 1) % n + n) % n;
            const double frac = (mag(jprev) - half) / (mag(jprev) - mag(j));
            right = k_at(p + s - 1, +1, frac);
            break;
        }
    }
    for (int s = 1; s < n; ++s) {
        const int j = ((p - s) % n + n) % n;
        if (mag(j) <= half) {
            const int jprev = ((p - s + 1) % n + n) % n;
            const double frac = (mag(jprev) - half) / (mag(jprev) - mag(j));
            left = k_at(p - s + 1, -1, frac);
            break;
        }
    }
    double w = right - left;
    while (w < 0.0) w += span;
    return w;
}

}  // namespace

std::vector<Peak> detect_peaks(const Eigen::VectorXd& k, const Eigen::VectorXd& mag,
                               double min_height_ratio) {
    const int n = static_cast<int>(mag.size());
    if (n == 0 || k.size() != mag.size())
        throw std::invalid_argument("detect_peaks: empty or mismatched profile");
    const double floor = min_height_ratio * mag.maxCoeff();
    std::vector<Peak> peaks;
    for (int j = 0; j < n; ++j) {
        const double prev = mag((j + n - 1) % n);
        const double next = mag((j + 1) % n);
        if (mag(j) > prev && mag(j) > next && mag(j) >= floor)
            peaks.push_back({k(j), mag(j), half_max_width(k, mag, j)});
    }
    return peaks;
}

MomentumProfile momentum_coherences(const Eigen::VectorXcd& b, int zero_padding,
                                    double min_height_ratio) {
    const int n = static_cast<int>(b.size());
    if (n == 0) throw std::invalid_argument("momentum_coherences: empty state");
    if (zero_padding < 1) throw std::invalid_argument("momentum_coherences: zero_padding >= 1");
    const int m = n * zero_padding;

    // DFT frequencies 2 pi j / m mapped canonically into (-pi, pi], sorted.
    std::vector<int> idx(m);
    std::vector<double> kv(m);
    for (int j = 0; j < m; ++j) {
        double kk = 2.0 * kPi * j / m;
        if (kk > kPi + 1e-12) kk -= 2.0 * kPi;
        kv[j] = kk;
        idx[j] = j;
    }
    std::sort(idx.begin(), idx.end(), [&](int a, int c) { return kv[a] < kv[c]; });

    MomentumProfile prof;
    prof.k.resize(m);
    prof.bk.resize(m);
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (int out = 0; out < m; ++out) {
        const double kk = kv[idx[out]];
        std::complex<double> acc{0.0, 0.0};
        for (int r = 0; r < n; ++r)
            acc += b(r) * std::complex<double>{std::cos(kk * r), -std::sin(kk * r)};
        prof.k(out) = kk;
        prof.bk(out) = acc * norm;
    }
    prof.peaks = detect_peaks(prof.k, prof.bk.cwiseAbs(), min_height_ratio);
    return prof;
}

}  // namespace topamp
