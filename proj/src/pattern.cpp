#include "npath/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>

#include "npath/errors.hpp"

namespace npath {

double intensity(const QuantonDensityMatrix& rho, const std::vector<double>& phi) {
    const int n = rho.dim();
    if (static_cast<int>(phi.size()) != n) {
        throw std::invalid_argument("intensity: need exactly one phase per path");
    }
    for (const double x : phi) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("intensity: phases must be finite");
        }
    }
    Complex acc(0.0, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            acc += rho(i, j) * std::exp(Complex(0.0, phi[i] - phi[j]));
        }
    }
    if (std::abs(acc.imag()) > kImagResidueTol) {
        throw invariant_error("intensity: imaginary residue exceeds tolerance");
    }
    return acc.real();
}

PhaseScan make_phase_scan(const QuantonDensityMatrix& rho, int points, double offset) {
    if (points < kMinScanPoints) {
        throw std::invalid_argument("make_phase_scan: need at least 64 points");
    }
    if (!std::isfinite(offset)) {
        throw std::invalid_argument("make_phase_scan: offset must be finite");
    }
    PhaseScan scan;
    scan.phases.reserve(static_cast<std::size_t>(points));
    scan.intensities.reserve(static_cast<std::size_t>(points));
    std::vector<double> phi(static_cast<std::size_t>(rho.dim()), 0.0);
    for (int k = 0; k < points; ++k) {
        const double phase = offset + 2.0 * std::numbers::pi * k / points;
        phi.back() = phase;
        scan.phases.push_back(phase);
        scan.intensities.push_back(intensity(rho, phi));
    }
    return scan;
}

double visibility(const PhaseScan& scan) {
    const std::size_t n = scan.phases.size();
    if (n != scan.intensities.size()) {
        throw std::invalid_argument("visibility: phases/intensities length mismatch");
    }
    if (n < static_cast<std::size_t>(kMinScanPoints)) {
        throw std::invalid_argument("visibility: need at least 64 scan points");
    }
    for (const double x : scan.phases) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("visibility: phases must be finite");
        }
    }
    // A PSD rho keeps intensities nonnegative in exact arithmetic; rounding can
    // leave a fringe minimum a few ulp below zero, which is clamped out below.
    for (const double x : scan.intensities) {
        if (!std::isfinite(x) || x < -1e-10) {
            throw std::invalid_argument("visibility: intensities must be finite and nonnegative");
        }
    }
    // Treat the scan as one period of cyclic sampling: the phase span plus
    // one mean spacing must reach 2pi, so a uniform [0, 2pi) grid passes.
    const auto [pmin, pmax] = std::minmax_element(scan.phases.begin(), scan.phases.end());
    const double span = *pmax - *pmin;
    const double mean_spacing = span / static_cast<double>(n - 1);
    if (span + mean_spacing < 2.0 * std::numbers::pi - 1e-9) {
        throw std::invalid_argument("visibility: scan must cover a full 2pi period");
    }
    const auto [imin, imax] = std::minmax_element(scan.intensities.begin(), scan.intensities.end());
    const double lo = *imin > 0.0 ? *imin : 0.0;
    const double hi = *imax > 0.0 ? *imax : 0.0;
    if (hi == 0.0) {
        throw std::domain_error("visibility: undefined for an all-zero scan");
    }
    return (hi - lo) / (hi + lo);
}

}  // namespace npath
