// pattern.hpp — Phase-scan interference readout and fringe visibility.
//
// The readout model applies one adjustable phase per path and sums the
// reduced density matrix against the phase factors; slit-profile envelopes
// are deliberately excluded. Visibility is the standard fringe contrast and
// is physically meaningful for two paths (elsewhere it is a diagnostic).

#pragma once

#include <vector>

#include "npath/joint_state.hpp"

namespace npath {

// Largest tolerated imaginary part of the intensity sum.
inline constexpr double kImagResidueTol = 1e-12;

// Minimum number of scan points accepted by visibility.
inline constexpr int kMinScanPoints = 64;

// One interference scan: intensity sampled at each phase setting.
struct PhaseScan {
    std::vector<double> phases;       // radians
    std::vector<double> intensities;  // same length, nonnegative
};

// I = sum_{i,j} rho_ij exp(i(phi_i - phi_j)), one phase per path. The sum is
// real for a Hermitian rho; if the imaginary residue exceeds kImagResidueTol
// the input is rejected as insufficiently Hermitian.
double intensity(const QuantonDensityMatrix& rho, const std::vector<double>& phi);

// Scans the last path's phase over [offset, offset + 2pi), the other paths
// held at phase zero, and records the intensity at each of `points` settings.
PhaseScan make_phase_scan(const QuantonDensityMatrix& rho, int points, double offset = 0.0);

// Fringe contrast (Imax - Imin)/(Imax + Imin) in [0, 1]. Requires at least
// kMinScanPoints settings covering a full 2pi period.
double visibility(const PhaseScan& scan);

}  // namespace npath
