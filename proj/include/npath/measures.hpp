// measures.hpp — Wave and particle quantifiers for N-path interference with a
// quantum path-detector: the l1-type coherence C, the UQSD-rooted
// distinguishabilities D and D_Q, the two-path special case, and the
// minimum-error-discrimination bound of Bagan et al.

#pragma once

#include <vector>

#include "npath/joint_state.hpp"

namespace npath {

// Radicands more negative than this are hard numerical-domain errors; smaller
// negatives are treated as floating-point noise and clamped to zero.
inline constexpr double kRadicandTol = 1e-12;

// Tolerance on |c_i|^2 - 1/2 accepted by englert_d.
inline constexpr double kEqualAmplitudeTol = 1e-9;

struct MeasureReport {
    int n = 0;
    double coherence_c = 0.0;
    double dist_d = 0.0;
    double dist_dq = 0.0;
    double bagan_db_bound = 0.0;
    double duality_sum = 0.0;  // dist_d^2 + coherence_c^2
};

// Normalized coherence of a reduced state in the fixed path basis:
// (1/(N-1)) sum_{i != j} |rho_ij|, in [0, 1].
double coherence(const QuantonDensityMatrix& rho);

// The normalized overlap sum (1/(N-1)) sum_{i != j} |c_i c_j| |<d_i|d_j>|.
// 1 minus this is the unambiguous-discrimination bound D_Q; for pure joint
// states it equals the coherence of the reduced state.
double detector_overlap_sum(const PureJointState& s);

// Path distinguishability D = sqrt(1 - detector_overlap_sum^2), in [0, 1].
// Equals 1 when the detector states are mutually orthogonal.
double distinguishability_d(const PureJointState& s);

// Path distinguishability D_Q = 1 - detector_overlap_sum, the upper bound on
// the probability of unambiguously discriminating the detector states.
// Satisfies D^2 = D_Q (2 - D_Q).
double distinguishability_dq(const PureJointState& s);

// Two-path distinguishability sqrt(1 - |<d_1|d_2>|^2), defined for N = 2 with
// equal amplitudes |c_1| = |c_2| = 1/sqrt(2). Throws std::invalid_argument
// naming the violated condition otherwise.
double englert_d(const PureJointState& s);

// Upper bound on the minimum-error distinguishability of Bagan et al.:
// (1/(N-1)) sum_{i,j} sqrt(((p_i+p_j)/2)^2 - p_i p_j |g_ij|^2) over all
// ordered pairs. Diagonal terms are identically zero for unit-norm detector
// states (g_ii = 1). p must be a probability vector and g the detector Gram
// matrix.
double bagan_db_bound(const std::vector<double>& p, const Matrix& g);

// Every quantifier of one pure joint state in a single pass.
MeasureReport full_report(const PureJointState& s);

}  // namespace npath
