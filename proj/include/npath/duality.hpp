#pragma once

#include <cstdint>
#include <vector>

#include "npath/joint_state.hpp"
#include "npath/linalg.hpp"
#include "npath/measures.hpp"
#include "npath/scenarios.hpp"

namespace npath {

// Default tolerance for duality saturation and identity checks.
inline constexpr double kDualityTol = 1e-12;

// Outcome of a duality-relation check: sum is D^2 + C^2 for a pure state, or
// the ensemble-averaged analogue for a mixture.
struct DualityVerdict {
    double sum = 0.0;
    bool saturated = false;  // |sum - 1| <= tolerance
    double tolerance = kDualityTol;
    MeasureReport detail;
};

// Results of the four structural checks on the distinguishability measure:
// continuity in the path probabilities, exact global maximum and minimum on
// constructed inputs, and strict monotonicity under probability equalization
// and overlap growth.
struct DurrReport {
    bool continuity_ok = false;
    bool global_max_ok = false;
    bool global_min_ok = false;
    bool monotonicity_ok = false;
    int probe_count = 0;

    bool all_ok() const {
        return continuity_ok && global_max_ok && global_min_ok && monotonicity_ok;
    }
};

// Checks D^2 + C^2 = 1 for a pure joint state; saturated must hold for every
// valid input (the relation is an identity, not an inequality, when pure).
DualityVerdict check_pure_duality(const PureJointState& s, double tolerance = kDualityTol);

// Checks D^2 + C^2 <= 1 for a mixture. C comes from the ensemble-averaged
// reduced density matrix; distinguishability uses the weight-averaged D_Q of
// the given decomposition, mapped through D^2 = Dq(2 - Dq). The verdict's sum
// can fall strictly below 1; saturated flags the boundary case.
DualityVerdict check_mixed_duality(const Ensemble& e, double tolerance = kDualityTol);

// True iff |D^2 - D_Q(2 - D_Q)| <= tol for the given pure state.
bool check_dq_identity(const PureJointState& s, double tol = kDualityTol);

// Runs the four structural checks for n-path distinguishability using `probes`
// random probe points drawn from a deterministic seeded stream.
DurrReport durr_criteria(int n, int probes, std::uint64_t seed);

// True iff the detector states can in principle be discriminated without
// error, i.e. they are linearly independent (Gram matrix has full rank).
bool uqsd_feasible(const DetectorSet& dets, double tol = kDefaultRankTol);

// Evaluates D^2, C^2, and the squared minimum-error bound for one parametric
// detector family at each grid point, for side-by-side comparison.
std::vector<SweepRow> bagan_comparison(ScenarioFamily family,
                                       const std::vector<double>& theta_grid);

}  // namespace npath
