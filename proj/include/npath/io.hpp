// io.hpp — Scenario-file parsing and deterministic serialization.
//
// Scenario files are JSON (version 1): either a single pure joint state
//   {"version": 1, "n": 3, "amplitudes": [[re, im], ...],
//    "detectors": [[[re, im], ...], ...]}
// or a classical mixture
//   {"version": 1, "n": 3, "ensemble": [{"weight": w, "amplitudes": ...,
//    "detectors": ...}, ...]}
//
// Malformed documents (syntax, types, missing keys, count mismatches) raise
// parse_error; well-formed documents describing invalid states (unnormalized
// amplitudes, bad weights) raise invariant_error from the validating
// constructors. All serialization is byte-deterministic; doubles in CSV carry
// 17 significant digits so they round-trip exactly.

#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "npath/duality.hpp"
#include "npath/joint_state.hpp"
#include "npath/measures.hpp"
#include "npath/scenarios.hpp"

namespace npath {

using Scenario = std::variant<PureJointState, Ensemble>;

Scenario load_scenario(std::istream& in);
Scenario load_scenario_file(const std::string& path);

// Shortest-width %.17g rendering; round-trips any finite double.
std::string format_double(double x);

// theta,D2,C2,DB2_bound,sum_DC,sum_DBC — one line per grid point.
std::string sweep_csv(const std::vector<SweepRow>& rows);

// sample,D2,C2,DQ,sum_DC — one line per random sample.
std::string random_sweep_csv(const std::vector<MeasureReport>& reports);

// Full measure-and-verdict report for a scenario, as JSON or aligned text.
// Includes the discrimination feasibility of each detector set.
std::string scenario_report(const Scenario& sc, bool as_json);

// True iff the scenario satisfies its duality relation: saturation for a
// pure state, sum <= 1 + tolerance for a mixture.
bool scenario_passes(const Scenario& sc);

// Plain-text rendering of the four structural-check results.
std::string durr_text(const DurrReport& rep);

}  // namespace npath
