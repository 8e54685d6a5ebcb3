// scenarios.hpp — Built-in state generators: the two figure families, the
// linearly-dependent detector example, seeded random states, and the theta
// sweep that regenerates the figure data.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "npath/measures.hpp"

namespace npath {

// Standard complex Gaussian sampler on top of mt19937_64 with a fixed
// Box-Muller transform, so a seed reproduces the same stream on every
// platform with the same libm.
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}

    double next();
    Complex next_complex();
    Vector next_vector(int dim);
    double uniform(double lo, double hi);

private:
    double uniform_open();  // uniform on (0, 1]

    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

enum class ScenarioFamily { figure1, figure2, degenerate, random_state, custom };

struct ScenarioSpec {
    ScenarioFamily family = ScenarioFamily::custom;
    double theta = 0.0;       // figure families
    int n = 0;                // degenerate / random
    int m = 0;                // random: detector dimension
    std::uint64_t seed = 0;   // random

    static ScenarioSpec figure1(double theta);
    static ScenarioSpec figure2(double theta);
    // n >= 3 detectors in an (n-1)-dimensional space, the last one a
    // superposition of two basis states, so the set is linearly dependent.
    static ScenarioSpec degenerate(int n);
    static ScenarioSpec random(int n, int m, std::uint64_t seed);
};

// Materializes a spec. figure1/figure2 use N = 3, p_i = 1/3 and the detector
// triples (cos t, sin t, 0), (sin t, +/-cos t, 0), third vector per family.
// Throws std::invalid_argument for malformed specs and for `custom`, which is
// only ever defined by an input file.
PureJointState build(const ScenarioSpec& spec);

// One random pure state: amplitudes and detector vectors drawn as standard
// complex Gaussians, then normalized (uniform on the unit sphere).
PureJointState random_pure_state(int n, int m, GaussianSampler& sampler);
PureJointState random_pure_state(int n, int m, std::uint64_t seed);

struct SweepRow {
    double theta = 0.0;
    double d2 = 0.0;
    double c2 = 0.0;
    double db2_bound = 0.0;
    double sum_dc = 0.0;   // d2 + c2
    double sum_dbc = 0.0;  // db2_bound + c2
};

// One figure-family row at a given theta, computed through the measure
// pipeline (partial trace, Gram matrix, quantifiers), not from the closed
// forms.
SweepRow sweep_row(ScenarioFamily family, double theta);

// Uniform theta grid over [start, end] inclusive with `steps` points.
std::vector<SweepRow> sweep(ScenarioFamily family, double theta_start, double theta_end,
                            int steps);

// The closed-form curves the sweep reproduces, for regression against the
// pipeline values.
struct ClosedForm {
    double d2 = 0.0;
    double c2 = 0.0;
    double db2_bound = 0.0;
};
ClosedForm figure1_closed_form(double theta);
ClosedForm figure2_closed_form(double theta);

}  // namespace npath
