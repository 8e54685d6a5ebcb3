#include "npath/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace npath {

double GaussianSampler::uniform_open() {
    // 53 mantissa bits; +1 keeps the value strictly positive for the log below.
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
}

double GaussianSampler::uniform(double lo, double hi) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw std::invalid_argument("uniform: need finite lo < hi");
    }
    return lo + (hi - lo) * uniform_open();
}

double GaussianSampler::next() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform_open();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

Complex GaussianSampler::next_complex() {
    const double re = next();
    const double im = next();
    return Complex(re, im);
}

Vector GaussianSampler::next_vector(int dim) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = next_complex();
    return v;
}

ScenarioSpec ScenarioSpec::figure1(double theta) {
    ScenarioSpec spec;
    spec.family = ScenarioFamily::figure1;
    spec.theta = theta;
    return spec;
}

ScenarioSpec ScenarioSpec::figure2(double theta) {
    ScenarioSpec spec;
    spec.family = ScenarioFamily::figure2;
    spec.theta = theta;
    return spec;
}

ScenarioSpec ScenarioSpec::degenerate(int n) {
    ScenarioSpec spec;
    spec.family = ScenarioFamily::degenerate;
    spec.n = n;
    return spec;
}

ScenarioSpec ScenarioSpec::random(int n, int m, std::uint64_t seed) {
    ScenarioSpec spec;
    spec.family = ScenarioFamily::random_state;
    spec.n = n;
    spec.m = m;
    spec.seed = seed;
    return spec;
}

namespace {

PathAmplitudes uniform_amplitudes(int n) {
    return PathAmplitudes::normalized(Vector::Ones(n));
}

PureJointState figure_state(double theta, bool second_family) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("build: theta must be finite");
    }
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    Vector d1(3), d2(3), d3(3);
    d1 << c, s, 0.0;
    if (second_family) {
        d2 << s, -c, 0.0;
        d3 << 0.0, 2.0 * std::sqrt(2.0) / 3.0, 1.0 / 3.0;
    } else {
        d2 << s, c, 0.0;
        d3 << 0.0, 0.0, 1.0;
    }
    return PureJointState(uniform_amplitudes(3), DetectorSet({d1, d2, d3}));
}

PureJointState degenerate_state(int n) {
    if (n < 3) {
        throw std::invalid_argument(
            "build: degenerate family needs n >= 3, got " + std::to_string(n));
    }
    const int dim = n - 1;
    std::vector<Vector> dets;
    dets.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < dim; ++i) {
        Vector e = Vector::Zero(dim);
        e[i] = 1.0;
        dets.push_back(std::move(e));
    }
    Vector last = Vector::Zero(dim);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    last[dim - 2] = inv_sqrt2;
    last[dim - 1] = inv_sqrt2;
    dets.push_back(std::move(last));
    return PureJointState(uniform_amplitudes(n), DetectorSet(std::move(dets)));
}

}  // namespace

PureJointState random_pure_state(int n, int m, GaussianSampler& sampler) {
    if (n < 2 || m < 1) {
        throw std::invalid_argument("random_pure_state: need n >= 2 and m >= 1");
    }
    PathAmplitudes amps = PathAmplitudes::normalized(sampler.next_vector(n));
    std::vector<Vector> dets;
    dets.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) dets.push_back(sampler.next_vector(m));
    return PureJointState(std::move(amps), DetectorSet::normalized(std::move(dets)));
}

PureJointState random_pure_state(int n, int m, std::uint64_t seed) {
    GaussianSampler sampler(seed);
    return random_pure_state(n, m, sampler);
}

PureJointState build(const ScenarioSpec& spec) {
    switch (spec.family) {
        case ScenarioFamily::figure1:
            return figure_state(spec.theta, false);
        case ScenarioFamily::figure2:
            return figure_state(spec.theta, true);
        case ScenarioFamily::degenerate:
            return degenerate_state(spec.n);
        case ScenarioFamily::random_state:
            return random_pure_state(spec.n, spec.m, spec.seed);
        case ScenarioFamily::custom:
            throw std::invalid_argument("build: custom scenarios come from input files");
    }
    throw std::invalid_argument("build: unknown scenario family");
}

SweepRow sweep_row(ScenarioFamily family, double theta) {
    if (family != ScenarioFamily::figure1 && family != ScenarioFamily::figure2) {
        throw std::invalid_argument("sweep_row: family must be figure1 or figure2");
    }
    const ScenarioSpec spec = (family == ScenarioFamily::figure1)
                                  ? ScenarioSpec::figure1(theta)
                                  : ScenarioSpec::figure2(theta);
    const MeasureReport report = full_report(build(spec));
    SweepRow row;
    row.theta = theta;
    row.d2 = report.dist_d * report.dist_d;
    row.c2 = report.coherence_c * report.coherence_c;
    row.db2_bound = report.bagan_db_bound * report.bagan_db_bound;
    row.sum_dc = report.duality_sum;
    row.sum_dbc = row.db2_bound + row.c2;
    return row;
}

std::vector<SweepRow> sweep(ScenarioFamily family, double theta_start, double theta_end,
                            int steps) {
    if (family != ScenarioFamily::figure1 && family != ScenarioFamily::figure2) {
        throw std::invalid_argument("sweep: family must be figure1 or figure2");
    }
    if (steps < 2) {
        throw std::invalid_argument("sweep: need at least 2 steps");
    }
    if (!std::isfinite(theta_start) || !std::isfinite(theta_end)) {
        throw std::invalid_argument("sweep: grid endpoints must be finite");
    }
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        // Last point pinned to the endpoint so the grid is inclusive exactly.
        const double theta =
            (k == steps - 1) ? theta_end
                             : theta_start + (theta_end - theta_start) * k / (steps - 1);
        rows.push_back(sweep_row(family, theta));
    }
    return rows;
}

ClosedForm figure1_closed_form(double theta) {
    const double s2 = std::sin(2.0 * theta);
    ClosedForm cf;
    cf.c2 = (1.0 / 9.0) * s2 * s2;
    cf.d2 = 1.0 - (1.0 / 9.0) * s2 * s2;
    double radicand = 1.0 - s2 * s2;
    if (radicand < 0.0) radicand = 0.0;
    const double root = 2.0 + std::sqrt(radicand);
    cf.db2_bound = (1.0 / 9.0) * root * root;
    return cf;
}

ClosedForm figure2_closed_form(double theta) {
    const double sn = std::sin(theta);
    const double cs = std::cos(theta);
    const double abs_sum = std::abs(sn) + std::abs(cs);
    ClosedForm cf;
    cf.c2 = (8.0 / 81.0) * abs_sum * abs_sum;
    cf.d2 = 1.0 - (8.0 / 81.0) * abs_sum * abs_sum;
    const double root =
        1.0 + std::sqrt(1.0 - (8.0 / 9.0) * sn * sn) + std::sqrt(1.0 - (8.0 / 9.0) * cs * cs);
    cf.db2_bound = (1.0 / 9.0) * root * root;
    return cf;
}

}  // namespace npath
