#include "npath/duality.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

#include "npath/measures.hpp"

namespace npath {

namespace {

// Margin demanded by the strict-monotonicity checks. The constructions below
// guarantee a true decrease of at least ~1e-10, far above rounding noise.
constexpr double kStrictDecreaseMargin = 1e-14;

// d_i = sqrt(1-g) e_i + sqrt(g) e_n in dimension n+1: unit vectors whose
// pairwise overlaps all equal g.
std::vector<Vector> uniform_overlap_detectors(int n, double g) {
    const double a = std::sqrt(1.0 - g);
    const double b = std::sqrt(g);
    std::vector<Vector> d;
    d.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Vector v = Vector::Zero(n + 1);
        v[i] = a;
        v[n] = b;
        d.push_back(std::move(v));
    }
    return d;
}

PureJointState make_state(const std::vector<double>& p, std::vector<Vector> dets) {
    Vector c(static_cast<int>(p.size()));
    for (int i = 0; i < c.size(); ++i) {
        c[i] = std::sqrt(p[static_cast<std::size_t>(i)]);
    }
    return PureJointState(PathAmplitudes::normalized(std::move(c)),
                          DetectorSet(std::move(dets)));
}

double probe_d(const std::vector<double>& p, double g) {
    return distinguishability_d(
        make_state(p, uniform_overlap_detectors(static_cast<int>(p.size()), g)));
}

// A probability vector bounded away from the simplex boundary (every entry
// at least 1/(3n)) with a spread of at least 1e-3 between its extremes, so
// the monotonicity margins below are meaningful.
std::vector<double> random_probabilities(int n, GaussianSampler& rng) {
    for (;;) {
        std::vector<double> p(static_cast<std::size_t>(n));
        double total = 0.0;
        for (double& x : p) {
            x = 0.5 + rng.uniform(0.0, 1.0);
            total += x;
        }
        for (double& x : p) {
            x /= total;
        }
        const auto [mn, mx] = std::minmax_element(p.begin(), p.end());
        if (*mx - *mn >= 1e-3) {
            return p;
        }
    }
}

int pick_index(GaussianSampler& rng, int n) {
    const int k = static_cast<int>(rng.uniform(0.0, static_cast<double>(n)));
    return std::min(k, n - 1);
}

// Finite-difference continuity probe: shift probability mass between one
// random pair of paths by deltas shrinking tenfold. Each response must shrink
// linearly (within a factor of 2) or sit below an explicit linear modulus.
// The second arm covers probe points where the derivative in the shift
// direction nearly vanishes and the response is curvature-dominated, which
// breaks the shrink ratio at the largest delta. On this family |dD/d delta|
// stays below ~7 (entries at least 1/(3n), overlaps at most 0.9 keep every
// denominator away from zero), so 25 is a safe modulus slope; any jump larger
// than 25 times the smallest delta still fails.
bool continuity_probe(int n, GaussianSampler& rng) {
    const std::vector<double> p = random_probabilities(n, rng);
    const double g = rng.uniform(0.1, 0.9);
    const int i = pick_index(rng, n);
    int j = pick_index(rng, n - 1);
    if (j >= i) {
        ++j;
    }
    const double base = probe_d(p, g);
    double prev = 0.0;
    double delta = 1e-3;
    for (int k = 0; k < 5; ++k, delta /= 10.0) {
        std::vector<double> q = p;
        q[static_cast<std::size_t>(i)] -= delta;
        q[static_cast<std::size_t>(j)] += delta;
        const double diff = std::abs(probe_d(q, g) - base);
        const bool within_modulus = diff <= 25.0 * delta;
        const bool shrinking = k > 0 && diff <= 0.2 * prev;
        if (!within_modulus && !shrinking) {
            return false;
        }
        prev = diff;
    }
    return true;
}

// D = 1 exactly when one path is certain and the detectors are orthonormal:
// every overlap term carries a zero amplitude.
bool global_max_check(int n) {
    Vector c = Vector::Zero(n);
    c[0] = 1.0;
    std::vector<Vector> d;
    d.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Vector v = Vector::Zero(n);
        v[i] = 1.0;
        d.push_back(std::move(v));
    }
    const PureJointState s(PathAmplitudes(std::move(c)), DetectorSet(std::move(d)));
    return distinguishability_d(s) == 1.0;
}

// D = 0 when the paths are equally likely and every pairwise overlap is 1
// (identical detector states leak no path information).
bool global_min_check(int n) {
    Vector c = Vector::Constant(n, Complex(1.0, 0.0));
    std::vector<Vector> d(static_cast<std::size_t>(n), Vector::Constant(1, Complex(1.0, 0.0)));
    const PureJointState s(PathAmplitudes::normalized(std::move(c)), DetectorSet(std::move(d)));
    return distinguishability_d(s) <= 1e-6;
}

// Two strict-decrease checks at one random probe point: equalizing the most
// and least likely paths, and raising a single pairwise overlap.
bool monotonicity_probe(int n, GaussianSampler& rng) {
    const std::vector<double> p = random_probabilities(n, rng);
    const double g = rng.uniform(0.1, 0.9);
    const double d_base = probe_d(p, g);

    const auto [mn_it, mx_it] = std::minmax_element(p.begin(), p.end());
    const auto lo = static_cast<std::size_t>(mn_it - p.begin());
    const auto hi = static_cast<std::size_t>(mx_it - p.begin());
    const double eps = rng.uniform(0.25, 0.5) * (p[hi] - p[lo]);
    std::vector<double> q = p;
    q[hi] -= eps;
    q[lo] += eps;
    if (!(probe_d(q, g) < d_base - kStrictDecreaseMargin)) {
        return false;
    }

    // Raise the (k, l) overlap from g to g + eps_g by rotating d_l slightly
    // toward the e_k axis; all other overlaps and every norm stay put.
    const double eps_g = rng.uniform(0.01, 0.05);
    const int k = pick_index(rng, n);
    int l = pick_index(rng, n - 1);
    if (l >= k) {
        ++l;
    }
    const double gamma = eps_g / std::sqrt(1.0 - g);
    std::vector<Vector> dets = uniform_overlap_detectors(n, g);
    Vector raised = Vector::Zero(n + 1);
    raised[l] = std::sqrt(1.0 - g - gamma * gamma);
    raised[n] = std::sqrt(g);
    raised[k] = gamma;
    dets[static_cast<std::size_t>(l)] = std::move(raised);
    const double d_raised = distinguishability_d(make_state(p, std::move(dets)));
    return d_raised < d_base - kStrictDecreaseMargin;
}

}  // namespace

DualityVerdict check_pure_duality(const PureJointState& s, double tolerance) {
    if (!(tolerance > 0.0)) {
        throw std::invalid_argument("check_pure_duality: tolerance must be positive");
    }
    DualityVerdict v;
    v.detail = full_report(s);
    v.sum = v.detail.duality_sum;
    v.tolerance = tolerance;
    v.saturated = std::abs(v.sum - 1.0) <= tolerance;
    return v;
}

DualityVerdict check_mixed_duality(const Ensemble& e, double tolerance) {
    if (!(tolerance > 0.0)) {
        throw std::invalid_argument("check_mixed_duality: tolerance must be positive");
    }
    const double c = coherence(reduce_ensemble(e));
    double dq_bar = 0.0;
    double bagan_bar = 0.0;
    for (const Ensemble::Component& comp : e.components()) {
        const MeasureReport r = full_report(comp.state);
        dq_bar += comp.weight * r.dist_dq;
        bagan_bar += comp.weight * r.bagan_db_bound;
    }
    // dq_bar lies in [0, 1] up to rounding, so the parabola below can only go
    // negative by an ulp; clamp for the sqrt.
    const double d2 = std::max(0.0, dq_bar * (2.0 - dq_bar));

    DualityVerdict v;
    v.detail.n = e.paths();
    v.detail.coherence_c = c;
    v.detail.dist_d = std::sqrt(d2);
    v.detail.dist_dq = dq_bar;
    v.detail.bagan_db_bound = bagan_bar;
    v.detail.duality_sum = d2 + c * c;
    v.sum = v.detail.duality_sum;
    v.tolerance = tolerance;
    v.saturated = std::abs(v.sum - 1.0) <= tolerance;
    return v;
}

bool check_dq_identity(const PureJointState& s, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("check_dq_identity: tol must be positive");
    }
    const double d = distinguishability_d(s);
    const double dq = distinguishability_dq(s);
    return std::abs(d * d - dq * (2.0 - dq)) <= tol;
}

DurrReport durr_criteria(int n, int probes, std::uint64_t seed) {
    if (n < 2) {
        throw std::invalid_argument("durr_criteria: need n >= 2");
    }
    if (probes < 100) {
        throw std::invalid_argument("durr_criteria: need probes >= 100");
    }
    GaussianSampler rng(seed);
    DurrReport rep;
    rep.probe_count = probes;
    rep.continuity_ok = true;
    for (int t = 0; t < probes && rep.continuity_ok; ++t) {
        rep.continuity_ok = continuity_probe(n, rng);
    }
    rep.global_max_ok = global_max_check(n);
    rep.global_min_ok = global_min_check(n);
    rep.monotonicity_ok = true;
    for (int t = 0; t < probes && rep.monotonicity_ok; ++t) {
        rep.monotonicity_ok = monotonicity_probe(n, rng);
    }
    return rep;
}

bool uqsd_feasible(const DetectorSet& dets, double tol) {
    return numerical_rank(gram(dets.states()), tol) == dets.size();
}

std::vector<SweepRow> bagan_comparison(ScenarioFamily family,
                                       const std::vector<double>& theta_grid) {
    if (family != ScenarioFamily::figure1 && family != ScenarioFamily::figure2) {
        throw std::invalid_argument("bagan_comparison: family must be figure1 or figure2");
    }
    std::vector<SweepRow> rows;
    rows.reserve(theta_grid.size());
    for (const double theta : theta_grid) {
        rows.push_back(sweep_row(family, theta));
    }
    return rows;
}

}  // namespace npath
