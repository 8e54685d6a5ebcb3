#include "npath/measures.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace npath {

namespace {

// sqrt with the radicand policy: noise-level negatives (>= -kRadicandTol) are
// clamped to zero, anything more negative is a numerical-domain error.
double checked_sqrt(double radicand, const char* what) {
    if (radicand < -kRadicandTol) {
        throw std::domain_error(std::string(what) + ": radicand " +
                                std::to_string(radicand) + " below -1e-12");
    }
    return radicand > 0.0 ? std::sqrt(radicand) : 0.0;
}

}  // namespace

double coherence(const QuantonDensityMatrix& rho) {
    const int n = rho.dim();
    if (n < 2) {
        throw std::invalid_argument("coherence: need N >= 2");
    }
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            acc += std::abs(rho(i, j));
        }
    }
    return acc / (n - 1);
}

double detector_overlap_sum(const PureJointState& s) {
    const int n = s.paths();
    const Vector& c = s.amplitudes().coeffs();
    const DetectorSet& d = s.detectors();
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            acc += std::abs(c[i]) * std::abs(c[j]) * std::abs(inner(d[i], d[j]));
        }
    }
    return acc / (n - 1);
}

double distinguishability_d(const PureJointState& s) {
    const double sum = detector_overlap_sum(s);
    return checked_sqrt(1.0 - sum * sum, "distinguishability_d");
}

double distinguishability_dq(const PureJointState& s) {
    const double dq = 1.0 - detector_overlap_sum(s);
    if (dq < -kRadicandTol) {
        throw std::domain_error("distinguishability_dq: overlap sum exceeds 1");
    }
    return dq > 0.0 ? dq : 0.0;
}

double englert_d(const PureJointState& s) {
    if (s.paths() != 2) {
        throw std::invalid_argument("englert_d: requires N = 2, got N = " +
                                    std::to_string(s.paths()));
    }
    for (int i = 0; i < 2; ++i) {
        const double p = s.amplitudes().probability(i);
        if (std::abs(p - 0.5) > kEqualAmplitudeTol) {
            throw std::invalid_argument("englert_d: requires equal amplitudes, |c_" +
                                        std::to_string(i + 1) + "|^2 = " + std::to_string(p));
        }
    }
    const double overlap = std::abs(inner(s.detectors()[0], s.detectors()[1]));
    return checked_sqrt(1.0 - overlap * overlap, "englert_d");
}

double bagan_db_bound(const std::vector<double>& p, const Matrix& g) {
    const int n = static_cast<int>(p.size());
    if (n < 2) {
        throw std::invalid_argument("bagan_db_bound: need N >= 2 probabilities");
    }
    if (g.rows() != n || g.cols() != n) {
        throw std::invalid_argument("bagan_db_bound: Gram matrix must be " +
                                    std::to_string(n) + "x" + std::to_string(n));
    }
    require_finite(g, "bagan_db_bound: Gram matrix");
    double total_p = 0.0;
    for (int i = 0; i < n; ++i) {
        if (!(p[static_cast<std::size_t>(i)] >= 0.0) ||
            !std::isfinite(p[static_cast<std::size_t>(i)])) {
            throw std::invalid_argument("bagan_db_bound: p_" + std::to_string(i + 1) +
                                        " must be >= 0 and finite");
        }
        total_p += p[static_cast<std::size_t>(i)];
        if (std::abs(g(i, i) - Complex(1.0, 0.0)) > 1e-9) {
            throw std::invalid_argument("bagan_db_bound: g[" + std::to_string(i + 1) + "][" +
                                        std::to_string(i + 1) + "] must be 1");
        }
    }
    if (std::abs(total_p - 1.0) > kNormTol) {
        throw std::invalid_argument("bagan_db_bound: probabilities sum to " +
                                    std::to_string(total_p) + ", expected 1");
    }
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;  // identically zero: g_ii = 1
            const double pi = p[static_cast<std::size_t>(i)];
            const double pj = p[static_cast<std::size_t>(j)];
            const double half_sum = 0.5 * (pi + pj);
            const double overlap = std::abs(g(i, j));
            const double radicand = half_sum * half_sum - pi * pj * overlap * overlap;
            acc += checked_sqrt(radicand, "bagan_db_bound");
        }
    }
    return acc / (n - 1);
}

MeasureReport full_report(const PureJointState& s) {
    MeasureReport report;
    report.n = s.paths();
    report.coherence_c = coherence(partial_trace(s));
    report.dist_d = distinguishability_d(s);
    report.dist_dq = distinguishability_dq(s);
    std::vector<double> p(static_cast<std::size_t>(s.paths()));
    for (int i = 0; i < s.paths(); ++i) {
        p[static_cast<std::size_t>(i)] = s.amplitudes().probability(i);
    }
    report.bagan_db_bound = bagan_db_bound(p, gram(s.detectors().states()));
    report.duality_sum = report.dist_d * report.dist_d + report.coherence_c * report.coherence_c;
    return report;
}

}  // namespace npath
