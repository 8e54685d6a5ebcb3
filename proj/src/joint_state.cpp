#include "npath/joint_state.hpp"

#include <cmath>
#include <string>

namespace npath {

namespace {

double squared_norm(const Vector& v) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) acc += std::norm(v[i]);
    return acc;
}

}  // namespace

PathAmplitudes::PathAmplitudes(Vector c) : c_(std::move(c)) {
    if (c_.size() < 2) {
        throw invariant_error("PathAmplitudes: need at least 2 paths, got " +
                              std::to_string(c_.size()));
    }
    require_finite(c_, "PathAmplitudes");
    const double norm2 = squared_norm(c_);
    if (std::abs(norm2 - 1.0) > kNormTol) {
        throw invariant_error("PathAmplitudes: not normalized, sum |c_i|^2 = " +
                              std::to_string(norm2));
    }
}

PathAmplitudes PathAmplitudes::normalized(Vector c) {
    require_finite(c, "PathAmplitudes");
    const double norm = std::sqrt(squared_norm(c));
    if (norm == 0.0) {
        throw invariant_error("PathAmplitudes: cannot normalize the zero vector");
    }
    for (Eigen::Index i = 0; i < c.size(); ++i) c[i] /= norm;
    return PathAmplitudes(std::move(c));
}

DetectorSet::DetectorSet(std::vector<Vector> d) : d_(std::move(d)) {
    if (d_.size() < 2) {
        throw invariant_error("DetectorSet: need at least 2 detector states, got " +
                              std::to_string(d_.size()));
    }
    const Eigen::Index dim = d_.front().size();
    if (dim < 1) {
        throw invariant_error("DetectorSet: detector dimension must be >= 1");
    }
    for (std::size_t i = 0; i < d_.size(); ++i) {
        if (d_[i].size() != dim) {
            throw invariant_error("DetectorSet: detector " + std::to_string(i) +
                                  " has dimension " + std::to_string(d_[i].size()) +
                                  ", expected " + std::to_string(dim));
        }
        require_finite(d_[i], "DetectorSet");
        const double norm = std::sqrt(squared_norm(d_[i]));
        if (std::abs(norm - 1.0) > kNormTol) {
            throw invariant_error("DetectorSet: detector " + std::to_string(i) +
                                  " not normalized, |d| = " + std::to_string(norm));
        }
    }
}

DetectorSet DetectorSet::normalized(std::vector<Vector> d) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        require_finite(d[i], "DetectorSet");
        const double norm = std::sqrt(squared_norm(d[i]));
        if (norm == 0.0) {
            throw invariant_error("DetectorSet: cannot normalize zero detector " +
                                  std::to_string(i));
        }
        for (Eigen::Index k = 0; k < d[i].size(); ++k) d[i][k] /= norm;
    }
    return DetectorSet(std::move(d));
}

PureJointState::PureJointState(PathAmplitudes amps, DetectorSet dets)
    : amps_(std::move(amps)), dets_(std::move(dets)) {
    if (amps_.size() != dets_.size()) {
        throw invariant_error("PureJointState: amplitude count " +
                              std::to_string(amps_.size()) + " != detector count " +
                              std::to_string(dets_.size()));
    }
}

Ensemble::Ensemble(std::vector<Component> components) : components_(std::move(components)) {
    if (components_.empty()) {
        throw invariant_error("Ensemble: needs at least one component");
    }
    const int n = components_.front().state.paths();
    double total = 0.0;
    for (std::size_t k = 0; k < components_.size(); ++k) {
        const auto& comp = components_[k];
        if (!(comp.weight > 0.0) || !std::isfinite(comp.weight)) {
            throw invariant_error("Ensemble: component " + std::to_string(k) +
                                  " weight must be positive and finite");
        }
        if (comp.state.paths() != n) {
            throw invariant_error("Ensemble: component " + std::to_string(k) +
                                  " has N = " + std::to_string(comp.state.paths()) +
                                  ", expected " + std::to_string(n));
        }
        total += comp.weight;
    }
    if (std::abs(total - 1.0) > kNormTol) {
        throw invariant_error("Ensemble: weights sum to " + std::to_string(total) +
                              ", expected 1");
    }
}

QuantonDensityMatrix::QuantonDensityMatrix(Matrix rho) : rho_(std::move(rho)) {
    if (rho_.rows() != rho_.cols() || rho_.rows() < 2) {
        throw invariant_error("QuantonDensityMatrix: matrix must be square with N >= 2");
    }
    if (!is_hermitian_psd_trace1(rho_, kDensityTol)) {
        throw invariant_error(
            "QuantonDensityMatrix: matrix is not Hermitian PSD with unit trace");
    }
}

QuantonDensityMatrix partial_trace(const PureJointState& s) {
    const int n = s.paths();
    const Vector& c = s.amplitudes().coeffs();
    const DetectorSet& d = s.detectors();
    Matrix rho(n, n);
    for (int i = 0; i < n; ++i) {
        rho(i, i) = std::norm(c[i]);  // <d_i|d_i> = 1 by the unit-norm invariant
        for (int j = i + 1; j < n; ++j) {
            const Complex rij = c[i] * std::conj(c[j]) * inner(d[j], d[i]);
            rho(i, j) = rij;
            rho(j, i) = std::conj(rij);
        }
    }
    return QuantonDensityMatrix(std::move(rho));
}

QuantonDensityMatrix reduce_ensemble(const Ensemble& e) {
    const int n = e.paths();
    Matrix rho = Matrix::Zero(n, n);
    for (const auto& comp : e.components()) {
        rho += comp.weight * partial_trace(comp.state).matrix();
    }
    return QuantonDensityMatrix(std::move(rho));
}

}  // namespace npath
