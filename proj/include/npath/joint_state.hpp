// joint_state.hpp — Quanton–detector joint states, classical ensembles of
// them, and the reduced quanton density matrix.
//
// A pure joint state is sum_i c_i |psi_i>|d_i> over N paths: the c_i are the
// path amplitudes and the |d_i> are normalized (not necessarily orthogonal)
// path-detector states living in an M-dimensional detector space.

#pragma once

#include <utility>
#include <vector>

#include "npath/linalg.hpp"

namespace npath {

// Normalization tolerance accepted by the validating constructors.
inline constexpr double kNormTol = 1e-12;

// Validation tolerance for density-matrix properties (Hermiticity, trace,
// positivity).
inline constexpr double kDensityTol = 1e-10;

// The N path amplitudes c_i, with sum_i |c_i|^2 = 1.
class PathAmplitudes {
public:
    // Validates: N >= 2, finite entries, unit norm within kNormTol.
    explicit PathAmplitudes(Vector c);

    // Rescales the input to unit norm, then validates. Rejects the zero vector.
    static PathAmplitudes normalized(Vector c);

    int size() const { return static_cast<int>(c_.size()); }
    const Vector& coeffs() const { return c_; }
    const Complex& operator[](int i) const { return c_[i]; }
    // p_i = |c_i|^2
    double probability(int i) const { return std::norm(c_[i]); }

private:
    Vector c_;
};

// N unit-norm detector states sharing one dimension M >= 1.
class DetectorSet {
public:
    // Validates: N >= 2, common dimension, finite entries, each unit norm
    // within kNormTol.
    explicit DetectorSet(std::vector<Vector> d);

    // Rescales each vector to unit norm, then validates.
    static DetectorSet normalized(std::vector<Vector> d);

    int size() const { return static_cast<int>(d_.size()); }
    int dim() const { return static_cast<int>(d_.front().size()); }
    const Vector& operator[](int i) const { return d_[static_cast<std::size_t>(i)]; }
    const std::vector<Vector>& states() const { return d_; }

private:
    std::vector<Vector> d_;
};

// Amplitudes plus detector set with matching N.
class PureJointState {
public:
    PureJointState(PathAmplitudes amps, DetectorSet dets);

    int paths() const { return amps_.size(); }
    const PathAmplitudes& amplitudes() const { return amps_; }
    const DetectorSet& detectors() const { return dets_; }

private:
    PathAmplitudes amps_;
    DetectorSet dets_;
};

// Classical mixture of pure joint states. Weights are positive and sum to 1;
// all components share N (detector dimensions may differ per component).
class Ensemble {
public:
    struct Component {
        double weight;
        PureJointState state;
    };

    explicit Ensemble(std::vector<Component> components);

    int paths() const { return components_.front().state.paths(); }
    int size() const { return static_cast<int>(components_.size()); }
    const std::vector<Component>& components() const { return components_; }

private:
    std::vector<Component> components_;
};

// The N x N reduced state of the quanton: Hermitian, trace 1, PSD (each
// within kDensityTol, enforced at construction).
class QuantonDensityMatrix {
public:
    explicit QuantonDensityMatrix(Matrix rho);

    int dim() const { return static_cast<int>(rho_.rows()); }
    const Matrix& matrix() const { return rho_; }
    const Complex& operator()(int i, int j) const { return rho_(i, j); }

private:
    Matrix rho_;
};

// Trace over the detector: rho(i,j) = c_i conj(c_j) <d_j|d_i>. The diagonal
// is |c_i|^2 exactly (<d_i|d_i> = 1 by the normalization invariant) and the
// lower triangle mirrors the upper by conjugation.
QuantonDensityMatrix partial_trace(const PureJointState& s);

// Convex mixture sum_k w_k partial_trace(component_k).
QuantonDensityMatrix reduce_ensemble(const Ensemble& e);

}  // namespace npath
