// support.hpp — Helpers shared by the test suites and the acceptance runner.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include <Eigen/QR>

#include "npath/joint_state.hpp"
#include "npath/linalg.hpp"
#include "npath/scenarios.hpp"

namespace npath::test {

inline Vector basis(int dim, int i) {
    Vector e = Vector::Zero(dim);
    e[i] = 1.0;
    return e;
}

inline std::vector<Vector> orthonormal_basis(int dim) {
    std::vector<Vector> v;
    v.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        v.push_back(basis(dim, i));
    }
    return v;
}

// Two-path state with equal amplitudes and the given detector pair.
inline PureJointState two_path(const Vector& d1, const Vector& d2) {
    return PureJointState(PathAmplitudes::normalized(Vector::Ones(2)), DetectorSet({d1, d2}));
}

// Haar-ish random unitary: QR of a complex Gaussian matrix.
inline Matrix random_unitary(int dim, GaussianSampler& rng) {
    Matrix a(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            a(i, j) = rng.next_complex();
        }
    }
    return Eigen::HouseholderQR<Matrix>(a).householderQ();
}

// Independent rank oracle: Gaussian elimination with partial pivoting over
// the raw vectors (not the Gram matrix), counting surviving pivots.
inline int elimination_rank(std::vector<Vector> rows, double tol) {
    const int nrows = static_cast<int>(rows.size());
    const int ncols = nrows > 0 ? static_cast<int>(rows[0].size()) : 0;
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int pivot = -1;
        double best = tol;
        for (int r = rank; r < nrows; ++r) {
            if (std::abs(rows[static_cast<std::size_t>(r)][col]) > best) {
                best = std::abs(rows[static_cast<std::size_t>(r)][col]);
                pivot = r;
            }
        }
        if (pivot < 0) {
            continue;
        }
        std::swap(rows[static_cast<std::size_t>(pivot)], rows[static_cast<std::size_t>(rank)]);
        for (int r = rank + 1; r < nrows; ++r) {
            const Complex factor =
                rows[static_cast<std::size_t>(r)][col] / rows[static_cast<std::size_t>(rank)][col];
            rows[static_cast<std::size_t>(r)] -= factor * rows[static_cast<std::size_t>(rank)];
        }
        ++rank;
    }
    return rank;
}

// Random ensemble: `comps` components over n paths, detector dimensions
// cycling through 1..6, weights positive and normalized.
inline Ensemble random_ensemble(int n, int comps, GaussianSampler& rng) {
    std::vector<double> w(static_cast<std::size_t>(comps));
    double total = 0.0;
    for (double& x : w) {
        x = 0.1 + rng.uniform(0.0, 1.0);
        total += x;
    }
    std::vector<Ensemble::Component> components;
    components.reserve(static_cast<std::size_t>(comps));
    for (int k = 0; k < comps; ++k) {
        const int m = 1 + k % 6;
        components.push_back(Ensemble::Component{w[static_cast<std::size_t>(k)] / total,
                                                 random_pure_state(n, m, rng)});
    }
    return Ensemble(std::move(components));
}

}  // namespace npath::test
