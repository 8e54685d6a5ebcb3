#include "npath/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace npath {

bool all_finite(const Vector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) return false;
    }
    return true;
}

bool all_finite(const Matrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
        }
    }
    return true;
}

void require_finite(const Vector& v, const char* what) {
    if (!all_finite(v)) {
        throw invariant_error(std::string(what) + ": entries must be finite (no NaN/Inf)");
    }
}

void require_finite(const Matrix& m, const char* what) {
    if (!all_finite(m)) {
        throw invariant_error(std::string(what) + ": entries must be finite (no NaN/Inf)");
    }
}

Complex inner(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("inner: dimension mismatch (" + std::to_string(u.size()) +
                                    " vs " + std::to_string(v.size()) + ")");
    }
    require_finite(u, "inner: first argument");
    require_finite(v, "inner: second argument");
    Complex acc{0.0, 0.0};
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        acc += std::conj(u[i]) * v[i];
    }
    return acc;
}

Matrix gram(const std::vector<Vector>& vectors) {
    const auto n = static_cast<Eigen::Index>(vectors.size());
    if (n == 0) return Matrix(0, 0);
    const Eigen::Index dim = vectors[0].size();
    for (const auto& v : vectors) {
        if (v.size() != dim) {
            throw std::invalid_argument("gram: vectors must share one dimension");
        }
    }
    Matrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const Complex gij = inner(vectors[static_cast<std::size_t>(i)],
                                      vectors[static_cast<std::size_t>(j)]);
            g(i, j) = gij;
            g(j, i) = std::conj(gij);
        }
    }
    return g;
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
    }
    require_finite(m, "hermitian_eigenvalues: input");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
    }
    return solver.eigenvalues();
}

int numerical_rank(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("numerical_rank: matrix must be square");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("numerical_rank: tol must be > 0");
    }
    if (m.rows() == 0) return 0;
    const Eigen::VectorXd evals = hermitian_eigenvalues(m);
    const double largest = evals[evals.size() - 1];
    if (!(largest > 0.0)) return 0;
    const double cutoff = tol * largest;
    int rank = 0;
    for (Eigen::Index i = 0; i < evals.size(); ++i) {
        if (evals[i] > cutoff) ++rank;
    }
    return rank;
}

bool is_hermitian_psd_trace1(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("is_hermitian_psd_trace1: matrix must be square");
    }
    if (m.rows() == 0 || !all_finite(m)) return false;
    const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > tol) return false;
    if (std::abs(m.trace().real() - 1.0) > tol || std::abs(m.trace().imag()) > tol) return false;
    // Eigenvalues of the Hermitian part; for near-Hermitian input this is the
    // right spectrum to test positivity against.
    const Matrix sym = 0.5 * (m + m.adjoint());
    const Eigen::VectorXd evals = hermitian_eigenvalues(sym);
    return evals[0] >= -tol;
}

}  // namespace npath
