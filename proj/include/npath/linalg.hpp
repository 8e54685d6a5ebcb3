// linalg.hpp — Minimal complex linear algebra for small dense problems:
// inner products, Gram matrices, numerical rank, density-matrix validation.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "npath/errors.hpp"

namespace npath {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Relative eigenvalue cutoff used by numerical_rank when none is given.
inline constexpr double kDefaultRankTol = 1e-10;

bool all_finite(const Vector& v);
bool all_finite(const Matrix& m);

// Throws invariant_error if any entry is NaN or infinite. `what` names the
// value in the message.
void require_finite(const Vector& v, const char* what);
void require_finite(const Matrix& m, const char* what);

// Inner product <u|v>, conjugate-linear in the FIRST argument (physics
// convention). inner(u, v) == conj(inner(v, u)).
Complex inner(const Vector& u, const Vector& v);

// Gram matrix G(i,j) = inner(v_i, v_j). The upper triangle is computed and the
// lower triangle mirrored by conjugation, so the result is Hermitian exactly.
Matrix gram(const std::vector<Vector>& vectors);

// Eigenvalues of a Hermitian matrix, ascending. Only the lower triangle is
// referenced.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

// Number of eigenvalues exceeding tol * (largest eigenvalue) of a Hermitian
// PSD matrix. The zero matrix has rank 0.
int numerical_rank(const Matrix& m, double tol = kDefaultRankTol);

// True iff m is Hermitian, PSD and has unit trace, each within tol:
// max|m - m^dagger| <= tol, eigenvalues >= -tol, |trace - 1| <= tol.
bool is_hermitian_psd_trace1(const Matrix& m, double tol);

}  // namespace npath
