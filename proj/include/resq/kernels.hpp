#pragma once

// Dense kernels behind the resistance and spectral modules. The unqualified
// functions are the OpenMP-parallel versions used by the library; the
// `serial` namespace holds straightforward single-threaded reference
// implementations, kept for tests and for the benchmark comparison. The
// reference versions use independent algorithms where that is cheap
// (Gauss-Jordan vs LDL^T, cyclic Jacobi vs Householder/QL) so agreement
// between the two paths is meaningful.

#include <optional>
#include <vector>

#include "resq/matrix.hpp"

namespace resq::kernels {

/// Below this order the parallel kernels run on one thread.
inline constexpr std::size_t kParallelThreshold = 64;

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

/// Inverse of a symmetric positive definite matrix via LDL^T and one
/// triangular solve pair per column. Empty when a pivot is not positive.
std::optional<DenseMatrix> spd_inverse(const DenseMatrix& a);

/// r(i,j) = P_ii + P_jj - 2 P_ij with zero diagonal. Any matrix that
/// differs from the pseudoinverse by a multiple of J gives the same result.
DenseMatrix resistance_from_pinv(const DenseMatrix& pinv);

/// Eigenvalues of a symmetric matrix, ascending. Householder reduction to
/// tridiagonal form followed by implicit-shift QL.
std::vector<double> symmetric_eigenvalues(const DenseMatrix& a);

namespace serial {

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

/// Gauss-Jordan with partial pivoting. Empty when the matrix is singular
/// to working precision.
std::optional<DenseMatrix> inverse(const DenseMatrix& a);

DenseMatrix resistance_from_pinv(const DenseMatrix& pinv);

/// Cyclic Jacobi rotations; ascending.
std::vector<double> symmetric_eigenvalues(const DenseMatrix& a);

}  // namespace serial
}  // namespace resq::kernels
