#pragma once

#include "qbeh/matrix.hpp"

namespace qbeh {

/// Solves the continuous Lyapunov equation
///
///     A X + X A^T + Q = 0
///
/// for stable A and symmetric Q, returning the unique symmetric X.
///
/// Sign convention: this API carries Q on the left-hand side; the equivalent
/// form A X + X A^T = B uses B = -Q. With that mapping, B <= 0 (i.e. Q >= 0)
/// yields X >= 0.
///
/// The solve is Schur-based: complex Schur of A, then a column-wise
/// triangular back-substitution. The result is re-symmetrized and its
/// relative residual is verified against 1e-10; a residual above that bound
/// raises NumericalError with the achieved value.
DenseMatrix lyap_solve(const DenseMatrix& a, const DenseMatrix& q);

/// Relative residual ||A X + X A^T + Q||_F / (1 + ||Q||_F).
double lyap_residual(const DenseMatrix& a, const DenseMatrix& x, const DenseMatrix& q);

} // namespace qbeh
