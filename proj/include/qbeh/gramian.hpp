#pragma once

#include <vector>

#include "qbeh/system.hpp"

namespace qbeh {

/// Terms and partial sums of the reachability-Gramian cascade: X1 solves
/// A X1 + X1 A^T + D = 0, X2 solves A X2 + X2 A^T + M X1 M^T = 0, and each
/// later X_i solves
///
///   A X_i + X_i A^T + sum_{j=1}^{i-2} (G X_j G^T) o (F X_{i-1-j} F^T)
///                   + M X_{i-1} M^T = 0.
struct SeriesReport {
    std::vector<DenseMatrix> terms;
    std::vector<DenseMatrix> partial_sums;
    std::vector<double> term_norms; ///< Frobenius norm per term
    int truncation_order = 0;
    /// True when the windowed maximum of the term norms is rising: the series
    /// is not converging at this instance. Reported, never thrown.
    bool diverging = false;
};

/// Residual map Q(X) = A X + X A^T + D + M X M^T + (G X G^T) o (F X F^T),
/// re-symmetrized before return. X must be symmetric within tolerance.
DenseMatrix qbeh_residual(const DenseMatrix& x, const QbshSystem& sys);

/// Kronecker-form residual A X + X A^T + H (X kron X) H^T + M X M^T + D,
/// with h an N x N^2 matrix (typically from build_h_from_fg).
DenseMatrix kron_residual(const DenseMatrix& x, const QbshSystem& sys, const DenseMatrix& h);

/// Runs the cascade up to k_max terms; stops early once a term's Frobenius
/// norm falls below 1e-14 * (1 + ||X1||_F). Requires stable A.
SeriesReport gramian_series(const QbshSystem& sys, int k_max);

} // namespace qbeh
