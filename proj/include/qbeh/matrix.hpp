#pragma once

#include <Eigen/Dense>

#include <initializer_list>
#include <optional>
#include <span>

#include "qbeh/errors.hpp"

namespace qbeh {

using Index = Eigen::Index;

/// Checked dense real matrix: positive dimensions and finite entries are
/// guaranteed from construction onward. Thin value wrapper around
/// Eigen::MatrixXd; use eigen() for arithmetic and wrap results back.
class DenseMatrix {
public:
    /// Wraps an Eigen matrix, validating dimensions and finiteness.
    explicit DenseMatrix(Eigen::MatrixXd m);

    static DenseMatrix zero(Index rows, Index cols);
    static DenseMatrix identity(Index n);

    /// Builds from entries listed row by row (row-major order).
    static DenseMatrix from_row_major(Index rows, Index cols, std::span<const double> entries);

    /// Literal-friendly builder: from_rows({{1,2},{3,4}}).
    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    static DenseMatrix column(std::initializer_list<double> entries);

    Index rows() const { return mat_.rows(); }
    Index cols() const { return mat_.cols(); }

    double operator()(Index i, Index j) const { return mat_(i, j); }

    const Eigen::MatrixXd& eigen() const { return mat_; }

    DenseMatrix transposed() const { return DenseMatrix(mat_.transpose()); }

    double frobenius_norm() const { return mat_.norm(); }
    double max_abs() const { return mat_.cwiseAbs().maxCoeff(); }

    /// Shape string like "3x4" for error messages.
    std::string shape_str() const;

private:
    Eigen::MatrixXd mat_;
};

/// Eigenvalue-derived scalars of a square matrix.
struct SpectralSummary {
    double spectral_abscissa = 0.0; ///< max real part over the spectrum
    double spectral_radius = 0.0;   ///< max modulus over the spectrum
    /// Smallest eigenvalue; present only when the input passed the symmetry check.
    std::optional<double> min_symmetric_eigenvalue;
};

/// Symmetry test used throughout: max|A - A^T| <= 1e-10 * (1 + max|A|).
bool is_symmetric_within_default(const Eigen::MatrixXd& m);

/// (M + M^T)/2.
Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& m);

/// Smallest eigenvalue of a symmetric matrix (caller guarantees symmetry).
double min_symmetric_eigenvalue(const Eigen::MatrixXd& m);

/// Entrywise product. Shapes must match.
DenseMatrix hadamard(const DenseMatrix& a, const DenseMatrix& b);

/// Kronecker product: block (i,j) of the result is a(i,j) * b.
/// Guarded against products whose storage would exceed the memory budget.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// Largest number of double entries a single kron/bench product may occupy.
/// Derived from a fixed byte budget rather than hard-coded.
Index kron_entry_budget();

/// Column-stacking: result is a (rows*cols) x 1 matrix.
DenseMatrix vectorize(const DenseMatrix& a);

/// Inverse of vectorize: v must be a single column with rows*cols entries.
DenseMatrix unvectorize(const DenseMatrix& v, Index rows, Index cols);

/// Dense eigensolve of a square matrix. The symmetric path (per the default
/// symmetry test) uses a self-adjoint solver and reports the minimum eigenvalue.
SpectralSummary spectral_summary(const DenseMatrix& a);

/// True iff every eigenvalue has real part < -margin. margin must be >= 0.
bool is_stable(const DenseMatrix& a, double margin = 0.0);

} // namespace qbeh
