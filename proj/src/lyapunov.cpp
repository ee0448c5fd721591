#include "qbeh/lyapunov.hpp"

#include <Eigen/Eigenvalues>

#include <string>

namespace qbeh {

DenseMatrix lyap_solve(const DenseMatrix& a, const DenseMatrix& q) {
    if (a.rows() != a.cols())
        throw DimensionError("lyap_solve: A must be square, got " + a.shape_str());
    if (q.rows() != a.rows() || q.cols() != a.cols())
        throw DimensionError("lyap_solve: Q shape " + q.shape_str() + " does not match A shape " +
                             a.shape_str());

    const SpectralSummary spec = spectral_summary(a);
    if (!(spec.spectral_abscissa < 0.0))
        throw StabilityError("lyap_solve: A is not stable (spectral abscissa " +
                                 std::to_string(spec.spectral_abscissa) + ")",
                             spec.spectral_abscissa);
    if (!is_symmetric_within_default(q.eigen()))
        throw SymmetryError("lyap_solve: Q is not symmetric within tolerance");

    const Index n = a.rows();

    // A = U T U^*, T upper triangular. Transform, back-substitute column-wise
    // (columns k = n-1..0; column k needs columns > k), transform back.
    Eigen::ComplexSchur<Eigen::MatrixXd> schur(a.eigen(), /*computeU=*/true);
    if (schur.info() != Eigen::Success)
        throw NumericalError("lyap_solve: Schur decomposition did not converge for a " +
                             a.shape_str() + " matrix");
    const Eigen::MatrixXcd& t = schur.matrixT();
    const Eigen::MatrixXcd& u = schur.matrixU();

    Eigen::MatrixXcd f = u.adjoint() * q.eigen() * u;
    Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd t_shifted = t;

    for (Index k = n - 1; k >= 0; --k) {
        Eigen::VectorXcd rhs = f.col(k);
        for (Index j = k + 1; j < n; ++j) rhs += std::conj(t(k, j)) * y.col(j);
        const std::complex<double> shift = std::conj(t(k, k));
        t_shifted.diagonal() = t.diagonal().array() + shift;
        y.col(k) = t_shifted.triangularView<Eigen::Upper>().solve(-rhs);
    }

    Eigen::MatrixXd x = (u * y * u.adjoint()).real();
    x = symmetrized(x);

    DenseMatrix result(std::move(x));
    const double res = lyap_residual(a, result, q);
    if (!(res <= 1e-10))
        throw NumericalError("lyap_solve: achieved relative residual " + std::to_string(res) +
                                 " exceeds 1e-10",
                             res);
    return result;
}

double lyap_residual(const DenseMatrix& a, const DenseMatrix& x, const DenseMatrix& q) {
    if (a.rows() != a.cols())
        throw DimensionError("lyap_residual: A must be square, got " + a.shape_str());
    if (x.rows() != a.rows() || x.cols() != a.rows() || q.rows() != a.rows() || q.cols() != a.rows())
        throw DimensionError("lyap_residual: shapes not conformal (A " + a.shape_str() + ", X " +
                             x.shape_str() + ", Q " + q.shape_str() + ")");
    const Eigen::MatrixXd r =
        a.eigen() * x.eigen() + x.eigen() * a.eigen().transpose() + q.eigen();
    return r.norm() / (1.0 + q.eigen().norm());
}

} // namespace qbeh
