#include "qbeh/matrix.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace qbeh {

namespace {

std::string shape_of(Index r, Index c) {
    std::ostringstream os;
    os << r << "x" << c;
    return os.str();
}

void check_finite(const Eigen::MatrixXd& m) {
    if (!m.allFinite()) {
        for (Index j = 0; j < m.cols(); ++j)
            for (Index i = 0; i < m.rows(); ++i)
                if (!std::isfinite(m(i, j)))
                    throw ValidationError("DenseMatrix: non-finite entry at (" + std::to_string(i) +
                                          "," + std::to_string(j) + ")");
    }
}

} // namespace

DenseMatrix::DenseMatrix(Eigen::MatrixXd m) : mat_(std::move(m)) {
    if (mat_.rows() < 1 || mat_.cols() < 1)
        throw ValidationError("DenseMatrix: dimensions must be positive, got " +
                              shape_of(mat_.rows(), mat_.cols()));
    check_finite(mat_);
}

DenseMatrix DenseMatrix::zero(Index rows, Index cols) {
    return DenseMatrix(Eigen::MatrixXd::Zero(rows, cols));
}

DenseMatrix DenseMatrix::identity(Index n) {
    return DenseMatrix(Eigen::MatrixXd::Identity(n, n));
}

DenseMatrix DenseMatrix::from_row_major(Index rows, Index cols, std::span<const double> entries) {
    if (static_cast<Index>(entries.size()) != rows * cols)
        throw DimensionError("DenseMatrix: " + std::to_string(entries.size()) +
                             " entries cannot fill " + shape_of(rows, cols));
    Eigen::MatrixXd m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            m(i, j) = entries[static_cast<std::size_t>(i * cols + j)];
    return DenseMatrix(std::move(m));
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const Index r = static_cast<Index>(rows.size());
    if (r == 0) throw ValidationError("DenseMatrix: empty row list");
    const Index c = static_cast<Index>(rows.begin()->size());
    Eigen::MatrixXd m(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Index>(row.size()) != c)
            throw DimensionError("DenseMatrix: ragged row list (row " + std::to_string(i) + ")");
        Index j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return DenseMatrix(std::move(m));
}

DenseMatrix DenseMatrix::column(std::initializer_list<double> entries) {
    Eigen::MatrixXd m(static_cast<Index>(entries.size()), 1);
    Index i = 0;
    for (double v : entries) m(i++, 0) = v;
    return DenseMatrix(std::move(m));
}

std::string DenseMatrix::shape_str() const { return shape_of(rows(), cols()); }

bool is_symmetric_within_default(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) return false;
    const double scale = 1.0 + m.cwiseAbs().maxCoeff();
    return (m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-10 * scale;
}

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& m) {
    return 0.5 * (m + m.transpose());
}

double min_symmetric_eigenvalue(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw NumericalError("symmetric eigensolver did not converge for a " +
                             shape_of(m.rows(), m.cols()) + " matrix");
    return es.eigenvalues().minCoeff();
}

DenseMatrix hadamard(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("hadamard: shape mismatch (" + a.shape_str() + " vs " + b.shape_str() + ")");
    return DenseMatrix(a.eigen().cwiseProduct(b.eigen()));
}

Index kron_entry_budget() {
    // 2 GiB of doubles for any single product.
    constexpr unsigned long long budget_bytes = 2ull << 30;
    return static_cast<Index>(budget_bytes / sizeof(double));
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
    const unsigned long long rr = static_cast<unsigned long long>(a.rows()) * b.rows();
    const unsigned long long cc = static_cast<unsigned long long>(a.cols()) * b.cols();
    if (rr * cc > static_cast<unsigned long long>(kron_entry_budget()))
        throw CapacityError("kron: product " + std::to_string(rr) + "x" + std::to_string(cc) +
                            " exceeds the " + std::to_string(kron_entry_budget()) + "-entry budget");
    Eigen::MatrixXd out(static_cast<Index>(rr), static_cast<Index>(cc));
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b.eigen();
    return DenseMatrix(std::move(out));
}

DenseMatrix vectorize(const DenseMatrix& a) {
    Eigen::MatrixXd v(a.rows() * a.cols(), 1);
    Index k = 0;
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            v(k++, 0) = a(i, j);
    return DenseMatrix(std::move(v));
}

DenseMatrix unvectorize(const DenseMatrix& v, Index rows, Index cols) {
    if (v.cols() != 1)
        throw DimensionError("unvectorize: input must be a single column, got " + v.shape_str());
    if (v.rows() != rows * cols)
        throw DimensionError("unvectorize: " + std::to_string(v.rows()) + " entries cannot fill " +
                             std::to_string(rows) + "x" + std::to_string(cols));
    Eigen::MatrixXd m(rows, cols);
    Index k = 0;
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i)
            m(i, j) = v(k++, 0);
    return DenseMatrix(std::move(m));
}

SpectralSummary spectral_summary(const DenseMatrix& a) {
    if (a.rows() != a.cols())
        throw DimensionError("spectral_summary: matrix must be square, got " + a.shape_str());

    SpectralSummary out;
    if (is_symmetric_within_default(a.eigen())) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.eigen(), Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            throw NumericalError("spectral_summary: symmetric eigensolver did not converge within "
                                 "its iteration budget for a " + a.shape_str() + " matrix");
        const auto& ev = es.eigenvalues();
        out.spectral_abscissa = ev.maxCoeff();
        out.spectral_radius = ev.cwiseAbs().maxCoeff();
        out.min_symmetric_eigenvalue = ev.minCoeff();
        return out;
    }

    Eigen::EigenSolver<Eigen::MatrixXd> es(a.eigen(), /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw NumericalError("spectral_summary: eigensolver did not converge within its iteration "
                             "budget (40 sweeps per row) for a " + a.shape_str() + " matrix");
    const auto& ev = es.eigenvalues();
    out.spectral_abscissa = ev.real().maxCoeff();
    out.spectral_radius = ev.cwiseAbs().maxCoeff();
    return out;
}

bool is_stable(const DenseMatrix& a, double margin) {
    if (margin < 0.0)
        throw ValidationError("is_stable: margin must be >= 0, got " + std::to_string(margin));
    return spectral_summary(a).spectral_abscissa < -margin;
}

} // namespace qbeh
