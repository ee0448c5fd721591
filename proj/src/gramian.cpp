#include "qbeh/gramian.hpp"

#include <algorithm>
#include <cmath>

#include "qbeh/lyapunov.hpp"

namespace qbeh {

namespace {

void check_state_shape(const DenseMatrix& x, const QbshSystem& sys, const char* who) {
    if (x.rows() != sys.n_state || x.cols() != sys.n_state)
        throw DimensionError(std::string(who) + ": X has shape " + x.shape_str() + ", expected " +
                             std::to_string(sys.n_state) + "x" + std::to_string(sys.n_state));
}

} // namespace

DenseMatrix qbeh_residual(const DenseMatrix& x, const QbshSystem& sys) {
    check_state_shape(x, sys, "qbeh_residual");
    if (!is_symmetric_within_default(x.eigen()))
        throw SymmetryError("qbeh_residual: X is not symmetric within tolerance");

    const Eigen::MatrixXd& a = sys.a_mat.eigen();
    const Eigen::MatrixXd& f = sys.f_mat.eigen();
    const Eigen::MatrixXd& g = sys.g_mat.eigen();
    const Eigen::MatrixXd& m = sys.m_mat.eigen();
    const Eigen::MatrixXd& xe = x.eigen();

    Eigen::MatrixXd r = a * xe + xe * a.transpose() + sys.d_mat.eigen() +
                        m * xe * m.transpose() +
                        (g * xe * g.transpose()).cwiseProduct(f * xe * f.transpose());
    return DenseMatrix(symmetrized(r));
}

DenseMatrix kron_residual(const DenseMatrix& x, const QbshSystem& sys, const DenseMatrix& h) {
    check_state_shape(x, sys, "kron_residual");
    const Index n = sys.n_state;
    if (h.rows() != n || h.cols() != n * n)
        throw DimensionError("kron_residual: H has shape " + h.shape_str() + ", expected " +
                             std::to_string(n) + "x" + std::to_string(n * n));
    if (!is_symmetric_within_default(x.eigen()))
        throw SymmetryError("kron_residual: X is not symmetric within tolerance");

    const Eigen::MatrixXd xkx = kron(x, x).eigen();
    const Eigen::MatrixXd& a = sys.a_mat.eigen();
    const Eigen::MatrixXd& m = sys.m_mat.eigen();
    Eigen::MatrixXd r = a * x.eigen() + x.eigen() * a.transpose() +
                        h.eigen() * xkx * h.eigen().transpose() +
                        m * x.eigen() * m.transpose() + sys.d_mat.eigen();
    return DenseMatrix(std::move(r));
}

SeriesReport gramian_series(const QbshSystem& sys, int k_max) {
    if (k_max < 1)
        throw ValidationError("gramian_series: k_max must be >= 1, got " + std::to_string(k_max));

    const Eigen::MatrixXd& f = sys.f_mat.eigen();
    const Eigen::MatrixXd& g = sys.g_mat.eigen();
    const Eigen::MatrixXd& m = sys.m_mat.eigen();

    SeriesReport rep;
    std::vector<Eigen::MatrixXd> gxg; // G X_j G^T per term
    std::vector<Eigen::MatrixXd> fxf; // F X_j F^T per term

    auto push_term = [&](DenseMatrix term) {
        gxg.push_back(g * term.eigen() * g.transpose());
        fxf.push_back(f * term.eigen() * f.transpose());
        rep.term_norms.push_back(term.frobenius_norm());
        if (rep.partial_sums.empty())
            rep.partial_sums.push_back(term);
        else
            rep.partial_sums.push_back(
                DenseMatrix(rep.partial_sums.back().eigen() + term.eigen()));
        rep.terms.push_back(std::move(term));
    };

    // lyap_solve re-checks stability; the first call surfaces an unstable A.
    push_term(lyap_solve(sys.a_mat, sys.d_mat));
    const double floor = 1e-14 * (1.0 + rep.term_norms.front());

    for (int i = 2; i <= k_max; ++i) {
        if (rep.term_norms.back() < floor) break;

        Eigen::MatrixXd source = m * rep.terms.back().eigen() * m.transpose();
        for (int j = 1; j <= i - 2; ++j)
            source += gxg[static_cast<std::size_t>(j - 1)].cwiseProduct(
                fxf[static_cast<std::size_t>(i - 1 - j - 1)]);
        push_term(lyap_solve(sys.a_mat, DenseMatrix(symmetrized(source))));
    }

    rep.truncation_order = static_cast<int>(rep.terms.size());

    // Divergence probe: rising 5-term windowed maximum of the norms.
    const auto& nrm = rep.term_norms;
    if (nrm.size() >= 10) {
        const auto last5 = std::max_element(nrm.end() - 5, nrm.end());
        const auto prev5 = std::max_element(nrm.end() - 10, nrm.end() - 5);
        rep.diverging = *last5 > *prev5;
    }
    return rep;
}

} // namespace qbeh
