#pragma once

#include <filesystem>
#include <optional>

#include "qbeh/matrix.hpp"

namespace qbeh {

/// Parameters of the diode transmission-line example: n circuit nodes with
/// unit resistors/capacitors and diode current exp(a*v) - 1.
struct CircuitParams {
    Index n_nodes = 3;          ///< must be >= 3 so every row formula branch is exercised
    double diode_coefficient = 1.0; ///< a > 0

    void validate() const;
};

/// Quadratic bilinear system with Hadamard-product nonlinearity:
///
///     x' = A x + (G x) o (F x) + M x u + B u,    y = C x,    x(0) = 0.
///
/// D = B B^T is computed at construction and kept consistent with B.
struct QbshSystem {
    Index n_state;
    DenseMatrix a_mat;
    DenseMatrix f_mat;
    DenseMatrix g_mat;
    DenseMatrix m_mat;
    DenseMatrix b_vec; ///< N x 1
    DenseMatrix c_vec; ///< 1 x N
    DenseMatrix d_mat; ///< B B^T

    /// Circuit parameters when built by build_transmission_line; kept for
    /// provenance and for the original-circuit simulator.
    std::optional<CircuitParams> circuit;

    /// Validates block shapes and computes D = B B^T.
    static QbshSystem make(DenseMatrix a, DenseMatrix f, DenseMatrix g, DenseMatrix m,
                           DenseMatrix b, DenseMatrix c,
                           std::optional<CircuitParams> circuit = std::nullopt);

    /// Copy with A shifted to A - delta*I (uniform damping). All other blocks
    /// are unchanged. Useful because the raw circuit lift carries redundant
    /// states that put zero eigenvalues into A.
    QbshSystem damped(double delta) const;
};

/// Tridiagonal coefficient blocks of the transmission-line circuit after the
/// difference-variable substitution: state order (v1, v12, ..., v_{n-1,n}).
/// v' = A1 v + A2 w + b_v u with w_i = exp(a * v_i) - 1 componentwise.
struct CircuitBlocks {
    DenseMatrix a1;   ///< v-to-v coupling, n x n tridiagonal
    DenseMatrix a2;   ///< v-to-w coupling, n x n tridiagonal
    DenseMatrix b_v;  ///< n x 1, input enters the first two rows
};

CircuitBlocks transmission_line_blocks(const CircuitParams& p);

/// Builds the order-N = 2n lift of the diode line with state
/// (v1, v12, ..., v_{n-1,n}, w1, ..., wn), additive constants dropped
/// (zero-equilibrium form):
///   A = [[A1, A2], [a A1, a A2]],  G = I,  F = [[0, 0], [a A1, a A2]],
///   B = (b_v; a b_v),  M = a diag(0_n; b_v),  C = e1^T.
QbshSystem build_transmission_line(const CircuitParams& p);

/// N x N^2 matrix H with row i = (row i of G) kron (row i of F), so that
/// H (x kron x) = (G x) o (F x) for every vector x.
DenseMatrix build_h_from_fg(const DenseMatrix& f, const DenseMatrix& g);

/// Persists a system as a directory: manifest "system.json" plus one Matrix
/// Market file per block (A, F, G, M, B, C). D is recomputed on load.
void save_system(const QbshSystem& sys, const std::filesystem::path& dir);

QbshSystem load_system(const std::filesystem::path& dir);

} // namespace qbeh
