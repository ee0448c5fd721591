#pragma once

#include <filesystem>

#include "qbeh/matrix.hpp"

namespace qbeh {

/// Writes a matrix in Matrix Market array format ("%%MatrixMarket matrix array
/// real general"): size line "rows cols", then entries in column-major order,
/// one per line, with enough digits to round-trip doubles exactly.
void save_matrix_market(const DenseMatrix& m, const std::filesystem::path& path);

/// Reads a Matrix Market array file written by save_matrix_market (or any
/// conforming "array real general" file). Throws FormatError with file name
/// and line number on malformed input.
DenseMatrix load_matrix_market(const std::filesystem::path& path);

} // namespace qbeh
