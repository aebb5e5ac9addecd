/// @file dense.hpp
/// @brief Dense block type (tall column-major matrices: test spaces, RBMs,
/// low-rank factors) and shared orthonormalization helpers.

#ifndef ASPAMG_DENSE_HPP
#define ASPAMG_DENSE_HPP

#include "aspamg/sparse_matrix.hpp"
#include "aspamg/types.hpp"

#include <Eigen/Core>

namespace aspamg {

using DenseBlock = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Modified Gram-Schmidt with one re-orthogonalization pass. Columns whose
/// remainder falls below drop_tol * original norm are removed (rank loss).
/// Returns the number of dropped columns. Column order is preserved.
index_t orthonormalize_columns(DenseBlock& block, double drop_tol = 1e-12);

/// Dense copy of a sparse matrix (row-major fill; test oracles and the
/// coarsest-level factorization).
DenseBlock to_dense(const SparseMatrix& A);

} // namespace aspamg

#endif // ASPAMG_DENSE_HPP
