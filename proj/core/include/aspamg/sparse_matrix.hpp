/// @file sparse_matrix.hpp
/// @brief CSR storage plus the sparse kernels every other component uses:
/// mat-vec, Galerkin triple product, transposed triangular solve, graph views.

#ifndef ASPAMG_SPARSE_MATRIX_HPP
#define ASPAMG_SPARSE_MATRIX_HPP

#include "aspamg/types.hpp"

#include <span>
#include <tuple>
#include <vector>

namespace aspamg {

/// One explicit entry; building block for assembly.
struct Triplet {
    index_t row;
    index_t col;
    double value;
};

/// CSR matrix. Columns are sorted and duplicate-free within each row.
/// Symmetric matrices store the full pattern; `symmetric` only records the
/// property. Instances are immutable after construction as far as the kernels
/// are concerned, so concurrent reads are safe.
struct SparseMatrix {
    index_t n_rows = 0;
    index_t n_cols = 0;
    std::vector<index_t> row_offsets;  // length n_rows + 1
    std::vector<index_t> col_indices;
    std::vector<double> values;
    bool symmetric = false;

    index_t nnz() const { return static_cast<index_t>(col_indices.size()); }
    double nnz_per_row() const { return n_rows == 0 ? 0.0 : double(nnz()) / double(n_rows); }

    std::span<const index_t> row_cols(index_t i) const {
        return {col_indices.data() + row_offsets[i],
                static_cast<std::size_t>(row_offsets[i + 1] - row_offsets[i])};
    }
    std::span<const double> row_vals(index_t i) const {
        return {values.data() + row_offsets[i],
                static_cast<std::size_t>(row_offsets[i + 1] - row_offsets[i])};
    }

    /// Value at (i, j), zero if not stored. Binary search within the row.
    double at(index_t i, index_t j) const;

    /// Accumulates duplicates (in insertion order), sorts columns, checks bounds.
    static SparseMatrix from_triplets(index_t n_rows, index_t n_cols,
                                      const std::vector<Triplet>& entries,
                                      bool symmetric = false);
    static SparseMatrix identity(index_t n);
    static SparseMatrix from_diagonal(std::span<const double> d);

    /// Pattern and values mirror-equal (bit-exact); used to validate inputs.
    bool is_value_symmetric() const;
};

/// y = A x, per-row sums in ascending column order (run-to-run deterministic).
void spmv(const SparseMatrix& A, std::span<const double> x, std::span<double> y);
std::vector<double> spmv(const SparseMatrix& A, std::span<const double> x);

/// y = A' x by row-wise scatter (sequential, deterministic).
void spmv_transpose(const SparseMatrix& A, std::span<const double> x, std::span<double> y);
std::vector<double> spmv_transpose(const SparseMatrix& A, std::span<const double> x);

/// C = A B with a per-row accumulator; output rows sorted, pattern kept even
/// for exact numerical zeros so structural symmetry survives products.
SparseMatrix sparse_multiply(const SparseMatrix& A, const SparseMatrix& B);

SparseMatrix transpose(const SparseMatrix& A);

/// Coarse operator A_c = P' A P (two sparse products). Inherits A's symmetry flag.
SparseMatrix galerkin_triple(const SparseMatrix& P, const SparseMatrix& A);

/// Solves G' y = x for lower-triangular G with positive diagonal
/// (back substitution sweeping rows of G from the bottom).
std::vector<double> lower_triangular_solve_transposed(const SparseMatrix& G,
                                                      std::span<const double> x);

/// Off-diagonal column indices of row i (the adjacency-graph neighbours).
std::vector<index_t> adjacency_neighbors(const SparseMatrix& A, index_t i);

} // namespace aspamg

#endif // ASPAMG_SPARSE_MATRIX_HPP
