#include "aspamg/dense.hpp"

namespace aspamg {

index_t orthonormalize_columns(DenseBlock& block, double drop_tol) {
    const index_t n_cols = block.cols();
    index_t kept = 0;
    for (index_t j = 0; j < n_cols; ++j) {
        Vector v = block.col(j);
        const double original = v.norm();
        for (int pass = 0; pass < 2; ++pass) {
            for (index_t q = 0; q < kept; ++q)
                v -= (block.col(q).dot(v)) * block.col(q);
        }
        const double remainder = v.norm();
        if (original == 0.0 || remainder <= drop_tol * original) continue;
        block.col(kept) = v / remainder;
        ++kept;
    }
    const index_t dropped = n_cols - kept;
    block.conservativeResize(Eigen::NoChange, kept);
    return dropped;
}

DenseBlock to_dense(const SparseMatrix& A) {
    DenseBlock D = DenseBlock::Zero(A.n_rows, A.n_cols);
    for (index_t i = 0; i < A.n_rows; ++i) {
        auto cols = A.row_cols(i);
        auto vals = A.row_vals(i);
        for (std::size_t k = 0; k < cols.size(); ++k) D(i, cols[k]) = vals[k];
    }
    return D;
}

} // namespace aspamg
