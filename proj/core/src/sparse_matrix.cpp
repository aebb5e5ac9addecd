#include "aspamg/sparse_matrix.hpp"

#include "aspamg/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace aspamg {

double SparseMatrix::at(index_t i, index_t j) const {
    auto cols = row_cols(i);
    auto it = std::lower_bound(cols.begin(), cols.end(), j);
    if (it == cols.end() || *it != j) return 0.0;
    return values[row_offsets[i] + (it - cols.begin())];
}

SparseMatrix SparseMatrix::from_triplets(index_t n_rows, index_t n_cols,
                                         const std::vector<Triplet>& entries,
                                         bool symmetric) {
    for (const auto& t : entries) {
        if (t.row < 0 || t.row >= n_rows || t.col < 0 || t.col >= n_cols)
            throw DimensionError("triplet index out of range");
    }
    // Stable counting sort by row keeps per-slot accumulation in insertion
    // order, which makes symmetric assembly bit-exact.
    std::vector<index_t> row_count(static_cast<std::size_t>(n_rows) + 1, 0);
    for (const auto& t : entries) ++row_count[static_cast<std::size_t>(t.row) + 1];
    std::partial_sum(row_count.begin(), row_count.end(), row_count.begin());
    std::vector<const Triplet*> by_row(entries.size());
    {
        std::vector<index_t> cursor(row_count.begin(), row_count.end() - 1);
        for (const auto& t : entries) by_row[static_cast<std::size_t>(cursor[static_cast<std::size_t>(t.row)]++)] = &t;
    }

    SparseMatrix m;
    m.n_rows = n_rows;
    m.n_cols = n_cols;
    m.symmetric = symmetric;
    m.row_offsets.assign(static_cast<std::size_t>(n_rows) + 1, 0);
    m.col_indices.reserve(entries.size());
    m.values.reserve(entries.size());

    std::vector<std::pair<index_t, index_t>> order;  // (col, position in by_row)
    for (index_t i = 0; i < n_rows; ++i) {
        order.clear();
        for (index_t k = row_count[static_cast<std::size_t>(i)]; k < row_count[static_cast<std::size_t>(i) + 1]; ++k)
            order.emplace_back(by_row[static_cast<std::size_t>(k)]->col, k);
        std::stable_sort(order.begin(), order.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t k = 0; k < order.size(); ++k) {
            const index_t col = order[k].first;
            double sum = by_row[static_cast<std::size_t>(order[k].second)]->value;
            while (k + 1 < order.size() && order[k + 1].first == col) {
                ++k;
                sum += by_row[static_cast<std::size_t>(order[k].second)]->value;
            }
            m.col_indices.push_back(col);
            m.values.push_back(sum);
        }
        m.row_offsets[static_cast<std::size_t>(i) + 1] = static_cast<index_t>(m.col_indices.size());
    }
    return m;
}

SparseMatrix SparseMatrix::identity(index_t n) {
    SparseMatrix m;
    m.n_rows = m.n_cols = n;
    m.symmetric = true;
    m.row_offsets.resize(static_cast<std::size_t>(n) + 1);
    m.col_indices.resize(static_cast<std::size_t>(n));
    m.values.assign(static_cast<std::size_t>(n), 1.0);
    for (index_t i = 0; i <= n; ++i) m.row_offsets[static_cast<std::size_t>(i)] = i;
    std::iota(m.col_indices.begin(), m.col_indices.end(), index_t{0});
    return m;
}

SparseMatrix SparseMatrix::from_diagonal(std::span<const double> d) {
    SparseMatrix m = identity(static_cast<index_t>(d.size()));
    std::copy(d.begin(), d.end(), m.values.begin());
    return m;
}

bool SparseMatrix::is_value_symmetric() const {
    if (n_rows != n_cols) return false;
    for (index_t i = 0; i < n_rows; ++i) {
        auto cols = row_cols(i);
        auto vals = row_vals(i);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (at(cols[k], i) != vals[k]) return false;
        }
    }
    return true;
}

void spmv(const SparseMatrix& A, std::span<const double> x, std::span<double> y) {
    if (static_cast<index_t>(x.size()) != A.n_cols || static_cast<index_t>(y.size()) != A.n_rows)
        throw DimensionError("spmv: size mismatch");
    parallel_for(A.n_rows, [&](index_t lo, index_t hi) {
        for (index_t i = lo; i < hi; ++i) {
            double sum = 0.0;
            for (index_t k = A.row_offsets[i]; k < A.row_offsets[i + 1]; ++k)
                sum += A.values[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(A.col_indices[static_cast<std::size_t>(k)])];
            y[static_cast<std::size_t>(i)] = sum;
        }
    });
}

std::vector<double> spmv(const SparseMatrix& A, std::span<const double> x) {
    std::vector<double> y(static_cast<std::size_t>(A.n_rows));
    spmv(A, x, y);
    return y;
}

void spmv_transpose(const SparseMatrix& A, std::span<const double> x, std::span<double> y) {
    if (static_cast<index_t>(x.size()) != A.n_rows || static_cast<index_t>(y.size()) != A.n_cols)
        throw DimensionError("spmv_transpose: size mismatch");
    std::fill(y.begin(), y.end(), 0.0);
    for (index_t i = 0; i < A.n_rows; ++i) {
        const double xi = x[static_cast<std::size_t>(i)];
        for (index_t k = A.row_offsets[i]; k < A.row_offsets[i + 1]; ++k)
            y[static_cast<std::size_t>(A.col_indices[static_cast<std::size_t>(k)])] += A.values[static_cast<std::size_t>(k)] * xi;
    }
}

std::vector<double> spmv_transpose(const SparseMatrix& A, std::span<const double> x) {
    std::vector<double> y(static_cast<std::size_t>(A.n_cols));
    spmv_transpose(A, x, y);
    return y;
}

SparseMatrix sparse_multiply(const SparseMatrix& A, const SparseMatrix& B) {
    if (A.n_cols != B.n_rows) throw DimensionError("sparse_multiply: inner dimension mismatch");
    SparseMatrix C;
    C.n_rows = A.n_rows;
    C.n_cols = B.n_cols;
    C.row_offsets.assign(static_cast<std::size_t>(A.n_rows) + 1, 0);

    std::vector<double> acc(static_cast<std::size_t>(B.n_cols), 0.0);
    std::vector<char> marked(static_cast<std::size_t>(B.n_cols), 0);
    std::vector<index_t> cols;
    for (index_t i = 0; i < A.n_rows; ++i) {
        cols.clear();
        for (index_t ka = A.row_offsets[i]; ka < A.row_offsets[i + 1]; ++ka) {
            const index_t t = A.col_indices[static_cast<std::size_t>(ka)];
            const double a = A.values[static_cast<std::size_t>(ka)];
            for (index_t kb = B.row_offsets[t]; kb < B.row_offsets[t + 1]; ++kb) {
                const index_t j = B.col_indices[static_cast<std::size_t>(kb)];
                if (!marked[static_cast<std::size_t>(j)]) {
                    marked[static_cast<std::size_t>(j)] = 1;
                    acc[static_cast<std::size_t>(j)] = 0.0;
                    cols.push_back(j);
                }
                acc[static_cast<std::size_t>(j)] += a * B.values[static_cast<std::size_t>(kb)];
            }
        }
        std::sort(cols.begin(), cols.end());
        for (index_t j : cols) {
            C.col_indices.push_back(j);
            C.values.push_back(acc[static_cast<std::size_t>(j)]);
            marked[static_cast<std::size_t>(j)] = 0;
        }
        C.row_offsets[static_cast<std::size_t>(i) + 1] = static_cast<index_t>(C.col_indices.size());
    }
    return C;
}

SparseMatrix transpose(const SparseMatrix& A) {
    SparseMatrix T;
    T.n_rows = A.n_cols;
    T.n_cols = A.n_rows;
    T.symmetric = A.symmetric;
    T.row_offsets.assign(static_cast<std::size_t>(A.n_cols) + 1, 0);
    T.col_indices.resize(static_cast<std::size_t>(A.nnz()));
    T.values.resize(static_cast<std::size_t>(A.nnz()));
    for (index_t k = 0; k < A.nnz(); ++k)
        ++T.row_offsets[static_cast<std::size_t>(A.col_indices[static_cast<std::size_t>(k)]) + 1];
    std::partial_sum(T.row_offsets.begin(), T.row_offsets.end(), T.row_offsets.begin());
    std::vector<index_t> cursor(T.row_offsets.begin(), T.row_offsets.end() - 1);
    for (index_t i = 0; i < A.n_rows; ++i) {
        for (index_t k = A.row_offsets[i]; k < A.row_offsets[i + 1]; ++k) {
            const index_t j = A.col_indices[static_cast<std::size_t>(k)];
            const index_t pos = cursor[static_cast<std::size_t>(j)]++;
            T.col_indices[static_cast<std::size_t>(pos)] = i;
            T.values[static_cast<std::size_t>(pos)] = A.values[static_cast<std::size_t>(k)];
        }
    }
    return T;
}

SparseMatrix galerkin_triple(const SparseMatrix& P, const SparseMatrix& A) {
    if (P.n_rows != A.n_rows || A.n_rows != A.n_cols)
        throw DimensionError("galerkin_triple: P rows must match square A");
    const SparseMatrix AP = sparse_multiply(A, P);
    const SparseMatrix Pt = transpose(P);
    SparseMatrix C = sparse_multiply(Pt, AP);
    C.symmetric = A.symmetric;
    return C;
}

std::vector<double> lower_triangular_solve_transposed(const SparseMatrix& G,
                                                      std::span<const double> x) {
    if (G.n_rows != G.n_cols || static_cast<index_t>(x.size()) != G.n_rows)
        throw DimensionError("triangular solve: size mismatch");
    const index_t n = G.n_rows;
    std::vector<double> y(x.begin(), x.end());
    for (index_t i = n - 1; i >= 0; --i) {
        auto cols = G.row_cols(i);
        auto vals = G.row_vals(i);
        if (cols.empty() || cols.back() != i || vals.back() == 0.0)
            throw NumericalError("triangular solve: zero diagonal at row " + std::to_string(i));
        const double yi = y[static_cast<std::size_t>(i)] / vals.back();
        y[static_cast<std::size_t>(i)] = yi;
        for (std::size_t k = 0; k + 1 < cols.size(); ++k)
            y[static_cast<std::size_t>(cols[k])] -= vals[k] * yi;
    }
    return y;
}

std::vector<index_t> adjacency_neighbors(const SparseMatrix& A, index_t i) {
    if (i < 0 || i >= A.n_rows) throw DimensionError("adjacency_neighbors: row out of range");
    std::vector<index_t> nbrs;
    for (index_t c : A.row_cols(i))
        if (c != i) nbrs.push_back(c);
    return nbrs;
}

} // namespace aspamg
