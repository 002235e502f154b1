#pragma once

#include <cstdint>
#include <vector>

#include "charp/fp.hpp"

namespace charp {

/// Dense matrix over F_p, row major.  All entries live in [0, p).
class FpMatrix {
public:
    FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
        require_prime(p);
    }

    static FpMatrix identity(std::uint32_t p, std::size_t n);

    std::uint32_t modulus() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t v) {
        data_[r * cols_ + c] = reduce_mod(v, p_);
    }

    const std::vector<std::uint32_t>& data() const { return data_; }

    FpMatrix operator*(const FpMatrix& o) const;
    std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const;
    FpMatrix transpose() const;

    bool operator==(const FpMatrix& o) const {
        return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::uint32_t p_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> data_;
};

/// Incremental Gaussian elimination: rows are fed one at a time and reduced
/// against the pivots collected so far.  Pivoting is deterministic (first
/// nonzero column), so echelon forms and the bases derived from them are
/// reproducible run to run.
class RowReducer {
public:
    RowReducer(std::uint32_t p, std::size_t cols);

    /// Reduces `row` in place against the current pivot rows.  If a nonzero
    /// remainder survives it is normalized, back-substituted into the previous
    /// pivots and kept; returns true exactly in that case.
    bool add_row(std::vector<std::uint32_t> row);

    /// Normal form of `row` against the pivot rows (no insertion).
    std::vector<std::uint32_t> reduce(std::vector<std::uint32_t> row) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<std::size_t>& pivot_columns() const { return pivot_cols_; }
    bool is_pivot(std::size_t col) const { return pivot_of_col_[col] != kNone; }
    std::uint32_t entry(std::size_t row, std::size_t col) const { return rows_[row][col]; }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::uint32_t p_;
    std::size_t cols_;
    std::vector<std::vector<std::uint32_t>> rows_;  // reduced echelon rows
    std::vector<std::size_t> pivot_cols_;           // pivot column of rows_[i]
    std::vector<std::size_t> pivot_of_col_;         // col -> row index or kNone
};

std::size_t mat_rank(const FpMatrix& m);

/// Basis of the right null space { v : M v = 0 }, in reduced echelon form,
/// one vector per non-pivot column in ascending column order.  Rank-nullity
/// (rank + basis size == cols) is asserted on every call.
std::vector<std::vector<std::uint32_t>> mat_kernel_basis(const FpMatrix& m);

std::size_t mat_kernel_dim(const FpMatrix& m);

/// Rank of M^n for n = max(rows, 1); the rank of the iterated matrix is
/// stable from the n-th power on.  Input must be square.
std::size_t mat_stable_rank(const FpMatrix& m);

}  // namespace charp
