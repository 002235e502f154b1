#include "charp/fpmatrix.hpp"

#include <stdexcept>

namespace charp {

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    if (p_ != o.p_) throw std::invalid_argument("matrix modulus mismatch");
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    FpMatrix r(p_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                std::uint64_t v = r.data_[i * o.cols_ + j] + a * o.at(k, j) % p_;
                r.data_[i * o.cols_ + j] = static_cast<std::uint32_t>(v >= p_ ? v - p_ : v);
            }
        }
    return r;
}

std::vector<std::uint32_t> FpMatrix::apply(const std::vector<std::uint32_t>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix apply: dimension mismatch");
    std::vector<std::uint32_t> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += std::uint64_t(at(i, j)) * v[j] % p_;
        out[i] = static_cast<std::uint32_t>(acc % p_);
    }
    return out;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = at(i, j);
    return t;
}

RowReducer::RowReducer(std::uint32_t p, std::size_t cols)
    : p_(p), cols_(cols), pivot_of_col_(cols, kNone) {
    require_prime(p);
}

bool RowReducer::add_row(std::vector<std::uint32_t> row) {
    if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
    std::size_t lead = kNone;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (row[c] == 0) continue;
        std::size_t r = pivot_of_col_[c];
        if (r == kNone) {
            lead = c;
            break;
        }
        // eliminate this column against the existing pivot row
        std::uint64_t factor = row[c];
        const auto& pivot = rows_[r];
        for (std::size_t j = c; j < cols_; ++j) {
            if (pivot[j] == 0) continue;
            std::uint32_t sub = static_cast<std::uint32_t>(factor * pivot[j] % p_);
            row[j] = sub_mod(row[j], sub, p_);
        }
    }
    if (lead == kNone) return false;

    std::uint64_t inv = inv_mod(row[lead], p_);
    for (std::size_t j = lead; j < cols_; ++j)
        row[j] = static_cast<std::uint32_t>(inv * row[j] % p_);

    // back-substitute into earlier pivot rows to keep the form reduced
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint64_t factor = rows_[r][lead];
        if (factor == 0) continue;
        for (std::size_t j = lead; j < cols_; ++j) {
            if (row[j] == 0) continue;
            std::uint32_t sub = static_cast<std::uint32_t>(factor * row[j] % p_);
            rows_[r][j] = sub_mod(rows_[r][j], sub, p_);
        }
    }

    pivot_of_col_[lead] = rows_.size();
    pivot_cols_.push_back(lead);
    rows_.push_back(std::move(row));
    return true;
}

std::vector<std::uint32_t> RowReducer::reduce(std::vector<std::uint32_t> row) const {
    if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
    for (std::size_t c = 0; c < cols_; ++c) {
        if (row[c] == 0) continue;
        std::size_t r = pivot_of_col_[c];
        if (r == kNone) continue;
        std::uint64_t factor = row[c];
        const auto& pivot = rows_[r];
        for (std::size_t j = c; j < cols_; ++j) {
            if (pivot[j] == 0) continue;
            std::uint32_t sub = static_cast<std::uint32_t>(factor * pivot[j] % p_);
            row[j] = sub_mod(row[j], sub, p_);
        }
    }
    return row;
}

std::size_t mat_rank(const FpMatrix& m) {
    RowReducer red(m.modulus(), m.cols());
    std::vector<std::uint32_t> row(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
        red.add_row(row);
        if (red.rank() == m.cols()) break;
    }
    return red.rank();
}

std::vector<std::vector<std::uint32_t>> mat_kernel_basis(const FpMatrix& m) {
    const std::uint32_t p = m.modulus();
    RowReducer red(p, m.cols());
    std::vector<std::uint32_t> row(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
        red.add_row(row);
    }

    // one kernel vector per free column: v[free] = 1, v[pivot_col] = -entry
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (red.is_pivot(c)) continue;
        std::vector<std::uint32_t> v(m.cols(), 0);
        v[c] = 1;
        for (std::size_t r = 0; r < red.rank(); ++r) {
            std::size_t pc = red.pivot_columns()[r];
            // after full reduction rows_[r][pc] == 1
            std::uint32_t entry = red.entry(r, c);
            if (entry != 0) v[pc] = neg_mod(entry, p);
        }
        basis.push_back(std::move(v));
    }
    if (red.rank() + basis.size() != m.cols())
        throw std::logic_error("rank-nullity violated");  // unreachable
    return basis;
}

std::size_t mat_kernel_dim(const FpMatrix& m) {
    return m.cols() - mat_rank(m);
}

std::size_t mat_stable_rank(const FpMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("stable rank needs a square matrix");
    if (m.rows() == 0) return 0;
    // compute M^n by binary powering
    std::size_t n = m.rows();
    FpMatrix acc = FpMatrix::identity(m.modulus(), n);
    FpMatrix base = m;
    std::size_t e = n;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return mat_rank(acc);
}

}  // namespace charp
