#pragma once

// Dense matrices of polynomials and of scalars.

#include <utility>
#include <vector>

#include "prymfib/poly/algebra.hpp"

namespace prymfib {

template <CoefficientField Field>
class PolyMatrix {
public:
    using poly_type = Polynomial<Field>;

    PolyMatrix(std::size_t rows, std::size_t cols, const poly_type& proto)
        : rows_(rows), cols_(cols), entries_(rows * cols, proto.zero_like()), proto_(proto.zero_like()) {}

    /// Builds from nested rows; all rows must have equal length and share a context.
    static PolyMatrix from_rows(const std::vector<std::vector<poly_type>>& rows) {
        if (rows.empty() || rows.front().empty()) throw PreconditionError("matrix needs at least one entry");
        PolyMatrix m(rows.size(), rows.front().size(), rows.front().front());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw PreconditionError("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j]);
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const poly_type& proto() const noexcept { return proto_; }

    const poly_type& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
    void set(std::size_t i, std::size_t j, poly_type p) {
        proto_.require_compatible(p);
        entries_.at(i * cols_ + j) = std::move(p);
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = i + 1; j < cols_; ++j) {
                if (!((*this)(i, j) == (*this)(j, i))) return false;
            }
        }
        return true;
    }

    /// Submatrix with row `r` and column `c` removed.
    PolyMatrix without(std::size_t r, std::size_t c) const {
        if (rows_ < 2 || cols_ < 2) throw PreconditionError("minor of a matrix with a single row or column");
        PolyMatrix m(rows_ - 1, cols_ - 1, proto_);
        for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
                if (j == c) continue;
                m.set(mi, mj++, (*this)(i, j));
            }
            ++mi;
        }
        return m;
    }

    bool operator==(const PolyMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<poly_type> entries_;
    poly_type proto_;
};

/// Fraction-free (Bareiss) determinant. Every intermediate division is exact.
template <CoefficientField Field>
Polynomial<Field> determinant(const PolyMatrix<Field>& m) {
    if (!m.is_square()) throw PreconditionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<std::vector<Polynomial<Field>>> a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i].reserve(n);
        for (std::size_t j = 0; j < n; ++j) a[i].push_back(m(i, j));
    }
    bool negate = false;
    Polynomial<Field> prev = m.proto().constant_like(m.proto().field().one());
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return m.proto().zero_like();
            std::swap(a[k], a[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            }
            a[i][k] = m.proto().zero_like();
        }
        prev = a[k][k];
    }
    if (n == 0) return m.proto().constant_like(m.proto().field().one());
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

/// Determinant of the submatrix obtained by deleting row r and column c.
template <CoefficientField Field>
Polynomial<Field> minor(const PolyMatrix<Field>& m, std::size_t r, std::size_t c) {
    return determinant(m.without(r, c));
}

/// Rank of a dense scalar matrix by Gaussian elimination (rows are consumed).
template <CoefficientField Field>
std::size_t matrix_rank(std::vector<std::vector<typename Field::value_type>> rows, const Field& field) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && field.is_zero(rows[pivot][c])) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const auto inv = field.div(field.one(), rows[rank][c]);
        for (std::size_t j = c; j < cols; ++j) rows[rank][j] = field.mul(rows[rank][j], inv);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (field.is_zero(rows[i][c])) continue;
            const auto factor = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                rows[i][j] = field.sub(rows[i][j], field.mul(factor, rows[rank][j]));
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace prymfib
