#ifndef CONFSPACE_MATRIX_HPP
#define CONFSPACE_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <vector>

#include "rational.hpp"

namespace confspace {

// Dense matrix over exact rationals.  Rows are maps' output coordinates:
// a linear map V -> W with dim V = cols, dim W = rows, acting on column
// vectors.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const {
        assert(cols_ == o.rows_);
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    if (o(k, j) != 0) r(i, j) += a * o(k, j);
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i)
            r.data_[i] = data_[i] + o.data_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i)
            r.data_[i] = data_[i] - o.data_[i];
        return r;
    }

    Matrix operator*(const Rational& c) const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = c * data_[i];
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        assert(v.size() == cols_);
        std::vector<Rational> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    // [this | o] side by side.
    Matrix augment(const Matrix& o) const {
        assert(rows_ == o.rows_);
        Matrix r(rows_, cols_ + o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
        }
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Rank by fraction-free (Bareiss) elimination over the integers, after
// clearing denominators row by row.
inline std::size_t rank(const Matrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    if (nr == 0 || nc == 0) return 0;
    std::vector<std::vector<Integer>> a(nr, std::vector<Integer>(nc));
    for (std::size_t i = 0; i < nr; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < nc; ++j)
            l = lcm(l, m(i, j).get_den());
        for (std::size_t j = 0; j < nc; ++j) {
            mpq_class q = m(i, j) * l;
            a[i][j] = q.get_num();
        }
    }
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < nc && r < nr; ++col) {
        std::size_t piv = r;
        while (piv < nr && a[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[r], a[piv]);
        const Integer pivot = a[r][col];
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j)
                a[i][j] = (a[i][j] * pivot - a[i][col] * a[r][j]) / prev;
            a[i][col] = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

// Reduced row echelon form in place; returns pivot column indices.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                swap(m(r, j), m(piv, j));
        const Rational inv = 1 / m(r, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, col) == 0) continue;
            const Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

// Basis of ker(m) as columns of the returned matrix.
inline Matrix kernel(const Matrix& m) {
    Matrix e = m;
    std::vector<std::size_t> pivots = rref(e);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Matrix k(m.cols(), free_cols.size());
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        const std::size_t f = free_cols[fi];
        k(f, fi) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            k(pivots[r], fi) = -e(r, f);
    }
    return k;
}

// Columns of m spanning its column space (a maximal independent subset,
// taken left to right).
inline Matrix column_space(const Matrix& m) {
    Matrix e = m;
    std::vector<std::size_t> pivots = rref(e);
    Matrix r(m.rows(), pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) r(i, j) = m(i, pivots[j]);
    return r;
}

// Solves m x = b; returns false when inconsistent.
inline bool solve(const Matrix& m, const std::vector<Rational>& b,
                  std::vector<Rational>& x) {
    Matrix rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    Matrix aug = m.augment(rhs);
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return false;
    x.assign(m.cols(), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug(r, m.cols());
    return true;
}

// Inverse of a square matrix; throws on singular input.
inline Matrix inverse(const Matrix& m) {
    assert(m.rows() == m.cols());
    const std::size_t n = m.rows();
    Matrix aug = m.augment(Matrix::identity(n));
    std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1))
        throw std::domain_error("singular matrix");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

} // namespace confspace

#endif
