#pragma once

#include "concordance/arith.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace concordance {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DomainError("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    template <class Fn>
    auto map(Fn&& fn) const {
        using U = std::decay_t<decltype(fn(std::declval<const T&>()))>;
        Matrix<U> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = fn((*this)(i, j));
        return out;
    }

    Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        Matrix out(rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = (*this)(rs[i], cs[j]);
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
        return c;
    }
    friend Matrix operator-(const Matrix& a) {
        Matrix c = a;
        for (auto& x : c.data_) x = -x;
        return c;
    }
    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix c = a;
        for (auto& x : c.data_) x = s * x;
        return c;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DomainError("matrix product: shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

private:
    static void check_same(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <class T>
Matrix<T> block_diagonal(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

RatMatrix to_rational(const IntMatrix& m);

/// Parses "r0c0,r0c1;r1c0,r1c1". The empty string and "-" are not accepted here.
IntMatrix parse_int_matrix(std::string_view text);
std::string format_matrix(const IntMatrix& m);
std::string format_matrix(const RatMatrix& m);

/// Fraction-free determinant.
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

RatMatrix inverse(const RatMatrix& m);

// Field-generic elimination. T must provide + - * / and a free is_zero(const T&).

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Basis (as columns) of the right kernel {x : m x = 0}.
template <class T>
Matrix<T> nullspace(Matrix<T> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        T inv = T(1) / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            T f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix<T> basis(cols, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        basis(free_cols[k], k) = T(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -m(i, free_cols[k]);
    }
    return basis;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
    return m.cols() - nullspace(m).cols();
}

/// Signature of a symmetric matrix by congruence diagonalization. When every
/// remaining diagonal entry vanishes, row/column j is added to row/column i for
/// a nonzero off-diagonal entry, which makes the (i, i) entry 2 m(i, j).
/// `sign_of` must return the sign of a nonzero entry.
template <class T>
int symmetric_signature(Matrix<T> m, const std::function<int(const T&)>& sign_of) {
    if (!m.square()) throw DomainError("signature of a non-square matrix");
    std::size_t n = m.rows();
    std::vector<bool> done(n, false);
    int sig = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n && piv == n; ++i)
            if (!done[i] && !is_zero(m(i, i))) piv = i;
        if (piv == n) {
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[j] && j != i && !is_zero(m(i, j))) {
                        pi = i;
                        pj = j;
                        break;
                    }
            }
            if (pi == n) break;  // remaining block is zero
            for (std::size_t k = 0; k < n; ++k) m(pi, k) = m(pi, k) + m(pj, k);
            for (std::size_t k = 0; k < n; ++k) m(k, pi) = m(k, pi) + m(k, pj);
            piv = pi;
        }
        T d = m(piv, piv);
        sig += sign_of(d);
        done[piv] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || is_zero(m(i, piv))) continue;
            T f = m(i, piv) / d;
            for (std::size_t j = 0; j < n; ++j) {
                if (done[j]) continue;
                m(i, j) = m(i, j) - f * m(piv, j);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            m(piv, i) = T(0);
            m(i, piv) = T(0);
        }
    }
    return sig;
}

int signature(const RatMatrix& m);
int signature(const IntMatrix& m);

}  // namespace concordance
