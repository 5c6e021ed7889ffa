#pragma once

#include "latlab/numeric.hpp"

#include <initializer_list>
#include <vector>

namespace latlab {

/// Dense matrix with value semantics over an exact scalar type.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = int(init.size());
        cols_ = rows_ ? int(init.begin()->size()) : 0;
        a_.reserve(size_t(rows_) * cols_);
        for (const auto& row : init) {
            require(int(row.size()) == cols_, "matrix rows must have equal length");
            for (const auto& x : row) a_.push_back(x);
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        require(cols_ == o.rows_, "matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    void swap_rows(int i, int j) {
        for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(int i, int j) {
        for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }
    /// row i += f * row j
    void add_row(int i, int j, const T& f) {
        for (int c = 0; c < cols_; ++c) (*this)(i, c) += f * (*this)(j, c);
    }
    void add_col(int i, int j, const T& f) {
        for (int r = 0; r < rows_; ++r) (*this)(r, i) += f * (*this)(r, j);
    }
    void scale_row(int i, const T& f) {
        for (int c = 0; c < cols_; ++c) (*this)(i, c) *= f;
    }

    std::vector<T> row(int i) const {
        std::vector<T> r(cols_);
        for (int c = 0; c < cols_; ++c) r[c] = (*this)(i, c);
        return r;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;

inline RatMat to_rational(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

}  // namespace latlab
