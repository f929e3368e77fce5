/* Copyright 2026 The fibrep Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef FIBREP_LINALG_MATRIX_HPP
#define FIBREP_LINALG_MATRIX_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fibrep/error.hpp"
#include "fibrep/numfield/jet.hpp"
#include "fibrep/numfield/number_field.hpp"
#include "fibrep/numfield/rational.hpp"

namespace fibrep {

/// Dense row-major matrix over an exact scalar type.
///
/// Like Polynomial, a zero prototype is kept so that empty or zero matrices still know
/// which field (or jet order) their entries belong to.
template <class T>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, const T& zero)
        : rows_(rows), cols_(cols), zero_(zero_like(zero)), a_(rows * cols, zero_)
    {
    }

    explicit Matrix(const std::vector<std::vector<T>>& rows)
    {
        if (rows.empty() || rows.front().empty()) throw dimension_error("Matrix: empty row list");
        rows_ = rows.size();
        cols_ = rows.front().size();
        zero_ = zero_like(rows.front().front());
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw dimension_error("Matrix: ragged rows");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n, const T& like)
    {
        Matrix m(n, n, like);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(like);
        return m;
    }

    static Matrix diagonal(const std::vector<T>& d)
    {
        if (d.empty()) throw dimension_error("Matrix::diagonal: empty");
        Matrix m(d.size(), d.size(), d.front());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const T& zero() const noexcept { return zero_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    std::vector<T> col(std::size_t j) const
    {
        std::vector<T> v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw dimension_error("Matrix::block out of range");
        Matrix b(nr, nc, zero_);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b)
    {
        if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw dimension_error("Matrix::set_block out of range");
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    void add_block(std::size_t r0, std::size_t c0, const Matrix& b)
    {
        if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw dimension_error("Matrix::add_block out of range");
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = (*this)(r0 + i, c0 + j) + b(i, j);
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    T trace() const
    {
        if (!is_square()) throw dimension_error("trace of a non-square matrix");
        T s = zero_;
        for (std::size_t i = 0; i < rows_; ++i) s = s + (*this)(i, i);
        return s;
    }

    bool is_zero() const
    {
        for (const auto& x : a_)
            if (!fibrep::is_zero(x)) return false;
        return true;
    }

    bool is_identity() const
    {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const T& x = (*this)(i, j);
                if (i == j ? !fibrep::is_zero(x - one_like(zero_)) : !fibrep::is_zero(x)) return false;
            }
        return true;
    }

    std::vector<T> apply(const std::vector<T>& v) const
    {
        if (v.size() != cols_) throw dimension_error("Matrix::apply: vector length mismatch");
        std::vector<T> out(rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!fibrep::is_zero((*this)(i, j))) out[i] = out[i] + (*this)(i, j) * v[j];
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        same_shape(a, b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] + b.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        same_shape(a, b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] - b.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a)
    {
        Matrix r = a;
        for (auto& x : r.a_) x = -x;
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw dimension_error("Matrix product: inner dimensions differ");
        Matrix r(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (fibrep::is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + x * b(k, j);
            }
        return r;
    }
    template <class S>
    friend Matrix scale(const S& s, const Matrix& a)
    {
        Matrix r = a;
        for (auto& x : r.a_) x = s * x;
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < a.a_.size(); ++k)
            if (!fibrep::is_zero(a.a_[k] - b.a_[k])) return false;
        return true;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))>
    {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<std::vector<U>> rows(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) rows[i].push_back(f((*this)(i, j)));
        return Matrix<U>(rows);
    }

    Matrix pow(unsigned e) const
    {
        Matrix r = identity(rows_, zero_), b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            b = b * b;
            e >>= 1u;
        }
        return r;
    }

    std::string to_string() const
    {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            os << '[';
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << fibrep::to_string((*this)(i, j));
            os << "]\n";
        }
        return os.str();
    }

private:
    static void same_shape(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw dimension_error("Matrix shapes differ");
    }

    std::size_t rows_ = 0, cols_ = 0;
    T zero_{};
    std::vector<T> a_;
};

template <class T>
Matrix<T> vstack(const std::vector<Matrix<T>>& parts)
{
    if (parts.empty()) throw dimension_error("vstack of nothing");
    std::size_t rows = 0;
    for (const auto& p : parts) {
        if (p.cols() != parts.front().cols()) throw dimension_error("vstack: column counts differ");
        rows += p.rows();
    }
    Matrix<T> out(rows, parts.front().cols(), parts.front().zero());
    std::size_t r = 0;
    for (const auto& p : parts) {
        out.set_block(r, 0, p);
        r += p.rows();
    }
    return out;
}

} // namespace fibrep

#endif
