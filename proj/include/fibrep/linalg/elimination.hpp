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

#ifndef FIBREP_LINALG_ELIMINATION_HPP
#define FIBREP_LINALG_ELIMINATION_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fibrep/linalg/matrix.hpp"

namespace fibrep {

template <class T>
struct RrefResult {
    Matrix<T> reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <class T>
RrefResult<T> rref(Matrix<T> a)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && is_zero(a(p, c))) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        const T inv = inverse(a(r, c));
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || is_zero(a(i, c))) continue;
            const T f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!is_zero(a(r, j))) a(i, j) = a(i, j) - f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& a)
{
    if (a.rows() == 0 || a.cols() == 0) return 0;
    return rref(a).pivots.size();
}

template <class T>
std::vector<std::vector<T>> kernel_from_rref(const RrefResult<T>& rr)
{
    const auto& r = rr.reduced;
    std::vector<bool> is_pivot(r.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < r.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(r.cols(), r.zero());
        v[f] = one_like(r.zero());
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Kernel basis; each vector has a 1 in its own free column and 0 in the other free columns.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& a)
{
    return kernel_from_rref(rref(a));
}

/// Solver for A x = b with A eliminated once and reused for many right-hand sides.
template <class T>
class AffineSolver {
public:
    explicit AffineSolver(const Matrix<T>& a)
        : cols_(a.cols()), transform_(Matrix<T>::identity(a.rows(), a.zero()))
    {
        Matrix<T> m = a;
        Matrix<T>& e = transform_;
        std::size_t r = 0;
        for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
            std::size_t p = r;
            while (p < m.rows() && is_zero(m(p, c))) ++p;
            if (p == m.rows()) continue;
            if (p != r) {
                for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
                for (std::size_t j = 0; j < e.cols(); ++j) std::swap(e(p, j), e(r, j));
            }
            const T inv = inverse(m(r, c));
            for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
            for (std::size_t j = 0; j < e.cols(); ++j) e(r, j) = e(r, j) * inv;
            for (std::size_t i = 0; i < m.rows(); ++i) {
                if (i == r || is_zero(m(i, c))) continue;
                const T f = m(i, c);
                for (std::size_t j = c; j < m.cols(); ++j)
                    if (!is_zero(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
                for (std::size_t j = 0; j < e.cols(); ++j)
                    if (!is_zero(e(r, j))) e(i, j) = e(i, j) - f * e(r, j);
            }
            pivots_.push_back(c);
            ++r;
        }
        reduced_ = {std::move(m), pivots_};
    }

    std::size_t rank() const noexcept { return pivots_.size(); }
    std::size_t kernel_dim() const noexcept { return cols_ - pivots_.size(); }

    const std::vector<std::vector<T>>& kernel() const
    {
        if (!kernel_) kernel_ = kernel_from_rref(reduced_);
        return *kernel_;
    }

    /// Components of the reduced right-hand side that must vanish for consistency.
    std::vector<T> residual(const std::vector<T>& b) const
    {
        if (b.size() != transform_.cols()) throw dimension_error("AffineSolver: right-hand side length mismatch");
        std::vector<T> eb = transform_.apply(b);
        return std::vector<T>(eb.begin() + static_cast<std::ptrdiff_t>(rank()), eb.end());
    }

    /// Particular solution with all free variables zero, or nullopt if inconsistent.
    std::optional<std::vector<T>> solve(const std::vector<T>& b) const
    {
        if (b.size() != transform_.cols()) throw dimension_error("AffineSolver: right-hand side length mismatch");
        std::vector<T> eb = transform_.apply(b);
        for (std::size_t i = rank(); i < eb.size(); ++i)
            if (!is_zero(eb[i])) return std::nullopt;
        std::vector<T> x(cols_, transform_.zero());
        for (std::size_t i = 0; i < rank(); ++i) x[pivots_[i]] = eb[i];
        return x;
    }

private:
    std::size_t cols_;
    Matrix<T> transform_;
    std::vector<std::size_t> pivots_;
    RrefResult<T> reduced_;
    mutable std::optional<std::vector<std::vector<T>>> kernel_;
};

template <class T>
T determinant(Matrix<T> a)
{
    if (!a.is_square()) throw dimension_error("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    T det = one_like(a.zero());
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(a(p, c))) ++p;
        if (p == n) return a.zero();
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det = det * a(c, c);
        const T inv = inverse(a(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(a(i, c))) continue;
            const T f = a(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) a(i, j) = a(i, j) - f * a(c, j);
        }
    }
    return det;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a)
{
    if (!a.is_square()) throw dimension_error("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix<T> aug(n, 2 * n, a.zero());
    aug.set_block(0, 0, a);
    aug.set_block(0, n, Matrix<T>::identity(n, a.zero()));
    auto rr = rref(std::move(aug));
    if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1) throw math_error("matrix is singular");
    return rr.reduced.block(0, n, n, n);
}

/// Span under construction; vectors are kept reduced against earlier pivots.
template <class T>
class IncrementalBasis {
public:
    explicit IncrementalBasis(std::size_t dim) : dim_(dim) {}

    std::size_t ambient_dim() const noexcept { return dim_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    bool full() const noexcept { return rows_.size() == dim_; }
    const std::vector<std::vector<T>>& vectors() const noexcept { return rows_; }

    std::vector<T> reduce(std::vector<T> v) const
    {
        if (v.size() != dim_) throw dimension_error("IncrementalBasis: vector length mismatch");
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const T f = v[pivots_[k]];
            if (is_zero(f)) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                if (!is_zero(rows_[k][j])) v[j] = v[j] - f * rows_[k][j];
        }
        return v;
    }

    bool contains(const std::vector<T>& v) const
    {
        for (const auto& x : reduce(v))
            if (!is_zero(x)) return false;
        return true;
    }

    /// Adds v; returns true when the span grew.
    bool add(const std::vector<T>& v)
    {
        auto r = reduce(v);
        std::size_t p = 0;
        while (p < dim_ && is_zero(r[p])) ++p;
        if (p == dim_) return false;
        const T inv = inverse(r[p]);
        for (auto& x : r) x = x * inv;
        rows_.push_back(std::move(r));
        pivots_.push_back(p);
        return true;
    }

private:
    std::size_t dim_;
    std::vector<std::vector<T>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace fibrep

#endif
